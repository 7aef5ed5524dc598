#include "coneterm/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coneterm/instance_io.hpp"
#include "coneterm/report.hpp"

namespace coneterm {

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

struct Logger {
    LogLevel level = LogLevel::Info;
    template <typename... Args>
    void info(Args&&... args) const {
        if (level >= LogLevel::Info) ((std::cerr << "coneterm: ") << ... << args) << "\n";
    }
    template <typename... Args>
    void debug(Args&&... args) const {
        if (level >= LogLevel::Debug) ((std::cerr << "coneterm[debug]: ") << ... << args) << "\n";
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string infer_format(const std::string& path) {
    const size_t dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return "json";
    if (ext == "loop" || ext == "dsl") return "dsl";
    throw ParseError("cannot infer format from extension '." + ext + "'; pass --format json|dsl");
}

long elapsed_ms(std::chrono::steady_clock::time_point from, std::chrono::steady_clock::time_point to) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(to - from).count();
}

int verify_mode(const std::string& path, const Logger& log) {
    nlohmann::json report;
    try {
        report = nlohmann::json::parse(read_file(path));
    } catch (const std::exception& e) {
        std::cerr << "coneterm: cannot read report: " << e.what() << "\n";
        return 1;
    }
    std::string problems;
    if (verify_report(report, problems)) {
        log.info("report verified: decision ", report.value("decision", "?"), ", ",
                 report.value("trace", nlohmann::json::array()).size(), " trace level(s)");
        std::cout << "VERIFIED\n";
        return 0;
    }
    std::cerr << "coneterm: report verification FAILED:\n" << problems;
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Decides whether a multipath linear loop with commuting invertible updates and a "
                 "polyhedral-cone guard admits a nonzero start vector that never terminates."};
    app.name("coneterm");

    std::string input_path, format, emit_path, verify_path;
    long max_degree = -1;
    std::vector<std::string> box;
    double budget_seconds = 0;
    long oracle_bound = -1;
    std::string log_level = "info";

    app.add_option("--input", input_path, "Instance file (.json or .loop/.dsl)");
    app.add_option("--format", format, "Input format: json or dsl (default: by extension)")
        ->check(CLI::IsMember({"json", "dsl"}));
    app.add_option("--max-degree", max_degree, "Degree/round budget for the positivity search (default 8)");
    app.add_option("--box", box, "Search box lo hi as rationals (default 1/2 2)")->expected(2);
    app.add_option("--budget-seconds", budget_seconds, "Wall-clock budget; exceeded runs become INCONCLUSIVE");
    app.add_option("--oracle-check", oracle_bound, "Cross-check the decision against brute force up to word length L");
    app.add_option("--emit-certificates", emit_path, "Write the report JSON to this file instead of stdout");
    app.add_option("--verify", verify_path, "Re-check a previously emitted report file");
    app.add_option("--log-level", log_level, "quiet, info or debug")->check(CLI::IsMember({"quiet", "info", "debug"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 consumes back-to-front
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            std::cout << app.help();
            return 0;
        }
        std::cerr << "coneterm: " << e.what() << "\n";
        return 1;
    }

    Logger log;
    if (log_level == "quiet") log.level = LogLevel::Quiet;
    if (log_level == "debug") log.level = LogLevel::Debug;

    if (!verify_path.empty()) return verify_mode(verify_path, log);
    if (input_path.empty()) {
        std::cerr << "coneterm: either --input or --verify is required\n";
        return 1;
    }

    try {
        const std::string text = read_file(input_path);
        const std::string fmt = format.empty() ? infer_format(input_path) : format;
        ParsedInstance parsed = fmt == "json" ? parse_instance_json(text) : parse_loop_dsl(text);
        const LoopSystem& sys = parsed.system;
        log.info("instance: d=", sys.dim(), " k=", sys.num_updates(), " n=", sys.num_guards());

        SearchConfig cfg;
        parsed.options.apply(cfg);
        if (max_degree >= 0) cfg.max_degree = max_degree;
        if (!box.empty()) {
            cfg.box_lo = Rational::from_string(box[0]);
            cfg.box_hi = Rational::from_string(box[1]);
        }
        if (budget_seconds > 0)
            cfg.deadline = std::chrono::steady_clock::now() +
                           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(budget_seconds));
        cfg.validate();

        const auto t0 = std::chrono::steady_clock::now();
        Decision decision = decide_nontermination(sys, cfg);
        const auto t1 = std::chrono::steady_clock::now();
        log.info("decision: ", decision_answer_name(decision.answer));

        std::optional<OracleReport> oracle;
        if (oracle_bound >= 0) {
            OracleReport o;
            o.word_bound = static_cast<size_t>(oracle_bound);
            o.no_witness_definitive = oracle_no_witness(sys, o.word_bound);
            o.not_salient_witness = oracle_not_salient(sys, o.word_bound);
            if (decision.witness) o.witness_survives = orbit_simulate(*decision.witness, sys, o.word_bound);
            o.consistent = true;
            if (o.no_witness_definitive && decision.answer == DecisionAnswer::NonterminatingWitnessExists)
                o.consistent = false;
            if (o.witness_survives && !*o.witness_survives) o.consistent = false;
            log.debug("oracle: definitive_no=", o.no_witness_definitive, " consistent=", o.consistent);
            oracle = std::move(o);
        }
        const auto t2 = std::chrono::steady_clock::now();

        Timings timings;
        timings.decide_ms = elapsed_ms(t0, t1);
        timings.oracle_ms = elapsed_ms(t1, t2);
        timings.total_ms = elapsed_ms(t0, t2);

        const nlohmann::json report = report_to_json(sys, cfg, decision, timings, oracle);
        if (!emit_path.empty()) {
            std::ofstream out(emit_path, std::ios::binary);
            if (!out) {
                std::cerr << "coneterm: cannot write " << emit_path << "\n";
                return 1;
            }
            out << report.dump(2) << "\n";
            std::cout << decision_answer_name(decision.answer) << "\n";
        } else {
            std::cout << report.dump(2) << "\n";
        }

        if (oracle && !oracle->consistent) {
            std::cerr << "coneterm: ORACLE DISAGREEMENT — the decision contradicts brute force; this is a bug\n";
            return 1;
        }
        return decision.answer == DecisionAnswer::Inconclusive ? 2 : 0;
    } catch (const ValidationError& e) {
        std::cerr << "coneterm: invalid instance: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "coneterm: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "coneterm: error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace coneterm
