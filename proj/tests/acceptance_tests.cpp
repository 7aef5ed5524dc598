#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coneterm/cli.hpp"
#include "coneterm/lp.hpp"
#include "coneterm/oracle.hpp"
#include "coneterm/report.hpp"
#include "coneterm/termination.hpp"
#include "support.hpp"

using namespace coneterm;

/*
 * End-to-end acceptance suite. One test case per criterion; each prints a
 * single PASS/FAIL line so the suite doubles as a checklist.
 */

namespace {

bool report_criterion(int num, const char* label, bool ok, const std::string& detail = "") {
    std::printf("[acceptance] criterion %d (%s): %s\n", num, label, ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::printf("%s", detail.c_str());
    std::fflush(stdout);
    return ok;
}

QVector v1(long a) { return QVector{Rational(a)}; }
QVector v2(long a, long b) { return QVector{Rational(a), Rational(b)}; }
QVector v3(long a, long b, long c) { return QVector{Rational(a), Rational(b), Rational(c)}; }

struct CorpusInstance {
    std::string name;
    LoopSystem system;
    DecisionAnswer expected;
    std::optional<QVector> hand_witness;   // oracle-simulated for YES instances
    std::optional<size_t> definitive_no_at;  // oracle bound for NO instances
};

std::vector<CorpusInstance> corpus() {
    std::vector<CorpusInstance> out;
    auto add = [&](std::string name, std::vector<QMatrix> ms, std::vector<QVector> guard, DecisionAnswer expected,
                   std::optional<QVector> witness, std::optional<size_t> no_at) {
        out.push_back(CorpusInstance{std::move(name), LoopSystem(std::move(ms), std::move(guard)), expected,
                                     std::move(witness), no_at});
    };
    const QMatrix rot = QMatrix::from_rows({{0, -1}, {1, 0}});
    const QMatrix shear = QMatrix::from_rows({{1, 1}, {0, 1}});

    add("d1_grow", {QMatrix::from_rows({{2}})}, {v1(1)}, DecisionAnswer::NonterminatingWitnessExists, v1(1), {});
    add("d1_opposite", {QMatrix::from_rows({{2}})}, {v1(1), v1(-2)}, DecisionAnswer::NoWitness, {}, 0);
    add("d1_negative_update", {QMatrix::from_rows({{-2}})}, {v1(1)}, DecisionAnswer::NoWitness, {}, 1);
    add("d1_shrink_negative_guard", {QMatrix::from_rows({{Rational(1, 2)}})}, {v1(-1)},
        DecisionAnswer::NonterminatingWitnessExists, v1(-1), {});
    add("rotation_halfplane", {rot}, {v2(1, 0)}, DecisionAnswer::NoWitness, {}, 3);
    add("quadrant_diag", {QMatrix::from_rows({{2, 0}, {0, Rational(1, 2)}})}, {v2(1, 0), v2(0, 1)},
        DecisionAnswer::NonterminatingWitnessExists, v2(1, 1), {});
    add("identity_halfplane", {QMatrix::identity(2)}, {v2(1, 0)}, DecisionAnswer::NonterminatingWitnessExists,
        v2(1, 0), {});
    add("identity_fullplane_line", {QMatrix::identity(2)}, {v2(1, 0), v2(-1, 0)},
        DecisionAnswer::NonterminatingWitnessExists, v2(0, 1), {});
    add("k2_diag_quadrant", {QMatrix::from_rows({{2, 0}, {0, 3}}), QMatrix::from_rows({{5, 0}, {0, 7}})},
        {v2(1, 0), v2(0, 1)}, DecisionAnswer::NonterminatingWitnessExists, v2(1, 1), {});
    add("k2_minus_identity", {Rational(-1) * QMatrix::identity(2), QMatrix::from_rows({{2, 0}, {0, 3}})},
        {v2(1, 0), v2(0, 1)}, DecisionAnswer::NoWitness, {}, 1);
    add("shear_upper_halfplane", {shear}, {v2(0, 1)}, DecisionAnswer::NonterminatingWitnessExists, v2(0, 1), {});
    add("shear_line", {shear}, {v2(1, 0), v2(-1, 0)}, DecisionAnswer::NoWitness, {}, 1);
    add("flip_quadrant", {QMatrix::from_rows({{-1, 0}, {0, 2}})}, {v2(1, 0), v2(0, 1)},
        DecisionAnswer::NonterminatingWitnessExists, v2(0, 1), {});
    add("rotation_quadrant", {rot}, {v2(1, 0), v2(0, 1)}, DecisionAnswer::NoWitness, {}, 2);
    add("d3_octant", {QMatrix::from_rows({{2, 0, 0}, {0, Rational(1, 2), 0}, {0, 0, 1}})},
        {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, DecisionAnswer::NonterminatingWitnessExists, v3(1, 1, 1), {});
    return out;
}

bool in_truncated_cone(const LoopSystem& sys, size_t bound, const QVector& target) {
    const auto gens = truncated_orbit_generators(sys, bound);
    LinearSystem lp;
    lp.num_vars = gens.size();
    for (size_t coord = 0; coord < target.dim(); ++coord) {
        QVector row(gens.size());
        for (size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][coord];
        lp.add_eq(std::move(row), target[coord]);
    }
    for (size_t j = 0; j < gens.size(); ++j) {
        QVector e(gens.size());
        e[j] = Rational(1);
        lp.add_ge(std::move(e), Rational(0));
    }
    return lp_feasible(lp).feasible;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("criterion 1: end-to-end corpus with hand-derived answers") {
    std::ostringstream detail;
    bool ok = true;
    const auto suite_start = std::chrono::steady_clock::now();
    auto instances = corpus();
    ok = ok && instances.size() >= 12;
    SearchConfig cfg;
    for (const auto& inst : instances) {
        const auto t0 = std::chrono::steady_clock::now();
        Decision d = decide_nontermination(inst.system, cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (d.answer != inst.expected) {
            ok = false;
            detail << "    " << inst.name << ": got " << decision_answer_name(d.answer) << ", expected "
                   << decision_answer_name(inst.expected) << "\n";
        }
        if (secs >= 10.0) {
            ok = false;
            detail << "    " << inst.name << ": took " << secs << "s (budget 10s)\n";
        }
        // Ground truth backing: simulated witness orbits for YES, a
        // definitive truncation for NO.
        if (inst.hand_witness && !orbit_simulate(*inst.hand_witness, inst.system, 10)) {
            ok = false;
            detail << "    " << inst.name << ": hand witness fails 10-step simulation\n";
        }
        if (inst.definitive_no_at && !oracle_no_witness(inst.system, *inst.definitive_no_at)) {
            ok = false;
            detail << "    " << inst.name << ": oracle not definitive at the recorded bound\n";
        }
        // The tool's own witness, when emitted, must survive simulation too.
        if (d.witness && !orbit_simulate(*d.witness, inst.system, 10)) {
            ok = false;
            detail << "    " << inst.name << ": emitted witness fails simulation\n";
        }
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    if (total >= 120.0) {
        ok = false;
        detail << "    corpus total " << total << "s (budget 120s)\n";
    }
    CHECK(report_criterion(1, "end-to-end corpus", ok, detail.str()));
}

TEST_CASE("criterion 2: kernel-module soundness on random instances") {
    std::mt19937 rng(9001);
    std::ostringstream detail;
    int violations = 0;
    for (int t = 0; t < 50; ++t) {
        auto sys = testsupport::random_loop_system(rng, 3, 2, 3);
        ModuleBasis basis = kernel_module_basis(sys);
        for (const auto& g : basis.generators)
            if (!combine_guards(g, sys).is_zero()) {
                ++violations;
                detail << "    instance " << t << ": generator does not map to zero\n";
            }
    }
    CHECK(report_criterion(2, "kernel soundness, 50 random instances", violations == 0, detail.str()));
}

TEST_CASE("criterion 3: kernel-module completeness at bounded degree") {
    std::mt19937 rng(9002);
    std::ostringstream detail;
    int failures = 0;
    for (int t = 0; t < 50; ++t) {
        auto sys = testsupport::random_loop_system(rng, 3, 2, 3);
        const size_t k = sys.num_updates(), n = sys.num_guards(), d = sys.dim();
        std::vector<size_t> all(n);
        for (size_t i = 0; i < n; ++i) all[i] = i;
        ModuleBasis basis = kernel_module_basis(sys);
        long bound = 0;
        for (long b : basis.degree_bounds) bound = std::max(bound, b);
        ++bound;
        // Independent dense solve over all monomials of total degree <= bound.
        const auto mons = monomials_up_to_degree(k, bound);
        QMatrix image(d, mons.size() * n);
        for (size_t mi = 0; mi < mons.size(); ++mi)
            for (size_t c = 0; c < n; ++c) {
                PolyVec unit = PolyVec::zero(n, k);
                unit.comps[c] = MultiPoly::monomial(mons[mi], Rational(1));
                QVector col = combine_guards(unit, sys, all);
                for (size_t r = 0; r < d; ++r) image(r, mi * n + c) = col[r];
            }
        for (const auto& kv : kernel_basis(image)) {
            PolyVec f = PolyVec::zero(n, k);
            for (size_t mi = 0; mi < mons.size(); ++mi)
                for (size_t c = 0; c < n; ++c) f.comps[c].add_term(mons[mi], kv[mi * n + c]);
            if (!reduces_over_basis(f, basis)) {
                ++failures;
                detail << "    instance " << t << ": brute-force kernel element escapes the basis\n";
            }
        }
    }
    CHECK(report_criterion(3, "kernel completeness at bounded degree", failures == 0, detail.str()));
}

TEST_CASE("criterion 4: Gordan alternative on 200 random matrices") {
    std::mt19937 rng(9003);
    std::ostringstream detail;
    int violations = 0;
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<size_t> dim(1, 5);
        QMatrix g = testsupport::random_matrix(rng, dim(rng), dim(rng));
        auto primal = positive_span_feasible(g);
        auto dual = gordan_dual(g);
        if (primal.has_value() == dual.has_value()) {
            ++violations;
            detail << "    matrix " << t << ": both or neither side of the alternative fired\n";
            continue;
        }
        if (primal) {
            QVector img = g * *primal;
            for (size_t i = 0; i < img.dim(); ++i)
                if (img[i] < Rational(1)) ++violations;
        } else {
            Rational total;
            bool bad = false;
            for (size_t i = 0; i < dual->dim(); ++i) {
                if ((*dual)[i].sign() < 0) bad = true;
                total += (*dual)[i];
            }
            if (total != Rational(1)) bad = true;
            for (size_t j = 0; j < g.cols(); ++j)
                if (dot(g.col(j), *dual) != Rational(0)) bad = true;
            if (bad) {
                ++violations;
                detail << "    matrix " << t << ": dual certificate failed re-verification\n";
            }
        }
    }
    CHECK(report_criterion(4, "Gordan alternative, 200 random matrices", violations == 0, detail.str()));
}

TEST_CASE("criterion 5: positivity mutual exclusion and certificate soundness") {
    std::mt19937 rng(9004);
    std::ostringstream detail;
    int violations = 0;
    SearchConfig cfg;
    cfg.max_degree = 2;
    for (int t = 0; t < 30; ++t) {
        auto sys = testsupport::random_loop_system(rng, 2, 2, 2);
        ModuleBasis basis = kernel_module_basis(sys);
        std::vector<size_t> all(sys.num_guards());
        for (size_t i = 0; i < all.size(); ++i) all[i] = i;

        std::optional<PolyVec> yes;
        for (long l = 0; l <= cfg.max_degree && !yes; ++l) yes = find_positive_element(basis, l);
        auto no = find_gordan_point(basis, all, cfg);
        if (yes && no) {
            ++violations;
            detail << "    module " << t << ": both searches fired\n";
        }
        if (yes) {
            PositiveCertificate cert{all, *yes, cfg.max_degree};
            if (!verify_positive_certificate(cert, sys)) {
                ++violations;
                detail << "    module " << t << ": positive certificate failed verification\n";
            }
        }
        if (no && !verify_no_certificate(*no, basis)) {
            ++violations;
            detail << "    module " << t << ": Gordan certificate failed verification\n";
        }
    }
    CHECK(report_criterion(5, "positivity mutual exclusion, 30 random modules", violations == 0, detail.str()));
}

TEST_CASE("criterion 6: non-salience cross-check against the positivity decision") {
    std::ostringstream detail;
    bool ok = true;
    int fired = 0;
    SearchConfig cfg;
    for (const auto& inst : corpus()) {
        std::optional<QVector> oracle_witness;
        for (size_t bound = 0; bound <= 4 && !oracle_witness; ++bound)
            oracle_witness = oracle_not_salient(inst.system, bound);
        if (!oracle_witness) continue;
        ++fired;
        auto pos = decide_positive_nonzero(inst.system, cfg);
        if (pos.answer != PositivityAnswer::Yes) {
            ok = false;
            detail << "    " << inst.name << ": oracle found non-salience but positivity did not return YES\n";
            continue;
        }
        const QVector w = extract_line_witness(*pos.positive, inst.system);
        const long degree = std::max<long>(pos.positive->element.total_degree(), 0);
        if (!in_truncated_cone(inst.system, static_cast<size_t>(degree), w) ||
            !in_truncated_cone(inst.system, static_cast<size_t>(degree), -w)) {
            ok = false;
            detail << "    " << inst.name << ": +-w not inside the truncated orbit cone\n";
        }
    }
    ok = ok && fired > 0;
    CHECK(report_criterion(6, "oracle non-salience implies positivity YES with +-w in cone", ok, detail.str()));
}

TEST_CASE("criterion 7: recursion trace validity on the corpus") {
    std::ostringstream detail;
    bool ok = true;
    SearchConfig cfg;
    for (const auto& inst : corpus()) {
        Decision d = decide_nontermination(inst.system, cfg);
        std::vector<QMatrix> acting = inst.system.transposed_matrices();
        std::vector<QVector> gens = inst.system.guard_rows();
        size_t prev_dim = inst.system.dim() + 1;
        for (const TraceLevel& level : d.trace.levels) {
            if (level.dimension >= prev_dim) {
                ok = false;
                detail << "    " << inst.name << ": dimension did not strictly decrease\n";
            }
            prev_dim = level.dimension;
            if (level.kind != LevelKind::NotSalientStep) continue;
            Subspace w;
            w.ambient_dim = level.dimension;
            w.basis = level.subspace_basis;
            const QMatrix& pi = *level.quotient;
            if (!level.line_witness || level.line_witness->is_zero() || !w.contains(*level.line_witness)) {
                ok = false;
                detail << "    " << inst.name << ": bad line witness\n";
            }
            for (const auto& m : acting)
                for (const auto& b : w.basis)
                    if (!w.contains(m * b)) {
                        ok = false;
                        detail << "    " << inst.name << ": W not invariant\n";
                    }
            for (const auto& b : w.basis)
                if (!(pi * b).is_zero()) {
                    ok = false;
                    detail << "    " << inst.name << ": pi does not kill W\n";
                }
            if (rank(pi) != level.dimension - w.dim()) {
                ok = false;
                detail << "    " << inst.name << ": ker(pi) larger than W\n";
            }
            for (size_t j = 0; j < acting.size(); ++j)
                if (level.induced[j] * pi != pi * acting[j]) {
                    ok = false;
                    detail << "    " << inst.name << ": conjugation identity violated\n";
                }
            std::vector<QVector> images;
            for (const auto& g : gens)
                if (!g.is_zero()) images.push_back(pi * g);
            gens = std::move(images);
            acting = level.induced;
        }
    }
    CHECK(report_criterion(7, "recursion trace validity", ok, detail.str()));
}

TEST_CASE("criterion 8: Cayley-Hamilton and substitution homomorphism, 100 random") {
    std::mt19937 rng(9005);
    std::ostringstream detail;
    int violations = 0;
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<size_t> dim(1, 5);
        const size_t d = dim(rng);
        QMatrix a = testsupport::random_matrix(rng, d, d, 4);
        UniPoly cp = char_poly(a);
        if (!cp.is_monic() || !eval_at_matrices(MultiPoly::from_unipoly(cp, 0, 1), {a}).is_zero()) {
            ++violations;
            detail << "    matrix " << t << ": Cayley-Hamilton failed\n";
        }
    }
    std::uniform_int_distribution<int> e(0, 2), nterms(0, 3);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<size_t> dd(1, 3), kk(1, 2);
        const size_t d = dd(rng), k = kk(rng);
        auto ms = testsupport::random_commuting_family(rng, d, k, 3);
        auto random_poly = [&] {
            MultiPoly p(k);
            const int n = nterms(rng);
            for (int i = 0; i < n; ++i) {
                Monomial m(k);
                for (size_t v = 0; v < k; ++v) m.exps[v] = e(rng);
                p.add_term(m, testsupport::random_rational(rng, 3));
            }
            return p;
        };
        MultiPoly f = random_poly(), g = random_poly();
        if (eval_at_matrices(f * g, ms) != eval_at_matrices(f, ms) * eval_at_matrices(g, ms)) {
            ++violations;
            detail << "    sample " << t << ": substitution homomorphism failed\n";
        }
    }
    CHECK(report_criterion(8, "Cayley-Hamilton + substitution homomorphism", violations == 0, detail.str()));
}

TEST_CASE("criterion 9: INCONCLUSIVE honesty on an irrational-zero instance") {
    std::ostringstream detail;
    bool ok = true;
    // A^T = [[0,2],[1,0]] has char poly X^2-2; the kernel module's
    // generators vanish only at sqrt(2), so neither certificate search can
    // fire; the run must exit 2 and the diagnostics must verify.
    const std::string instance_path = "/tmp/coneterm_acceptance_irrational.json";
    const std::string report_path = "/tmp/coneterm_acceptance_irrational_report.json";
    {
        std::ofstream out(instance_path);
        out << R"({"d":2,"k":1,"n":1,"matrices":[[["0","1"],["2","0"]]],"guard":[["1","0"]],)"
            << R"("options":{"max_degree":4}})";
    }
    const int exit_code =
        run({"--input", instance_path, "--emit-certificates", report_path, "--log-level", "quiet"});
    if (exit_code != 2) {
        ok = false;
        detail << "    expected exit code 2, got " << exit_code << "\n";
    }
    const int verify_code = run({"--verify", report_path, "--log-level", "quiet"});
    if (verify_code != 0) {
        ok = false;
        detail << "    emitted INCONCLUSIVE report failed verification\n";
    }
    auto doc = nlohmann::json::parse(slurp(report_path));
    if (doc["decision"] != "INCONCLUSIVE") {
        ok = false;
        detail << "    decision field is not INCONCLUSIVE\n";
    }
    std::remove(instance_path.c_str());
    std::remove(report_path.c_str());
    CHECK(report_criterion(9, "INCONCLUSIVE honesty with verifiable diagnostics", ok, detail.str()));
}
