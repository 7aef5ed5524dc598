#include "coneterm/report.hpp"

#include <set>
#include <sstream>

#include "coneterm/instance_io.hpp"
#include "coneterm/linalg.hpp"

namespace coneterm {

using nlohmann::json;

std::string decision_answer_name(DecisionAnswer a) {
    switch (a) {
        case DecisionAnswer::NonterminatingWitnessExists: return "NONTERMINATING_WITNESS_EXISTS";
        case DecisionAnswer::NoWitness: return "NO_WITNESS";
        case DecisionAnswer::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string level_kind_name(LevelKind k) {
    switch (k) {
        case LevelKind::NotSalientStep: return "not-salient-step";
        case LevelKind::SalientLeaf: return "salient-leaf";
        case LevelKind::D1Base: return "d1-base";
        case LevelKind::Dim0Leaf: return "dim0-leaf";
        case LevelKind::EmptyConeLeaf: return "empty-cone-leaf";
        case LevelKind::InconclusiveLeaf: return "inconclusive-leaf";
    }
    return "?";
}

namespace {

json subset_to_json(const std::vector<size_t>& subset) {
    json j = json::array();
    for (size_t i : subset) j.push_back(i + 1);  // 1-based guard indices on the wire
    return j;
}

std::vector<size_t> subset_from_json(const json& j) {
    std::vector<size_t> s;
    for (const auto& e : j) {
        const long v = e.get<long>();
        if (v < 1) throw ParseError("subset indices are 1-based");
        s.push_back(static_cast<size_t>(v - 1));
    }
    return s;
}

json positive_cert_to_json(const PositiveCertificate& cert) {
    json j;
    j["subset"] = subset_to_json(cert.subset);
    json comps = json::array();
    for (const auto& c : cert.element.comps) comps.push_back(c.to_string());
    j["element"] = std::move(comps);
    j["degree"] = cert.degree;
    return j;
}

PositiveCertificate positive_cert_from_json(const json& j, size_t k) {
    PositiveCertificate cert;
    cert.subset = subset_from_json(j.at("subset"));
    std::vector<MultiPoly> comps;
    for (const auto& c : j.at("element")) comps.push_back(MultiPoly::parse(c.get<std::string>(), k));
    cert.element = PolyVec(std::move(comps));
    cert.degree = j.at("degree").get<long>();
    return cert;
}

json gordan_cert_to_json(const GordanPointCertificate& cert) {
    json j;
    j["subset"] = subset_to_json(cert.subset);
    j["point"] = vector_to_json(cert.point);
    j["dual"] = vector_to_json(cert.dual);
    return j;
}

GordanPointCertificate gordan_cert_from_json(const json& j) {
    GordanPointCertificate cert;
    cert.subset = subset_from_json(j.at("subset"));
    cert.point = vector_from_json(j.at("point"));
    cert.dual = vector_from_json(j.at("dual"));
    return cert;
}

json diagnostics_to_json(const PositivityDiagnostics& diag) {
    json j;
    j["deadline_hit"] = diag.deadline_hit;
    json und = json::array();
    for (const auto& u : diag.undecided) {
        json e;
        e["subset"] = subset_to_json(u.subset);
        e["degrees_tried"] = u.degrees_tried;
        e["sample_levels"] = u.sample_levels;
        e["points_sampled"] = u.points_sampled;
        und.push_back(std::move(e));
    }
    j["undecided"] = std::move(und);
    return j;
}

json level_to_json(const TraceLevel& level) {
    json j;
    j["dimension"] = level.dimension;
    j["kind"] = level_kind_name(level.kind);
    json gens = json::array();
    for (const auto& g : level.generators) gens.push_back(vector_to_json(g));
    j["generators"] = std::move(gens);
    j["dropped_zero_generators"] = level.dropped_zero_generators;
    switch (level.kind) {
        case LevelKind::NotSalientStep: {
            j["positive_certificate"] = positive_cert_to_json(*level.positive_cert);
            j["line_witness"] = vector_to_json(*level.line_witness);
            json basis = json::array();
            for (const auto& b : level.subspace_basis) basis.push_back(vector_to_json(b));
            j["subspace_basis"] = std::move(basis);
            j["quotient_map"] = shaped_matrix_to_json(*level.quotient);
            json ind = json::array();
            for (const auto& m : level.induced) ind.push_back(shaped_matrix_to_json(m));
            j["induced"] = std::move(ind);
            break;
        }
        case LevelKind::SalientLeaf: {
            j["contained"] = level.contained;
            json refs = json::array();
            for (const auto& r : level.refutations) refs.push_back(gordan_cert_to_json(r));
            j["refutations"] = std::move(refs);
            break;
        }
        case LevelKind::D1Base:
            j["contained"] = level.contained;
            if (level.common_sign) j["common_sign"] = *level.common_sign;
            if (level.updates_positive) j["updates_positive"] = *level.updates_positive;
            break;
        case LevelKind::Dim0Leaf:
        case LevelKind::EmptyConeLeaf:
            j["contained"] = level.contained;
            break;
        case LevelKind::InconclusiveLeaf:
            j["diagnostics"] = diagnostics_to_json(*level.diagnostics);
            break;
    }
    return j;
}

}  // namespace

json report_to_json(const LoopSystem& sys, const SearchConfig& cfg, const Decision& decision, const Timings& timings,
                    const std::optional<OracleReport>& oracle) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["instance"] = instance_to_json(sys);
    j["config"] = {{"max_degree", cfg.max_degree},
                   {"box", {cfg.box_lo.to_string(), cfg.box_hi.to_string()}},
                   {"max_subdivision_depth", cfg.max_subdivision_depth}};
    j["decision"] = decision_answer_name(decision.answer);
    if (decision.witness) j["witness"] = vector_to_json(*decision.witness);
    json levels = json::array();
    for (const auto& level : decision.trace.levels) levels.push_back(level_to_json(level));
    j["trace"] = std::move(levels);
    j["timings"] = {{"total_ms", timings.total_ms}, {"decide_ms", timings.decide_ms}, {"oracle_ms", timings.oracle_ms}};
    if (oracle) {
        json o;
        o["word_bound"] = oracle->word_bound;
        o["no_witness_definitive"] = oracle->no_witness_definitive;
        if (oracle->not_salient_witness) o["not_salient_witness"] = vector_to_json(*oracle->not_salient_witness);
        if (oracle->witness_survives) o["witness_survives"] = *oracle->witness_survives;
        o["consistent"] = oracle->consistent;
        j["oracle"] = std::move(o);
    }
    return j;
}

namespace {

struct VerifyContext {
    std::ostringstream problems;
    bool ok = true;

    void fail(const std::string& what) {
        ok = false;
        problems << "  - " << what << "\n";
    }
};

std::vector<QVector> live_generators(const std::vector<QVector>& gens, size_t* dropped) {
    std::vector<QVector> live;
    *dropped = 0;
    for (const auto& g : gens) {
        if (g.is_zero())
            ++*dropped;
        else
            live.push_back(g);
    }
    return live;
}

bool generators_match(const json& stored, const std::vector<QVector>& live) {
    if (!stored.is_array() || stored.size() != live.size()) return false;
    for (size_t i = 0; i < live.size(); ++i)
        if (vector_from_json(stored[i]) != live[i]) return false;
    return true;
}

}  // namespace

bool verify_report(const json& report, std::string& errors) {
    VerifyContext ctx;
    try {
        if (!report.is_object() || report.at("schema_version").get<int>() != kReportSchemaVersion) {
            errors = "unsupported or missing schema_version";
            return false;
        }
        const LoopSystem sys = instance_from_json(report.at("instance"));
        const std::string decision = report.at("decision").get<std::string>();
        const json& trace = report.at("trace");
        if (!trace.is_array() || trace.empty()) {
            errors = "trace must be a nonempty array";
            return false;
        }

        std::vector<QMatrix> acting = sys.transposed_matrices();
        std::vector<QVector> gens = sys.guard_rows();
        std::string final_status;
        size_t prev_dim = sys.dim() + 1;

        for (size_t li = 0; li < trace.size(); ++li) {
            const json& lj = trace[li];
            const size_t d = acting.front().rows();
            const bool last = li + 1 == trace.size();
            if (lj.at("dimension").get<size_t>() != d)
                ctx.fail("level " + std::to_string(li) + ": dimension mismatch with the recomputed recursion");
            if (d >= prev_dim) ctx.fail("level " + std::to_string(li) + ": dimension did not strictly decrease");
            prev_dim = d;

            size_t dropped = 0;
            std::vector<QVector> live = live_generators(gens, &dropped);
            if (lj.at("dropped_zero_generators").get<size_t>() != dropped)
                ctx.fail("level " + std::to_string(li) + ": dropped-generator count mismatch");
            if (!generators_match(lj.at("generators"), live))
                ctx.fail("level " + std::to_string(li) + ": stored generators disagree with the recomputation");

            const std::string kind = lj.at("kind").get<std::string>();
            if (kind == "dim0-leaf") {
                if (d != 0) ctx.fail("dim0 leaf at positive dimension");
                if (!last) ctx.fail("dim0 leaf is not the last level");
                final_status = "NO_WITNESS";
            } else if (kind == "empty-cone-leaf") {
                if (!live.empty() || d < 1) ctx.fail("empty-cone leaf with live generators or d = 0");
                if (!last) ctx.fail("empty-cone leaf is not the last level");
                final_status = "NONTERMINATING_WITNESS_EXISTS";
            } else if (kind == "d1-base") {
                if (d != 1 || live.empty()) ctx.fail("d1 base case at wrong dimension or with no generators");
                bool positive = true;
                for (const auto& m : acting) positive = positive && m(0, 0).sign() > 0;
                int sign = live.empty() ? 0 : live.front()[0].sign();
                bool same = !live.empty();
                for (const auto& g : live) same = same && g[0].sign() == sign;
                const bool contained = positive && same;
                if (lj.at("contained").get<bool>() != contained) ctx.fail("d1 base outcome does not re-derive");
                if (contained && lj.at("common_sign").get<int>() != sign) ctx.fail("d1 base common sign mismatch");
                if (!last) ctx.fail("d1 base is not the last level");
                final_status = contained ? "NONTERMINATING_WITNESS_EXISTS" : "NO_WITNESS";
            } else if (kind == "salient-leaf") {
                if (!last) ctx.fail("salient leaf is not the last level");
                LoopSystem level_sys([&] {
                    std::vector<QMatrix> stored;
                    for (const auto& m : acting) stored.push_back(m.transpose());
                    return stored;
                }(), live);
                const json& refs = lj.at("refutations");
                const size_t expected = (size_t{1} << live.size()) - 1;
                if (refs.size() != expected)
                    ctx.fail("salient leaf carries " + std::to_string(refs.size()) + " refutations, expected " +
                             std::to_string(expected));
                std::set<std::vector<size_t>> seen;
                for (const auto& rj : refs) {
                    GordanPointCertificate cert = gordan_cert_from_json(rj);
                    if (!seen.insert(cert.subset).second) ctx.fail("duplicate refutation subset");
                    ModuleBasis basis = kernel_module_basis(level_sys, cert.subset);
                    if (!verify_no_certificate(cert, basis))
                        ctx.fail("Gordan certificate failed re-verification on a salient leaf");
                }
                final_status = "NONTERMINATING_WITNESS_EXISTS";
            } else if (kind == "inconclusive-leaf") {
                if (!last) ctx.fail("inconclusive leaf is not the last level");
                if (!lj.contains("diagnostics") || !lj["diagnostics"].contains("undecided") ||
                    lj["diagnostics"]["undecided"].empty())
                    ctx.fail("inconclusive leaf without diagnostics");
                final_status = "INCONCLUSIVE";
            } else if (kind == "not-salient-step") {
                if (last) ctx.fail("recursion step cannot be the last level");
                LoopSystem level_sys([&] {
                    std::vector<QMatrix> stored;
                    for (const auto& m : acting) stored.push_back(m.transpose());
                    return stored;
                }(), live);
                PositiveCertificate cert = positive_cert_from_json(lj.at("positive_certificate"), sys.num_updates());
                if (!verify_positive_certificate(cert, level_sys))
                    ctx.fail("positive certificate failed re-verification");
                const QVector w = vector_from_json(lj.at("line_witness"));
                if (w != extract_line_witness(cert, level_sys))
                    ctx.fail("stored line witness does not re-derive from the certificate");

                Subspace sub;
                sub.ambient_dim = d;
                for (const auto& bj : lj.at("subspace_basis")) sub.basis.push_back(vector_from_json(bj));
                {
                    QMatrix stacked(sub.basis.size(), d);
                    for (size_t i = 0; i < sub.basis.size(); ++i)
                        for (size_t c = 0; c < d; ++c) stacked(i, c) = sub.basis[i][c];
                    if (rank(stacked) != sub.basis.size()) ctx.fail("subspace basis is not independent");
                }
                if (!sub.contains(w)) ctx.fail("subspace does not contain the line witness");
                for (const auto& m : acting)
                    for (const auto& b : sub.basis)
                        if (!sub.contains(m * b)) ctx.fail("subspace is not invariant under the acting matrices");

                const QMatrix pi = shaped_matrix_from_json(lj.at("quotient_map"));
                if (pi.rows() != d - sub.dim() || pi.cols() != d) ctx.fail("quotient map has the wrong shape");
                if (rank(pi) != pi.rows()) ctx.fail("quotient map is not surjective");
                for (const auto& b : sub.basis)
                    if (!(pi * b).is_zero()) ctx.fail("quotient map does not kill the subspace");

                std::vector<QMatrix> induced;
                for (const auto& mj : lj.at("induced")) induced.push_back(shaped_matrix_from_json(mj));
                if (induced.size() != acting.size()) ctx.fail("induced matrix count mismatch");
                for (size_t t = 0; t < induced.size() && t < acting.size(); ++t)
                    if (induced[t] * pi != pi * acting[t]) ctx.fail("conjugation identity violated");
                for (size_t a = 0; a < induced.size(); ++a) {
                    if (induced[a].rows() > 0 && !is_invertible(induced[a])) ctx.fail("induced matrix is singular");
                    for (size_t b = a + 1; b < induced.size(); ++b)
                        if (induced[a] * induced[b] != induced[b] * induced[a])
                            ctx.fail("induced matrices do not commute");
                }

                std::vector<QVector> images;
                for (const auto& g : live) images.push_back(pi * g);
                gens = std::move(images);
                acting = std::move(induced);
            } else {
                ctx.fail("unknown level kind '" + kind + "'");
                break;
            }
        }

        if (!final_status.empty() && final_status != decision)
            ctx.fail("decision '" + decision + "' does not follow from the trace (expected '" + final_status + "')");

        if (report.contains("witness")) {
            const QVector witness = vector_from_json(report["witness"]);
            if (witness.is_zero() || witness.dim() != sys.dim()) {
                ctx.fail("witness must be a nonzero d-dimensional vector");
            } else {
                // Re-derive the pullback: the d1 normal mapped up through the
                // quotient transposes.
                const json& lastj = trace.back();
                if (lastj.at("kind").get<std::string>() != "d1-base" || !lastj.at("contained").get<bool>()) {
                    ctx.fail("witness present but the trace does not end in a contained d1 base case");
                } else {
                    QVector normal{Rational(lastj.at("common_sign").get<int>())};
                    for (size_t li = trace.size(); li-- > 0;) {
                        if (trace[li].at("kind").get<std::string>() != "not-salient-step") continue;
                        normal = shaped_matrix_from_json(trace[li].at("quotient_map")).transpose() * normal;
                    }
                    if (normal != witness) ctx.fail("witness does not equal the pulled-back halfspace normal");
                }
                if (!orbit_simulate(witness, sys, 6)) ctx.fail("witness fails bounded orbit simulation");
            }
        }
    } catch (const std::exception& e) {
        ctx.fail(std::string("exception while verifying: ") + e.what());
    }
    errors = ctx.problems.str();
    return ctx.ok;
}

}  // namespace coneterm
