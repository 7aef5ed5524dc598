#include "coneterm/positivity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coneterm/lp.hpp"

namespace coneterm {

void SearchConfig::validate() const {
    if (box_lo.sign() <= 0) throw std::invalid_argument("box lower bound must be positive");
    if (box_lo > Rational(1) || box_hi < Rational(1))
        throw std::invalid_argument("box must satisfy lo <= 1 <= hi");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    if (max_subdivision_depth < 0) throw std::invalid_argument("max_subdivision_depth must be nonnegative");
}

std::optional<PolyVec> find_positive_element(const ModuleBasis& basis, long degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (basis.generators.empty()) return std::nullopt;
    const size_t k = basis.k, width = basis.width;
    const std::vector<Monomial> hmons = monomials_up_to_degree(k, degree_bound);
    const size_t unknowns = basis.generators.size() * hmons.size();

    // Expanded coefficient of the combination at (component, monomial) as a
    // linear form over the unknown h coefficients.
    std::vector<std::map<Monomial, QVector, GradedLexLess>> forms(width);
    std::vector<QVector> component_sum(width, QVector(unknowns));
    for (size_t g = 0; g < basis.generators.size(); ++g)
        for (size_t hi = 0; hi < hmons.size(); ++hi) {
            const size_t u = g * hmons.size() + hi;
            for (size_t t = 0; t < width; ++t)
                for (const auto& [mono, c] : basis.generators[g].comps[t].terms()) {
                    const Monomial target = hmons[hi] * mono;
                    auto [it, inserted] = forms[t].emplace(target, QVector(unknowns));
                    it->second[u] += c;
                    component_sum[t][u] += c;
                }
        }

    LinearSystem lp;
    lp.num_vars = unknowns;
    for (size_t t = 0; t < width; ++t)
        for (const auto& [mono, form] : forms[t]) lp.add_ge(form, Rational(0));
    // Nonzeroness of every component, normalized: coefficient sums >= 1.
    // Scale-invariance of the module makes this equivalent to != 0.
    for (size_t t = 0; t < width; ++t) lp.add_ge(component_sum[t], Rational(1));

    auto res = lp_feasible(lp);
    if (!res.feasible) return std::nullopt;

    // Reconstruct the combination through the polynomial ring and re-check;
    // a mismatch would mean the LP encoding is wrong.
    PolyVec element = PolyVec::zero(width, k);
    for (size_t g = 0; g < basis.generators.size(); ++g) {
        MultiPoly h(k);
        for (size_t hi = 0; hi < hmons.size(); ++hi)
            h.add_term(hmons[hi], (*res.point)[g * hmons.size() + hi]);
        element += h * basis.generators[g];
    }
    if (!is_positive_tuple(element, PositiveTupleMode::AllComponentsNonzero))
        throw std::logic_error("positive-element LP produced a non-positive combination");
    return element;
}

namespace {

struct ScheduledValue {
    Rational value;
    long level;  // max(numerator, denominator)
};

// All p/q in lowest terms with 1 <= p,q <= n, ascending by value.
std::vector<ScheduledValue> fractions_up_to(long n) {
    std::vector<ScheduledValue> out;
    for (long p = 1; p <= n; ++p)
        for (long q = 1; q <= n; ++q) {
            mpz_class g;
            mpz_class zp(p), zq(q);
            mpz_gcd(g.get_mpz_t(), zp.get_mpz_t(), zq.get_mpz_t());
            if (g != 1) continue;
            out.push_back({Rational(p, q), std::max(p, q)});
        }
    std::sort(out.begin(), out.end(), [](const ScheduledValue& a, const ScheduledValue& b) { return a.value < b.value; });
    return out;
}

QMatrix evaluate_generators(const ModuleBasis& basis, const QVector& point) {
    QMatrix g(basis.width, basis.generators.size());
    for (size_t j = 0; j < basis.generators.size(); ++j)
        for (size_t t = 0; t < basis.width; ++t) g(t, j) = basis.generators[j].comps[t].eval(point);
    return g;
}

}  // namespace

std::optional<GordanPointCertificate> gordan_sample_level(const ModuleBasis& basis, const std::vector<size_t>& subset,
                                                          const SearchConfig& cfg, long level,
                                                          size_t* points_sampled) {
    if (level < 1) throw std::invalid_argument("schedule level starts at 1");
    const size_t k = basis.k;
    const std::vector<ScheduledValue> values = fractions_up_to(level);

    // Tuples whose maximal coordinate level equals `level`, in-box tuples
    // first, each group in ascending lexicographic order by value.
    std::vector<QVector> in_box, out_box;
    std::vector<size_t> idx(k, 0);
    while (true) {
        long max_level = 0;
        bool inside = true;
        QVector point(k);
        for (size_t v = 0; v < k; ++v) {
            const auto& sv = values[idx[v]];
            point[v] = sv.value;
            max_level = std::max(max_level, sv.level);
            if (sv.value < cfg.box_lo || sv.value > cfg.box_hi) inside = false;
        }
        if (max_level == level) (inside ? in_box : out_box).push_back(std::move(point));
        bool wrapped = true;
        for (size_t v = k; v-- > 0;) {
            if (++idx[v] < values.size()) {
                wrapped = false;
                break;
            }
            idx[v] = 0;
        }
        if (wrapped) break;
    }

    for (const auto* group : {&in_box, &out_box})
        for (const auto& point : *group) {
            if (cfg.expired()) return std::nullopt;
            if (points_sampled) ++*points_sampled;
            auto dual = gordan_dual(evaluate_generators(basis, point));
            if (dual) {
                GordanPointCertificate cert{subset, point, *dual};
                if (!verify_no_certificate(cert, basis))
                    throw std::logic_error("Gordan search produced an invalid certificate");
                return cert;
            }
        }
    return std::nullopt;
}

std::optional<GordanPointCertificate> find_gordan_point(const ModuleBasis& basis, const std::vector<size_t>& subset,
                                                        const SearchConfig& cfg) {
    for (long level = 1; level <= cfg.max_degree + 1; ++level) {
        auto cert = gordan_sample_level(basis, subset, cfg, level);
        if (cert) return cert;
        if (cfg.expired()) return std::nullopt;
    }
    return std::nullopt;
}

bool verify_positive_certificate(const PositiveCertificate& cert, const LoopSystem& sys) {
    if (cert.subset.empty() || cert.subset.size() != cert.element.width()) return false;
    for (size_t t = 0; t < cert.subset.size(); ++t) {
        if (cert.subset[t] >= sys.num_guards()) return false;
        if (t > 0 && cert.subset[t] <= cert.subset[t - 1]) return false;
    }
    for (const auto& comp : cert.element.comps)
        if (comp.k() != sys.num_updates()) return false;
    if (!is_positive_tuple(cert.element, PositiveTupleMode::AllComponentsNonzero)) return false;
    return combine_guards(cert.element, sys, cert.subset).is_zero();
}

bool verify_no_certificate(const GordanPointCertificate& cert, const ModuleBasis& basis) {
    if (cert.point.dim() != basis.k) return false;
    for (size_t v = 0; v < cert.point.dim(); ++v)
        if (cert.point[v].sign() <= 0) return false;
    if (cert.dual.dim() != basis.width) return false;
    Rational total;
    for (size_t t = 0; t < cert.dual.dim(); ++t) {
        if (cert.dual[t].sign() < 0) return false;
        total += cert.dual[t];
    }
    if (total != Rational(1)) return false;
    for (const auto& g : basis.generators) {
        Rational s;
        for (size_t t = 0; t < basis.width; ++t) s += cert.dual[t] * g.comps[t].eval(cert.point);
        if (!s.is_zero()) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<size_t>> enumerate_subsets(size_t n) {
    std::vector<std::vector<size_t>> subsets;
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        std::vector<size_t> s;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return subsets;
}

}  // namespace

PositivityResult decide_positive_nonzero(const LoopSystem& sys, const SearchConfig& cfg) {
    cfg.validate();
    const auto subsets = enumerate_subsets(sys.num_guards());
    std::vector<ModuleBasis> bases;
    bases.reserve(subsets.size());
    for (const auto& s : subsets) bases.push_back(kernel_module_basis(sys, s));

    std::vector<std::optional<GordanPointCertificate>> refuted(subsets.size());
    std::vector<SubsetDiagnostics> progress(subsets.size());
    for (size_t s = 0; s < subsets.size(); ++s) progress[s].subset = subsets[s];

    auto inconclusive = [&](bool deadline_hit) {
        PositivityResult r;
        r.answer = PositivityAnswer::Inconclusive;
        PositivityDiagnostics diag;
        diag.deadline_hit = deadline_hit;
        for (size_t s = 0; s < subsets.size(); ++s)
            if (!refuted[s]) diag.undecided.push_back(progress[s]);
        r.diagnostics = std::move(diag);
        return r;
    };

    for (long round = 0; round <= cfg.max_degree; ++round) {
        // YES pass. Runs on every subset, refuted ones included: a positive
        // element alongside a Gordan point would be a soundness bug.
        for (size_t s = 0; s < subsets.size(); ++s) {
            if (cfg.expired()) return inconclusive(true);
            auto element = find_positive_element(bases[s], round);
            progress[s].degrees_tried = round;
            if (!element) continue;
            if (refuted[s])
                throw std::logic_error("mutual exclusion violated: positive element and Gordan point coexist");
            PositiveCertificate cert{subsets[s], std::move(*element), round};
            if (!verify_positive_certificate(cert, sys))
                throw std::logic_error("positive certificate failed verification");
            PositivityResult r;
            r.answer = PositivityAnswer::Yes;
            r.positive = std::move(cert);
            return r;
        }
        // NO pass: one schedule level per round.
        bool all_refuted = true;
        for (size_t s = 0; s < subsets.size(); ++s) {
            if (refuted[s]) continue;
            if (cfg.expired()) return inconclusive(true);
            auto cert = gordan_sample_level(bases[s], subsets[s], cfg, round + 1, &progress[s].points_sampled);
            progress[s].sample_levels = round + 1;
            if (cert)
                refuted[s] = std::move(cert);
            else
                all_refuted = false;
        }
        if (all_refuted) {
            PositivityResult r;
            r.answer = PositivityAnswer::No;
            for (auto& c : refuted) r.refutations.push_back(std::move(*c));
            return r;
        }
    }
    return inconclusive(false);
}

BoxVerifyResult verify_box_positivity(const ModuleBasis& basis, const std::vector<size_t>& subset,
                                      const SearchConfig& cfg) {
    cfg.validate();
    BoxVerifyResult result;
    std::vector<std::pair<std::vector<QInterval>, int>> stack;
    stack.emplace_back(std::vector<QInterval>(basis.k, QInterval(cfg.box_lo, cfg.box_hi)), 0);

    while (!stack.empty()) {
        if (cfg.expired()) return result;  // status Unknown
        auto [box, depth] = std::move(stack.back());
        stack.pop_back();
        ++result.boxes_processed;

        // Candidate refutation points: the corners first (zeros of the
        // generators often sit on box boundaries), then the midpoint, whose
        // combination drives the interval test.
        std::vector<QVector> candidates;
        for (size_t mask = 0; mask < (size_t{1} << basis.k); ++mask) {
            QVector corner(basis.k);
            for (size_t v = 0; v < basis.k; ++v) corner[v] = (mask >> v) & 1 ? box[v].hi : box[v].lo;
            candidates.push_back(std::move(corner));
        }
        QVector mid(basis.k);
        for (size_t v = 0; v < basis.k; ++v) mid[v] = box[v].midpoint();
        candidates.push_back(mid);

        std::optional<QVector> combo;
        for (const auto& point : candidates) {
            const QMatrix g = evaluate_generators(basis, point);
            combo = positive_span_feasible(g);
            if (!combo) {
                auto dual = gordan_dual(g);
                if (!dual) throw std::logic_error("LP alternative produced neither certificate");
                GordanPointCertificate cert{subset, point, *dual};
                if (!verify_no_certificate(cert, basis))
                    throw std::logic_error("box refutation certificate failed verification");
                result.status = BoxVerifyStatus::Refuted;
                result.refutation = std::move(cert);
                return result;
            }
        }

        // Interval test of the midpoint combination over the whole box.
        bool positive_everywhere = true;
        for (size_t t = 0; t < basis.width && positive_everywhere; ++t) {
            MultiPoly comp(basis.k);
            for (size_t j = 0; j < basis.generators.size(); ++j)
                comp += (*combo)[j] * basis.generators[j].comps[t];
            positive_everywhere = eval_on_box(comp, box).strictly_positive();
        }
        if (positive_everywhere) {
            result.cover.push_back({box, *combo});
            continue;
        }
        if (depth >= cfg.max_subdivision_depth) {
            result.status = BoxVerifyStatus::Unknown;
            return result;
        }
        // Bisect the widest coordinate (lowest index on ties); the lower
        // half is processed first.
        size_t widest = 0;
        for (size_t v = 1; v < basis.k; ++v)
            if (box[v].width() > box[widest].width()) widest = v;
        const Rational m = box[widest].midpoint();
        auto lower = box, upper = box;
        lower[widest] = QInterval(box[widest].lo, m);
        upper[widest] = QInterval(m, box[widest].hi);
        stack.emplace_back(std::move(upper), depth + 1);
        stack.emplace_back(std::move(lower), depth + 1);
    }
    result.status = BoxVerifyStatus::Verified;
    return result;
}

}  // namespace coneterm
