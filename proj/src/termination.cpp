#include "coneterm/termination.hpp"

#include <stdexcept>

namespace coneterm {

LoopSystem validate_system(std::vector<QMatrix> matrices, std::vector<QVector> guard_rows) {
    return LoopSystem(std::move(matrices), std::move(guard_rows));
}

QVector extract_line_witness(const PositiveCertificate& cert, const LoopSystem& sys) {
    size_t first = cert.element.width();
    for (size_t t = 0; t < cert.element.width(); ++t)
        if (!cert.element.comps[t].is_zero()) {
            first = t;
            break;
        }
    if (first == cert.element.width()) throw std::invalid_argument("certificate element is zero");
    const auto [mono, coeff] = cert.element.comps[first].min_term();
    QVector w = sys.guard_row(cert.subset[first]);
    for (size_t v = 0; v < sys.num_updates(); ++v)
        if (mono.exps[v] > 0) w = sys.transposed_power(v, static_cast<size_t>(mono.exps[v])) * w;
    if (w.is_zero()) throw std::logic_error("monomial image of a guard row vanished");
    return w;
}

ContainmentResult decide_halfspace_containment(const std::vector<QMatrix>& acting, const std::vector<QVector>& gens,
                                               const SearchConfig& cfg) {
    if (acting.empty()) throw std::invalid_argument("at least one update matrix required");
    const size_t d = acting.front().rows();

    ContainmentResult result;
    TraceLevel level;
    level.dimension = d;
    for (const auto& g : gens) {
        if (g.is_zero())
            ++level.dropped_zero_generators;
        else
            level.generators.push_back(g);
    }
    const std::vector<QVector>& live = level.generators;

    if (d == 0) {
        // R^0 has no nonzero normal, hence no halfspace at all.
        level.kind = LevelKind::Dim0Leaf;
        level.contained = false;
        result.status = Containment::NotContained;
        result.trace.levels.push_back(std::move(level));
        return result;
    }

    if (live.empty()) {
        // Image cone is {0}, contained in every halfspace of R^d, d >= 1.
        level.kind = LevelKind::EmptyConeLeaf;
        level.contained = true;
        result.status = Containment::Contained;
        result.trace.levels.push_back(std::move(level));
        return result;
    }

    if (d == 1) {
        level.kind = LevelKind::D1Base;
        int sign = live.front()[0].sign();
        bool same_sign = true;
        for (const auto& g : live) same_sign = same_sign && g[0].sign() == sign;
        bool positive = true;
        for (const auto& m : acting) positive = positive && m(0, 0).sign() > 0;
        level.updates_positive = positive;
        level.contained = same_sign && positive;
        if (level.contained) {
            level.common_sign = sign;
            result.halfspace = Halfspace{QVector{Rational(sign)}};
        }
        result.status = level.contained ? Containment::Contained : Containment::NotContained;
        result.trace.levels.push_back(std::move(level));
        return result;
    }

    // Salience of the orbit cone, via positivity of the kernel module. The
    // analysis machinery acts through transposes, so the level system
    // stores the acting matrices transposed back.
    std::vector<QMatrix> stored;
    stored.reserve(acting.size());
    for (const auto& m : acting) stored.push_back(m.transpose());
    LoopSystem level_sys(std::move(stored), live);

    PositivityResult pos = decide_positive_nonzero(level_sys, cfg);
    if (pos.answer == PositivityAnswer::Inconclusive) {
        level.kind = LevelKind::InconclusiveLeaf;
        level.diagnostics = std::move(pos.diagnostics);
        result.status = Containment::Inconclusive;
        result.trace.levels.push_back(std::move(level));
        return result;
    }
    if (pos.answer == PositivityAnswer::No) {
        // No positive kernel element: the orbit cone is salient, hence
        // contained in some halfspace (existence only at this leaf).
        level.kind = LevelKind::SalientLeaf;
        level.refutations = std::move(pos.refutations);
        level.contained = true;
        result.status = Containment::Contained;
        result.trace.levels.push_back(std::move(level));
        return result;
    }

    level.kind = LevelKind::NotSalientStep;
    level.positive_cert = std::move(pos.positive);
    const QVector w = extract_line_witness(*level.positive_cert, level_sys);
    level.line_witness = w;

    const Subspace closure = invariant_closure(w, acting);
    level.subspace_basis = closure.basis;
    const QMatrix pi = quotient_map(closure);
    level.quotient = pi;
    level.induced = induced_matrices(pi, acting);

    std::vector<QVector> images;
    images.reserve(live.size());
    for (const auto& g : live) images.push_back(pi * g);

    ContainmentResult below = decide_halfspace_containment(level.induced, images, cfg);
    result.status = below.status;
    if (below.halfspace) {
        // pi^T pulls a separating normal back: u^T (pi x) = (pi^T u)^T x.
        result.halfspace = Halfspace{pi.transpose() * below.halfspace->normal};
    }
    result.trace.levels.push_back(std::move(level));
    for (auto& l : below.trace.levels) result.trace.levels.push_back(std::move(l));
    return result;
}

Decision decide_nontermination(const LoopSystem& sys, const SearchConfig& cfg) {
    ContainmentResult res = decide_halfspace_containment(sys.transposed_matrices(), sys.guard_rows(), cfg);
    Decision decision;
    decision.trace = std::move(res.trace);
    switch (res.status) {
        case Containment::Contained:
            decision.answer = DecisionAnswer::NonterminatingWitnessExists;
            // The halfspace normal v satisfies c_i^T A^w v >= 0 for every
            // word, i.e. v itself is a nonterminating start vector.
            if (res.halfspace) decision.witness = std::move(res.halfspace->normal);
            break;
        case Containment::NotContained:
            decision.answer = DecisionAnswer::NoWitness;
            break;
        case Containment::Inconclusive:
            decision.answer = DecisionAnswer::Inconclusive;
            break;
    }
    return decision;
}

}  // namespace coneterm
