#include "coneterm/cone.hpp"

#include <stdexcept>

#include "coneterm/linalg.hpp"
#include "coneterm/lp.hpp"

namespace coneterm {

size_t GeneratorCone::zero_generator_count() const {
    size_t c = 0;
    for (const auto& g : generators)
        if (g.is_zero()) ++c;
    return c;
}

bool Subspace::contains(const QVector& v) const {
    if (v.dim() != ambient_dim) throw std::invalid_argument("subspace membership dimension mismatch");
    if (v.is_zero()) return true;
    QMatrix stacked(basis.size() + 1, ambient_dim);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < ambient_dim; ++j) stacked(i, j) = basis[i][j];
    for (size_t j = 0; j < ambient_dim; ++j) stacked(basis.size(), j) = v[j];
    return rank(stacked) == basis.size();
}

GeneratorCone dual_cone(const LoopSystem& sys) {
    return GeneratorCone(sys.guard_rows(), sys.dim());
}

SalienceCheck is_salient_finite(const GeneratorCone& cone) {
    const size_t m = cone.generators.size();
    const size_t d = cone.ambient_dim;
    for (size_t i = 0; i < m; ++i) {
        if (cone.generators[i].is_zero()) continue;
        LinearSystem sys;
        sys.num_vars = m;
        for (size_t coord = 0; coord < d; ++coord) {
            QVector row(m);
            for (size_t j = 0; j < m; ++j) row[j] = cone.generators[j][coord];
            sys.add_eq(std::move(row), Rational(0));
        }
        for (size_t j = 0; j < m; ++j) {
            QVector e(m);
            e[j] = Rational(1);
            sys.add_ge(std::move(e), j == i ? Rational(1) : Rational(0));
        }
        auto res = lp_feasible(sys);
        if (res.feasible) {
            const Rational scale = (*res.point)[i];
            return SalienceCheck{false, scale * cone.generators[i]};
        }
    }
    return SalienceCheck{true, std::nullopt};
}

namespace {

Subspace canonical_span(const std::vector<QVector>& vectors, size_t ambient_dim) {
    QMatrix stacked(vectors.size(), ambient_dim);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = 0; j < ambient_dim; ++j) stacked(i, j) = vectors[i][j];
    auto [r, pivots] = rref(stacked);
    Subspace w;
    w.ambient_dim = ambient_dim;
    for (size_t t = 0; t < pivots.size(); ++t) w.basis.push_back(r.row(t));
    return w;
}

}  // namespace

Subspace invariant_closure(const QVector& w, const std::vector<QMatrix>& ms) {
    if (w.is_zero()) throw std::invalid_argument("invariant closure of the zero vector");
    const size_t d = w.dim();
    Subspace current = canonical_span({w}, d);
    while (true) {
        std::vector<QVector> extended = current.basis;
        for (const auto& m : ms)
            for (const auto& b : current.basis) extended.push_back(m * b);
        Subspace next = canonical_span(extended, d);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

QMatrix quotient_map(const Subspace& w) {
    const size_t d = w.ambient_dim;
    QMatrix basis_matrix(w.basis.size(), d);
    for (size_t i = 0; i < w.basis.size(); ++i)
        for (size_t j = 0; j < d; ++j) basis_matrix(i, j) = w.basis[i][j];
    auto [r, pivots] = rref(basis_matrix);
    if (pivots.size() != w.basis.size()) throw std::invalid_argument("subspace basis is not independent");
    std::vector<bool> is_pivot(d, false);
    for (size_t c : pivots) is_pivot[c] = true;
    QMatrix pi(d - pivots.size(), d);
    size_t out = 0;
    for (size_t f = 0; f < d; ++f) {
        if (is_pivot[f]) continue;
        pi(out, f) = Rational(1);
        for (size_t t = 0; t < pivots.size(); ++t) pi(out, pivots[t]) = -r(t, f);
        ++out;
    }
    return pi;
}

std::vector<QMatrix> induced_matrices(const QMatrix& pi, const std::vector<QMatrix>& ms) {
    const size_t q = pi.rows();
    const QMatrix pit = pi.transpose();
    std::vector<QMatrix> induced;
    induced.reserve(ms.size());
    for (const auto& m : ms) {
        // B pi = pi M transposes to pi^T B^T = (pi M)^T; column j of B^T is
        // row j of B, solved exactly (pi^T has full column rank).
        const QMatrix rhs = (pi * m).transpose();
        QMatrix b(q, q);
        for (size_t j = 0; j < q; ++j) {
            auto row = solve(pit, rhs.col(j));
            if (!row) throw std::logic_error("quotient kernel is not invariant under the update");
            for (size_t i = 0; i < q; ++i) b(j, i) = (*row)[i];
        }
        if (b * pi != pi * m) throw std::logic_error("quotient kernel is not invariant under the update");
        induced.push_back(std::move(b));
    }
    return induced;
}

}  // namespace coneterm
