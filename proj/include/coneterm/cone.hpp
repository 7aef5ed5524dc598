#pragma once

#include <optional>
#include <vector>

#include "coneterm/matrix.hpp"
#include "coneterm/system.hpp"

namespace coneterm {

/// Finitely generated cone {sum r_i g_i : r_i >= 0}. Zero generators are
/// tolerated (they arise as images under quotient maps) and reported.
struct GeneratorCone {
    std::vector<QVector> generators;
    size_t ambient_dim = 0;

    GeneratorCone() = default;
    GeneratorCone(std::vector<QVector> gens, size_t dim) : generators(std::move(gens)), ambient_dim(dim) {}

    size_t zero_generator_count() const;
};

/// Closed halfspace {x : normal^T x >= 0}.
struct Halfspace {
    QVector normal;
};

/// Linear subspace with a canonical basis (nonzero rows of the rref of any
/// spanning set), so equal subspaces compare equal.
struct Subspace {
    std::vector<QVector> basis;
    size_t ambient_dim = 0;

    size_t dim() const { return basis.size(); }
    bool contains(const QVector& v) const;
};

/// Generator representation of the dual cone: the guard rows themselves.
GeneratorCone dual_cone(const LoopSystem& sys);

struct SalienceCheck {
    bool salient = true;
    std::optional<QVector> line_witness;  // nonzero v with v and -v in the cone
};

/*
 * Salience of a finitely generated cone, by exact LP: the cone is NOT
 * salient iff for some nonzero generator g_i the system
 *   nu >= 0, nu_i >= 1, sum_j nu_j g_j = 0
 * is feasible, in which case v = nu_i g_i satisfies +-v in the cone.
 */
SalienceCheck is_salient_finite(const GeneratorCone& cone);

/// Smallest subspace containing w that is closed under all given maps.
/// Grows W <- W + M_1 W + ... + M_k W until stable.
Subspace invariant_closure(const QVector& w, const std::vector<QMatrix>& ms);

/*
 * Rational surjection pi with ker(pi) = W, of shape (d - dim W) x d.
 * Convention: with the basis of W in rref, each non-pivot coordinate f
 * yields the row e_f - sum_i (basis_i)[f] e_{p_i}, i.e. pi reads off the
 * non-pivot coordinates after eliminating W.
 */
QMatrix quotient_map(const Subspace& w);

/// Matrices B_i with B_i pi = pi M_i, acting on the quotient. Requires
/// ker(pi) invariant under every M_i; throws std::logic_error otherwise.
std::vector<QMatrix> induced_matrices(const QMatrix& pi, const std::vector<QMatrix>& ms);

}  // namespace coneterm
