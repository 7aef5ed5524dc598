#pragma once

#include <utility>
#include <vector>

#include "coneterm/poly.hpp"
#include "coneterm/system.hpp"

namespace coneterm {

/*
 * Finite generating set of the kernel of the module map restricted to a
 * guard subfamily I: tuples (f_i)_{i in I} with
 * sum_{i in I} f_i(A_1^T,..,A_k^T) c_i = 0.
 *
 * Construction: with F_j the monic characteristic polynomial of A_j^T,
 * every F_j e_i is in the kernel (Cayley-Hamilton). Among tuples supported
 * on monomials with per-variable exponents below deg F_j, the kernel is a
 * finite-dimensional linear problem whose solution space R is computed
 * exactly. R together with the F_j e_i generates the whole kernel module:
 * iterated division by the F_j reduces any element into the bounded
 * monomial window modulo multiples of the F_j.
 */
struct ModuleBasis {
    std::vector<PolyVec> generators;   ///< R-part first, then the F_j e_i
    size_t width = 0;                  ///< tuple width (= |I|)
    size_t k = 0;                      ///< number of variables
    size_t r_count = 0;                ///< how many generators form the R-part
    std::vector<MultiPoly> char_polys; ///< F_j, monic, univariate in X_j
    std::vector<long> degree_bounds;   ///< deg F_j

    const PolyVec& r_generator(size_t t) const { return generators[t]; }
};

/// Basis of the kernel module over the guard subfamily with the given
/// ascending 0-based indices (must be nonempty).
ModuleBasis kernel_module_basis(const LoopSystem& sys, const std::vector<size_t>& guard_indices);

/// Basis over the full guard family.
ModuleBasis kernel_module_basis(const LoopSystem& sys);

/// Splits f = f' + f'' with f'' in the module generated by the F_j e_i and
/// every monomial of f' inside the bounded window (exps[j] < deg F_j).
std::pair<PolyVec, PolyVec> reduce_mod_charpolys(const PolyVec& fvec, const ModuleBasis& basis);

/// True iff f' (the reduced part of fvec) is a rational linear combination
/// of the R-part generators; together with reduce_mod_charpolys this
/// decides representability over the computed basis.
bool reduces_over_basis(const PolyVec& fvec, const ModuleBasis& basis);

/// Kernel membership: the module map sends fvec to zero. When
/// check_representation is set, membership additionally asserts that fvec
/// is representable over the computed basis (throws std::logic_error if
/// the completeness claim were violated).
bool module_membership(const PolyVec& fvec, const LoopSystem& sys, const std::vector<size_t>& guard_indices,
                       const ModuleBasis& basis, bool check_representation = false);

}  // namespace coneterm
