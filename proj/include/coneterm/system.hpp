#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "coneterm/poly.hpp"

namespace coneterm {

/// Validation failure for a loop instance; `kind` names the violated rule.
class ValidationError : public std::runtime_error {
public:
    enum class Kind { NonCommuting, Singular, ZeroGuardRow, DimensionMismatch };

    ValidationError(Kind kind, std::string message, size_t i = 0, size_t j = 0)
        : std::runtime_error(std::move(message)), kind(kind), i(i), j(j) {}

    Kind kind;
    size_t i, j;
};

/*
 * Validated problem instance: commuting invertible d x d update matrices
 * A_1..A_k and nonzero guard rows c_1..c_n. The guard cone is
 * {x : c_i^T x >= 0 for all i}; its dual cone is generated by the c_i.
 *
 * The analysis works throughout with the transposed matrices (they act on
 * the dual cone), so those are cached at construction.
 */
class LoopSystem {
public:
    /// Checks dimensions, pairwise commutation, invertibility and nonzero
    /// guard rows; throws ValidationError otherwise.
    LoopSystem(std::vector<QMatrix> matrices, std::vector<QVector> guard_rows);

    size_t dim() const { return d_; }
    size_t num_updates() const { return matrices_.size(); }
    size_t num_guards() const { return guard_rows_.size(); }

    const QMatrix& matrix(size_t j) const { return matrices_[j]; }
    const QMatrix& transposed(size_t j) const { return transposed_[j]; }
    const std::vector<QMatrix>& matrices() const { return matrices_; }
    const std::vector<QMatrix>& transposed_matrices() const { return transposed_; }
    const QVector& guard_row(size_t i) const { return guard_rows_[i]; }
    const std::vector<QVector>& guard_rows() const { return guard_rows_; }

    /// Power of the j-th transposed matrix, memoized (the module map hits
    /// the same powers over and over). Thread-safe; sharing a system across
    /// threads is part of the contract.
    QMatrix transposed_power(size_t j, size_t e) const;

    LoopSystem(const LoopSystem& o);
    LoopSystem& operator=(const LoopSystem&) = delete;
    LoopSystem(LoopSystem&&) = default;
    LoopSystem& operator=(LoopSystem&&) = default;

private:
    struct PowerCache {
        std::mutex mutex;
        std::vector<std::vector<QMatrix>> powers;
    };

    size_t d_;
    std::vector<QMatrix> matrices_;
    std::vector<QMatrix> transposed_;
    std::vector<QVector> guard_rows_;
    mutable std::unique_ptr<PowerCache> power_cache_;
};

/// Substitutes commuting matrices for the variables:
/// sum over terms of c * M_1^{e_1} * ... * M_k^{e_k}.
QMatrix eval_at_matrices(const MultiPoly& f, const std::vector<QMatrix>& ms);

/// The module map: (f_1,..,f_n) -> sum_i f_i(A_1^T,..,A_k^T) c_i. The
/// kernel of this map is the module whose positive elements witness
/// non-salience of the orbit cone.
QVector combine_guards(const PolyVec& fvec, const LoopSystem& sys);

/// Same map restricted to a guard subfamily: components of fvec line up
/// with guard_indices (ascending, 0-based).
QVector combine_guards(const PolyVec& fvec, const LoopSystem& sys, const std::vector<size_t>& guard_indices);

}  // namespace coneterm
