#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coneterm/matrix.hpp"

namespace coneterm {

/*
 * Exact rational linear feasibility with two-sided certificates.
 *
 * A LinearSystem holds equality rows a.x = b and inequality rows a.x >= b
 * over num_vars free variables. lp_feasible answers with either a point
 * satisfying every row exactly, or a Farkas vector y (indexed equalities
 * first, then inequalities) with y >= 0 on the inequality entries,
 * sum_r y_r a_r = 0 and sum_r y_r b_r > 0.
 *
 * Implementation: phase-I simplex on the standard form with split
 * variables, surplus and artificial columns, Bland's pivot rule throughout
 * (termination without perturbation). Certificates are re-checked against
 * the original rows by plain arithmetic before being returned.
 */
struct LinearSystem {
    size_t num_vars = 0;
    std::vector<std::pair<QVector, Rational>> equalities;
    std::vector<std::pair<QVector, Rational>> inequalities;

    void add_eq(QVector a, Rational b);
    void add_ge(QVector a, Rational b);
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<QVector> point;   // set when feasible
    std::optional<QVector> farkas;  // set when infeasible
};

FeasibilityResult lp_feasible(const LinearSystem& sys);

/// Independent re-checks (no shared code with the simplex).
bool check_point(const LinearSystem& sys, const QVector& x);
bool check_farkas(const LinearSystem& sys, const QVector& y);

/// Some r with G r componentwise >= 1 (hence > 0), or nullopt if no r with
/// G r > 0 exists. Strictness is encoded as >= 1; the cone condition is
/// scale-invariant so the two are equivalent.
std::optional<QVector> positive_span_feasible(const QMatrix& g);

/// Gordan alternative certificate: y >= 0, sum y = 1, G^T y = 0, or nullopt
/// if none exists. Exactly one of positive_span_feasible / gordan_dual
/// succeeds for any G.
std::optional<QVector> gordan_dual(const QMatrix& g);

}  // namespace coneterm
