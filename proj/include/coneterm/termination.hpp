#pragma once

#include <optional>
#include <vector>

#include "coneterm/cone.hpp"
#include "coneterm/positivity.hpp"
#include "coneterm/system.hpp"

namespace coneterm {

/*
 * Top-level decision procedure. A nonzero start vector whose whole orbit
 * stays in the guard cone exists iff the orbit of the dual cone under the
 * transposed updates lies in some closed halfspace. That containment is
 * decided recursively:
 *
 *   d = 1       sign test on generators plus positivity of the 1x1 updates
 *   salient     contained (supporting hyperplane; existence only)
 *   not salient a positive kernel element yields a line +-w inside the
 *               orbit cone; quotient by the invariant closure of w and
 *               recurse on the induced updates and projected generators
 *
 * Every step leaves behind machine-checkable evidence in the trace.
 */

enum class DecisionAnswer { NonterminatingWitnessExists, NoWitness, Inconclusive };

enum class LevelKind {
    NotSalientStep,   ///< positive element found; quotient and recurse
    SalientLeaf,      ///< Gordan refutations for every subset; contained
    D1Base,           ///< one-dimensional sign/positivity test
    Dim0Leaf,         ///< zero-dimensional quotient; not contained
    EmptyConeLeaf,    ///< all generators vanished; image cone is {0}; contained
    InconclusiveLeaf  ///< positivity budget exhausted
};

struct TraceLevel {
    size_t dimension = 0;
    std::vector<QVector> generators;  ///< nonzero generators analyzed here
    size_t dropped_zero_generators = 0;
    LevelKind kind = LevelKind::D1Base;
    bool contained = false;  ///< outcome at leaf levels

    // NotSalientStep evidence
    std::optional<PositiveCertificate> positive_cert;
    std::optional<QVector> line_witness;   ///< w with +-w in the orbit cone
    std::vector<QVector> subspace_basis;   ///< invariant closure of w
    std::optional<QMatrix> quotient;       ///< pi
    std::vector<QMatrix> induced;          ///< induced updates downstairs

    // SalientLeaf evidence
    std::vector<GordanPointCertificate> refutations;

    // D1Base evidence
    std::optional<int> common_sign;
    std::optional<bool> updates_positive;

    // InconclusiveLeaf evidence
    std::optional<PositivityDiagnostics> diagnostics;
};

struct RecursionTrace {
    std::vector<TraceLevel> levels;
};

struct Decision {
    DecisionAnswer answer = DecisionAnswer::Inconclusive;
    RecursionTrace trace;
    std::optional<QVector> witness;  ///< best-effort nonterminating start vector
};

/// Builds a validated LoopSystem; throws ValidationError on non-commuting,
/// singular, zero-guard-row or dimension-mismatch input.
LoopSystem validate_system(std::vector<QMatrix> matrices, std::vector<QVector> guard_rows);

enum class Containment { Contained, NotContained, Inconclusive };

struct ContainmentResult {
    Containment status = Containment::Inconclusive;
    RecursionTrace trace;
    /// A containing halfspace, when the contained branch is constructive
    /// (d=1 base case pulled back through the quotients).
    std::optional<Halfspace> halfspace;
};

/// Decides whether the orbit of cone(gens) under the acting matrices is
/// contained in a closed halfspace. Zero generators are dropped (counted in
/// the trace); acting matrices must be commuting and invertible.
ContainmentResult decide_halfspace_containment(const std::vector<QMatrix>& acting, const std::vector<QVector>& gens,
                                               const SearchConfig& cfg);

/// Nonzero w with +-w in the orbit cone, from a verified positive
/// certificate: the lowest monomial of the first nonzero component applied
/// to its guard row.
QVector extract_line_witness(const PositiveCertificate& cert, const LoopSystem& sys);

Decision decide_nontermination(const LoopSystem& sys, const SearchConfig& cfg);

}  // namespace coneterm
