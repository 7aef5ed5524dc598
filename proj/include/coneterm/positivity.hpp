#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "coneterm/interval.hpp"
#include "coneterm/kermod.hpp"
#include "coneterm/poly.hpp"
#include "coneterm/system.hpp"

namespace coneterm {

/*
 * Decides whether the kernel module contains a tuple with nonnegative
 * coefficients, not all components zero. Per the subset reduction, that
 * holds iff for some nonempty guard subfamily I the restricted module
 * contains a tuple whose components ALL are nonzero nonnegative
 * polynomials.
 *
 * Two sound certificate searches run in alternation:
 *
 *  YES side: for growing degree bound l, an exact LP over the unknown
 *  coefficients of a combination sum h_g * g with deg(h_g) <= l looks for
 *  one whose expanded coefficients are all >= 0 with per-component
 *  coefficient sums >= 1. Any hit is a checkable positive element.
 *
 *  NO side: a deterministic schedule of strictly positive rational points
 *  a; at each, if no real combination of the evaluated generators is
 *  componentwise positive, the Gordan dual y (y >= 0, sum y = 1,
 *  y^T g(a) = 0 for all generators) refutes the subset outright: a
 *  positive tuple would evaluate to a componentwise-positive vector at a,
 *  contradicting the dual.
 *
 * Both searches are semi-procedures; when budgets run out the result is
 * INCONCLUSIVE with diagnostics, never a guess.
 */

struct PositiveCertificate {
    std::vector<size_t> subset;  ///< ascending 0-based guard indices
    PolyVec element;             ///< over the subfamily, all components nonzero, coeffs >= 0
    long degree = 0;             ///< combination degree bound at which it was found
};

struct GordanPointCertificate {
    std::vector<size_t> subset;
    QVector point;  ///< strictly positive rational evaluation point (length k)
    QVector dual;   ///< y >= 0, sum y = 1, annihilates every generator at point
};

struct SearchConfig {
    Rational box_lo = Rational(1, 2);
    Rational box_hi = Rational(2);
    long max_degree = 8;
    int max_subdivision_depth = 10;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void validate() const;
    bool expired() const {
        return deadline && std::chrono::steady_clock::now() > *deadline;
    }
};

struct SubsetDiagnostics {
    std::vector<size_t> subset;
    long degrees_tried = 0;    ///< YES search exhausted degrees 0..degrees_tried
    long sample_levels = 0;    ///< NO search exhausted schedule levels 1..sample_levels
    size_t points_sampled = 0;
};

struct PositivityDiagnostics {
    std::vector<SubsetDiagnostics> undecided;
    bool deadline_hit = false;
};

enum class PositivityAnswer { Yes, No, Inconclusive };

struct PositivityResult {
    PositivityAnswer answer = PositivityAnswer::Inconclusive;
    std::optional<PositiveCertificate> positive;        ///< Yes
    std::vector<GordanPointCertificate> refutations;    ///< No: one per nonempty subset
    std::optional<PositivityDiagnostics> diagnostics;   ///< Inconclusive
};

PositivityResult decide_positive_nonzero(const LoopSystem& sys, const SearchConfig& cfg);

/// Degree-bounded YES search on one restricted module. Returns the
/// combination itself (already expanded), or nullopt when no witness with
/// deg(h_g) <= degree_bound exists.
std::optional<PolyVec> find_positive_element(const ModuleBasis& basis, long degree_bound);

/// NO search on one restricted module over the full schedule up to
/// cfg.max_degree + 1 levels.
std::optional<GordanPointCertificate> find_gordan_point(const ModuleBasis& basis, const std::vector<size_t>& subset,
                                                        const SearchConfig& cfg);

/// One schedule level of the NO search (points new at this level, in-box
/// points first). Exposed for the alternation loop and tests.
std::optional<GordanPointCertificate> gordan_sample_level(const ModuleBasis& basis, const std::vector<size_t>& subset,
                                                          const SearchConfig& cfg, long level,
                                                          size_t* points_sampled = nullptr);

bool verify_positive_certificate(const PositiveCertificate& cert, const LoopSystem& sys);
bool verify_no_certificate(const GordanPointCertificate& cert, const ModuleBasis& basis);

/*
 * Interval branch-and-prune verifier for the pointwise property "at every
 * point of the box some module element evaluates componentwise positive".
 * Verified returns a finite box cover, each box carrying a rational
 * combination whose interval evaluation is componentwise positive there.
 * Refuted returns a Gordan point inside the box. Diagnostics only; the
 * main decision never depends on it.
 */
enum class BoxVerifyStatus { Verified, Refuted, Unknown };

struct BoxCoverPiece {
    std::vector<QInterval> box;
    QVector combination;
};

struct BoxVerifyResult {
    BoxVerifyStatus status = BoxVerifyStatus::Unknown;
    std::vector<BoxCoverPiece> cover;
    std::optional<GordanPointCertificate> refutation;
    size_t boxes_processed = 0;
};

BoxVerifyResult verify_box_positivity(const ModuleBasis& basis, const std::vector<size_t>& subset,
                                      const SearchConfig& cfg);

}  // namespace coneterm
