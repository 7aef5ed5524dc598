#pragma once

#include <optional>
#include <vector>

#include "coneterm/system.hpp"

namespace coneterm {

/*
 * Desk-scale ground truth by bounded enumeration. Words over the commuting
 * updates are enumerated by multidegree (orderings collapse), with the
 * total degree capped by a word bound L. All checks are one-sided: a
 * definitive answer here is sound for the unbounded problem because the
 * witness set only shrinks as L grows.
 */

/// {(A^T)^w c_i : |w| <= max_word_length}, deduplicated, deterministic order.
std::vector<QVector> truncated_orbit_generators(const LoopSystem& sys, size_t max_word_length);

/// True means DEFINITIVE_NO: the truncated constraint cone
/// {v : c_i^T A^w v >= 0 for all words |w| <= L} already equals {0}, so no
/// nonzero vector survives even L steps. Checked by 2d exact LPs bounding
/// each coordinate from both sides.
bool oracle_no_witness(const LoopSystem& sys, size_t max_word_length);

/// Nonzero v with +-v in the cone generated by the truncated orbit of the
/// guard rows, if the truncation already exhibits one. Sound: a non-salient
/// subcone makes the full orbit cone non-salient.
std::optional<QVector> oracle_not_salient(const LoopSystem& sys, size_t max_word_length);

/// Bounded loop unrolling: does v satisfy every guard after every word of
/// total degree <= L?
bool orbit_simulate(const QVector& v, const LoopSystem& sys, size_t max_word_length);

}  // namespace coneterm
