#pragma once

#include <random>
#include <vector>

#include "coneterm/linalg.hpp"
#include "coneterm/matrix.hpp"
#include "coneterm/system.hpp"

// Deterministic random data for property tests. All generators take an
// explicit engine so each TEST_CASE can pin its own seed.
namespace testsupport {

using coneterm::QMatrix;
using coneterm::QVector;
using coneterm::Rational;

inline Rational random_rational(std::mt19937& rng, int max_abs = 5, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    int n = num(rng);
    while (!allow_zero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

inline QVector random_vector(std::mt19937& rng, size_t d, int max_abs = 5) {
    QVector v(d);
    for (size_t i = 0; i < d; ++i) v[i] = random_rational(rng, max_abs);
    return v;
}

inline QVector random_nonzero_vector(std::mt19937& rng, size_t d, int max_abs = 5) {
    while (true) {
        QVector v = random_vector(rng, d, max_abs);
        if (!v.is_zero()) return v;
    }
}

inline QMatrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, int max_abs = 5) {
    QMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, max_abs);
    return m;
}

inline QMatrix random_invertible_matrix(std::mt19937& rng, size_t d, int max_abs = 5) {
    while (true) {
        QMatrix m = random_matrix(rng, d, d, max_abs);
        if (coneterm::is_invertible(m)) return m;
    }
}

inline QMatrix random_invertible_diagonal(std::mt19937& rng, size_t d, int max_abs = 5) {
    QMatrix m(d, d);
    for (size_t i = 0; i < d; ++i) m(i, i) = random_rational(rng, max_abs, /*allow_zero=*/false);
    return m;
}

/// Polynomial in the lower shift matrix: p I + q N + r N^2 + ... with
/// p != 0. All such matrices commute with each other and entries stay
/// within the requested bound.
inline QMatrix random_shift_polynomial(std::mt19937& rng, size_t d, int max_abs = 5) {
    QMatrix m(d, d);
    std::vector<Rational> cs(d);
    cs[0] = random_rational(rng, max_abs, /*allow_zero=*/false);
    for (size_t t = 1; t < d; ++t) cs[t] = random_rational(rng, max_abs);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j <= i; ++j) m(i, j) = cs[i - j];
    return m;
}

/// Random commuting invertible family of size k (k <= 2), entries bounded.
inline std::vector<QMatrix> random_commuting_family(std::mt19937& rng, size_t d, size_t k, int max_abs = 5) {
    if (k == 1) return {random_invertible_matrix(rng, d, max_abs)};
    std::uniform_int_distribution<int> kind(0, 3);
    switch (kind(rng)) {
        case 0:
            return {random_invertible_diagonal(rng, d, max_abs), random_invertible_diagonal(rng, d, max_abs)};
        case 1: {
            QMatrix a = random_invertible_matrix(rng, d, max_abs);
            return {a, a};
        }
        case 2:
            return {random_shift_polynomial(rng, d, max_abs), random_shift_polynomial(rng, d, max_abs)};
        default: {
            QMatrix a = random_invertible_matrix(rng, d, max_abs);
            Rational c = random_rational(rng, max_abs, /*allow_zero=*/false);
            return {a, c * QMatrix::identity(d)};
        }
    }
}

inline coneterm::LoopSystem random_loop_system(std::mt19937& rng, size_t max_d = 3, size_t max_k = 2,
                                               size_t max_n = 3) {
    std::uniform_int_distribution<size_t> dd(1, max_d), kk(1, max_k), nn(1, max_n);
    const size_t d = dd(rng), k = kk(rng), n = nn(rng);
    auto ms = random_commuting_family(rng, d, k);
    std::vector<QVector> rows;
    for (size_t i = 0; i < n; ++i) rows.push_back(random_nonzero_vector(rng, d));
    return coneterm::LoopSystem(std::move(ms), std::move(rows));
}

}  // namespace testsupport
