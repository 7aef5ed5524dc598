#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coneterm/matrix.hpp"

namespace coneterm {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree with no trailing zeros (empty list = zero polynomial).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly variable();  // X

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == Rational(1); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact quotient; throws std::logic_error if the division leaves a
    /// remainder (callers rely on divisibility guaranteed by construction).
    static UniPoly divide_exact(const UniPoly& num, const UniPoly& den);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Reduced row echelon form with the list of pivot columns. Fraction-free
/// (Bareiss) forward elimination after clearing row denominators, followed
/// by exact normalization of the pivots.
std::pair<QMatrix, std::vector<size_t>> rref(const QMatrix& m);

size_t rank(const QMatrix& m);

/// Basis of the null space {x : Mx = 0}. Each basis vector has a 1 in one
/// free column; count equals cols - rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// One solution of Ax = b, if any (free variables set to zero).
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Monic characteristic polynomial det(XI - A), computed by fraction-free
/// elimination over the univariate polynomial ring.
UniPoly char_poly(const QMatrix& a);

/// True iff the square matrix has full rank.
bool is_invertible(const QMatrix& a);

}  // namespace coneterm
