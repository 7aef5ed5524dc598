#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coneterm/linalg.hpp"
#include "coneterm/matrix.hpp"

namespace coneterm {

/*
 * Sparse multivariate polynomials over Rational in a fixed number of
 * variables X1..Xk. Terms are kept in a map under graded lexicographic
 * order (total degree first, then lexicographic on exponent vectors), so
 * iteration order, serialization and monomial enumeration are canonical.
 *
 * Exponents are signed to accommodate Laurent monomials; ordinary
 * polynomials keep them nonnegative.
 */
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(size_t k) : exps(k, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    size_t k() const { return exps.size(); }
    long total_degree() const;
    bool is_constant() const;
    bool is_laurent() const;  // any negative exponent

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    explicit MultiPoly(size_t k = 0) : k_(k) {}
    static MultiPoly constant(size_t k, const Rational& c);
    static MultiPoly variable(size_t k, size_t var);
    static MultiPoly monomial(const Monomial& m, const Rational& c);
    /// Embeds a univariate polynomial as a polynomial in X_{var+1}.
    static MultiPoly from_unipoly(const UniPoly& p, size_t var, size_t k);

    size_t k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(size_t var) const;
    bool has_negative_coeff() const;
    bool is_laurent() const;

    /// Lowest term in graded-lex order; polynomial must be nonzero.
    std::pair<Monomial, Rational> min_term() const;

    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    Rational eval(const QVector& point) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.k_ == b.k_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Canonical text form, e.g. "3/2*X1^2*X3 - X2 + 1"; round-trips exactly
    /// through parse().
    std::string to_string() const;
    static MultiPoly parse(const std::string& text, size_t k);

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    size_t k_;
    TermMap terms_;
};

/// Tuple of polynomials (an element of A^n); all components share k.
struct PolyVec {
    std::vector<MultiPoly> comps;

    PolyVec() = default;
    explicit PolyVec(std::vector<MultiPoly> cs) : comps(std::move(cs)) {}
    static PolyVec zero(size_t n, size_t k);
    static PolyVec unit(size_t n, size_t k, size_t i);  // e_i

    size_t width() const { return comps.size(); }
    size_t k() const { return comps.empty() ? 0 : comps.front().k(); }
    bool is_zero() const;
    long total_degree() const;

    PolyVec& operator+=(const PolyVec& o);
    friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
    friend PolyVec operator*(const MultiPoly& f, const PolyVec& v);
    friend PolyVec operator*(const Rational& c, const PolyVec& v);
    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.comps == b.comps; }
};

/// Quotient/remainder of f by a polynomial F that is monic and univariate in
/// X_{var+1}: f = P*F + R with deg_var(R) < deg_var(F).
std::pair<MultiPoly, MultiPoly> divide_univariate(const MultiPoly& f, size_t var, const MultiPoly& monic_f);

/// Smallest monomial multiplier X^e making every given Laurent polynomial an
/// ordinary polynomial, together with the shifted polynomials.
std::pair<Monomial, std::vector<MultiPoly>> laurent_normalize(const std::vector<MultiPoly>& hs);

/// All monomials with exps[j] < bounds[j] for every j, ascending graded-lex.
std::vector<Monomial> monomials_with_bounded_exponents(const std::vector<long>& bounds);

/// All monomials in k variables of total degree <= max_degree, ascending
/// graded-lex.
std::vector<Monomial> monomials_up_to_degree(size_t k, long max_degree);

enum class PositiveTupleMode { AllComponentsNonzero, SomeComponentNonzero };

/// True iff no component carries a negative coefficient and the nonzero
/// pattern required by the mode holds.
bool is_positive_tuple(const PolyVec& fvec, PositiveTupleMode mode);

}  // namespace coneterm
