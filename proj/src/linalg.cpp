#include "coneterm/linalg.hpp"

#include <stdexcept>

namespace coneterm {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
    return c.is_zero() ? UniPoly() : UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::divide_exact(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::logic_error("polynomial division by zero");
    if (num.is_zero()) return UniPoly();
    if (num.degree() < den.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Rational> rem = num.coeffs_;
    std::vector<Rational> quot(num.degree() - den.degree() + 1);
    for (size_t qi = quot.size(); qi-- > 0;) {
        Rational q = rem[qi + den.degree()] / den.leading();
        quot[qi] = q;
        if (q.is_zero()) continue;
        for (size_t j = 0; j < den.coeffs_.size(); ++j) rem[qi + j] -= q * den.coeffs_[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return UniPoly(std::move(quot));
}

namespace {

// Multiplies each row through by the lcm of its denominators. Row scaling
// preserves row space, kernel and pivot structure; it keeps the Bareiss
// updates over integers so intermediate entries stay minor-sized.
void clear_row_denominators(QMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < m.cols(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
            l = l / g * m(i, j).den();
        }
        if (l == 1) continue;
        Rational scale((l));
        for (size_t j = 0; j < m.cols(); ++j) m(i, j) *= scale;
    }
}

}  // namespace

std::pair<QMatrix, std::vector<size_t>> rref(const QMatrix& input) {
    QMatrix m = input;
    clear_row_denominators(m);
    std::vector<size_t> pivots;
    std::vector<size_t> pivot_rows;
    Rational prev(1);
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pr = r;
        while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        const Rational pivot = m(r, c);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            const Rational factor = m(i, c);
            for (size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (m(i, j) * pivot - factor * m(r, j)) / prev;
            m(i, c) = Rational(0);
        }
        prev = pivot;
        pivots.push_back(c);
        pivot_rows.push_back(r);
        ++r;
    }
    // Normalize pivots to 1 and eliminate above, bottom-up.
    for (size_t t = pivots.size(); t-- > 0;) {
        const size_t pr = pivot_rows[t], pc = pivots[t];
        const Rational inv = m(pr, pc).inverse();
        for (size_t j = pc; j < m.cols(); ++j) m(pr, j) *= inv;
        for (size_t i = 0; i < pr; ++i) {
            const Rational factor = m(i, pc);
            if (factor.is_zero()) continue;
            for (size_t j = pc; j < m.cols(); ++j) m(i, j) -= factor * m(pr, j);
        }
    }
    return {m, pivots};
}

size_t rank(const QMatrix& m) { return rref(m).second.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = Rational(1);
        for (size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (a.rows() != b.dim()) throw std::invalid_argument("solve shape mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(aug);
    for (size_t c : pivots)
        if (c == a.cols()) return std::nullopt;
    QVector x(a.cols());
    for (size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = r(t, a.cols());
    return x;
}

namespace {

UniPoly bareiss_det(std::vector<std::vector<UniPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) return UniPoly::constant(Rational(1));
    int sign = 1;
    UniPoly prev = UniPoly::constant(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pr = k;
        while (pr < n && m[pr][k].is_zero()) ++pr;
        if (pr == n) return UniPoly();
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = UniPoly::divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = UniPoly();
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

UniPoly char_poly(const QMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const size_t n = a.rows();
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = UniPoly::constant(-a(i, j));
            if (i == j) m[i][j] = m[i][j] + UniPoly::variable();
        }
    UniPoly det = bareiss_det(m);
    if (!det.is_monic()) throw std::logic_error("characteristic polynomial not monic");
    return det;
}

bool is_invertible(const QMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("invertibility of non-square matrix");
    return rank(a) == a.rows();
}

}  // namespace coneterm
