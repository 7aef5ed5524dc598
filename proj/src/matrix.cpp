#include "coneterm/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace coneterm {

bool QVector::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

QVector QVector::operator-() const {
    QVector r(dim());
    for (size_t i = 0; i < dim(); ++i) r[i] = -entries_[i];
    return r;
}

QVector& QVector::operator+=(const QVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    for (size_t i = 0; i < dim(); ++i) entries_[i] += o[i];
    return *this;
}

QVector& QVector::operator-=(const QVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    for (size_t i = 0; i < dim(); ++i) entries_[i] -= o[i];
    return *this;
}

QVector operator*(const Rational& c, const QVector& v) {
    QVector r(v.dim());
    for (size_t i = 0; i < v.dim(); ++i) r[i] = c * v[i];
    return r;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
    Rational s;
    for (size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
    os << "(";
    for (size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os << ")";
}

QMatrix::QMatrix(size_t rows, size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
}

QMatrix QMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    QMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw std::invalid_argument("ragged matrix literal");
        size_t j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::zero(size_t rows, size_t cols) { return QMatrix(rows, cols); }

QVector QMatrix::row(size_t i) const {
    QVector v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

QVector QMatrix::col(size_t j) const {
    QVector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void QMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

QMatrix operator*(const Rational& c, const QMatrix& m) {
    QMatrix r = m;
    for (auto& x : r.entries_) x *= c;
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t l = 0; l < a.cols_; ++l) {
            if (a(i, l).is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, l) * b(l, j);
        }
    return r;
}

QVector operator*(const QMatrix& m, const QVector& v) {
    if (m.cols_ != v.dim()) throw std::invalid_argument("matrix-vector shape mismatch");
    QVector r(m.rows_);
    for (size_t i = 0; i < m.rows_; ++i)
        for (size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
    return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool QMatrix::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
    }
    return os << "]";
}

}  // namespace coneterm
