#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "coneterm/rational.hpp"

namespace coneterm {

/// Dense exact rational vector.
class QVector {
public:
    QVector() = default;
    explicit QVector(size_t dim) : entries_(dim) {}
    QVector(std::initializer_list<Rational> xs) : entries_(xs) {}
    explicit QVector(std::vector<Rational> xs) : entries_(std::move(xs)) {}

    size_t dim() const { return entries_.size(); }
    const Rational& operator[](size_t i) const { return entries_[i]; }
    Rational& operator[](size_t i) { return entries_[i]; }

    bool is_zero() const;

    QVector operator-() const;
    QVector& operator+=(const QVector& o);
    QVector& operator-=(const QVector& o);
    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator*(const Rational& c, const QVector& v);

    friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }

    friend Rational dot(const QVector& a, const QVector& b);

    friend std::ostream& operator<<(std::ostream& os, const QVector& v);

    const std::vector<Rational>& entries() const { return entries_; }

private:
    std::vector<Rational> entries_;
};

/// Dense exact rational matrix, row-major. Zero-row and zero-column shapes
/// are legal (they arise as quotient maps onto a trivial space).
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QMatrix(size_t rows, size_t cols, std::vector<Rational> entries);
    /// Row-major literal, e.g. QMatrix::from_rows({{1,2},{3,4}}).
    static QMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    static QMatrix identity(size_t n);
    static QMatrix zero(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    Rational& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }

    QVector row(size_t i) const;
    QVector col(size_t j) const;
    void swap_rows(size_t i, size_t j);

    QMatrix transpose() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(const Rational& c, const QMatrix& m);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QVector operator*(const QMatrix& m, const QVector& v);

    friend bool operator==(const QMatrix& a, const QMatrix& b);
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    bool is_zero() const;

    friend std::ostream& operator<<(std::ostream& os, const QMatrix& m);

private:
    size_t rows_, cols_;
    std::vector<Rational> entries_;
};

}  // namespace coneterm
