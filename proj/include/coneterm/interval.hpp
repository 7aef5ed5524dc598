#pragma once

#include <vector>

#include "coneterm/poly.hpp"
#include "coneterm/rational.hpp"

namespace coneterm {

/// Closed rational interval [lo, hi]. All operations are exact (rationals
/// are closed under +,*), so enclosures are tight per operation and always
/// sound.
struct QInterval {
    Rational lo, hi;

    QInterval() = default;
    QInterval(Rational l, Rational h);
    static QInterval point(const Rational& x) { return QInterval(x, x); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool strictly_positive() const { return lo.sign() > 0; }

    friend QInterval operator+(const QInterval& a, const QInterval& b);
    friend QInterval operator*(const QInterval& a, const QInterval& b);
    QInterval pow(int e) const;  // e >= 0
};

/// Interval enclosure of a polynomial over a box (one interval per
/// variable).
QInterval eval_on_box(const MultiPoly& p, const std::vector<QInterval>& box);

}  // namespace coneterm
