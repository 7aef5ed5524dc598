#include "coneterm/interval.hpp"

#include <stdexcept>

namespace coneterm {

QInterval::QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("interval with hi < lo");
}

QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
}

QInterval operator*(const QInterval& a, const QInterval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return QInterval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

QInterval QInterval::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative interval power");
    QInterval acc = QInterval::point(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

QInterval eval_on_box(const MultiPoly& p, const std::vector<QInterval>& box) {
    if (box.size() != p.k()) throw std::invalid_argument("box dimension mismatch");
    QInterval acc = QInterval::point(Rational(0));
    for (const auto& [m, c] : p.terms()) {
        QInterval term = QInterval::point(c);
        for (size_t v = 0; v < p.k(); ++v)
            if (m.exps[v] != 0) term = term * box[v].pow(m.exps[v]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace coneterm
