#include "coneterm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace coneterm {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

namespace {

bool is_decimal_integer(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t slash = s.find('/', pos);
    mpz_class num, den;
    if (slash == std::string::npos) {
        if (!is_decimal_integer(s, pos, s.size()))
            throw std::invalid_argument("not a rational literal: \"" + s + "\"");
        num = mpz_class(s.substr(pos));
        den = 1;
    } else {
        if (!is_decimal_integer(s, pos, slash) || !is_decimal_integer(s, slash + 1, s.size()))
            throw std::invalid_argument("not a rational literal: \"" + s + "\"");
        num = mpz_class(s.substr(pos, slash - pos));
        den = mpz_class(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace coneterm
