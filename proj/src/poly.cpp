#include "coneterm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coneterm {

long Monomial::total_degree() const {
    long d = 0;
    for (int e : exps) d += e;
    return d;
}

bool Monomial::is_constant() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::is_laurent() const {
    return std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.k() != b.k()) throw std::invalid_argument("monomial variable count mismatch");
    Monomial r(a.k());
    for (size_t i = 0; i < a.k(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
}

MultiPoly MultiPoly::constant(size_t k, const Rational& c) {
    MultiPoly p(k);
    p.add_term(Monomial(k), c);
    return p;
}

MultiPoly MultiPoly::variable(size_t k, size_t var) {
    if (var >= k) throw std::invalid_argument("variable index out of range");
    Monomial m(k);
    m.exps[var] = 1;
    return monomial(m, Rational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
    MultiPoly p(m.k());
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, size_t var, size_t k) {
    MultiPoly r(k);
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        Monomial m(k);
        m.exps[var] = static_cast<int>(i);
        r.add_term(m, p.coeffs()[i]);
    }
    return r;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

long MultiPoly::degree_in(size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.exps[var]));
    return d;
}

bool MultiPoly::has_negative_coeff() const {
    for (const auto& [m, c] : terms_)
        if (c.sign() < 0) return true;
    return false;
}

bool MultiPoly::is_laurent() const {
    for (const auto& [m, c] : terms_)
        if (m.is_laurent()) return true;
    return false;
}

std::pair<Monomial, Rational> MultiPoly::min_term() const {
    if (terms_.empty()) throw std::logic_error("min term of zero polynomial");
    return *terms_.begin();
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.k() != k_) throw std::invalid_argument("monomial variable count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

Rational rational_pow(const Rational& x, int e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? x : x.inverse();
    Rational acc(1);
    for (int i = 0; i < (e > 0 ? e : -e); ++i) acc *= base;
    return acc;
}

}  // namespace

Rational MultiPoly::eval(const QVector& point) const {
    if (point.dim() != k_) throw std::invalid_argument("evaluation point dimension mismatch");
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t v = 0; v < k_; ++v)
            if (m.exps[v] != 0) t *= rational_pow(point[v], m.exps[v]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(k_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (k_ != o.k_) throw std::invalid_argument("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (k_ != o.k_) throw std::invalid_argument("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("polynomial variable count mismatch");
    MultiPoly r(a.k_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly r(p.k_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (highest graded-lex) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono;
        for (size_t v = 0; v < k_; ++v) {
            if (m.exps[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(v + 1);
            if (m.exps[v] != 1) mono += "^" + std::to_string(m.exps[v]);
        }
        if (mono.empty()) {
            os << a.to_string();
        } else if (a == Rational(1)) {
            os << mono;
        } else {
            os << a.to_string() << "*" << mono;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

namespace {

struct PolyParser {
    const std::string& text;
    size_t k;
    size_t pos = 0;

    explicit PolyParser(const std::string& t, size_t kk) : text(t), k(kk) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    }

    int read_signed_int() {
        bool neg = eat('-');
        std::string d = read_digits();
        long v = std::stol(d);
        return static_cast<int>(neg ? -v : v);
    }

    Rational read_rational() {
        std::string num = read_digits();
        if (eat('/')) {
            std::string den = read_digits();
            return Rational::from_string(num + "/" + den);
        }
        return Rational::from_string(num);
    }

    // term := rational ["*" factors] | factors ; factors := var ["^" int] ("*" var ["^" int])*
    std::pair<Monomial, Rational> read_term() {
        Rational c(1);
        Monomial m(k);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = read_rational();
            saw_coeff = true;
            if (!eat('*')) return {m, c};
        }
        bool saw_var = false;
        while (true) {
            skip_ws();
            if (peek() != 'X') {
                if (!saw_var) fail(saw_coeff ? "expected variable after '*'" : "expected term");
                break;
            }
            ++pos;
            std::string idx = read_digits();
            size_t v = std::stoul(idx);
            if (v < 1 || v > k) fail("variable X" + idx + " out of range (k=" + std::to_string(k) + ")");
            int e = 1;
            if (eat('^')) e = read_signed_int();
            m.exps[v - 1] += e;
            saw_var = true;
            if (!eat('*')) break;
        }
        return {m, c};
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, size_t k) {
    PolyParser p(text, k);
    MultiPoly result(k);
    p.skip_ws();
    if (p.pos == text.size()) p.fail("empty polynomial");
    bool neg = p.eat('-');
    while (true) {
        auto [m, c] = p.read_term();
        result.add_term(m, neg ? -c : c);
        p.skip_ws();
        if (p.pos == text.size()) break;
        if (p.eat('+')) {
            neg = false;
        } else if (p.eat('-')) {
            neg = true;
        } else {
            p.fail("expected '+' or '-'");
        }
    }
    return result;
}

PolyVec PolyVec::zero(size_t n, size_t k) {
    return PolyVec(std::vector<MultiPoly>(n, MultiPoly(k)));
}

PolyVec PolyVec::unit(size_t n, size_t k, size_t i) {
    PolyVec v = zero(n, k);
    v.comps[i] = MultiPoly::constant(k, Rational(1));
    return v;
}

bool PolyVec::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

long PolyVec::total_degree() const {
    long d = -1;
    for (const auto& p : comps) d = std::max(d, p.total_degree());
    return d;
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
    if (width() != o.width()) throw std::invalid_argument("tuple width mismatch");
    for (size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
    return *this;
}

PolyVec operator*(const MultiPoly& f, const PolyVec& v) {
    PolyVec r;
    r.comps.reserve(v.comps.size());
    for (const auto& c : v.comps) r.comps.push_back(f * c);
    return r;
}

PolyVec operator*(const Rational& c, const PolyVec& v) {
    PolyVec r;
    r.comps.reserve(v.comps.size());
    for (const auto& p : v.comps) r.comps.push_back(c * p);
    return r;
}

std::pair<MultiPoly, MultiPoly> divide_univariate(const MultiPoly& f, size_t var, const MultiPoly& monic_f) {
    if (monic_f.k() != f.k()) throw std::invalid_argument("divisor variable count mismatch");
    const long deg = monic_f.degree_in(var);
    if (deg < 0) throw std::invalid_argument("division by zero polynomial");
    for (const auto& [m, c] : monic_f.terms())
        for (size_t v = 0; v < monic_f.k(); ++v)
            if (v != var && m.exps[v] != 0) throw std::invalid_argument("divisor not univariate in the given variable");
    {
        Monomial lead(monic_f.k());
        lead.exps[var] = static_cast<int>(deg);
        if (monic_f.coeff(lead) != Rational(1)) throw std::invalid_argument("divisor not monic");
    }

    MultiPoly quotient(f.k());
    MultiPoly rem = f;
    while (true) {
        const long m = rem.degree_in(var);
        if (m < deg) break;
        // All terms of highest X_var-degree, with that power stripped off.
        MultiPoly head(f.k());
        for (const auto& [mon, c] : rem.terms()) {
            if (mon.exps[var] != m) continue;
            Monomial stripped = mon;
            stripped.exps[var] = 0;
            head.add_term(stripped, c);
        }
        Monomial shift(f.k());
        shift.exps[var] = static_cast<int>(m - deg);
        MultiPoly q = head * MultiPoly::monomial(shift, Rational(1));
        quotient += q;
        rem -= q * monic_f;
    }
    return {quotient, rem};
}

std::pair<Monomial, std::vector<MultiPoly>> laurent_normalize(const std::vector<MultiPoly>& hs) {
    size_t k = hs.empty() ? 0 : hs.front().k();
    Monomial mult(k);
    for (const auto& h : hs)
        for (const auto& [m, c] : h.terms())
            for (size_t v = 0; v < k; ++v) mult.exps[v] = std::max(mult.exps[v], -m.exps[v]);
    std::vector<MultiPoly> shifted;
    shifted.reserve(hs.size());
    const MultiPoly factor = hs.empty() ? MultiPoly(0) : MultiPoly::monomial(mult, Rational(1));
    for (const auto& h : hs) shifted.push_back(factor * h);
    return {mult, shifted};
}

namespace {

void collect_bounded(const std::vector<long>& bounds, size_t var, Monomial& current, std::vector<Monomial>& out) {
    if (var == bounds.size()) {
        out.push_back(current);
        return;
    }
    for (long e = 0; e < bounds[var]; ++e) {
        current.exps[var] = static_cast<int>(e);
        collect_bounded(bounds, var + 1, current, out);
    }
    current.exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_with_bounded_exponents(const std::vector<long>& bounds) {
    std::vector<Monomial> out;
    Monomial current(bounds.size());
    collect_bounded(bounds, 0, current, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return GradedLexLess{}(a, b); });
    return out;
}

std::vector<Monomial> monomials_up_to_degree(size_t k, long max_degree) {
    std::vector<long> bounds(k, max_degree + 1);
    std::vector<Monomial> all = monomials_with_bounded_exponents(bounds);
    std::vector<Monomial> out;
    for (auto& m : all)
        if (m.total_degree() <= max_degree) out.push_back(std::move(m));
    return out;
}

bool is_positive_tuple(const PolyVec& fvec, PositiveTupleMode mode) {
    bool any_nonzero = false;
    for (const auto& p : fvec.comps) {
        if (p.has_negative_coeff()) return false;
        if (!p.is_zero())
            any_nonzero = true;
        else if (mode == PositiveTupleMode::AllComponentsNonzero)
            return false;
    }
    return any_nonzero;
}

}  // namespace coneterm
