#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coneterm/poly.hpp"
#include "coneterm/system.hpp"
#include "support.hpp"

using namespace coneterm;

namespace {

MultiPoly var(size_t k, size_t v) { return MultiPoly::variable(k, v); }
MultiPoly cst(size_t k, long c) { return MultiPoly::constant(k, Rational(c)); }

MultiPoly random_poly(std::mt19937& rng, size_t k, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> e(0, max_deg);
    MultiPoly p(k);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(k);
        for (size_t v = 0; v < k; ++v) m.exps[v] = e(rng);
        p.add_term(m, testsupport::random_rational(rng, 4));
    }
    return p;
}

}  // namespace

TEST_CASE("graded-lex ordering") {
    GradedLexLess less;
    Monomial one(2), x1(std::vector<int>{1, 0}), x2(std::vector<int>{0, 1}), x1x2(std::vector<int>{1, 1}),
        x2sq(std::vector<int>{0, 2});
    CHECK(less(one, x1));
    CHECK(less(one, x2));
    CHECK(less(x2, x1));       // same degree: lexicographically smaller exponent vector first
    CHECK(less(x1, x2sq));     // degree dominates
    CHECK(less(x2sq, x1x2));
    CHECK(!less(x1, x1));
}

TEST_CASE("arithmetic and canonical term storage") {
    const size_t k = 2;
    MultiPoly p = var(k, 0) + var(k, 1);
    MultiPoly q = var(k, 0) - var(k, 1);
    MultiPoly prod = p * q;
    MultiPoly expect = var(k, 0) * var(k, 0) - var(k, 1) * var(k, 1);
    CHECK(prod == expect);
    CHECK((p - p).is_zero());
    CHECK(p.term_count() == 2);
    MultiPoly zero = Rational(0) * p;
    CHECK(zero.is_zero());
    CHECK(p.total_degree() == 1);
    CHECK(prod.total_degree() == 2);
    CHECK(MultiPoly(k).total_degree() == -1);
}

TEST_CASE("evaluation at rational points") {
    const size_t k = 2;
    MultiPoly p = Rational(3, 2) * (var(k, 0) * var(k, 0)) + var(k, 1) - cst(k, 2);
    CHECK(p.eval(QVector{Rational(2), Rational(1)}) == Rational(5));
    CHECK(p.eval(QVector{Rational(0), Rational(0)}) == Rational(-2));
}

TEST_CASE("to_string / parse round-trip is exact") {
    const size_t k = 3;
    MultiPoly p = Rational(3, 2) * (var(k, 0) * var(k, 0) * var(k, 2)) - var(k, 1) + cst(k, 1);
    CHECK(p.to_string() == "3/2*X1^2*X3 - X2 + 1");
    CHECK(MultiPoly::parse(p.to_string(), k) == p);
    CHECK(MultiPoly(k).to_string() == "0");
    CHECK(MultiPoly::parse("0", k).is_zero());
    CHECK(MultiPoly::parse("X1*X1", 1) == var(1, 0) * var(1, 0));
    CHECK_THROWS_AS(MultiPoly::parse("X4", 3), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("2.5", 1), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::parse("", 1), std::invalid_argument);

    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        MultiPoly r = random_poly(rng, 1 + t % 3, 4, 6);
        CHECK(MultiPoly::parse(r.to_string(), r.k()) == r);
    }
}

TEST_CASE("matrix substitution on hand-worked examples") {
    // f = X1 + X2 at (I, I) is 2I.
    MultiPoly f = var(2, 0) + var(2, 1);
    CHECK(eval_at_matrices(f, {QMatrix::identity(2), QMatrix::identity(2)}) ==
          Rational(2) * QMatrix::identity(2));
    // Constant 1 evaluates to the identity.
    CHECK(eval_at_matrices(cst(1, 1), {QMatrix::from_rows({{3, 1}, {0, 2}})}) == QMatrix::identity(2));
    // X^2 at the quarter-turn rotation is -I.
    MultiPoly x2 = var(1, 0) * var(1, 0);
    CHECK(eval_at_matrices(x2, {QMatrix::from_rows({{0, -1}, {1, 0}})}) ==
          Rational(-1) * QMatrix::identity(2));
}

TEST_CASE("substitution is a ring homomorphism on commuting matrices") {
    std::mt19937 rng(8);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<size_t> dd(1, 3), kk(1, 2);
        const size_t d = dd(rng), k = kk(rng);
        auto ms = testsupport::random_commuting_family(rng, d, k, 3);
        MultiPoly f = random_poly(rng, k, 2, 3), g = random_poly(rng, k, 2, 3);
        CHECK(eval_at_matrices(f * g, ms) == eval_at_matrices(f, ms) * eval_at_matrices(g, ms));
        CHECK(eval_at_matrices(f + g, ms) == eval_at_matrices(f, ms) + eval_at_matrices(g, ms));
    }
}

TEST_CASE("module map on hand-worked examples") {
    // combine_guards(e_1) is c_1.
    LoopSystem sys({QMatrix::from_rows({{2, 0}, {0, 3}})}, {QVector{Rational(1), Rational(0)}, QVector{Rational(0), Rational(1)}});
    CHECK(combine_guards(PolyVec::unit(2, 1, 0), sys) == QVector{Rational(1), Rational(0)});
    CHECK(combine_guards(PolyVec::zero(2, 1), sys).is_zero());

    // d=1, A=(2), c=(1,-2), fvec=(2,1) maps to zero.
    LoopSystem sys1({QMatrix::from_rows({{2}})}, {QVector{Rational(1)}, QVector{Rational(-2)}});
    PolyVec f(std::vector<MultiPoly>{cst(1, 2), cst(1, 1)});
    CHECK(combine_guards(f, sys1).is_zero());
}

TEST_CASE("module map is linear over the polynomial ring") {
    std::mt19937 rng(9);
    for (int t = 0; t < 60; ++t) {
        auto sys = testsupport::random_loop_system(rng);
        const size_t k = sys.num_updates(), n = sys.num_guards();
        MultiPoly f = random_poly(rng, k, 2, 3);
        PolyVec v, w;
        for (size_t i = 0; i < n; ++i) {
            v.comps.push_back(random_poly(rng, k, 2, 3));
            w.comps.push_back(random_poly(rng, k, 2, 3));
        }
        CHECK(combine_guards(v + w, sys) == combine_guards(v, sys) + combine_guards(w, sys));
        CHECK(combine_guards(f * v, sys) ==
              eval_at_matrices(f, sys.transposed_matrices()) * combine_guards(v, sys));
    }
}

TEST_CASE("univariate division inside the multivariate ring") {
    // X^3 = X * (X^2 + 1) - X
    const size_t k1 = 1;
    MultiPoly x = var(k1, 0);
    auto [p1, r1] = divide_univariate(x * x * x, 0, x * x + cst(k1, 1));
    CHECK(p1 == x);
    CHECK(r1 == -x);

    auto [p2, r2] = divide_univariate(x - cst(k1, 2), 0, x - cst(k1, 2));
    CHECK(p2 == cst(k1, 1));
    CHECK(r2.is_zero());

    // X1*X2^2 divided by X2 - 1 in X2.
    const size_t k2 = 2;
    MultiPoly x1 = var(k2, 0), x2 = var(k2, 1);
    auto [p3, r3] = divide_univariate(x1 * x2 * x2, 1, x2 - cst(k2, 1));
    CHECK(p3 == x1 * x2 + x1);
    CHECK(r3 == x1);

    CHECK_THROWS_AS(divide_univariate(x, 0, Rational(2) * x), std::invalid_argument);

    std::mt19937 rng(10);
    for (int t = 0; t < 80; ++t) {
        std::uniform_int_distribution<size_t> kk(1, 2);
        std::uniform_int_distribution<int> dg(1, 3);
        const size_t k = kk(rng);
        const size_t v = k == 1 ? 0 : t % 2;
        MultiPoly f = random_poly(rng, k, 4, 5);
        // Monic divisor in X_v.
        int deg = dg(rng);
        Monomial lead(k);
        lead.exps[v] = deg;
        MultiPoly div = MultiPoly::monomial(lead, Rational(1));
        for (int e = 0; e < deg; ++e) {
            Monomial m(k);
            m.exps[v] = e;
            div.add_term(m, testsupport::random_rational(rng, 3));
        }
        auto [q, r] = divide_univariate(f, v, div);
        CHECK(q * div + r == f);
        CHECK(r.degree_in(v) < deg);
    }
}

TEST_CASE("laurent normalization") {
    const size_t k = 2;
    MultiPoly h1 = MultiPoly::monomial(Monomial(std::vector<int>{-2, 1}), Rational(1));
    MultiPoly h2 = MultiPoly::monomial(Monomial(std::vector<int>{0, -1}), Rational(1));
    auto [mult, shifted] = laurent_normalize({h1, h2});
    CHECK(mult.exps == std::vector<int>{2, 1});
    CHECK(shifted[0] == MultiPoly::monomial(Monomial(std::vector<int>{0, 2}), Rational(1)));
    CHECK(shifted[1] == MultiPoly::monomial(Monomial(std::vector<int>{2, 0}), Rational(1)));

    MultiPoly inv = MultiPoly::monomial(Monomial(std::vector<int>{-1}), Rational(1));
    auto [m1, s1] = laurent_normalize({inv});
    CHECK(m1.exps == std::vector<int>{1});
    CHECK(s1[0] == cst(1, 1));

    MultiPoly plain = var(1, 0) + cst(1, 1);
    auto [m2, s2] = laurent_normalize({plain});
    CHECK(m2.is_constant());
    CHECK(s2[0] == plain);
}

TEST_CASE("positive tuple predicate") {
    const size_t k = 1;
    PolyVec constants(std::vector<MultiPoly>{cst(k, 2), cst(k, 1)});
    CHECK(is_positive_tuple(constants, PositiveTupleMode::AllComponentsNonzero));

    PolyVec with_neg(std::vector<MultiPoly>{var(k, 0) - cst(k, 2), MultiPoly(k)});
    CHECK(!is_positive_tuple(with_neg, PositiveTupleMode::AllComponentsNonzero));
    CHECK(!is_positive_tuple(with_neg, PositiveTupleMode::SomeComponentNonzero));

    PolyVec partial(std::vector<MultiPoly>{var(k, 0) * var(k, 0), MultiPoly(k)});
    CHECK(is_positive_tuple(partial, PositiveTupleMode::SomeComponentNonzero));
    CHECK(!is_positive_tuple(partial, PositiveTupleMode::AllComponentsNonzero));

    CHECK(!is_positive_tuple(PolyVec::zero(2, k), PositiveTupleMode::SomeComponentNonzero));
}
