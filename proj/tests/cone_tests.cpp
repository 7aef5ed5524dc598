#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coneterm/cone.hpp"
#include "coneterm/linalg.hpp"
#include "coneterm/lp.hpp"
#include "support.hpp"

using namespace coneterm;

namespace {

QVector v2(long a, long b) { return QVector{Rational(a), Rational(b)}; }

bool in_cone(const std::vector<QVector>& gens, const QVector& target) {
    // Exact LP membership: target = sum nu_j g_j with nu >= 0.
    if (gens.empty()) return target.is_zero();
    const size_t d = target.dim();
    LinearSystem sys;
    sys.num_vars = gens.size();
    for (size_t coord = 0; coord < d; ++coord) {
        QVector row(gens.size());
        for (size_t j = 0; j < gens.size(); ++j) row[j] = gens[j][coord];
        sys.add_eq(std::move(row), target[coord]);
    }
    for (size_t j = 0; j < gens.size(); ++j) {
        QVector e(gens.size());
        e[j] = Rational(1);
        sys.add_ge(std::move(e), Rational(0));
    }
    return lp_feasible(sys).feasible;
}

// Brute-force salience for small cones: nonzero v with +-v in the cone
// exists iff some single aggregated combination vanishes with a usable
// positive coefficient; enumerated over all generator choices.
bool brute_force_salient(const std::vector<QVector>& gens) {
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        // Try to write 0 = sum nu_j g_j with nu_i >= 1 exactly as the LP
        // does, but through a fresh formulation: -g_i = sum_j nu_j g_j,
        // nu >= 0, over all j (including i, absorbed by scaling).
        std::vector<QVector> others = gens;
        if (in_cone(others, -gens[i])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("dual cone is the guard-row generator set") {
    LoopSystem sys({QMatrix::identity(2)}, {v2(1, 0), v2(0, 1)});
    GeneratorCone c = dual_cone(sys);
    CHECK(c.ambient_dim == 2);
    CHECK(c.generators == std::vector<QVector>{v2(1, 0), v2(0, 1)});
    CHECK(c.zero_generator_count() == 0);

    LoopSystem sys1({QMatrix::from_rows({{2}})}, {QVector{Rational(1)}});
    CHECK(dual_cone(sys1).generators == std::vector<QVector>{QVector{Rational(1)}});

    LoopSystem sys2({QMatrix::identity(2)}, {v2(1, 0), v2(-2, 0)});
    CHECK(dual_cone(sys2).generators.size() == 2);
}

TEST_CASE("salience on hand-worked examples") {
    CHECK(is_salient_finite(GeneratorCone({v2(1, 0), v2(0, 1)}, 2)).salient);

    auto opposite = is_salient_finite(GeneratorCone({v2(1, 0), v2(-1, 0)}, 2));
    CHECK(!opposite.salient);
    REQUIRE(opposite.line_witness.has_value());
    CHECK(in_cone({v2(1, 0), v2(-1, 0)}, *opposite.line_witness));
    CHECK(in_cone({v2(1, 0), v2(-1, 0)}, -*opposite.line_witness));
    CHECK(!opposite.line_witness->is_zero());

    auto full_plane = is_salient_finite(GeneratorCone({v2(1, 0), v2(0, -1), v2(-1, 0), v2(0, 1)}, 2));
    CHECK(!full_plane.salient);

    // Zero generators are tolerated and never produce a witness.
    auto with_zero = is_salient_finite(GeneratorCone({v2(0, 0), v2(1, 0)}, 2));
    CHECK(with_zero.salient);
    CHECK(GeneratorCone({v2(0, 0), v2(1, 0)}, 2).zero_generator_count() == 1);
}

TEST_CASE("membership duality: guard points pair nonnegatively with the dual cone") {
    // Any x satisfying the guards and any nonnegative combination y of the
    // guard rows satisfy y^T x >= 0 exactly.
    std::mt19937 rng(205);
    for (int t = 0; t < 60; ++t) {
        auto sys = testsupport::random_loop_system(rng, 4, 1, 4);
        const size_t d = sys.dim();
        // A point of the guard cone, pushed away from the origin when possible.
        LinearSystem lp;
        lp.num_vars = d;
        for (const auto& c : sys.guard_rows()) lp.add_ge(c, Rational(0));
        lp.add_ge(testsupport::random_vector(rng, d, 3), Rational(1));
        auto res = lp_feasible(lp);
        if (!res.feasible) continue;
        const QVector& x = *res.point;
        GeneratorCone dual = dual_cone(sys);
        for (int s = 0; s < 10; ++s) {
            QVector y(d);
            for (const auto& g : dual.generators) {
                std::uniform_int_distribution<int> coeff(0, 4);
                y += Rational(coeff(rng)) * g;
            }
            CHECK(dot(y, x).sign() >= 0);
        }
    }
}

TEST_CASE("salience agrees with brute force on random cones") {
    std::mt19937 rng(201);
    for (int t = 0; t < 120; ++t) {
        std::uniform_int_distribution<size_t> dd(1, 4), gg(1, 6);
        const size_t d = dd(rng), m = gg(rng);
        std::vector<QVector> gens;
        for (size_t i = 0; i < m; ++i) gens.push_back(testsupport::random_vector(rng, d, 3));
        auto check = is_salient_finite(GeneratorCone(gens, d));
        CHECK(check.salient == brute_force_salient(gens));
        if (!check.salient) {
            REQUIRE(check.line_witness.has_value());
            CHECK(!check.line_witness->is_zero());
            CHECK(in_cone(gens, *check.line_witness));
            CHECK(in_cone(gens, -*check.line_witness));
        }
    }
}

TEST_CASE("invariant closure on hand-worked examples") {
    // 90-degree rotation spreads e_1 over the whole plane.
    QMatrix rot = QMatrix::from_rows({{0, -1}, {1, 0}});
    Subspace w1 = invariant_closure(v2(1, 0), {rot});
    CHECK(w1.dim() == 2);

    // Eigenvector stays a line.
    Subspace w2 = invariant_closure(v2(1, 0), {QMatrix::from_rows({{2, 0}, {0, 3}})});
    CHECK(w2.dim() == 1);
    CHECK(w2.contains(v2(5, 0)));
    CHECK(!w2.contains(v2(0, 1)));

    Subspace w3 = invariant_closure(v2(1, 0), {QMatrix::identity(2)});
    CHECK(w3.dim() == 1);

    CHECK_THROWS_AS(invariant_closure(v2(0, 0), {rot}), std::invalid_argument);
}

TEST_CASE("invariant closure output is exactly invariant") {
    std::mt19937 rng(202);
    for (int t = 0; t < 80; ++t) {
        std::uniform_int_distribution<size_t> dd(1, 4), kk(1, 2);
        const size_t d = dd(rng);
        auto ms = testsupport::random_commuting_family(rng, d, kk(rng), 3);
        QVector w = testsupport::random_nonzero_vector(rng, d, 3);
        Subspace sub = invariant_closure(w, ms);
        CHECK(sub.contains(w));
        for (const auto& m : ms)
            for (const auto& b : sub.basis) CHECK(sub.contains(m * b));
    }
}

TEST_CASE("quotient map convention on hand-worked examples") {
    Subspace e1;
    e1.ambient_dim = 2;
    e1.basis = {v2(1, 0)};
    QMatrix pi = quotient_map(e1);
    CHECK(pi == QMatrix::from_rows({{0, 1}}));

    Subspace full;
    full.ambient_dim = 2;
    full.basis = {v2(1, 0), v2(0, 1)};
    CHECK(quotient_map(full).rows() == 0);

    Subspace trivial;
    trivial.ambient_dim = 2;
    CHECK(quotient_map(trivial) == QMatrix::identity(2));
}

TEST_CASE("quotient map kills exactly the subspace") {
    std::mt19937 rng(203);
    for (int t = 0; t < 80; ++t) {
        std::uniform_int_distribution<size_t> dd(1, 4), kk(1, 2);
        const size_t d = dd(rng);
        auto ms = testsupport::random_commuting_family(rng, d, kk(rng), 3);
        Subspace w = invariant_closure(testsupport::random_nonzero_vector(rng, d, 3), ms);
        QMatrix pi = quotient_map(w);
        CHECK(pi.rows() == d - w.dim());
        CHECK(rank(pi) == d - w.dim());
        for (const auto& b : w.basis) CHECK((pi * b).is_zero());
        // ker(pi) = W exactly: any vector pi kills lies in W.
        for (const auto& kv : kernel_basis(pi)) CHECK(w.contains(kv));
    }
}

TEST_CASE("induced matrices on hand-worked examples") {
    QMatrix pi = QMatrix::from_rows({{0, 1}});
    QMatrix diag = QMatrix::from_rows({{2, 0}, {0, 3}});
    auto induced = induced_matrices(pi, {diag});
    REQUIRE(induced.size() == 1);
    CHECK(induced[0] == QMatrix::from_rows({{3}}));

    auto same = induced_matrices(QMatrix::identity(2), {diag});
    CHECK(same[0] == diag);

    auto empty = induced_matrices(QMatrix(0, 2), {diag});
    CHECK(empty[0].rows() == 0);

    // Non-invariant kernel must be rejected: ker([0 1]) = e_1, rotated away.
    QMatrix rot = QMatrix::from_rows({{0, -1}, {1, 0}});
    CHECK_THROWS_AS(induced_matrices(pi, {rot}), std::logic_error);
}

TEST_CASE("induced matrices satisfy the conjugation identity and inherit structure") {
    std::mt19937 rng(204);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<size_t> dd(2, 4), kk(1, 2);
        const size_t d = dd(rng);
        auto ms = testsupport::random_commuting_family(rng, d, kk(rng), 3);
        Subspace w = invariant_closure(testsupport::random_nonzero_vector(rng, d, 3), ms);
        QMatrix pi = quotient_map(w);
        auto induced = induced_matrices(pi, ms);
        for (size_t j = 0; j < ms.size(); ++j) CHECK(induced[j] * pi == pi * ms[j]);
        for (size_t a = 0; a < induced.size(); ++a) {
            if (induced[a].rows() == 0) continue;
            CHECK(is_invertible(induced[a]));
            for (size_t b = a + 1; b < induced.size(); ++b)
                CHECK(induced[a] * induced[b] == induced[b] * induced[a]);
        }
    }
}
