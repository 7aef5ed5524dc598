#include "coneterm/kermod.hpp"

#include <stdexcept>

#include "coneterm/linalg.hpp"

namespace coneterm {

namespace {

void check_subset(const LoopSystem& sys, const std::vector<size_t>& guard_indices) {
    if (guard_indices.empty()) throw std::invalid_argument("guard subfamily must be nonempty");
    for (size_t t = 0; t < guard_indices.size(); ++t) {
        if (guard_indices[t] >= sys.num_guards()) throw std::invalid_argument("guard index out of range");
        if (t > 0 && guard_indices[t] <= guard_indices[t - 1])
            throw std::invalid_argument("guard indices must be strictly ascending");
    }
}

// Normalization for reproducible bases: first nonzero coordinate scaled to
// 1, then denominators cleared to integer numerators.
QVector normalize_kernel_vector(QVector v) {
    size_t first = v.dim();
    for (size_t i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    if (first == v.dim()) throw std::logic_error("zero kernel vector");
    const Rational lead = v[first];
    mpz_class lcm(1);
    for (size_t i = 0; i < v.dim(); ++i) {
        v[i] /= lead;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), v[i].den().get_mpz_t());
        lcm = lcm / g * v[i].den();
    }
    const Rational scale{mpz_class(lcm)};
    for (size_t i = 0; i < v.dim(); ++i) v[i] *= scale;
    return v;
}

}  // namespace

ModuleBasis kernel_module_basis(const LoopSystem& sys, const std::vector<size_t>& guard_indices) {
    check_subset(sys, guard_indices);
    const size_t k = sys.num_updates();
    const size_t width = guard_indices.size();
    const size_t d = sys.dim();

    ModuleBasis basis;
    basis.width = width;
    basis.k = k;
    for (size_t j = 0; j < k; ++j) {
        UniPoly cp = char_poly(sys.transposed(j));
        basis.char_polys.push_back(MultiPoly::from_unipoly(cp, j, k));
        basis.degree_bounds.push_back(cp.degree());
    }

    // Monomial window S and the linear map sending coefficient vectors to
    // sum r_s * (monomial applied to its guard row).
    const std::vector<Monomial> window = monomials_with_bounded_exponents(basis.degree_bounds);
    const size_t cols = window.size() * width;
    QMatrix image(d, cols);
    for (size_t mi = 0; mi < window.size(); ++mi) {
        for (size_t t = 0; t < width; ++t) {
            PolyVec unit = PolyVec::zero(width, k);
            unit.comps[t] = MultiPoly::monomial(window[mi], Rational(1));
            QVector col = combine_guards(unit, sys, guard_indices);
            for (size_t r = 0; r < d; ++r) image(r, mi * width + t) = col[r];
        }
    }

    for (const auto& kv : kernel_basis(image)) {
        const QVector v = normalize_kernel_vector(kv);
        PolyVec g = PolyVec::zero(width, k);
        for (size_t mi = 0; mi < window.size(); ++mi)
            for (size_t t = 0; t < width; ++t) g.comps[t].add_term(window[mi], v[mi * width + t]);
        basis.generators.push_back(std::move(g));
    }
    basis.r_count = basis.generators.size();

    for (size_t j = 0; j < k; ++j)
        for (size_t t = 0; t < width; ++t) {
            PolyVec g = PolyVec::zero(width, k);
            g.comps[t] = basis.char_polys[j];
            basis.generators.push_back(std::move(g));
        }

    // Soundness is non-negotiable: every generator must map to zero.
    for (const auto& g : basis.generators)
        if (!combine_guards(g, sys, guard_indices).is_zero())
            throw std::logic_error("kernel module generator does not map to zero");
    return basis;
}

ModuleBasis kernel_module_basis(const LoopSystem& sys) {
    std::vector<size_t> all(sys.num_guards());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return kernel_module_basis(sys, all);
}

std::pair<PolyVec, PolyVec> reduce_mod_charpolys(const PolyVec& fvec, const ModuleBasis& basis) {
    if (fvec.width() != basis.width) throw std::invalid_argument("tuple width mismatch");
    PolyVec reduced = PolyVec::zero(basis.width, basis.k);
    PolyVec charpart = PolyVec::zero(basis.width, basis.k);
    for (size_t t = 0; t < basis.width; ++t) {
        MultiPoly rem = fvec.comps[t];
        for (size_t j = 0; j < basis.k; ++j) {
            auto [quot, r] = divide_univariate(rem, j, basis.char_polys[j]);
            charpart.comps[t] += quot * basis.char_polys[j];
            rem = std::move(r);
        }
        reduced.comps[t] = std::move(rem);
    }
    return {reduced, charpart};
}

bool reduces_over_basis(const PolyVec& fvec, const ModuleBasis& basis) {
    auto [reduced, charpart] = reduce_mod_charpolys(fvec, basis);
    const std::vector<Monomial> window = monomials_with_bounded_exponents(basis.degree_bounds);
    const size_t rows = window.size() * basis.width;
    QMatrix r_matrix(rows, basis.r_count);
    for (size_t g = 0; g < basis.r_count; ++g)
        for (size_t mi = 0; mi < window.size(); ++mi)
            for (size_t t = 0; t < basis.width; ++t)
                r_matrix(mi * basis.width + t, g) = basis.generators[g].comps[t].coeff(window[mi]);
    QVector rhs(rows);
    for (size_t mi = 0; mi < window.size(); ++mi)
        for (size_t t = 0; t < basis.width; ++t) rhs[mi * basis.width + t] = reduced.comps[t].coeff(window[mi]);
    return solve(r_matrix, rhs).has_value();
}

bool module_membership(const PolyVec& fvec, const LoopSystem& sys, const std::vector<size_t>& guard_indices,
                       const ModuleBasis& basis, bool check_representation) {
    check_subset(sys, guard_indices);
    const bool member = combine_guards(fvec, sys, guard_indices).is_zero();
    if (member && check_representation && !reduces_over_basis(fvec, basis))
        throw std::logic_error("kernel element not representable over the computed basis");
    return member;
}

}  // namespace coneterm
