#include "coneterm/lp.hpp"

#include <stdexcept>

namespace coneterm {

void LinearSystem::add_eq(QVector a, Rational b) {
    if (a.dim() != num_vars) throw std::invalid_argument("row dimension mismatch");
    equalities.emplace_back(std::move(a), std::move(b));
}

void LinearSystem::add_ge(QVector a, Rational b) {
    if (a.dim() != num_vars) throw std::invalid_argument("row dimension mismatch");
    inequalities.emplace_back(std::move(a), std::move(b));
}

bool check_point(const LinearSystem& sys, const QVector& x) {
    if (x.dim() != sys.num_vars) return false;
    for (const auto& [a, b] : sys.equalities)
        if (dot(a, x) != b) return false;
    for (const auto& [a, b] : sys.inequalities)
        if (dot(a, x) < b) return false;
    return true;
}

bool check_farkas(const LinearSystem& sys, const QVector& y) {
    const size_t ne = sys.equalities.size(), ni = sys.inequalities.size();
    if (y.dim() != ne + ni) return false;
    for (size_t r = 0; r < ni; ++r)
        if (y[ne + r].sign() < 0) return false;
    QVector combo(sys.num_vars);
    Rational rhs;
    for (size_t r = 0; r < ne; ++r) {
        combo += y[r] * sys.equalities[r].first;
        rhs += y[r] * sys.equalities[r].second;
    }
    for (size_t r = 0; r < ni; ++r) {
        combo += y[ne + r] * sys.inequalities[r].first;
        rhs += y[ne + r] * sys.inequalities[r].second;
    }
    return combo.is_zero() && rhs.sign() > 0;
}

namespace {

/*
 * Phase-I tableau. Column layout:
 *   [0, nv)            x+ parts
 *   [nv, 2nv)          x- parts
 *   [2nv, 2nv+ni)      surplus for inequalities
 *   [2nv+ni, ... + m)  artificials, one per row
 * Row order: equalities then inequalities. Rows are pre-scaled by +-1 so
 * every right-hand side is nonnegative.
 */
struct PhaseOneTableau {
    size_t nv, ne, ni, m, ncols;
    std::vector<int> row_sign;
    std::vector<QVector> rows;    // each of length ncols + 1 (rhs last)
    QVector zrow;                 // reduced costs, length ncols + 1
    std::vector<size_t> basis;    // basic column per row

    explicit PhaseOneTableau(const LinearSystem& sys)
        : nv(sys.num_vars), ne(sys.equalities.size()), ni(sys.inequalities.size()), m(ne + ni),
          ncols(2 * nv + ni + m), row_sign(m, 1), zrow(ncols + 1), basis(m) {
        rows.assign(m, QVector(ncols + 1));
        for (size_t r = 0; r < m; ++r) {
            const bool is_eq = r < ne;
            const auto& [a, b] = is_eq ? sys.equalities[r] : sys.inequalities[r - ne];
            const int sign = b.sign() < 0 ? -1 : 1;
            row_sign[r] = sign;
            const Rational s(sign);
            for (size_t j = 0; j < nv; ++j) {
                rows[r][j] = s * a[j];
                rows[r][nv + j] = -s * a[j];
            }
            if (!is_eq) rows[r][2 * nv + (r - ne)] = -s;
            rows[r][2 * nv + ni + r] = Rational(1);
            rows[r][ncols] = s * b;
            basis[r] = 2 * nv + ni + r;
        }
        // Reduced costs for min sum(artificials): c_j minus the column sum
        // (all basic costs are 1 initially). Invariant: zrow[ncols] is the
        // negated objective value.
        for (size_t j = 0; j <= ncols; ++j) {
            Rational colsum;
            for (size_t r = 0; r < m; ++r) colsum += rows[r][j];
            const bool artificial = j >= 2 * nv + ni && j < ncols;
            zrow[j] = (artificial ? Rational(1) : Rational(0)) - colsum;
        }
    }

    void pivot(size_t r, size_t e) {
        const Rational inv = rows[r][e].inverse();
        for (size_t j = 0; j <= ncols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][e].is_zero()) continue;
            const Rational f = rows[i][e];
            for (size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (!zrow[e].is_zero()) {
            const Rational f = zrow[e];
            for (size_t j = 0; j <= ncols; ++j) zrow[j] -= f * rows[r][j];
        }
        basis[r] = e;
    }

    // Bland: entering = lowest-index negative reduced cost; leaving = min
    // ratio, ties by lowest basic column index.
    void run() {
        while (true) {
            size_t e = ncols;
            for (size_t j = 0; j < ncols; ++j)
                if (zrow[j].sign() < 0) {
                    e = j;
                    break;
                }
            if (e == ncols) return;
            size_t leave = m;
            Rational best;
            for (size_t r = 0; r < m; ++r) {
                if (rows[r][e].sign() <= 0) continue;
                Rational ratio = rows[r][ncols] / rows[r][e];
                if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m) throw std::logic_error("phase-I objective unbounded");
            pivot(leave, e);
        }
    }

    Rational objective() const { return -zrow[ncols]; }
};

}  // namespace

FeasibilityResult lp_feasible(const LinearSystem& sys) {
    for (const auto& [a, b] : sys.equalities)
        if (a.dim() != sys.num_vars) throw std::invalid_argument("row dimension mismatch");
    for (const auto& [a, b] : sys.inequalities)
        if (a.dim() != sys.num_vars) throw std::invalid_argument("row dimension mismatch");

    PhaseOneTableau t(sys);
    t.run();

    FeasibilityResult result;
    if (t.objective().is_zero()) {
        QVector x(sys.num_vars);
        for (size_t r = 0; r < t.m; ++r) {
            if (t.basis[r] < t.nv)
                x[t.basis[r]] += t.rows[r][t.ncols];
            else if (t.basis[r] < 2 * t.nv)
                x[t.basis[r] - t.nv] -= t.rows[r][t.ncols];
        }
        if (!check_point(sys, x)) throw std::logic_error("simplex produced an invalid feasible point");
        result.feasible = true;
        result.point = std::move(x);
    } else {
        // Dual values off the artificial reduced costs, mapped back through
        // the row scaling.
        QVector y(t.m);
        for (size_t r = 0; r < t.m; ++r) {
            const Rational yr = Rational(1) - t.zrow[2 * t.nv + t.ni + r];
            y[r] = Rational(t.row_sign[r]) * yr;
        }
        if (!check_farkas(sys, y)) throw std::logic_error("simplex produced an invalid Farkas certificate");
        result.feasible = false;
        result.farkas = std::move(y);
    }
    return result;
}

std::optional<QVector> positive_span_feasible(const QMatrix& g) {
    LinearSystem sys;
    sys.num_vars = g.cols();
    for (size_t i = 0; i < g.rows(); ++i) sys.add_ge(g.row(i), Rational(1));
    auto res = lp_feasible(sys);
    if (!res.feasible) return std::nullopt;
    return res.point;
}

std::optional<QVector> gordan_dual(const QMatrix& g) {
    const size_t n = g.rows(), m = g.cols();
    LinearSystem sys;
    sys.num_vars = n;
    for (size_t j = 0; j < m; ++j) sys.add_eq(g.col(j), Rational(0));
    {
        QVector ones(n);
        for (size_t i = 0; i < n; ++i) ones[i] = Rational(1);
        sys.add_eq(std::move(ones), Rational(1));
    }
    for (size_t i = 0; i < n; ++i) {
        QVector e(n);
        e[i] = Rational(1);
        sys.add_ge(std::move(e), Rational(0));
    }
    auto res = lp_feasible(sys);
    if (!res.feasible) return std::nullopt;
    return res.point;
}

}  // namespace coneterm
