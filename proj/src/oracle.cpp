#include "coneterm/oracle.hpp"

#include <functional>

#include "coneterm/cone.hpp"
#include "coneterm/lp.hpp"

namespace coneterm {

namespace {

void enumerate_multidegrees(size_t k, size_t budget, std::vector<size_t>& current,
                            const std::function<void(const std::vector<size_t>&)>& visit, size_t var = 0) {
    if (var == k) {
        visit(current);
        return;
    }
    for (size_t e = 0; e <= budget; ++e) {
        current[var] = e;
        enumerate_multidegrees(k, budget - e, current, visit, var + 1);
    }
    current[var] = 0;
}

}  // namespace

std::vector<QVector> truncated_orbit_generators(const LoopSystem& sys, size_t max_word_length) {
    std::vector<QVector> out;
    std::vector<size_t> degrees(sys.num_updates(), 0);
    enumerate_multidegrees(sys.num_updates(), max_word_length, degrees, [&](const std::vector<size_t>& w) {
        for (size_t i = 0; i < sys.num_guards(); ++i) {
            QVector v = sys.guard_row(i);
            for (size_t var = 0; var < w.size(); ++var)
                if (w[var] > 0) v = sys.transposed_power(var, w[var]) * v;
            bool seen = false;
            for (const auto& existing : out)
                if (existing == v) {
                    seen = true;
                    break;
                }
            if (!seen) out.push_back(std::move(v));
        }
    });
    return out;
}

bool oracle_no_witness(const LoopSystem& sys, size_t max_word_length) {
    const auto gens = truncated_orbit_generators(sys, max_word_length);
    const size_t d = sys.dim();
    // The cone {v : g^T v >= 0 for all g} is {0} iff no coordinate can be
    // pushed to +-1 inside it.
    for (size_t coord = 0; coord < d; ++coord) {
        for (int sign : {1, -1}) {
            LinearSystem lp;
            lp.num_vars = d;
            for (const auto& g : gens) lp.add_ge(g, Rational(0));
            QVector e(d);
            e[coord] = Rational(sign);
            lp.add_ge(std::move(e), Rational(1));
            if (lp_feasible(lp).feasible) return false;
        }
    }
    return true;
}

std::optional<QVector> oracle_not_salient(const LoopSystem& sys, size_t max_word_length) {
    const auto gens = truncated_orbit_generators(sys, max_word_length);
    SalienceCheck check = is_salient_finite(GeneratorCone(gens, sys.dim()));
    if (check.salient) return std::nullopt;
    return check.line_witness;
}

namespace {

bool guards_hold(const LoopSystem& sys, const QVector& v) {
    for (size_t i = 0; i < sys.num_guards(); ++i)
        if (dot(sys.guard_row(i), v).sign() < 0) return false;
    return true;
}

bool simulate_rec(const LoopSystem& sys, const QVector& v, size_t var, size_t budget) {
    if (var == sys.num_updates()) return guards_hold(sys, v);
    QVector current = v;
    for (size_t e = 0; e <= budget; ++e) {
        if (!simulate_rec(sys, current, var + 1, budget - e)) return false;
        if (e < budget) current = sys.matrix(var) * current;
    }
    return true;
}

}  // namespace

bool orbit_simulate(const QVector& v, const LoopSystem& sys, size_t max_word_length) {
    if (v.dim() != sys.dim()) throw std::invalid_argument("vector dimension mismatch");
    return simulate_rec(sys, v, 0, max_word_length);
}

}  // namespace coneterm
