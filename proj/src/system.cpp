#include "coneterm/system.hpp"

#include "coneterm/linalg.hpp"

namespace coneterm {

LoopSystem::LoopSystem(std::vector<QMatrix> matrices, std::vector<QVector> guard_rows)
    : matrices_(std::move(matrices)), guard_rows_(std::move(guard_rows)) {
    if (matrices_.empty())
        throw ValidationError(ValidationError::Kind::DimensionMismatch, "at least one update matrix required");
    if (guard_rows_.empty())
        throw ValidationError(ValidationError::Kind::DimensionMismatch, "at least one guard row required");
    d_ = matrices_.front().rows();
    if (d_ == 0)
        throw ValidationError(ValidationError::Kind::DimensionMismatch, "dimension must be positive");
    for (size_t j = 0; j < matrices_.size(); ++j) {
        const auto& m = matrices_[j];
        if (m.rows() != d_ || m.cols() != d_)
            throw ValidationError(ValidationError::Kind::DimensionMismatch,
                                  "matrix " + std::to_string(j + 1) + " is not " + std::to_string(d_) + "x" +
                                      std::to_string(d_),
                                  j);
    }
    for (size_t i = 0; i < guard_rows_.size(); ++i) {
        if (guard_rows_[i].dim() != d_)
            throw ValidationError(ValidationError::Kind::DimensionMismatch,
                                  "guard row " + std::to_string(i + 1) + " has wrong dimension", i);
        if (guard_rows_[i].is_zero())
            throw ValidationError(ValidationError::Kind::ZeroGuardRow,
                                  "guard row " + std::to_string(i + 1) + " is zero", i);
    }
    for (size_t j = 0; j < matrices_.size(); ++j)
        if (!is_invertible(matrices_[j]))
            throw ValidationError(ValidationError::Kind::Singular,
                                  "matrix " + std::to_string(j + 1) + " is singular", j);
    for (size_t a = 0; a < matrices_.size(); ++a)
        for (size_t b = a + 1; b < matrices_.size(); ++b)
            if (matrices_[a] * matrices_[b] != matrices_[b] * matrices_[a])
                throw ValidationError(ValidationError::Kind::NonCommuting,
                                      "matrices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                          " do not commute",
                                      a, b);
    transposed_.reserve(matrices_.size());
    for (const auto& m : matrices_) transposed_.push_back(m.transpose());
    power_cache_ = std::make_unique<PowerCache>();
    power_cache_->powers.resize(matrices_.size());
}

LoopSystem::LoopSystem(const LoopSystem& o)
    : d_(o.d_), matrices_(o.matrices_), transposed_(o.transposed_), guard_rows_(o.guard_rows_),
      power_cache_(std::make_unique<PowerCache>()) {
    power_cache_->powers.resize(matrices_.size());
}

QMatrix LoopSystem::transposed_power(size_t j, size_t e) const {
    std::lock_guard<std::mutex> lock(power_cache_->mutex);
    auto& powers = power_cache_->powers[j];
    if (powers.empty()) powers.push_back(QMatrix::identity(d_));
    while (powers.size() <= e) powers.push_back(powers.back() * transposed_[j]);
    return powers[e];
}

QMatrix eval_at_matrices(const MultiPoly& f, const std::vector<QMatrix>& ms) {
    if (f.k() != ms.size()) throw std::invalid_argument("variable count does not match matrix count");
    if (ms.empty()) throw std::invalid_argument("no matrices given");
    const size_t d = ms.front().rows();
    for (const auto& m : ms)
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
    QMatrix acc = QMatrix::zero(d, d);
    for (const auto& [mono, c] : f.terms()) {
        QMatrix term = QMatrix::identity(d);
        for (size_t v = 0; v < ms.size(); ++v) {
            if (mono.exps[v] < 0) throw std::invalid_argument("negative exponent in matrix substitution");
            for (int e = 0; e < mono.exps[v]; ++e) term = term * ms[v];
        }
        acc += c * term;
    }
    return acc;
}

namespace {

QVector apply_poly_to_vector(const MultiPoly& f, const LoopSystem& sys, const QVector& v) {
    QVector acc(sys.dim());
    for (const auto& [mono, c] : f.terms()) {
        QVector t = v;
        for (size_t var = 0; var < sys.num_updates(); ++var) {
            if (mono.exps[var] < 0) throw std::invalid_argument("negative exponent in module map");
            if (mono.exps[var] > 0) t = sys.transposed_power(var, static_cast<size_t>(mono.exps[var])) * t;
        }
        acc += c * t;
    }
    return acc;
}

}  // namespace

QVector combine_guards(const PolyVec& fvec, const LoopSystem& sys) {
    std::vector<size_t> all(sys.num_guards());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return combine_guards(fvec, sys, all);
}

QVector combine_guards(const PolyVec& fvec, const LoopSystem& sys, const std::vector<size_t>& guard_indices) {
    if (fvec.width() != guard_indices.size())
        throw std::invalid_argument("tuple width does not match guard subfamily size");
    QVector acc(sys.dim());
    for (size_t t = 0; t < guard_indices.size(); ++t) {
        const auto& f = fvec.comps[t];
        if (f.k() != sys.num_updates()) throw std::invalid_argument("tuple variable count mismatch");
        if (f.is_zero()) continue;
        acc += apply_poly_to_vector(f, sys, sys.guard_row(guard_indices[t]));
    }
    return acc;
}

}  // namespace coneterm
