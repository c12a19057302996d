// Z2-graded index spaces. A GradedSpace is an ordered basis with a parity per
// index, plus the tensor-factor decomposition used by placement operators and
// partial supertraces. Composite indices are row-major over the factors and
// carry parity equal to the sum of factor parities mod 2.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace supercas {

class GradedSpace {
public:
    GradedSpace() = default;

    // Atomic space from an explicit parity list (one factor).
    explicit GradedSpace(std::vector<uint8_t> parities) {
        factors_.push_back(std::move(parities));
        rebuild();
    }

    // V_(M|N): first M indices even, last N odd.
    static GradedSpace defining(std::size_t even, std::size_t odd) {
        std::vector<uint8_t> p(even + odd, 0);
        for (std::size_t a = even; a < even + odd; ++a) p[a] = 1;
        return GradedSpace(std::move(p));
    }

    static GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
        GradedSpace r;
        r.factors_ = a.factors_;
        r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
        r.rebuild();
        return r;
    }

    static GradedSpace tensor_power(const GradedSpace& v, std::size_t n) {
        if (n == 0) throw std::invalid_argument("tensor_power: n must be >= 1");
        GradedSpace r = v;
        for (std::size_t k = 1; k < n; ++k) r = tensor(r, v);
        return r;
    }

    std::size_t dim() const { return parity_.size(); }
    uint8_t parity(std::size_t a) const { return parity_[a]; }
    const std::vector<uint8_t>& parities() const { return parity_; }

    std::size_t dim_even() const {
        std::size_t c = 0;
        for (auto p : parity_) c += (p == 0);
        return c;
    }
    std::size_t dim_odd() const { return dim() - dim_even(); }
    long sdim() const { return static_cast<long>(dim_even()) - static_cast<long>(dim_odd()); }

    std::size_t factor_count() const { return factors_.size(); }
    std::size_t factor_dim(std::size_t k) const { return factors_.at(k).size(); }

    // The factor at position k (0-based) as an atomic space.
    GradedSpace factor(std::size_t k) const { return GradedSpace(factors_.at(k)); }

    // Reinterprets an n-factor space as a two-factor space, splitting the
    // factor list after `left_factors`. Indices and parities are unchanged.
    GradedSpace regroup(std::size_t left_factors) const {
        if (left_factors == 0 || left_factors >= factors_.size())
            throw std::invalid_argument("regroup: split point out of range");
        GradedSpace left, right;
        left.factors_.assign(factors_.begin(), factors_.begin() + left_factors);
        right.factors_.assign(factors_.begin() + left_factors, factors_.end());
        left.flatten();
        right.flatten();
        return tensor(left, right);
    }

    bool operator==(const GradedSpace& o) const { return factors_ == o.factors_; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }

    // Same total basis and parities, ignoring the factor decomposition.
    bool same_parities(const GradedSpace& o) const { return parity_ == o.parity_; }

private:
    void rebuild() {
        parity_ = {0};
        for (const auto& f : factors_) {
            std::vector<uint8_t> next;
            next.reserve(parity_.size() * f.size());
            for (auto p : parity_)
                for (auto q : f) next.push_back(static_cast<uint8_t>((p + q) & 1));
            parity_ = std::move(next);
        }
    }

    // Collapses all factors into one.
    void flatten() {
        rebuild();
        factors_ = {parity_};
    }

    std::vector<std::vector<uint8_t>> factors_;
    std::vector<uint8_t> parity_;
};

} // namespace supercas
