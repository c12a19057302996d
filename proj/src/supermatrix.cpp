#include "supercas/supermatrix.hpp"

#include <stdexcept>

namespace supercas {

namespace {
constexpr std::size_t kDenseLimit = std::size_t(1) << 16;
}

bool SuperMatrix::pick_dense(std::size_t r, std::size_t c, Storage s) {
    switch (s) {
        case Storage::Dense: return true;
        case Storage::Sparse: return false;
        default: return r * c <= kDenseLimit;
    }
}

SuperMatrix::SuperMatrix(GradedSpace row_space, GradedSpace col_space, Storage s)
    : row_(std::move(row_space)), col_(std::move(col_space)) {
    dense_storage_ = pick_dense(row_.dim(), col_.dim(), s);
    if (dense_storage_)
        dense_.assign(row_.dim() * col_.dim(), Rational(0));
    else
        rows_.assign(row_.dim(), {});
}

SuperMatrix SuperMatrix::zero(const GradedSpace& row, const GradedSpace& col, Storage s) {
    return SuperMatrix(row, col, s);
}

SuperMatrix SuperMatrix::identity(const GradedSpace& space, Storage s) {
    SuperMatrix m(space, space, s);
    for (std::size_t i = 0; i < space.dim(); ++i) m.set(i, i, Rational(1));
    return m;
}

SuperMatrix SuperMatrix::with_storage(Storage s) const {
    bool want_dense = pick_dense(rows(), cols(), s);
    if (want_dense == dense_storage_) return *this;
    SuperMatrix m(row_, col_, want_dense ? Storage::Dense : Storage::Sparse);
    for_each_nz([&](std::size_t r, std::size_t c, const Rational& v) { m.set(r, c, v); });
    return m;
}

Rational SuperMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols()) throw std::out_of_range("SuperMatrix::at");
    if (dense_storage_) return dense_[r * cols() + c];
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Rational(0) : it->second;
}

void SuperMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows() || c >= cols()) throw std::out_of_range("SuperMatrix::set");
    if (dense_storage_) {
        dense_[r * cols() + c] = v;
    } else if (v == 0) {
        rows_[r].erase(c);
    } else {
        rows_[r][c] = v;
    }
}

void SuperMatrix::add_at(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    if (dense_storage_) {
        dense_[r * cols() + c] += v;
    } else {
        auto [it, inserted] = rows_[r].emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) rows_[r].erase(it);
        }
    }
}

std::size_t SuperMatrix::nnz() const {
    std::size_t n = 0;
    if (dense_storage_) {
        for (const auto& v : dense_) n += (v != 0);
    } else {
        for (const auto& row : rows_) n += row.size();
    }
    return n;
}

bool SuperMatrix::is_zero() const {
    if (dense_storage_) {
        for (const auto& v : dense_)
            if (v != 0) return false;
        return true;
    }
    for (const auto& row : rows_)
        if (!row.empty()) return false;
    return true;
}

void SuperMatrix::for_each_nz(
    const std::function<void(std::size_t, std::size_t, const Rational&)>& fn) const {
    if (dense_storage_) {
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols(); ++c) {
                const Rational& v = dense_[r * cols() + c];
                if (v != 0) fn(r, c, v);
            }
    } else {
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& [c, v] : rows_[r]) fn(r, c, v);
    }
}

void SuperMatrix::check_same_shape(const SuperMatrix& o) const {
    if (!row_.same_parities(o.row_) || !col_.same_parities(o.col_))
        throw std::invalid_argument("SuperMatrix: shape/parity mismatch");
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
    SuperMatrix r = *this;
    r.axpy(Rational(1), o);
    return r;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
    SuperMatrix r = *this;
    r.axpy(Rational(-1), o);
    return r;
}

SuperMatrix SuperMatrix::operator-() const { return scaled(Rational(-1)); }

SuperMatrix& SuperMatrix::axpy(const Rational& c, const SuperMatrix& o) {
    check_same_shape(o);
    if (c == 0) return *this;
    o.for_each_nz([&](std::size_t r, std::size_t cc, const Rational& v) { add_at(r, cc, c * v); });
    return *this;
}

SuperMatrix SuperMatrix::scaled(const Rational& c) const {
    SuperMatrix r(row_, col_, dense_storage_ ? Storage::Dense : Storage::Sparse);
    if (c == 0) return r;
    for_each_nz([&](std::size_t i, std::size_t j, const Rational& v) { r.set(i, j, c * v); });
    return r;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    if (cols() != o.rows() || !col_.same_parities(o.row_))
        throw std::invalid_argument("SuperMatrix::operator*: inner space mismatch");
    bool result_dense = dense_storage_ && o.dense_storage_;
    SuperMatrix r(row_, o.col_, result_dense ? Storage::Dense : Storage::Sparse);
    std::size_t w = o.cols();
    if (result_dense) {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t k = 0; k < cols(); ++k) {
                const Rational& a = dense_[i * cols() + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < w; ++j) {
                    const Rational& b = o.dense_[k * w + j];
                    if (b != 0) r.dense_[i * w + j] += a * b;
                }
            }
        return r;
    }
    // sparse result: row-accumulator over maps
    for (std::size_t i = 0; i < rows(); ++i) {
        std::map<std::size_t, Rational> acc;
        auto row_of_a = [&](const std::function<void(std::size_t, const Rational&)>& fn) {
            if (dense_storage_) {
                for (std::size_t k = 0; k < cols(); ++k) {
                    const Rational& a = dense_[i * cols() + k];
                    if (a != 0) fn(k, a);
                }
            } else {
                for (const auto& [k, a] : rows_[i]) fn(k, a);
            }
        };
        row_of_a([&](std::size_t k, const Rational& a) {
            if (o.dense_storage_) {
                for (std::size_t j = 0; j < w; ++j) {
                    const Rational& b = o.dense_[k * w + j];
                    if (b == 0) continue;
                    auto [it, inserted] = acc.emplace(j, a * b);
                    if (!inserted) it->second += a * b;
                }
            } else {
                for (const auto& [j, b] : o.rows_[k]) {
                    auto [it, inserted] = acc.emplace(j, a * b);
                    if (!inserted) it->second += a * b;
                }
            }
        });
        for (auto& [j, v] : acc)
            if (v != 0) r.rows_[i].emplace(j, std::move(v));
    }
    return r;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols()) return false;
    if (!row_.same_parities(o.row_) || !col_.same_parities(o.col_)) return false;
    if (dense_storage_ && o.dense_storage_) return dense_ == o.dense_;
    if (!dense_storage_ && !o.dense_storage_) return rows_ == o.rows_;
    // mixed backends: every nonzero of one must match the other, and counts agree
    if (nnz() != o.nnz()) return false;
    bool equal = true;
    for_each_nz([&](std::size_t r, std::size_t c, const Rational& v) {
        if (equal && o.at(r, c) != v) equal = false;
    });
    return equal;
}

Rational SuperMatrix::supertrace() const {
    if (!is_square()) throw std::invalid_argument("supertrace: operator not square");
    Rational s(0);
    for (std::size_t a = 0; a < rows(); ++a) {
        Rational d = at(a, a);
        if (row_.parity(a))
            s -= d;
        else
            s += d;
    }
    return s;
}

Rational SuperMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: operator not square");
    Rational s(0);
    for (std::size_t a = 0; a < rows(); ++a) s += at(a, a);
    return s;
}

void SuperMatrix::apply_block(const std::vector<Rational>& block, std::size_t width,
                              std::vector<Rational>& out) const {
    if (block.size() != cols() * width) throw std::invalid_argument("apply_block: size mismatch");
    out.assign(rows() * width, Rational(0));
    for_each_nz([&](std::size_t r, std::size_t k, const Rational& v) {
        const Rational* src = &block[k * width];
        Rational* dst = &out[r * width];
        for (std::size_t j = 0; j < width; ++j)
            if (src[j] != 0) dst[j] += v * src[j];
    });
}

} // namespace supercas
