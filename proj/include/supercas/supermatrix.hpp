// Exact linear operators between graded spaces. Entries are arbitrary-
// precision rationals; storage is dense (flat array) or sparse (per-row
// ordered maps). Both backends produce identical results; operations pick
// the result backend from the operand sizes unless forced.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "supercas/graded_space.hpp"
#include "supercas/rational.hpp"

namespace supercas {

enum class Storage { Auto, Dense, Sparse };

class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(GradedSpace row_space, GradedSpace col_space, Storage s = Storage::Auto);

    static SuperMatrix zero(const GradedSpace& row, const GradedSpace& col,
                            Storage s = Storage::Auto);
    static SuperMatrix identity(const GradedSpace& space, Storage s = Storage::Auto);

    const GradedSpace& row_space() const { return row_; }
    const GradedSpace& col_space() const { return col_; }
    std::size_t rows() const { return row_.dim(); }
    std::size_t cols() const { return col_.dim(); }
    bool is_square() const { return rows() == cols(); }

    bool dense() const { return dense_storage_; }
    SuperMatrix with_storage(Storage s) const;

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add_at(std::size_t r, std::size_t c, const Rational& v);

    std::size_t nnz() const;
    bool is_zero() const;
    void for_each_nz(const std::function<void(std::size_t, std::size_t, const Rational&)>& fn) const;

    SuperMatrix operator+(const SuperMatrix& o) const;
    SuperMatrix operator-(const SuperMatrix& o) const;
    SuperMatrix operator-() const;
    SuperMatrix operator*(const SuperMatrix& o) const;
    SuperMatrix scaled(const Rational& c) const;
    SuperMatrix& axpy(const Rational& c, const SuperMatrix& o); // *this += c*o

    bool operator==(const SuperMatrix& o) const;
    bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

    Rational supertrace() const;
    Rational trace() const;

    // Applies *this to a dense column block: out = (*this) * block, where
    // block is cols() x width, row-major.
    void apply_block(const std::vector<Rational>& block, std::size_t width,
                     std::vector<Rational>& out) const;

private:
    void check_same_shape(const SuperMatrix& o) const;

    GradedSpace row_, col_;
    bool dense_storage_ = true;
    std::vector<Rational> dense_;                       // rows*cols, row-major
    std::vector<std::map<std::size_t, Rational>> rows_; // per-row sparse

    static bool pick_dense(std::size_t r, std::size_t c, Storage s);
};

} // namespace supercas
