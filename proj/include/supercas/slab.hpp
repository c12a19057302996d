// Exact block kernels for the restricted-picture verification chains.
// Operators and column blocks are stored as integer matrices times a single
// rational scale; applications run in int64 when value bounds allow and fall
// back to arbitrary-precision integers otherwise. All results are exact.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "supercas/supermatrix.hpp"

namespace supercas {

struct ScaledOp {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> row_ptr, col_idx;
    std::vector<long long> v64;
    std::vector<mpz_class> vz;
    bool big = false;
    Rational scale = Rational(1);
    long long max_abs_row_sum = 0; // valid when !big

    static ScaledOp from(const SuperMatrix& m);
    std::size_t nnz() const { return col_idx.size(); }
};

struct Slab {
    std::size_t rows = 0, width = 0;
    std::vector<long long> v64;
    std::vector<mpz_class> vz;
    bool big = false;
    Rational scale = Rational(1);
    long long max_abs = 0; // valid when !big

    bool is_zero() const;
    // entry (r, j) as an exact rational
    Rational entry(std::size_t r, std::size_t j) const;
};

// identity columns [col0, col0+width) of an n x n identity
Slab identity_slab(std::size_t n, std::size_t col0, std::size_t width);

// out = op * s (exact)
Slab apply(const ScaledOp& op, const Slab& s);

// sum of coeff_i * slab_i (all same shape)
Slab lincomb(const std::vector<std::pair<Rational, const Slab*>>& terms);

bool equal_slabs(const Slab& a, const Slab& b);

// accumulate trace and supertrace contributions of the diagonal entries that
// fall inside a column block starting at col0 (parities of the row space)
void accumulate_traces(const Slab& s, std::size_t col0, const std::vector<uint8_t>& parities,
                       Rational& tr, Rational& str);

// accumulate the partial supertrace over the second factor: the slab holds
// columns (c, b) of an operator on a space of dim g^2; adds
// (-1)^{[b]} M^{(a,b)}_{(c,b)} into out[a * g + c].
void accumulate_str2(const Slab& s, std::size_t col0, std::size_t dim_g,
                     const std::vector<uint8_t>& label_parities, std::vector<Rational>& out);

} // namespace supercas
