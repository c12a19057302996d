#include "supercas/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace supercas {

SuperMatrix graded_kron(const SuperMatrix& a, const SuperMatrix& b) {
    GradedSpace row = GradedSpace::tensor(a.row_space(), b.row_space());
    GradedSpace col = GradedSpace::tensor(a.col_space(), b.col_space());
    SuperMatrix r(row, col);
    const auto& bcol = b.col_space();
    const auto& brow = b.row_space();
    a.for_each_nz([&](std::size_t k, std::size_t i, const Rational& av) {
        bool i_odd = a.col_space().parity(i);
        b.for_each_nz([&](std::size_t beta, std::size_t alpha, const Rational& bv) {
            Rational v = av * bv;
            if (i_odd && ((bcol.parity(alpha) + brow.parity(beta)) & 1)) v = -v;
            r.add_at(k * brow.dim() + beta, i * bcol.dim() + alpha, v);
        });
    });
    return r;
}

SuperMatrix place(const SuperMatrix& a, const std::vector<std::size_t>& positions, std::size_t s) {
    const std::size_t r_factors = positions.size();
    if (a.row_space().factor_count() != r_factors || a.col_space().factor_count() != r_factors)
        throw std::invalid_argument("place: operator factor count != positions count");
    if (!a.row_space().same_parities(a.col_space()))
        throw std::invalid_argument("place: operator must act on a single tensor-power space");
    for (std::size_t p = 0; p < r_factors; ++p) {
        if (positions[p] < 1 || positions[p] > s)
            throw std::out_of_range("place: position out of range");
        if (p > 0 && positions[p] <= positions[p - 1])
            throw std::invalid_argument("place: positions must be strictly increasing");
    }
    GradedSpace v = a.row_space().factor(0);
    for (std::size_t p = 1; p < r_factors; ++p)
        if (!(a.row_space().factor(p) == v))
            throw std::invalid_argument("place: factors must be copies of one space");
    const std::size_t d = v.dim();
    GradedSpace big = GradedSpace::tensor_power(v, s);
    SuperMatrix out(big, big);

    // identity slots, leftmost first
    std::vector<std::size_t> id_slots;
    {
        std::vector<bool> taken(s + 1, false);
        for (auto p : positions) taken[p] = true;
        for (std::size_t t = 1; t <= s; ++t)
            if (!taken[t]) id_slots.push_back(t);
    }
    const std::size_t n_id = id_slots.size();
    std::vector<std::size_t> id_idx(n_id, 0);

    // strides of factor t (1-based) in the composite row-major index
    std::vector<std::size_t> stride(s + 1, 1);
    for (std::size_t t = s; t >= 1; --t) {
        stride[t] = (t == s) ? 1 : stride[t + 1] * d;
        if (t == 1) break;
    }

    std::vector<std::size_t> krow(r_factors), kcol(r_factors);
    a.for_each_nz([&](std::size_t arow, std::size_t acol, const Rational& av) {
        for (std::size_t p = r_factors; p-- > 0;) {
            krow[p] = arow % d;
            arow /= d;
            kcol[p] = acol % d;
            acol /= d;
        }
        // enumerate identity-slot assignments
        std::fill(id_idx.begin(), id_idx.end(), 0);
        while (true) {
            std::size_t row = 0, col = 0;
            for (std::size_t p = 0; p < r_factors; ++p) {
                row += krow[p] * stride[positions[p]];
                col += kcol[p] * stride[positions[p]];
            }
            for (std::size_t q = 0; q < n_id; ++q) {
                row += id_idx[q] * stride[id_slots[q]];
                col += id_idx[q] * stride[id_slots[q]];
            }
            // sign: for each nontrivial slot p, parity of identity-slot
            // indices to its left times ([k_p]+[m_p])
            int sign = 0;
            for (std::size_t p = 0; p < r_factors; ++p) {
                int hop = (v.parity(krow[p]) + v.parity(kcol[p])) & 1;
                if (!hop) continue;
                int e = 0;
                for (std::size_t q = 0; q < n_id && id_slots[q] < positions[p]; ++q)
                    e ^= v.parity(id_idx[q]);
                sign ^= (e & hop);
            }
            out.add_at(row, col, sign ? -av : av);
            // next assignment
            std::size_t q = n_id;
            while (q > 0) {
                --q;
                if (++id_idx[q] < d) break;
                id_idx[q] = 0;
                if (q == 0) {
                    q = SIZE_MAX;
                    break;
                }
            }
            if (n_id == 0 || q == SIZE_MAX) break;
        }
    });
    return out;
}

SuperMatrix place2(const SuperMatrix& a, std::size_t p, std::size_t q, std::size_t s) {
    if (p == q) throw std::invalid_argument("place2: positions must differ");
    if (p < q) return place(a, {p, q}, s);
    return place(swap_slots(a), {q, p}, s);
}

SuperMatrix superperm(const GradedSpace& v) {
    GradedSpace vv = GradedSpace::tensor(v, v);
    SuperMatrix p(vv, vv, Storage::Auto);
    const std::size_t d = v.dim();
    for (std::size_t k1 = 0; k1 < d; ++k1)
        for (std::size_t k2 = 0; k2 < d; ++k2) {
            Rational sgn((v.parity(k1) & v.parity(k2)) ? -1 : 1);
            p.set(k1 * d + k2, k2 * d + k1, sgn);
        }
    return p;
}

SuperMatrix swap_slots(const SuperMatrix& a) {
    if (a.row_space().factor_count() != 2 || !a.row_space().same_parities(a.col_space()))
        throw std::invalid_argument("swap_slots: need an operator on a two-factor space");
    SuperMatrix p = superperm(a.row_space().factor(0));
    return p * a * p;
}

SuperMatrix partial_supertrace_second(const SuperMatrix& a) {
    if (a.row_space().factor_count() != 2 || a.col_space().factor_count() != 2)
        throw std::invalid_argument("partial_supertrace_second: space is not a two-factor product");
    GradedSpace v = a.row_space().factor(0);
    GradedSpace w = a.row_space().factor(1);
    if (!(a.col_space().factor(0) == v) || !(a.col_space().factor(1) == w))
        throw std::invalid_argument("partial_supertrace_second: row/col factor mismatch");
    const std::size_t dw = w.dim();
    SuperMatrix out(v, v);
    a.for_each_nz([&](std::size_t r, std::size_t c, const Rational& val) {
        std::size_t i = r / dw, beta = r % dw;
        std::size_t j = c / dw, gamma = c % dw;
        if (beta != gamma) return;
        out.add_at(i, j, w.parity(beta) ? -val : val);
    });
    return out;
}

SuperMatrix graded_commutator(const SuperMatrix& a, int par_a, const SuperMatrix& b, int par_b) {
    SuperMatrix ab = a * b;
    SuperMatrix ba = b * a;
    return (par_a & par_b & 1) ? ab + ba : ab - ba;
}

SuperMatrix graded_anticommutator(const SuperMatrix& a, int par_a, const SuperMatrix& b,
                                  int par_b) {
    SuperMatrix ab = a * b;
    SuperMatrix ba = b * a;
    return (par_a & par_b & 1) ? ab - ba : ab + ba;
}

SuperMatrix coproduct_action(const SuperMatrix& x) {
    SuperMatrix id = SuperMatrix::identity(x.row_space());
    return graded_kron(x, id) + graded_kron(id, x);
}

SuperMatrix inverse(const SuperMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: operator not square");
    const std::size_t n = a.rows();
    // augmented [A | I] dense elimination
    std::vector<Rational> m(n * 2 * n, Rational(0));
    a.for_each_nz([&](std::size_t r, std::size_t c, const Rational& v) { m[r * 2 * n + c] = v; });
    for (std::size_t i = 0; i < n; ++i) m[i * 2 * n + n + i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * 2 * n + col] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular operator");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m[piv * 2 * n + j], m[col * 2 * n + j]);
        Rational inv_p = Rational(1) / m[col * 2 * n + col];
        for (std::size_t j = 0; j < 2 * n; ++j) m[col * 2 * n + j] *= inv_p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = m[r * 2 * n + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < 2 * n; ++j) m[r * 2 * n + j] -= f * m[col * 2 * n + j];
        }
    }
    SuperMatrix out(a.row_space(), a.col_space(), Storage::Auto);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m[r * 2 * n + n + c] != 0) out.set(r, c, m[r * 2 * n + n + c]);
    return out;
}

SuperMatrix transpose_plain(const SuperMatrix& a) {
    SuperMatrix t(a.col_space(), a.row_space(),
                  a.dense() ? Storage::Dense : Storage::Sparse);
    a.for_each_nz([&](std::size_t r, std::size_t c, const Rational& v) { t.set(c, r, v); });
    return t;
}

} // namespace supercas
