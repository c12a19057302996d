#include "supercas/slab.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "supercas/parallel.hpp"

namespace supercas {

namespace {

constexpr long long kBound = 1LL << 62;

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool fits_ll(const mpz_class& z) { return z.fits_slong_p() || mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

long long to_ll(const mpz_class& z) {
    // valid when fits_ll
    long long r = 0;
    mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, z.get_mpz_t());
    return mpz_sgn(z.get_mpz_t()) < 0 ? -r : r;
}

void promote(Slab& s) {
    if (s.big) return;
    s.vz.resize(s.v64.size());
    for (std::size_t i = 0; i < s.v64.size(); ++i) s.vz[i] = static_cast<long>(s.v64[i]);
    s.v64.clear();
    s.big = true;
}

// divide out the integer content and fold it into the scale; demote to int64
// when everything fits
void normalize(Slab& s) {
    if (!s.big) {
        if (s.max_abs <= 1) return;
        long long g = 0;
        for (auto v : s.v64) {
            g = std::gcd(g, v < 0 ? -v : v);
            if (g == 1) break;
        }
        if (g > 1) {
            for (auto& v : s.v64) v /= g;
            s.scale *= Rational(static_cast<long>(g));
            s.max_abs /= g;
        }
        return;
    }
    mpz_class g(0);
    for (const auto& v : s.vz) {
        mpz_class a = abs(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        for (auto& v : s.vz) v /= g;
        s.scale *= Rational(g);
    }
    // try to demote
    mpz_class mx(0);
    for (const auto& v : s.vz) {
        mpz_class a = abs(v);
        if (a > mx) mx = a;
    }
    if (fits_ll(mx)) {
        s.v64.resize(s.vz.size());
        for (std::size_t i = 0; i < s.vz.size(); ++i) s.v64[i] = to_ll(s.vz[i]);
        s.vz.clear();
        s.big = false;
        s.max_abs = fits_ll(mx) ? to_ll(mx) : 0;
    }
}

} // namespace

ScaledOp ScaledOp::from(const SuperMatrix& m) {
    ScaledOp op;
    op.rows = m.rows();
    op.cols = m.cols();
    // common denominator of all entries
    mpz_class den(1);
    m.for_each_nz([&](std::size_t, std::size_t, const Rational& v) {
        den = lcm_z(den, v.get_den());
    });
    op.scale = Rational(1) / Rational(den);
    op.row_ptr.assign(op.rows + 1, 0);
    std::vector<std::size_t> cols_tmp;
    std::vector<mpz_class> vals_tmp;
    std::size_t cur_row = 0;
    m.for_each_nz([&](std::size_t r, std::size_t c, const Rational& v) {
        while (cur_row < r) op.row_ptr[++cur_row] = cols_tmp.size();
        cols_tmp.push_back(c);
        vals_tmp.push_back(v.get_num() * (den / v.get_den()));
    });
    while (cur_row < op.rows) op.row_ptr[++cur_row] = cols_tmp.size();
    op.col_idx = std::move(cols_tmp);
    bool all_fit = true;
    for (const auto& z : vals_tmp)
        if (!fits_ll(z)) {
            all_fit = false;
            break;
        }
    if (all_fit) {
        op.v64.resize(vals_tmp.size());
        for (std::size_t i = 0; i < vals_tmp.size(); ++i) op.v64[i] = to_ll(vals_tmp[i]);
        long long mx = 0;
        for (std::size_t r = 0; r < op.rows; ++r) {
            long long s = 0;
            bool over = false;
            for (std::size_t k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k) {
                long long a = op.v64[k] < 0 ? -op.v64[k] : op.v64[k];
                if (s > kBound - a) {
                    over = true;
                    break;
                }
                s += a;
            }
            if (over) {
                mx = kBound;
                break;
            }
            if (s > mx) mx = s;
        }
        op.max_abs_row_sum = mx;
    } else {
        op.big = true;
        op.vz = std::move(vals_tmp);
    }
    return op;
}

Slab identity_slab(std::size_t n, std::size_t col0, std::size_t width) {
    Slab s;
    s.rows = n;
    s.width = width;
    s.v64.assign(n * width, 0);
    for (std::size_t j = 0; j < width; ++j)
        if (col0 + j < n) s.v64[(col0 + j) * width + j] = 1;
    s.max_abs = 1;
    return s;
}

bool Slab::is_zero() const {
    if (!big) {
        for (auto v : v64)
            if (v != 0) return false;
        return true;
    }
    for (const auto& v : vz)
        if (v != 0) return false;
    return true;
}

Rational Slab::entry(std::size_t r, std::size_t j) const {
    Rational v = big ? Rational(vz[r * width + j])
                     : Rational(static_cast<long>(v64[r * width + j]));
    return v * scale;
}

Slab apply(const ScaledOp& op, const Slab& s) {
    if (op.cols != s.rows) throw std::invalid_argument("slab apply: shape mismatch");
    Slab out;
    out.rows = op.rows;
    out.width = s.width;
    out.scale = op.scale * s.scale;
    const std::size_t w = s.width;
    bool fast = !op.big && !s.big && op.max_abs_row_sum < kBound && s.max_abs < kBound &&
                (op.max_abs_row_sum == 0 ||
                 s.max_abs <= kBound / (op.max_abs_row_sum ? op.max_abs_row_sum : 1));
    if (fast) {
        out.v64.assign(op.rows * w, 0);
        parallel_ranges(op.rows, [&](std::size_t rb, std::size_t re) {
            for (std::size_t r = rb; r < re; ++r) {
                long long* dst = &out.v64[r * w];
                for (std::size_t k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k) {
                    long long v = op.v64[k];
                    const long long* src = &s.v64[op.col_idx[k] * w];
                    for (std::size_t j = 0; j < w; ++j) dst[j] += v * src[j];
                }
            }
        });
        long long mx = 0;
        for (auto v : out.v64) {
            long long a = v < 0 ? -v : v;
            if (a > mx) mx = a;
        }
        out.max_abs = mx;
        normalize(out);
        return out;
    }
    // arbitrary-precision path
    out.big = true;
    out.vz.assign(op.rows * w, mpz_class(0));
    auto opval = [&](std::size_t k) {
        return op.big ? op.vz[k] : mpz_class(static_cast<long>(op.v64[k]));
    };
    std::vector<mpz_class> svals;
    const std::vector<mpz_class>* sv;
    if (s.big) {
        sv = &s.vz;
    } else {
        svals.resize(s.v64.size());
        for (std::size_t i = 0; i < s.v64.size(); ++i) svals[i] = static_cast<long>(s.v64[i]);
        sv = &svals;
    }
    parallel_ranges(op.rows, [&](std::size_t rb, std::size_t re) {
        for (std::size_t r = rb; r < re; ++r) {
            mpz_class* dst = &out.vz[r * w];
            for (std::size_t k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k) {
                mpz_class v = opval(k);
                if (v == 0) continue;
                const mpz_class* src = &(*sv)[op.col_idx[k] * w];
                for (std::size_t j = 0; j < w; ++j)
                    if (src[j] != 0)
                        mpz_addmul(dst[j].get_mpz_t(), v.get_mpz_t(), src[j].get_mpz_t());
            }
        }
    });
    normalize(out);
    return out;
}

Slab lincomb(const std::vector<std::pair<Rational, const Slab*>>& terms) {
    if (terms.empty()) throw std::invalid_argument("lincomb: no terms");
    const std::size_t rows = terms[0].second->rows, w = terms[0].second->width;
    for (const auto& [c, s] : terms)
        if (s->rows != rows || s->width != w)
            throw std::invalid_argument("lincomb: shape mismatch");
    // effective rational coefficient per term
    std::vector<Rational> q;
    mpz_class den(1);
    for (const auto& [c, s] : terms) {
        q.push_back(c * s->scale);
        den = lcm_z(den, q.back().get_den());
    }
    std::vector<mpz_class> cz;
    bool all_fit = true;
    mpz_class bound(0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        cz.push_back(q[i].get_num() * (den / q[i].get_den()));
        if (!fits_ll(cz.back())) all_fit = false;
        if (!terms[i].second->big) {
            mpz_class mx(static_cast<long>(terms[i].second->max_abs));
            mpz_class ac = abs(cz.back());
            bound += ac * mx;
        } else {
            all_fit = false;
        }
    }
    Slab out;
    out.rows = rows;
    out.width = w;
    out.scale = Rational(1) / Rational(den);
    if (all_fit && bound < mpz_class(static_cast<long>(kBound))) {
        out.v64.assign(rows * w, 0);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            long long c = to_ll(cz[i]);
            if (c == 0) continue;
            const auto& src = terms[i].second->v64;
            for (std::size_t k = 0; k < rows * w; ++k) out.v64[k] += c * src[k];
        }
        long long mx = 0;
        for (auto v : out.v64) {
            long long a = v < 0 ? -v : v;
            if (a > mx) mx = a;
        }
        out.max_abs = mx;
        normalize(out);
        return out;
    }
    out.big = true;
    out.vz.assign(rows * w, mpz_class(0));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (cz[i] == 0) continue;
        const Slab* s = terms[i].second;
        for (std::size_t k = 0; k < rows * w; ++k) {
            if (s->big) {
                if (s->vz[k] != 0)
                    mpz_addmul(out.vz[k].get_mpz_t(), cz[i].get_mpz_t(), s->vz[k].get_mpz_t());
            } else if (s->v64[k] != 0) {
                mpz_class t(static_cast<long>(s->v64[k]));
                mpz_addmul(out.vz[k].get_mpz_t(), cz[i].get_mpz_t(), t.get_mpz_t());
            }
        }
    }
    normalize(out);
    return out;
}

bool equal_slabs(const Slab& a, const Slab& b) {
    Slab d = lincomb({{Rational(1), &a}, {Rational(-1), &b}});
    return d.is_zero();
}

void accumulate_traces(const Slab& s, std::size_t col0, const std::vector<uint8_t>& parities,
                       Rational& tr, Rational& str) {
    for (std::size_t j = 0; j < s.width; ++j) {
        std::size_t r = col0 + j;
        if (r >= s.rows) break;
        Rational v = s.entry(r, j);
        if (v == 0) continue;
        tr += v;
        if (parities[r])
            str -= v;
        else
            str += v;
    }
}

void accumulate_str2(const Slab& s, std::size_t col0, std::size_t dim_g,
                     const std::vector<uint8_t>& label_parities, std::vector<Rational>& out) {
    for (std::size_t j = 0; j < s.width; ++j) {
        std::size_t col = col0 + j;
        if (col >= s.rows) break;
        std::size_t c = col / dim_g, b = col % dim_g;
        // rows (a, b) for all a
        for (std::size_t a = 0; a < dim_g; ++a) {
            Rational v = s.entry(a * dim_g + b, j);
            if (v == 0) continue;
            if (label_parities[b])
                out[a * dim_g + c] -= v;
            else
                out[a * dim_g + c] += v;
        }
    }
}

} // namespace supercas
