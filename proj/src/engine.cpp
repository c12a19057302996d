#include "supercas/engine.hpp"

#include <map>
#include <stdexcept>

namespace supercas {

void PolySpec::validate() const {
    if (terms.empty()) throw std::invalid_argument("PolySpec: no terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].multiplicity < 1) throw std::invalid_argument("PolySpec: multiplicity < 1");
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].root == terms[j].root)
                throw std::invalid_argument("PolySpec: repeated root");
    }
    if (!identity.is_square()) throw std::invalid_argument("PolySpec: identity not square");
}

namespace {

SuperMatrix poly_product(const SuperMatrix& c, const PolySpec& spec,
                         const std::vector<unsigned>& mult) {
    SuperMatrix acc = spec.identity;
    for (std::size_t i = 0; i < spec.terms.size(); ++i)
        for (unsigned k = 0; k < mult[i]; ++k)
            acc = c * acc - spec.identity.scaled(spec.terms[i].root) * acc;
    return acc;
}

} // namespace

SuperMatrix projector_from_roots(const SuperMatrix& c, const PolySpec& spec, std::size_t j) {
    spec.validate();
    if (j >= spec.terms.size()) throw std::out_of_range("projector_from_roots: bad index");
    for (const auto& t : spec.terms)
        if (t.multiplicity != 1)
            throw std::invalid_argument(
                "projector_from_roots: repeated roots need generalized_projectors");
    SuperMatrix acc = spec.identity;
    Rational denom(1);
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        if (i == j) continue;
        acc = c * acc - spec.identity.scaled(spec.terms[i].root) * acc;
        Rational d = spec.terms[j].root - spec.terms[i].root;
        if (d == 0) throw std::domain_error("projector_from_roots: zero denominator");
        denom *= d;
    }
    return acc.scaled(Rational(1) / denom);
}

std::vector<SuperMatrix> generalized_projectors(const SuperMatrix& c, const PolySpec& spec) {
    spec.validate();
    std::vector<SuperMatrix> out;
    for (std::size_t j = 0; j < spec.terms.size(); ++j) {
        SuperMatrix acc = spec.identity;
        for (std::size_t i = 0; i < spec.terms.size(); ++i) {
            if (i == j) continue;
            Rational d = spec.terms[j].root - spec.terms[i].root;
            Rational scale = Rational(1) / d;
            for (unsigned k = 0; k < spec.terms[i].multiplicity; ++k)
                acc = (c * acc - spec.identity.scaled(spec.terms[i].root) * acc).scaled(scale);
        }
        // proj_j = I - (I - acc)^{k_j}
        SuperMatrix diff = spec.identity - acc;
        SuperMatrix pow = spec.identity;
        for (unsigned k = 0; k < spec.terms[j].multiplicity; ++k) pow = diff * pow;
        out.push_back(spec.identity - pow);
    }
    return out;
}

ResidualReport check_poly(const SuperMatrix& c, const PolySpec& spec,
                          const SuperMatrix& expected) {
    std::vector<unsigned> mult;
    for (const auto& t : spec.terms) mult.push_back(t.multiplicity);
    SuperMatrix r = poly_product(c, spec, mult);
    SuperMatrix diff = r - expected;
    ResidualReport rep;
    rep.equal = diff.is_zero();
    mpz_class mx(0);
    diff.for_each_nz([&](std::size_t, std::size_t, const Rational& v) {
        mpz_class a = abs(v.get_num());
        if (a > mx) mx = a;
    });
    rep.max_abs_numerator = mx.get_str();
    return rep;
}

std::vector<std::size_t> nonminimal_terms(const SuperMatrix& c, const PolySpec& spec,
                                          const SuperMatrix& expected) {
    std::vector<std::size_t> bad;
    std::vector<unsigned> mult;
    for (const auto& t : spec.terms) mult.push_back(t.multiplicity);
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        auto m = mult;
        m[i] -= 1;
        SuperMatrix r = poly_product(c, spec, m);
        if (r == expected) bad.push_back(i);
    }
    return bad;
}

std::pair<long, long> dims_of_unchecked(const SuperMatrix& projector) {
    Rational tr = projector.trace();
    Rational str = projector.supertrace();
    Rational even = (tr + str) / 2;
    Rational odd = (tr - str) / 2;
    if (!is_integer(even) || !is_integer(odd) || even < 0 || odd < 0)
        throw std::domain_error("dims_of: non-integral or negative dimensions");
    return {static_cast<long>(even.get_num().get_si()), static_cast<long>(odd.get_num().get_si())};
}

std::pair<long, long> dims_of(const SuperMatrix& projector) {
    if (!(projector * projector == projector))
        throw std::domain_error("dims_of: input is not idempotent");
    return dims_of_unchecked(projector);
}

namespace {

// sparse 3-site tensor accumulated as map (row, col) -> value over d^3 x d^3
using Tensor3 = std::map<std::pair<std::size_t, std::size_t>, Rational>;

void tensor3_add(Tensor3& t, std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = t.emplace(std::make_pair(r, c), v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

} // namespace

std::vector<YbeSample> verify_ybe(const GradedSpace& v,
                                  const std::function<SuperMatrix(const Rational&)>& rmat,
                                  const std::vector<std::pair<Rational, Rational>>& samples) {
    const std::size_t d = v.dim();
    auto par = [&](std::size_t a) { return static_cast<int>(v.parity(a)); };
    std::vector<YbeSample> out;
    for (const auto& [u, vv] : samples) {
        YbeSample s;
        s.u = u;
        s.v = vv;
        SuperMatrix ru, rv, ruv;
        try {
            ru = rmat(u);
            rv = rmat(vv);
            ruv = rmat(u + vv);
        } catch (const std::exception& e) {
            s.skipped = true;
            s.note = e.what();
            out.push_back(s);
            continue;
        }

        // decode nonzeros into index tuples once
        struct E {
            std::size_t a, b, c, dd;
            Rational val;
        };
        auto decode = [&](const SuperMatrix& m) {
            std::vector<E> es;
            m.for_each_nz([&](std::size_t r, std::size_t c, const Rational& val) {
                es.push_back({r / d, r % d, c / d, c % d, val});
            });
            return es;
        };
        auto eu = decode(ru), ev = decode(rv), euv = decode(ruv);

        // buckets of R(u+v) by first upper index, and of R(u), R(v) by row pair
        std::vector<std::vector<const E*>> uv_by_up1(d);
        for (const auto& e : euv) uv_by_up1[e.a].push_back(&e);
        std::vector<std::vector<const E*>> uv_by_up2(d);
        for (const auto& e : euv) uv_by_up2[e.b].push_back(&e);
        std::map<std::pair<std::size_t, std::size_t>, std::vector<const E*>> v_by_up, u_by_up;
        for (const auto& e : ev) v_by_up[{e.a, e.b}].push_back(&e);
        for (const auto& e : eu) u_by_up[{e.a, e.b}].push_back(&e);

        Tensor3 lhs, rhs;
        // LHS: sum over e1 in R(u) [i1 i2 | j1 j2], e2 in R(u+v) with upper
        // (j1, i3) -> lower (k1, j3), e3 in R(v) with upper (j2, j3) ->
        // lower (k2, k3)
        for (const auto& e1 : eu) {
            std::size_t i1 = e1.a, i2 = e1.b, j1 = e1.c, j2 = e1.dd;
            int s12 = par(j1) & par(j2);
            for (const E* e2 : uv_by_up1[j1]) {
                std::size_t i3 = e2->b, k1 = e2->c, j3 = e2->dd;
                int sk = par(k1) & par(j2);
                auto it = v_by_up.find({j2, j3});
                if (it == v_by_up.end()) continue;
                for (const E* e3 : it->second) {
                    std::size_t k2 = e3->c, k3 = e3->dd;
                    Rational val = e1.val * e2->val * e3->val;
                    if ((s12 ^ sk) & 1) val = -val;
                    tensor3_add(lhs, (i1 * d + i2) * d + i3, (k1 * d + k2) * d + k3, val);
                }
            }
        }
        // RHS: e1 in R(v) [i2 i3 | j2 j3], e2 in R(u+v) with upper (i1, j3)
        // -> lower (j1, k3), e3 in R(u) with upper (j1, j2) -> lower (k1, k2)
        for (const auto& e1 : ev) {
            std::size_t i2 = e1.a, i3 = e1.b, j2 = e1.c, j3 = e1.dd;
            for (const E* e2 : uv_by_up2[j3]) {
                std::size_t i1 = e2->a, j1 = e2->c, k3 = e2->dd;
                int si = par(i1) & par(j2);
                int s12 = par(j1) & par(j2);
                auto it = u_by_up.find({j1, j2});
                if (it == u_by_up.end()) continue;
                for (const E* e3 : it->second) {
                    std::size_t k1 = e3->c, k2 = e3->dd;
                    Rational val = e1.val * e2->val * e3->val;
                    if ((si ^ s12) & 1) val = -val;
                    tensor3_add(rhs, (i1 * d + i2) * d + i3, (k1 * d + k2) * d + k3, val);
                }
            }
        }
        s.equal = (lhs == rhs);
        out.push_back(s);
    }
    return out;
}

bool verify_unitarity(const GradedSpace& v,
                      const std::function<SuperMatrix(const Rational&)>& rmat, const Rational& u) {
    SuperMatrix p = superperm(v);
    SuperMatrix lhs = p * rmat(u) * p * rmat(-u);
    GradedSpace vv = GradedSpace::tensor(v, v);
    return lhs == SuperMatrix::identity(vv);
}

std::vector<RelationResult> verify_brauer(const SuperMatrix& p2, const SuperMatrix& k2,
                                          const Rational& omega, std::size_t s) {
    if (s < 2 || s > 4) throw std::invalid_argument("verify_brauer: need 2 <= s <= 4");
    std::vector<SuperMatrix> sig, kap; // index alpha = 1..s-1 (0-based alpha-1)
    for (std::size_t a = 1; a + 1 <= s; ++a) {
        sig.push_back(place(p2, {a, a + 1}, s));
        kap.push_back(place(k2, {a, a + 1}, s));
    }
    GradedSpace big = GradedSpace::tensor_power(p2.row_space().factor(0), s);
    SuperMatrix id = SuperMatrix::identity(big, Storage::Sparse);
    std::vector<RelationResult> res;
    auto chk = [&](const std::string& name, const SuperMatrix& lhs, const SuperMatrix& rhs) {
        res.push_back({name, lhs == rhs});
    };
    for (std::size_t a = 0; a + 1 < s; ++a) {
        std::string t = std::to_string(a + 1);
        chk("sigma" + t + "^2 = 1", sig[a] * sig[a], id);
        chk("kappa" + t + "^2 = omega kappa" + t, kap[a] * kap[a], kap[a].scaled(omega));
        chk("sigma" + t + " kappa" + t + " = kappa" + t, sig[a] * kap[a], kap[a]);
        chk("kappa" + t + " sigma" + t + " = kappa" + t, kap[a] * sig[a], kap[a]);
    }
    for (std::size_t a = 0; a + 2 < s; ++a) {
        std::string t = std::to_string(a + 1), t1 = std::to_string(a + 2);
        chk("braid sigma" + t + " sigma" + t1, sig[a] * sig[a + 1] * sig[a],
            sig[a + 1] * sig[a] * sig[a + 1]);
        chk("kappa" + t + " kappa" + t1 + " kappa" + t + " = kappa" + t,
            kap[a] * kap[a + 1] * kap[a], kap[a]);
        chk("kappa" + t1 + " kappa" + t + " kappa" + t1 + " = kappa" + t1,
            kap[a + 1] * kap[a] * kap[a + 1], kap[a + 1]);
        chk("sigma" + t + " kappa" + t1 + " kappa" + t + " = sigma" + t1 + " kappa" + t,
            sig[a] * kap[a + 1] * kap[a], sig[a + 1] * kap[a]);
        chk("kappa" + t1 + " kappa" + t + " sigma" + t1 + " = kappa" + t1 + " sigma" + t,
            kap[a + 1] * kap[a] * sig[a + 1], kap[a + 1] * sig[a]);
    }
    for (std::size_t a = 0; a + 1 < s; ++a)
        for (std::size_t b = a + 2; b + 1 < s; ++b) {
            std::string ta = std::to_string(a + 1), tb = std::to_string(b + 1);
            chk("[sigma" + ta + ", sigma" + tb + "] = 0", sig[a] * sig[b], sig[b] * sig[a]);
            chk("[kappa" + ta + ", kappa" + tb + "] = 0", kap[a] * kap[b], kap[b] * kap[a]);
            chk("[sigma" + ta + ", kappa" + tb + "] = 0", sig[a] * kap[b], kap[b] * sig[a]);
            chk("[kappa" + ta + ", sigma" + tb + "] = 0", kap[a] * sig[b], sig[b] * kap[a]);
        }
    return res;
}

} // namespace supercas
