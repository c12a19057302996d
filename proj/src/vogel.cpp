#include "supercas/vogel.hpp"

#include <stdexcept>

namespace supercas {

VogelParams vogel_params(AlgebraKind kind, std::size_t M, std::size_t N) {
    long omega = static_cast<long>(M) - static_cast<long>(N);
    VogelParams p;
    if (kind == AlgebraKind::sl) {
        if (M == N) throw std::invalid_argument("vogel_params: sl(N|N) not covered");
        if (M < N) omega = -omega; // sl(M|N) ~ sl(N|M)
        p.alpha = rat(-2);
        p.beta = rat(2);
        p.gamma = rat(omega);
        p.t = rat(omega);
    } else {
        if (omega == 2) throw std::invalid_argument("vogel_params: osp omega=2 not covered");
        bool m_odd = (M % 2 == 1);
        bool first_column = m_odd ? (omega > 1) : (omega > 0);
        if (first_column) {
            p.alpha = rat(-2);
            p.beta = rat(4);
            p.gamma = rat(omega - 4);
            p.t = rat(omega - 2);
        } else {
            p.alpha = rat(1);
            p.beta = rat(-2);
            p.gamma = rat(-(omega - 4), 2);
            p.t = rat(-(omega - 2), 2);
        }
    }
    if (p.t != p.alpha + p.beta + p.gamma)
        throw std::logic_error("vogel_params: t != alpha+beta+gamma");
    p.mu1 = -(p.alpha * p.beta + p.alpha * p.gamma + p.beta * p.gamma) / (4 * p.t * p.t);
    p.mu2 = -(p.alpha * p.beta * p.gamma) / (16 * p.t * p.t * p.t);
    return p;
}

Rational vogel_mu1(AlgebraKind kind, long omega) {
    if (kind == AlgebraKind::sl) return rat(1, omega * omega);
    return rat(-(omega - 8), 2 * (omega - 2) * (omega - 2));
}

Rational vogel_mu2(AlgebraKind kind, long omega) {
    if (kind == AlgebraKind::sl) return rat(1, 4 * omega * omega);
    return rat(omega - 4, 2 * (omega - 2) * (omega - 2) * (omega - 2));
}

SuperMatrix universal_cubic_residual(const AdjointBundle& b, const VogelParams& p) {
    const SuperMatrix& cp = b.casimir_plus;
    SuperMatrix cp2 = cp * cp;
    SuperMatrix cp3 = cp * cp2;
    SuperMatrix r = cp3 + cp2.scaled(rat(1, 2)) - cp.scaled(p.mu1);
    r.axpy(-p.mu2, b.identity + b.perm - b.contraction.scaled(rat(2)));
    return r;
}

std::optional<Rational> sdim_from_mu(const VogelParams& p) {
    if (p.mu2 == 0) return std::nullopt;
    return (2 * p.mu2 - p.mu1 + rat(1, 2)) / (2 * p.mu2);
}

std::optional<Rational> sdim_from_params(const VogelParams& p) {
    if (p.alpha == 0 || p.beta == 0 || p.gamma == 0) return std::nullopt;
    return (p.alpha - 2 * p.t) * (p.beta - 2 * p.t) * (p.gamma - 2 * p.t) /
           (p.alpha * p.beta * p.gamma);
}

namespace {

Rational universal_str(const Rational& a, const Rational& b, const Rational& g,
                       const Rational& t) {
    // str P+(a|b,g) = -(3a-2t)(b-2t)(g-2t)(b+t)(g+t) t / (a^2 (a-b)(a-g) b g)
    Rational num = -(3 * a - 2 * t) * (b - 2 * t) * (g - 2 * t) * (b + t) * (g + t) * t;
    Rational den = a * a * (a - b) * (a - g) * b * g;
    if (den == 0) throw std::domain_error("universal supertrace: vanishing denominator");
    return num / den;
}

SuperMatrix universal_proj(const AdjointBundle& bnd, const SuperMatrix& cp2, const Rational& a,
                           const Rational& b, const Rational& g, const Rational& t) {
    // P+(a|b,g) = 4t^2/((b-a)(g-a)) (C+^2 + (1/2 - a/2t) C+
    //             + bg/(8t^2) (I + P - 2a/(a-2t) K))
    Rational pref = 4 * t * t / ((b - a) * (g - a));
    SuperMatrix r = cp2 + bnd.casimir_plus.scaled(rat(1, 2) - a / (2 * t));
    Rational c = b * g / (8 * t * t);
    r.axpy(c, bnd.identity);
    r.axpy(c, bnd.perm);
    r.axpy(-c * 2 * a / (a - 2 * t), bnd.contraction);
    return r.scaled(pref);
}

} // namespace

std::vector<UniversalProjector> universal_projectors(const AdjointBundle& bnd,
                                                     const VogelParams& p) {
    const Rational &a = p.alpha, &b = p.beta, &g = p.gamma, &t = p.t;
    if (a == b || a == g || b == g)
        throw std::domain_error("universal projectors: parameters not pairwise distinct");
    if (a == 2 * t || b == 2 * t || g == 2 * t)
        throw std::domain_error("universal projectors: parameter equals 2t");
    if (a == 0 || b == 0 || g == 0)
        throw std::domain_error("universal projectors: vanishing parameter");
    SuperMatrix cp2 = bnd.casimir_plus * bnd.casimir_plus;
    std::vector<UniversalProjector> out;
    out.push_back({"P(+)(alpha|beta,gamma)", -a / (2 * t), universal_proj(bnd, cp2, a, b, g, t),
                   universal_str(a, b, g, t)});
    out.push_back({"P(+)(beta|alpha,gamma)", -b / (2 * t), universal_proj(bnd, cp2, b, a, g, t),
                   universal_str(b, a, g, t)});
    out.push_back({"P(+)(gamma|alpha,beta)", -g / (2 * t), universal_proj(bnd, cp2, g, a, b, t),
                   universal_str(g, a, b, t)});
    Rational sdim = (a - 2 * t) * (b - 2 * t) * (g - 2 * t) / (a * b * g);
    if (sdim == 0) throw std::domain_error("universal projectors: sdim g = 0");
    out.push_back(
        {"P(+)(-1)", Rational(-1), bnd.contraction.scaled(1 / sdim), Rational(1)});
    return out;
}

UniversalSdims universal_sdims(const VogelParams& p) {
    auto sg = sdim_from_params(p);
    if (!sg) throw std::domain_error("universal sdims: vanishing denominator");
    UniversalSdims s;
    s.sdim_g = *sg;
    s.v_minus1 = Rational(1);
    s.v_alpha = universal_str(p.alpha, p.beta, p.gamma, p.t);
    s.v_beta = universal_str(p.beta, p.alpha, p.gamma, p.t);
    s.v_gamma = universal_str(p.gamma, p.alpha, p.beta, p.t);
    return s;
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

} // namespace

std::vector<Rational> casimir_series_universal(const VogelParams& p, unsigned kmax) {
    const Rational &a = p.alpha, &b = p.beta, &g = p.gamma, &t = p.t;
    Rational t2 = a * a + b * b + g * g;
    Rational t3 = a * a * a + b * b * b + g * g * g;
    Rational t_3 = t * t * t;
    // numerator z^2 * (96 t^3 + 168 t^3 z + 6(14 t^3 + t t2 - t3) z^2 + (13 t^3 + 3 t t2 - 4 t3) z^3)
    std::vector<Rational> num = {Rational(0), Rational(0), 96 * t_3, 168 * t_3,
                                 6 * (14 * t_3 + t * t2 - t3), 13 * t_3 + 3 * t * t2 - 4 * t3};
    std::vector<Rational> den = {rat(6)};
    for (auto lin : {std::pair<Rational, Rational>{2 * t, a}, {2 * t, b}, {2 * t, g},
                     {Rational(2), Rational(1)}, {Rational(1), Rational(1)}})
        den = poly_mul(den, {lin.first, lin.second});
    if (den[0] == 0) throw std::domain_error("casimir series: denominator vanishes at z=0");
    // long division
    std::vector<Rational> c(kmax + 1, Rational(0));
    num.resize(std::max<std::size_t>(num.size(), kmax + 1), Rational(0));
    for (unsigned i = 0; i <= kmax; ++i) {
        Rational ci = num[i] / den[0];
        c[i] = ci;
        for (std::size_t j = 0; j < den.size() && i + j < num.size(); ++j)
            num[i + j] -= ci * den[j];
    }
    auto sg = sdim_from_params(p);
    if (!sg) throw std::domain_error("casimir series: sdim denominator vanishes");
    c[0] += *sg;
    return c;
}

} // namespace supercas
