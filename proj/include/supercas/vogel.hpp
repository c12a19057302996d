// Vogel-parameter universal layer: parameter tables, the universal cubic
// identity for the symmetric split Casimir, universal projectors and
// superdimensions, and the generating function for higher Casimir
// eigenvalues in the adjoint representation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercas/osp.hpp"

namespace supercas {

enum class AlgebraKind { osp, sl };

struct VogelParams {
    Rational alpha, beta, gamma, t; // t = alpha + beta + gamma = dual Coxeter number
    Rational mu1, mu2;              // mu1 = -(ab+ag+bg)/(4t^2), mu2 = -abg/(16t^3)
};

// Parameter table row selection by family, parity of M, and omega.
VogelParams vogel_params(AlgebraKind kind, std::size_t M, std::size_t N);

// mu1, mu2 closed forms per family as functions of omega.
Rational vogel_mu1(AlgebraKind kind, long omega);
Rational vogel_mu2(AlgebraKind kind, long omega);

// Residual of C+^3 + 1/2 C+^2 - mu1 C+ - mu2 (I + P - 2K); zero for every
// instance of both families.
SuperMatrix universal_cubic_residual(const AdjointBundle& b, const VogelParams& p);

// sdim g = (2 mu2 - mu1 + 1/2)/(2 mu2); empty when mu2 = 0.
std::optional<Rational> sdim_from_mu(const VogelParams& p);
// sdim g = (a-2t)(b-2t)(g-2t)/(abg); empty when a denominator vanishes.
std::optional<Rational> sdim_from_params(const VogelParams& p);

struct UniversalProjector {
    std::string label; // "P(alpha|beta,gamma)" etc.
    Rational eigenvalue;
    SuperMatrix op;
    Rational expected_sdim; // closed-form supertrace
};

// The four symmetric-sector universal projectors. Requires alpha, beta,
// gamma pairwise distinct and each != 2t.
std::vector<UniversalProjector> universal_projectors(const AdjointBundle& b,
                                                     const VogelParams& p);

// Closed-form superdimensions {sdim g, sdim V(-1), sdim V(-a/2t), ...};
// throws on vanishing denominators.
struct UniversalSdims {
    Rational sdim_g;
    Rational v_minus1;
    Rational v_alpha, v_beta, v_gamma;
};
UniversalSdims universal_sdims(const VogelParams& p);

// Taylor coefficients c_0..c_kmax of the generating function
//   c(z) = sdim g + z^2 (96 t^3 + 168 t^3 z + 6 (14 t^3 + t t2 - t3) z^2
//          + (13 t^3 + 3 t t2 - 4 t3) z^3)
//          / (6 (2t + a z)(2t + b z)(2t + g z)(2 + z)(1 + z)),
// computed by exact polynomial long division.
std::vector<Rational> casimir_series_universal(const VogelParams& p, unsigned kmax);

} // namespace supercas
