// Algebra-agnostic machinery: spectral projectors from characteristic data,
// exact polynomial-identity residuals, dimension extraction, and the graded
// Yang-Baxter / Brauer relation checks.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercas/linalg.hpp"
#include "supercas/supermatrix.hpp"

namespace supercas {

// Characteristic data: distinct roots with multiplicities, and the operator
// playing the role of the identity on the embedded subspace.
struct PolySpec {
    struct Term {
        Rational root;
        unsigned multiplicity = 1;
    };
    std::vector<Term> terms;
    SuperMatrix identity;

    void validate() const;
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& t : terms) d += t.multiplicity;
        return d;
    }
};

// Projector onto the a_j-eigenspace for an all-multiplicity-one spec:
//   proj_j = prod_{i != j} (C - a_i) / (a_j - a_i).
SuperMatrix projector_from_roots(const SuperMatrix& c, const PolySpec& spec, std::size_t j);

// Projectors onto generalized eigenspaces:
//   proj_j = I - (I - prod_{i != j} ((C - a_i)/(a_j - a_i))^{k_i})^{k_j}.
// Reduces to projector_from_roots when all k_i = 1.
std::vector<SuperMatrix> generalized_projectors(const SuperMatrix& c, const PolySpec& spec);

struct ResidualReport {
    bool equal = false;
    // largest |numerator| over entries of (computed - expected), "0" if equal
    std::string max_abs_numerator;
};

// Computes prod (C - a_i)^{k_i} and compares it with `expected` exactly.
ResidualReport check_poly(const SuperMatrix& c, const PolySpec& spec, const SuperMatrix& expected);

// Verifies that dropping any single factor (reducing its multiplicity by one)
// breaks the identity prod (C - a_i)^{k_i} = expected. Returns the indices of
// terms whose reduction does NOT break it (empty = minimal).
std::vector<std::size_t> nonminimal_terms(const SuperMatrix& c, const PolySpec& spec,
                                          const SuperMatrix& expected);

// (dim_even, dim_odd) of the image of an idempotent:
//   dim_even = (tr + str)/2, dim_odd = (tr - str)/2.
// Throws if the input is not idempotent or the result is not a pair of
// non-negative integers.
std::pair<long, long> dims_of(const SuperMatrix& projector);

// As above but trusts idempotence (for callers that verified it already).
std::pair<long, long> dims_of_unchecked(const SuperMatrix& projector);

struct YbeSample {
    Rational u, v;
    bool equal = false;
    bool skipped = false;
    std::string note;
};

// Componentwise graded Yang-Baxter check with explicit sign factors:
//  R^{i1i2}_{j1j2}(u) (-1)^{[j1][j2]} R^{j1i3}_{k1j3}(u+v) (-1)^{[k1][j2]} R^{j2j3}_{k2k3}(v)
//    = R^{i2i3}_{j2j3}(v) (-1)^{[i1][j2]} R^{i1j3}_{j1k3}(u+v) (-1)^{[j1][j2]} R^{j1j2}_{k1k2}(u).
// `rmat` must return the R-matrix on V (x) V and may throw on pole values
// (the sample is then reported as skipped).
std::vector<YbeSample> verify_ybe(const GradedSpace& v,
                                  const std::function<SuperMatrix(const Rational&)>& rmat,
                                  const std::vector<std::pair<Rational, Rational>>& samples);

// Unitarity P R(u) P R(-u) = 1 on V (x) V.
bool verify_unitarity(const GradedSpace& v,
                      const std::function<SuperMatrix(const Rational&)>& rmat, const Rational& u);

struct RelationResult {
    std::string name;
    bool ok = false;
};

// Brauer algebra relations for the generators sigma_a = P_{a,a+1},
// kappa_a = K_{a,a+1} acting on V^{(x)s}, s <= 4, with parameter omega.
std::vector<RelationResult> verify_brauer(const SuperMatrix& p2, const SuperMatrix& k2,
                                          const Rational& omega, std::size_t s);

} // namespace supercas
