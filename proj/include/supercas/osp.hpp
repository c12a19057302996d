// The osp(M|N) orthosymplectic superalgebra: metric, defining and adjoint
// bases, structure constants, Killing form, split Casimir operators in both
// representations, characteristic identities, invariant projectors, the
// R-matrix, and the closed-form dimension tables.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supercas/engine.hpp"
#include "supercas/linalg.hpp"
#include "supercas/supermatrix.hpp"

namespace supercas {

// Generator label: (i, j) with i < j, or (i, i) with i odd (0-based indices
// into the defining space).
struct PairLabel {
    std::size_t i = 0, j = 0;
    std::string str() const; // 1-based "M(i,j)" text
};

// Minimal characteristic data for one operator.
struct CharIdentity {
    std::vector<PolySpec::Term> terms; // minimal zero identity: prod (C-a)^k = 0
    bool diagonalizable = true;        // all multiplicities equal 1
    // The all-distinct-root product (each merged root kept once, k = 1) can
    // have a nonzero residual; `residual_k_coeff` gives it as a multiple of
    // the contraction operator K. `sl_omega2_residual` marks the sl(M|M-2)
    // case where the residual is (1/16)(P+_ad + K) - (1/4) C+^2.
    Rational residual_k_coeff = Rational(0);
    bool sl_omega2_residual = false;
};

struct AlgebraCharIdentities {
    CharIdentity casimir;       // split Casimir, adjoint rep
    CharIdentity casimir_plus;  // symmetric part
    CharIdentity casimir_minus; // antisymmetric part
};

// Linear-combination form of a projector over the bundle operators:
//   c_id I + c_perm P + c_k K + c_minus C- + c_plus C+ + c_plus2 C+^2 + c_tilde T.
struct ProjFormula {
    Rational c_id, c_perm, c_k, c_minus, c_plus, c_plus2, c_tilde;
};

// Named invariant projector with its spectral data. Carries either a closed
// formula over the bundle operators, or (for the merged-root limit cases) a
// materialized matrix, or both.
struct ProjectorInfo {
    std::string name;          // e.g. "V1", "V3(+)"
    bool has_formula = false;
    ProjFormula formula;
    bool has_op = false;
    SuperMatrix op;            // restricted picture, when materialized
    Rational eigenvalue;       // of the generating operator
    unsigned multiplicity = 1; // k in (C - a)^k proj = 0
    int sector = 0;            // +1 symmetric, -1 antisymmetric, 0 mixed
    bool generalized = false;  // multiplicity > 1
    char generator = 'C';      // 'C' = casimir(ad), '+' = casimir_plus,
                               // '-' = casimir_minus, 'T' = tilde operator (sl)
};

struct ProjectorSystem {
    std::vector<ProjectorInfo> projectors;
    SuperMatrix identity; // completeness target (restricted identity)
};

struct AdjointBundle;

// Materializes formula projectors against the bundle (cp2 computed once).
void materialize_projectors(ProjectorSystem& sys, const AdjointBundle& b,
                            const SuperMatrix* tilde = nullptr);

// Adjoint-representation operator bundle in both pictures. The restricted
// picture lives on adj (x) adj (square matrices of size (dim g)^2); the
// embedded picture on V^{(x)4}.
struct AdjointBundle {
    GradedSpace adj;       // adjoint label space
    GradedSpace adj2;      // adj (x) adj
    GradedSpace v4;        // V^{(x)4}
    SuperMatrix identity;  // restricted identity on adj2
    SuperMatrix perm;      // P  (restricted)
    SuperMatrix contraction; // K (restricted)
    SuperMatrix casimir;   // C_ad (restricted)
    SuperMatrix casimir_plus;
    SuperMatrix casimir_minus;
    SuperMatrix identity_emb; // embedded picture on V^{(x)4}
    SuperMatrix perm_emb;
    SuperMatrix contraction_emb;
    SuperMatrix casimir_emb;
    SuperMatrix iota2, pi2; // change of basis: restricted <-> embedded
    Rational sdim_g;        // superdimension of the algebra
    long dim_g = 0;
};

struct DimRow {
    std::string name;
    long even = 0, odd = 0;
};

class OspModel {
public:
    // N even, omega = M - N != 2 (Killing metric degenerate at omega = 2).
    static OspModel build(std::size_t M, std::size_t N);

    std::size_t M() const { return m_; }
    std::size_t N() const { return n_; }
    long omega() const { return omega_; }
    long xi() const { return xi_; }
    long dim_g() const { return static_cast<long>(labels_.size()); }
    Rational sdim_g() const { return rat(omega_ * (omega_ - 1), 2); }

    const GradedSpace& defining_space() const { return v_; }
    const GradedSpace& adjoint_space() const { return adj_; }
    const std::vector<PairLabel>& labels() const { return labels_; }

    const SuperMatrix& metric() const { return eps_; }
    const SuperMatrix& metric_inv() const { return eps_inv_; }
    const SuperMatrix& defining_rep(std::size_t label) const { return def_[label]; }
    const SuperMatrix& adjoint_rep(std::size_t label) const { return ad_[label]; }
    // structure constant X^k_{ab} in the label basis
    Rational structure_constant(std::size_t k, std::size_t a, std::size_t b) const {
        return ad_[a].at(k, b);
    }
    const SuperMatrix& killing() const { return killing_; }
    const SuperMatrix& killing_inv() const { return killing_inv_; }
    const SuperMatrix& pair_killing() const { return pair_killing_; }
    const SuperMatrix& pair_killing_inv() const { return pair_killing_inv_; }
    const SuperMatrix& pair_identity() const { return pair_identity_; } // I-hat

    // label <-> pair-space coordinate maps (iota: labels -> V(x)V)
    const SuperMatrix& iota() const { return iota_; }
    const SuperMatrix& pi() const { return pi_; }

    // coordinates of an algebra element (given by its defining-rep matrix)
    std::vector<Rational> coordinates(const SuperMatrix& a) const;

    // operators on V (x) V
    SuperMatrix perm2() const;        // superpermutation
    SuperMatrix contraction2() const; // K = eps-bar (x) eps
    SuperMatrix casimir_defining() const;             // closed form (P - K)/(2(omega-2))
    SuperMatrix casimir_defining_contraction() const; // g-bar^{ab} M_a (x) M_b

    // defining-representation characteristic data {1/(2(w-2)), -1/(2(w-2)), -(w-1)/(2(w-2))}
    PolySpec defining_char_spec() const;
    // three projectors of the defining system; requires omega != 0
    ProjectorSystem defining_projectors() const;

    // R(u) = (u + P - u/(u + omega/2 - 1) K) / (1 - u); throws on pole values
    SuperMatrix r_matrix(const Rational& u) const;
    // alternative forms: spectral (needs omega != 0) and rational-in-casimir
    // (needs u not an eigenvalue of (omega-2) C_f + 1/2); empty if undefined
    std::vector<SuperMatrix> r_matrix_forms(const Rational& u) const;

    AdjointBundle adjoint_bundle() const;

    // adjoint projector system, per the omega-dependent tables; omega != 2
    ProjectorSystem adjoint_projectors(const AdjointBundle& b) const;

    // closed-form (even, odd) dimensions of the six generic invariant
    // subspaces; requires omega not in {0, 1, 2}
    std::vector<DimRow> expected_dims() const;

private:
    OspModel() = default;
    void construct();

    std::size_t m_ = 0, n_ = 0;
    long omega_ = 0, xi_ = 0;
    GradedSpace v_, pair_, adj_;
    std::vector<PairLabel> labels_;
    SuperMatrix eps_, eps_inv_;
    std::vector<SuperMatrix> def_, ad_;
    SuperMatrix killing_, killing_inv_;
    SuperMatrix pair_killing_, pair_killing_inv_, pair_identity_;
    SuperMatrix iota_, pi_;
};

// Characteristic identities for osp at the given omega (omega != 2).
AlgebraCharIdentities osp_char_identities(long omega);

} // namespace supercas
