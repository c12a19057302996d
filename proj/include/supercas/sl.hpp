// The sl(M|N) special linear superalgebra (M != N): defining and adjoint
// data, split Casimir operators, the extra invariant built from the symmetric
// structure constants, characteristic identities, projector systems, the
// R-matrix, and dimension tables.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supercas/osp.hpp" // CharIdentity, ProjectorSystem, AdjointBundle, DimRow

namespace supercas {

// sl generator label: off-diagonal (i, j), i != j, in lexicographic order,
// then the xi-1 diagonal differences T_kk - T_{k+1,k+1}.
struct SlLabel {
    bool diagonal = false;
    std::size_t i = 0, j = 0; // off-diagonal indices, or k for the diagonal family
    std::string str() const;
};

// Bundle extension: sl carries one more ad-invariant operator built from the
// symmetric structure constants.
struct SlAdjointBundle : AdjointBundle {
    SuperMatrix tilde_minus;     // restricted picture
    SuperMatrix tilde_minus_emb; // embedded picture
};

class SlModel {
public:
    // Requires M != N; inputs with M < N are normalized to (N, M).
    static SlModel build(std::size_t M, std::size_t N);

    std::size_t M() const { return m_; }
    std::size_t N() const { return n_; }
    bool normalized() const { return swapped_; } // true if (M,N) were swapped
    long omega() const { return omega_; }
    long xi() const { return xi_; }
    long dim_g() const { return static_cast<long>(labels_.size()); }
    Rational sdim_g() const { return rat(omega_ * omega_ - 1); }

    const GradedSpace& defining_space() const { return v_; }
    const GradedSpace& adjoint_space() const { return adj_; }
    const std::vector<SlLabel>& labels() const { return labels_; }

    const SuperMatrix& defining_rep(std::size_t label) const { return def_[label]; }
    const SuperMatrix& adjoint_rep(std::size_t label) const { return ad_[label]; }
    Rational structure_constant(std::size_t k, std::size_t a, std::size_t b) const {
        return ad_[a].at(k, b);
    }
    const SuperMatrix& killing() const { return killing_; }
    const SuperMatrix& killing_inv() const { return killing_inv_; }
    const SuperMatrix& pair_killing() const { return pair_killing_; }
    const SuperMatrix& pair_killing_inv() const { return pair_killing_inv_; }
    const SuperMatrix& pair_identity() const { return pair_identity_; } // I-bar
    // symmetric-structure-constant matrix of one generator (D_b)^c_d
    const SuperMatrix& sym_rep(std::size_t label) const { return dmat_[label]; }

    const SuperMatrix& iota() const { return iota_; }
    const SuperMatrix& pi() const { return pi_; }

    std::vector<Rational> coordinates(const SuperMatrix& a) const;

    SuperMatrix perm2() const;
    SuperMatrix contraction2() const; // K^{i1i2}_{j1j2} = (-1)^{[j1][j2]} d^{i1i2} d_{j1j2}
    SuperMatrix casimir_defining() const;             // (P - 1/omega)/(2 omega)
    SuperMatrix casimir_defining_contraction() const; // metric contraction

    PolySpec defining_char_spec() const; // roots (w-1)/(2w^2), -(w+1)/(2w^2)
    ProjectorSystem defining_projectors() const; // (1 +- P)/2

    SuperMatrix r_matrix(const Rational& u) const; // (u + P)/(1 - u)
    std::vector<SuperMatrix> r_matrix_forms(const Rational& u) const;

    SlAdjointBundle adjoint_bundle() const;
    ProjectorSystem adjoint_projectors(const SlAdjointBundle& b) const;

    // closed-form dimensions of the seven generic invariant subspaces;
    // requires omega >= 3
    std::vector<DimRow> expected_dims() const;

private:
    SlModel() = default;
    void construct();

    std::size_t m_ = 0, n_ = 0;
    bool swapped_ = false;
    long omega_ = 0, xi_ = 0;
    GradedSpace v_, pair_, adj_;
    std::vector<SlLabel> labels_;
    std::vector<SuperMatrix> def_, ad_, dmat_;
    SuperMatrix killing_, killing_inv_;
    SuperMatrix pair_killing_, pair_killing_inv_, pair_identity_;
    SuperMatrix iota_, pi_;
};

// Characteristic identities for sl at the given omega >= 1. The returned
// structure reuses the osp layout; the extra cubic for the tilde operator
// has roots {0, 1, -1}.
struct SlCharIdentities : AlgebraCharIdentities {
    CharIdentity casimir_tilde;
};
SlCharIdentities sl_char_identities(long omega);

// The P/K placement relation set on V^{(x)4} for one assignment of distinct
// slots (a, b, c, d).
std::vector<RelationResult> verify_sl_krel(const SlModel& model, std::size_t a, std::size_t b,
                                           std::size_t c, std::size_t d);

} // namespace supercas
