#include "supercas/sl.hpp"

#include <stdexcept>

namespace supercas {

std::string SlLabel::str() const {
    if (diagonal) return "H" + std::to_string(i + 1);
    return "T(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

namespace {

Rational supertrace_of_product(const SuperMatrix& a, const SuperMatrix& b) {
    Rational s(0);
    const auto& par = a.row_space();
    a.for_each_nz([&](std::size_t k, std::size_t l, const Rational& v) {
        Rational w = b.at(l, k);
        if (w == 0) return;
        if (par.parity(k))
            s -= v * w;
        else
            s += v * w;
    });
    return s;
}

} // namespace

SlModel SlModel::build(std::size_t M, std::size_t N) {
    if (M == N) throw std::invalid_argument("sl(N|N) is not simple: Killing metric degenerate");
    SlModel m;
    m.swapped_ = M < N;
    m.m_ = m.swapped_ ? N : M;
    m.n_ = m.swapped_ ? M : N;
    m.omega_ = static_cast<long>(m.m_) - static_cast<long>(m.n_);
    m.xi_ = static_cast<long>(m.m_ + m.n_);
    m.construct();
    return m;
}

void SlModel::construct() {
    const std::size_t d = m_ + n_;
    v_ = GradedSpace::defining(m_, n_);
    pair_ = GradedSpace::tensor(v_, v_);
    auto par = [&](std::size_t a) { return static_cast<int>(v_.parity(a)); };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) labels_.push_back({false, i, j});
    for (std::size_t k = 0; k + 1 < d; ++k) labels_.push_back({true, k, k});
    const std::size_t g = labels_.size();
    if (g != d * d - 1) throw std::logic_error("sl: generator count mismatch");

    std::vector<uint8_t> adj_par(g, 0);
    for (std::size_t a = 0; a < g; ++a)
        if (!labels_[a].diagonal)
            adj_par[a] = static_cast<uint8_t>((par(labels_[a].i) + par(labels_[a].j)) & 1);
    adj_ = GradedSpace(std::move(adj_par));

    // defining matrices; T_ij = e_ij for i != j, diagonal family
    // H_k = T_kk - T_{k+1,k+1} with T_kk = e_kk - (-1)^{[k]}/omega I
    for (const auto& lab : labels_) {
        SuperMatrix mat(v_, v_, Storage::Dense);
        if (!lab.diagonal) {
            mat.set(lab.i, lab.j, Rational(1));
        } else {
            std::size_t k = lab.i;
            mat.add_at(k, k, Rational(1));
            mat.add_at(k + 1, k + 1, Rational(-1));
            Rational tau = Rational(par(k) ? -1 : 1) - Rational(par(k + 1) ? -1 : 1);
            if (tau != 0)
                for (std::size_t a = 0; a < d; ++a) mat.add_at(a, a, -tau / omega_);
        }
        if (mat.supertrace() != 0) throw std::logic_error("sl: basis element not supertraceless");
        def_.push_back(std::move(mat));
    }

    for (std::size_t a = 0; a < g; ++a) {
        SuperMatrix ad(adj_, adj_, Storage::Sparse);
        int pa = adj_.parity(a);
        for (std::size_t c = 0; c < g; ++c) {
            SuperMatrix br = graded_commutator(def_[a], pa, def_[c], adj_.parity(c));
            auto coords = coordinates(br);
            for (std::size_t k = 0; k < g; ++k)
                if (coords[k] != 0) ad.set(k, c, coords[k]);
        }
        ad_.push_back(std::move(ad));
    }

    killing_ = SuperMatrix(adj_, adj_, Storage::Dense);
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
            Rational val = supertrace_of_product(ad_[a], ad_[b]);
            if (val != 0) killing_.set(a, b, val);
        }
    killing_inv_ = inverse(killing_);

    // pair-space closed forms
    pair_killing_ = SuperMatrix(pair_, pair_, Storage::Auto);
    pair_killing_inv_ = SuperMatrix(pair_, pair_, Storage::Auto);
    for (std::size_t i1 = 0; i1 < d; ++i1)
        for (std::size_t i2 = 0; i2 < d; ++i2)
            for (std::size_t j1 = 0; j1 < d; ++j1)
                for (std::size_t j2 = 0; j2 < d; ++j2) {
                    // g = 2w ((-1)^{[i1][j2]} d_{j1 i2} d_{i1 j2} - (-1)^{[i1]+[j2]}/w d_{i1 i2} d_{j1 j2})
                    Rational val(0);
                    if (j1 == i2 && i1 == j2)
                        val += Rational((par(i1) & par(j2)) ? -1 : 1) * rat(2 * omega_);
                    if (i1 == i2 && j1 == j2)
                        val -= Rational(((par(i1) + par(j2)) & 1) ? -1 : 1) * Rational(2);
                    if (val != 0) pair_killing_.set(i1 * d + i2, j1 * d + j2, val);
                    // gbar = 1/(2w) ((-1)^{[j1][i2]} d^{j1 i2} d^{i1 j2} - 1/w d^{i1 i2} d^{j1 j2})
                    Rational vali(0);
                    if (j1 == i2 && i1 == j2)
                        vali += Rational((par(j1) & par(i2)) ? -1 : 1) * rat(1, 2 * omega_);
                    if (i1 == i2 && j1 == j2) vali -= rat(1, 2 * omega_ * omega_);
                    if (vali != 0) pair_killing_inv_.set(i1 * d + i2, j1 * d + j2, vali);
                }

    // I-bar: identity of the algebra embedded in the pair space
    pair_identity_ = SuperMatrix(pair_, pair_, Storage::Auto);
    for (std::size_t i1 = 0; i1 < d; ++i1)
        for (std::size_t i2 = 0; i2 < d; ++i2) {
            pair_identity_.add_at(i1 * d + i2, i1 * d + i2, Rational(1));
            if (i1 == i2)
                for (std::size_t j = 0; j < d; ++j)
                    pair_identity_.add_at(i1 * d + i1, j * d + j,
                                          Rational(par(j) ? 1 : -1) / omega_);
        }
    if (!(pair_identity_ * pair_identity_ == pair_identity_))
        throw std::logic_error("sl: I-bar not idempotent");
    if (pair_identity_.trace() != rat(xi_ * xi_ - 1) ||
        pair_identity_.supertrace() != rat(omega_ * omega_ - 1))
        throw std::logic_error("sl: I-bar trace contract violated");
    // gbar.g carries the index placement of I-bar; g.gbar the transposed one
    if (!(pair_killing_inv_ * pair_killing_ == pair_identity_) ||
        !(pair_killing_ * pair_killing_inv_ == transpose_plain(pair_identity_)))
        throw std::logic_error("sl: pair-space Killing inverse contract violated");

    // label <-> pair coordinate maps
    iota_ = SuperMatrix(pair_, adj_, Storage::Sparse);
    pi_ = SuperMatrix(adj_, pair_, Storage::Sparse);
    for (std::size_t a = 0; a < g; ++a) {
        const auto& lab = labels_[a];
        if (!lab.diagonal) {
            iota_.set(lab.i * d + lab.j, a, Rational(1));
            pi_.set(a, lab.i * d + lab.j, Rational(1));
        } else {
            std::size_t k = lab.i;
            Rational tau = Rational(par(k) ? -1 : 1) - Rational(par(k + 1) ? -1 : 1);
            for (std::size_t l = 0; l < d; ++l) {
                Rational v(0);
                if (l == k) v += 1;
                if (l == k + 1) v -= 1;
                v -= tau / omega_;
                if (v != 0) iota_.set(l * d + l, a, v);
            }
            // pi row: [l <= k] - (k+1)/xi on diagonal pair coordinates
            for (std::size_t l = 0; l < d; ++l) {
                Rational v = Rational(l <= k ? 1 : 0) - rat(static_cast<long>(k) + 1, xi_);
                if (v != 0) pi_.set(a, l * d + l, v);
            }
        }
    }

    // symmetric structure constants: D_b maps Y to the traceless part of
    // [T_b, Y]_+ - alpha g(b, Y), alpha = 1/omega^2
    Rational alpha = rat(1, omega_ * omega_);
    SuperMatrix idv = SuperMatrix::identity(v_);
    for (std::size_t b = 0; b < g; ++b) {
        SuperMatrix dm(adj_, adj_, Storage::Sparse);
        int pb = adj_.parity(b);
        for (std::size_t c = 0; c < g; ++c) {
            SuperMatrix anti = graded_anticommutator(def_[b], pb, def_[c], adj_.parity(c));
            anti.axpy(-alpha * killing_.at(b, c), idv);
            if (anti.supertrace() != 0)
                throw std::logic_error("sl: anticommutator decomposition failed");
            auto coords = coordinates(anti);
            for (std::size_t k = 0; k < g; ++k)
                if (coords[k] != 0) dm.set(k, c, coords[k]);
        }
        dmat_.push_back(std::move(dm));
    }
}

std::vector<Rational> SlModel::coordinates(const SuperMatrix& a) const {
    const std::size_t d = m_ + n_;
    std::vector<Rational> out(labels_.size(), Rational(0));
    // off-diagonal coefficients are the matrix entries
    Rational trace_plain(0);
    std::vector<Rational> diag(d, Rational(0));
    a.for_each_nz([&](std::size_t i, std::size_t j, const Rational& v) {
        if (i == j) {
            diag[i] = v;
            trace_plain += v;
        }
    });
    for (std::size_t lab = 0; lab < labels_.size(); ++lab) {
        const auto& l = labels_[lab];
        if (!l.diagonal) {
            out[lab] = a.at(l.i, l.j);
        }
    }
    // diagonal part: c_l = diag_l - (sum diag)/xi, then prefix sums
    Rational shift = trace_plain / xi_;
    Rational prefix(0);
    std::size_t lab0 = labels_.size() - (d - 1);
    for (std::size_t k = 0; k + 1 < d; ++k) {
        prefix += diag[k] - shift;
        out[lab0 + k] = prefix;
    }
    return out;
}

SuperMatrix SlModel::perm2() const { return superperm(v_); }

SuperMatrix SlModel::contraction2() const {
    const std::size_t d = m_ + n_;
    SuperMatrix k(pair_, pair_, Storage::Auto);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            k.set(i * d + i, j * d + j, Rational(v_.parity(j) ? -1 : 1));
    return k;
}

SuperMatrix SlModel::casimir_defining() const {
    SuperMatrix one = SuperMatrix::identity(pair_);
    return (perm2() - one.scaled(rat(1, omega_))).scaled(rat(1, 2 * omega_));
}

SuperMatrix SlModel::casimir_defining_contraction() const {
    SuperMatrix c(pair_, pair_, Storage::Auto);
    killing_inv_.for_each_nz([&](std::size_t a, std::size_t b, const Rational& gv) {
        c.axpy(gv, graded_kron(def_[a], def_[b]));
    });
    return c;
}

PolySpec SlModel::defining_char_spec() const {
    PolySpec spec;
    spec.terms = {{rat(omega_ - 1, 2 * omega_ * omega_), 1},
                  {rat(-(omega_ + 1), 2 * omega_ * omega_), 1}};
    spec.identity = SuperMatrix::identity(pair_);
    return spec;
}

ProjectorSystem SlModel::defining_projectors() const {
    SuperMatrix one = SuperMatrix::identity(pair_);
    SuperMatrix p = perm2();
    ProjectorSystem sys;
    sys.identity = one;
    auto push = [&](const std::string& name, SuperMatrix op, const Rational& eig, int sector) {
        ProjectorInfo pr;
        pr.name = name;
        pr.has_op = true;
        pr.op = std::move(op);
        pr.eigenvalue = eig;
        pr.sector = sector;
        sys.projectors.push_back(std::move(pr));
    };
    push("S+", (one + p).scaled(rat(1, 2)), rat(omega_ - 1, 2 * omega_ * omega_), +1);
    push("S-", (one - p).scaled(rat(1, 2)), rat(-(omega_ + 1), 2 * omega_ * omega_), -1);
    return sys;
}

SuperMatrix SlModel::r_matrix(const Rational& u) const {
    if (u == 1) throw std::domain_error("R(u): pole at u=1");
    SuperMatrix one = SuperMatrix::identity(pair_);
    return (one.scaled(u) + perm2()).scaled(Rational(1) / (Rational(1) - u));
}

std::vector<SuperMatrix> SlModel::r_matrix_forms(const Rational& u) const {
    std::vector<SuperMatrix> forms;
    forms.push_back(r_matrix(u));
    auto sys = defining_projectors();
    forms.push_back(sys.projectors[0].op.scaled((1 + u) / (1 - u)) - sys.projectors[1].op);
    // (S + u)(S - u)^{-1} with S = omega C_f + (1+omega)/(2 omega) = P_+
    SuperMatrix s = casimir_defining().scaled(rat(omega_)) +
                    SuperMatrix::identity(pair_).scaled(rat(1 + omega_, 2 * omega_));
    SuperMatrix shift = s - SuperMatrix::identity(pair_).scaled(u);
    try {
        SuperMatrix inv = inverse(shift);
        forms.push_back((s + SuperMatrix::identity(pair_).scaled(u)) * inv);
    } catch (const std::domain_error&) {
    }
    return forms;
}

SlAdjointBundle SlModel::adjoint_bundle() const {
    SlAdjointBundle b;
    const std::size_t g = labels_.size();
    b.adj = adj_;
    b.adj2 = GradedSpace::tensor(adj_, adj_);
    b.v4 = GradedSpace::tensor_power(v_, 4);
    b.dim_g = static_cast<long>(g);
    b.sdim_g = sdim_g();

    b.identity = SuperMatrix::identity(b.adj2, Storage::Sparse);
    b.perm = superperm(adj_).with_storage(Storage::Sparse);
    b.contraction = SuperMatrix(b.adj2, b.adj2, Storage::Sparse);
    killing_inv_.for_each_nz([&](std::size_t a, std::size_t bb, const Rational& up) {
        killing_.for_each_nz([&](std::size_t c, std::size_t dd, const Rational& lo) {
            b.contraction.set(a * g + bb, c * g + dd, up * lo);
        });
    });
    auto contract_pair = [&](const std::vector<SuperMatrix>& right) {
        SuperMatrix out(b.adj2, b.adj2, Storage::Sparse);
        killing_inv_.for_each_nz([&](std::size_t a, std::size_t bb, const Rational& gv) {
            const SuperMatrix& A = ad_[a];
            const SuperMatrix& B = right[bb];
            bool b_odd = adj_.parity(bb);
            A.for_each_nz([&](std::size_t k, std::size_t i, const Rational& av) {
                B.for_each_nz([&](std::size_t beta, std::size_t alpha, const Rational& bv) {
                    Rational v = gv * av * bv;
                    if (b_odd && adj_.parity(i)) v = -v;
                    out.add_at(k * g + beta, i * g + alpha, v);
                });
            });
        });
        return out;
    };
    b.casimir = contract_pair(ad_);
    b.casimir_plus = (b.casimir + b.perm * b.casimir).scaled(rat(1, 2));
    b.casimir_minus = (b.casimir - b.perm * b.casimir).scaled(rat(1, 2));
    // tilde operator from the symmetric structure constants, antisymmetrized
    SuperMatrix tilde = contract_pair(dmat_);
    SuperMatrix asym = b.identity - b.perm;
    b.tilde_minus = (asym * tilde * asym).scaled(rat(omega_, 4));

    // embedded picture
    SuperMatrix ibar = pair_identity_.with_storage(Storage::Sparse);
    SuperMatrix i12 = place(ibar, {1, 2}, 4), i34 = place(ibar, {3, 4}, 4);
    b.identity_emb = i12 * i34;
    SuperMatrix p2s = perm2().with_storage(Storage::Sparse);
    SuperMatrix k2s = contraction2().with_storage(Storage::Sparse);
    SuperMatrix p13 = place(p2s, {1, 3}, 4), p24 = place(p2s, {2, 4}, 4);
    SuperMatrix k32 = place2(k2s, 3, 2, 4), k14 = place2(k2s, 1, 4, 4);
    SuperMatrix k12 = place(k2s, {1, 2}, 4), k34 = place(k2s, {3, 4}, 4);
    b.perm_emb = b.identity_emb * (p13 * p24) * b.identity_emb;
    SuperMatrix kexpr = k32 * k14 - (p24 * k12 * k34).scaled(rat(1, omega_)) -
                        (p13 * k32 * k14).scaled(rat(1, omega_)) +
                        (k12 * k34).scaled(rat(1, omega_ * omega_));
    b.contraction_emb = b.identity_emb * kexpr * b.identity_emb;
    b.casimir_emb =
        (b.identity_emb * (p13 + p24 - k32 - k14) * b.identity_emb).scaled(rat(1, 2 * omega_));
    SuperMatrix id4 = SuperMatrix::identity(b.v4, Storage::Sparse);
    SuperMatrix texpr = (p13 - p24) * (id4 - (k12 + k34 + k32 + k14).scaled(rat(1, omega_)));
    b.tilde_minus_emb = (b.identity_emb * texpr * b.identity_emb).scaled(rat(1, 2));

    b.iota2 = graded_kron(iota_, iota_);
    b.pi2 = graded_kron(pi_, pi_);
    return b;
}

SlCharIdentities sl_char_identities(long omega) {
    if (omega <= 0) throw std::invalid_argument("sl char identities need omega >= 1");
    SlCharIdentities out;
    out.casimir_minus.terms = {{Rational(0), 1}, {rat(-1, 2), 1}};
    out.casimir_tilde.terms = {{Rational(0), 1}, {Rational(1), 1}, {Rational(-1), 1}};
    if (omega == 1) {
        out.casimir.terms = {{Rational(0), 1}, {Rational(-1), 2}, {Rational(1), 1},
                             {rat(-1, 2), 1}};
        out.casimir.diagonalizable = false;
        out.casimir.residual_k_coeff = rat(1, 2);
        out.casimir_plus.terms = {{Rational(-1), 2}, {Rational(1), 1}, {rat(-1, 2), 1},
                                  {Rational(0), 1}};
        out.casimir_plus.diagonalizable = false;
        out.casimir_plus.residual_k_coeff = rat(1, 2);
    } else if (omega == 2) {
        out.casimir.terms = {{Rational(0), 1}, {Rational(-1), 1}, {rat(1, 2), 1},
                             {rat(-1, 2), 2}};
        out.casimir.diagonalizable = false;
        out.casimir.sl_omega2_residual = true;
        out.casimir_plus.terms = {{Rational(-1), 1}, {rat(1, 2), 1}, {rat(-1, 2), 2},
                                  {Rational(0), 1}};
        out.casimir_plus.diagonalizable = false;
        out.casimir_plus.sl_omega2_residual = true;
    } else {
        out.casimir.terms = {{Rational(0), 1}, {Rational(-1), 1}, {rat(1, omega), 1},
                             {rat(-1, omega), 1}, {rat(-1, 2), 1}};
        out.casimir_plus.terms = {{Rational(0), 1}, {Rational(-1), 1}, {rat(1, omega), 1},
                                  {rat(-1, omega), 1}, {rat(-1, 2), 1}};
    }
    return out;
}

ProjectorSystem SlModel::adjoint_projectors(const SlAdjointBundle& b) const {
    ProjectorSystem sys;
    sys.identity = b.identity;
    long w = omega_;

    auto push = [&](const std::string& name, const ProjFormula& f, const Rational& eig,
                    unsigned mult, int sector, char gen) {
        ProjectorInfo p;
        p.name = name;
        p.has_formula = true;
        p.formula = f;
        p.eigenvalue = eig;
        p.multiplicity = mult;
        p.sector = sector;
        p.generalized = mult > 1;
        p.generator = gen;
        sys.projectors.push_back(std::move(p));
    };
    // fields: {c_id, c_perm, c_k, c_minus, c_plus, c_plus2, c_tilde}
    // antisymmetric sector (same for every omega >= 1):
    //   C- + P-/2 -+ T/2 and -2 C-
    push("V(-1)~", {rat(1, 4), rat(-1, 4), {}, Rational(1), {}, {}, rat(-1, 2)}, Rational(-1), 1,
         -1, 'T');
    push("V(1)~", {rat(1, 4), rat(-1, 4), {}, Rational(1), {}, {}, rat(1, 2)}, Rational(1), 1, -1,
         'T');
    push("V2(-)", {{}, {}, {}, Rational(-2), {}, {}, {}}, rat(-1, 2), 1, -1, '-');

    if (w == 1) {
        push("V1(+)", {rat(-1, 4), rat(-1, 4), rat(-5, 4), {}, rat(-1, 2), Rational(1), {}},
             Rational(-1), 2, +1, '+');
        push("V2(+)", {rat(1, 12), rat(1, 12), rat(-1, 12), {}, rat(1, 2), rat(1, 3), {}},
             Rational(1), 1, +1, '+');
        push("V3(+)", {rat(2, 3), rat(2, 3), rat(4, 3), {}, {}, rat(-4, 3), {}}, rat(-1, 2), 1,
             +1, '+');
    } else if (w == 2) {
        push("V1(+)", {{}, {}, rat(1, 3), {}, {}, {}, {}}, Rational(-1), 1, +1, '+');
        push("V2(+)", {rat(1, 8), rat(1, 8), rat(-1, 12), {}, Rational(1), Rational(1), {}},
             rat(1, 2), 1, +1, '+');
        push("V3(+)", {rat(3, 8), rat(3, 8), rat(-1, 4), {}, Rational(-1), Rational(-1), {}},
             rat(-1, 2), 2, +1, '+');
    } else {
        push("V1(+)", {{}, {}, rat(1, w * w - 1), {}, {}, {}, {}}, Rational(-1), 1, +1, '+');
        push("V2(+)",
             {rat(w, 4 * (w + 2)), rat(w, 4 * (w + 2)), rat(-w, 2 * (w + 1) * (w + 2)), {},
              rat(w, 2), rat(w * w, w + 2), {}},
             rat(1, w), 1, +1, '+');
        push("V3(+)",
             {rat(w, 4 * (w - 2)), rat(w, 4 * (w - 2)), rat(w, 2 * (w - 1) * (w - 2)), {},
              rat(-w, 2), rat(-w * w, w - 2), {}},
             rat(-1, w), 1, +1, '+');
        push("V4(+)",
             {rat(-2, w * w - 4), rat(-2, w * w - 4), rat(-4, w * w - 4), {}, {},
              rat(4 * w * w, w * w - 4), {}},
             rat(-1, 2), 1, +1, '+');
    }
    return sys;
}

std::vector<DimRow> SlModel::expected_dims() const {
    if (omega_ < 3) throw std::domain_error("sl dimension tables need omega >= 3");
    Rational M(static_cast<long>(m_)), N(static_cast<long>(n_));
    auto row = [](const std::string& n, const Rational& e, const Rational& o) {
        if (!is_integer(e) || !is_integer(o))
            throw std::logic_error("sl dims: non-integer table entry");
        return DimRow{n, static_cast<long>(e.get_num().get_si()),
                      static_cast<long>(o.get_num().get_si())};
    };
    Rational tilde_even = (M * M - 1) * (M * M - 4) / 4 + (N * N - 1) * (N * N - 4) / 4 +
                          (M * N + 1) * (3 * M * N - 2) / 2;
    Rational tilde_odd = M * N * (M * M + N * N - 2);
    std::vector<DimRow> t;
    t.push_back(row("V(-1)~", tilde_even, tilde_odd));
    t.push_back(row("V(1)~", tilde_even, tilde_odd));
    t.push_back(row("V2(-)", M * M + N * N - 1, 2 * M * N));
    t.push_back(row("V1(+)", Rational(1), Rational(0)));
    t.push_back(row("V2(+)",
                    M * M * (M - 1) * (M + 3) / 4 + N * N * (N + 1) * (N - 3) / 4 +
                        M * N * (3 * M * N - M + N - 1) / 2,
                    M * N * (M * (M + 1) + N * (N - 1) - 2)));
    t.push_back(row("V3(+)",
                    M * M * (M + 1) * (M - 3) / 4 + N * N * (N - 1) * (N + 3) / 4 +
                        M * N * (3 * M * N + M - N - 1) / 2,
                    M * N * (M * (M - 1) + N * (N + 1) - 2)));
    t.push_back(row("V4(+)", M * M + N * N - 1, 2 * M * N));
    return t;
}

std::vector<RelationResult> verify_sl_krel(const SlModel& model, std::size_t a, std::size_t b,
                                           std::size_t c, std::size_t d) {
    SuperMatrix p2 = model.perm2().with_storage(Storage::Sparse);
    SuperMatrix k2 = model.contraction2().with_storage(Storage::Sparse);
    auto P = [&](std::size_t x, std::size_t y) { return place2(p2, x, y, 4); };
    auto K = [&](std::size_t x, std::size_t y) { return place2(k2, x, y, 4); };
    Rational w = rat(model.omega());
    std::vector<RelationResult> res;
    auto chk = [&](const std::string& name, const SuperMatrix& lhs, const SuperMatrix& rhs) {
        res.push_back({name, lhs == rhs});
    };
    auto tag = [&](const char* fmt) { return std::string(fmt); };
    chk(tag("K_ab K_ab = omega K_ab"), K(a, b) * K(a, b), K(a, b).scaled(w));
    chk(tag("P_ab K_ad K_bc = P_cd K_ad K_bc"), P(a, b) * K(a, d) * K(b, c),
        P(c, d) * K(a, d) * K(b, c));
    chk(tag("K_ad K_bc P_ab = K_ad K_bc P_cd"), K(a, d) * K(b, c) * P(a, b),
        K(a, d) * K(b, c) * P(c, d));
    chk(tag("K_ab P_ab K_bc = K_ab P_ab P_ac"), K(a, b) * P(a, b) * K(b, c),
        K(a, b) * P(a, b) * P(a, c));
    chk(tag("K_ab P_ab P_ac = P_ac P_bc K_bc"), K(a, b) * P(a, b) * P(a, c),
        P(a, c) * P(b, c) * K(b, c));
    chk(tag("K_ab P_bc K_bc = K_ab P_ab P_ac"), K(a, b) * P(b, c) * K(b, c),
        K(a, b) * P(a, b) * P(a, c));
    return res;
}

} // namespace supercas
