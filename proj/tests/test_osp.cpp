#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercas/engine.hpp"
#include "supercas/osp.hpp"
#include "supercas/suites.hpp"

using namespace supercas;

TEST_CASE("osp construction counts and rejection") {
    auto m = OspModel::build(5, 2);
    CHECK(m.dim_g() == 23);
    CHECK(m.sdim_g() == Rational(3));
    CHECK(m.adjoint_space().dim_even() == 13); // 10 + 3
    CHECK(m.adjoint_space().dim_odd() == 10);
    CHECK_THROWS_AS(OspModel::build(4, 2), std::invalid_argument); // omega = 2
    CHECK_THROWS_AS(OspModel::build(3, 3), std::invalid_argument); // odd N
    auto tiny = OspModel::build(2, 2);
    CHECK(tiny.dim_g() == 8);
    CHECK(tiny.sdim_g() == Rational(0));
}

TEST_CASE("osp defining operators on osp(3|2)") {
    auto m = OspModel::build(3, 2);
    auto p = m.perm2();
    auto k = m.contraction2();
    auto one = SuperMatrix::identity(GradedSpace::tensor(m.defining_space(), m.defining_space()));
    CHECK(p * p == one);
    CHECK(k * k == k.scaled(rat(m.omega())));
    CHECK(p * k == k);
    CHECK(k * p == k);
    // split Casimir: contraction equals closed form
    CHECK(m.casimir_defining_contraction() == m.casimir_defining());
}

TEST_CASE("osp(5|2) defining characteristic identity and projectors") {
    auto m = OspModel::build(5, 2);
    auto cf = m.casimir_defining();
    auto spec = m.defining_char_spec();
    // roots {1/2, -1/2, -1} at omega = 3
    REQUIRE(spec.terms.size() == 3);
    CHECK(spec.terms[0].root == rat(1, 2));
    CHECK(spec.terms[1].root == rat(-1, 2));
    CHECK(spec.terms[2].root == Rational(-1));
    SuperMatrix zero(cf.row_space(), cf.col_space(), Storage::Sparse);
    CHECK(check_poly(cf, spec, zero).equal);
    CHECK(nonminimal_terms(cf, spec, zero).empty());
    // Cf^2 = 1/(4(w-2)^2) + 1/(4(w-2)) K
    auto one = SuperMatrix::identity(cf.row_space());
    CHECK(cf * cf == one.scaled(rat(1, 4)) + m.contraction2().scaled(rat(1, 4)));

    auto sys = m.defining_projectors();
    SuperMatrix sum(cf.row_space(), cf.col_space(), Storage::Sparse);
    for (const auto& pr : sys.projectors) {
        CHECK(pr.op * pr.op == pr.op);
        sum = sum + pr.op;
    }
    CHECK(sum == sys.identity);
    CHECK(sys.projectors[2].op.trace() == Rational(1));
    // engine route reproduces the closed forms
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(projector_from_roots(cf, spec, j) == sys.projectors[j].op);
}

TEST_CASE("osp(2|2): omega=0 defining sector") {
    auto m = OspModel::build(2, 2);
    auto cf = m.casimir_defining();
    auto spec = m.defining_char_spec();
    // merged roots: {-1/4 (k=2), 1/4}
    REQUIRE(spec.terms.size() == 2);
    CHECK(spec.terms[0].multiplicity == 2);
    SuperMatrix zero(cf.row_space(), cf.col_space(), Storage::Sparse);
    CHECK(check_poly(cf, spec, zero).equal);
    CHECK(nonminimal_terms(cf, spec, zero).empty());
    CHECK_THROWS_AS(m.defining_projectors(), std::domain_error);
}

TEST_CASE("osp(5|2) R-matrix forms and unitarity") {
    auto m = OspModel::build(5, 2);
    CHECK(m.r_matrix(Rational(0)) == m.perm2());
    auto forms = m.r_matrix_forms(rat(1, 3));
    REQUIRE(forms.size() == 3);
    CHECK(forms[1] == forms[0]);
    CHECK(forms[2] == forms[0]);
    CHECK_THROWS_AS(m.r_matrix(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(m.r_matrix(rat(-1, 2)), std::domain_error); // u = 1 - omega/2
    auto rm = [&](const Rational& u) { return m.r_matrix(u); };
    CHECK(verify_unitarity(m.defining_space(), rm, rat(1, 3)));
    auto res = verify_ybe(m.defining_space(), rm, {{rat(1, 3), rat(1, 5)}});
    REQUIRE(res.size() == 1);
    CHECK(res[0].equal);
}

TEST_CASE("osp(3|2) adjoint bundle relations") {
    auto m = OspModel::build(3, 2);
    auto b = m.adjoint_bundle();
    // metric contraction equals the embedded closed form
    CHECK(b.pi2 * b.casimir_emb * b.iota2 == b.casimir);
    CHECK(b.pi2 * b.perm_emb * b.iota2 == b.perm);
    CHECK(b.pi2 * b.contraction_emb * b.iota2 == b.contraction);
    CHECK(b.pi2 * b.identity_emb * b.iota2 == b.identity);
    CHECK(b.perm * b.perm == b.identity);
    CHECK(b.contraction * b.contraction == b.contraction.scaled(b.sdim_g));
    CHECK(b.perm * b.contraction == b.contraction);
    CHECK(b.casimir * b.contraction == b.contraction.scaled(Rational(-1)));
    CHECK(b.casimir.supertrace() == 0);
    CHECK(b.casimir_plus + b.casimir_minus == b.casimir);
    CHECK((b.casimir_plus * b.casimir_minus).is_zero());
    // K^2 = sdim(g) K with sdim = omega(omega-1)/2 = 0 at omega = 1
    CHECK(b.sdim_g == Rational(0));
}

TEST_CASE("osp char identity tables") {
    auto generic = osp_char_identities(3);
    REQUIRE(generic.casimir.terms.size() == 6);
    CHECK(generic.casimir.terms[3].root == Rational(1));  // 1/(w-2)
    CHECK(generic.casimir.terms[4].root == Rational(-2)); // -2/(w-2)
    CHECK(generic.casimir.terms[5].root == rat(1, 2));    // (4-w)/(2(w-2))
    auto w8 = osp_char_identities(8);
    REQUIRE(w8.casimir.terms.size() == 5);
    CHECK(w8.casimir.terms[3].root == rat(1, 6));
    CHECK(w8.casimir.terms[4].root == rat(-1, 3));
    auto w0 = osp_char_identities(0);
    CHECK(!w0.casimir.diagonalizable);
    CHECK(w0.casimir.residual_k_coeff == rat(1, 2));
    auto w1 = osp_char_identities(1);
    CHECK(w1.casimir.residual_k_coeff == rat(-3, 2));
    CHECK_THROWS_AS(osp_char_identities(2), std::invalid_argument);
}

TEST_CASE("osp(2|2): nonzero residual and generalized projectors") {
    auto m = OspModel::build(2, 2);
    auto b = m.adjoint_bundle();
    auto ids = osp_char_identities(0);
    // distinct-root quartic equals K/2
    PolySpec distinct;
    distinct.identity = b.identity;
    for (const auto& t : ids.casimir.terms) distinct.terms.push_back({t.root, 1});
    CHECK(check_poly(b.casimir, distinct, b.contraction.scaled(rat(1, 2))).equal);
    // minimal zero identity (k=2 at root -1)
    PolySpec spec;
    spec.identity = b.identity;
    spec.terms = ids.casimir.terms;
    SuperMatrix zero(b.adj2, b.adj2, Storage::Sparse);
    CHECK(check_poly(b.casimir, spec, zero).equal);
    CHECK(nonminimal_terms(b.casimir, spec, zero).empty());
    // K nilpotent at omega = 0
    CHECK((b.contraction * b.contraction).is_zero());

    auto sys = m.adjoint_projectors(b);
    materialize_projectors(sys, b);
    REQUIRE(sys.projectors.size() == 4);
    // proj3 is genuinely generalized: (C+1)^2 p = 0 but (C+1) p != 0
    const auto& p3 = sys.projectors[2].op;
    SuperMatrix shift = b.casimir + b.identity;
    CHECK(!(shift * p3).is_zero());
    CHECK((shift * shift * p3).is_zero());
    // generalized engine route matches the closed forms
    auto gen = generalized_projectors(b.casimir, spec);
    for (std::size_t j = 0; j < 4; ++j) CHECK(gen[j] == sys.projectors[j].op);
}

TEST_CASE("osp(5|2) expected dimension table") {
    auto m = OspModel::build(5, 2);
    auto dims = m.expected_dims();
    REQUIRE(dims.size() == 6);
    long total = 0;
    for (const auto& d : dims) total += d.even + d.odd;
    CHECK(total == 529);
    CHECK(dims[2].name == "V3");
    CHECK(dims[2].even == 1);
    CHECK(dims[2].odd == 0);
    CHECK(dims[1].even == 13);
    CHECK(dims[1].odd == 10);
    CHECK(dims[5].even == 15); // V6 = ((M-1)(M+2) + N(N-1))/2
    CHECK(dims[5].odd == 10);
    CHECK_THROWS_AS(OspModel::build(3, 2).expected_dims(), std::domain_error);
}

TEST_CASE("osp(3|2) full suite smoke") {
    auto rep = run_instance(AlgebraKind::osp, 3, 2, all_suites(), 4);
    for (const auto& c : rep.checks) {
        INFO(c.suite, ": ", c.name, " -> ", c.status, " ", c.computed);
        CHECK(c.status != "fail");
    }
}

TEST_CASE("osp(8|0): omega=8 limit projectors") {
    // so(8): the merged-root case with the limit formulas for V5/V6
    auto m = OspModel::build(8, 0);
    auto b = m.adjoint_bundle();
    auto ids = osp_char_identities(8);
    PolySpec spec;
    spec.identity = b.identity;
    spec.terms = ids.casimir.terms;
    SuperMatrix zero(b.adj2, b.adj2, Storage::Sparse);
    CHECK(check_poly(b.casimir, spec, zero).equal);
    auto sys = m.adjoint_projectors(b);
    materialize_projectors(sys, b);
    REQUIRE(sys.projectors.size() == 6);
    SuperMatrix sum(b.adj2, b.adj2, Storage::Sparse);
    for (const auto& p : sys.projectors) {
        CHECK(p.op * p.op == p.op);
        sum = sum + p.op;
    }
    CHECK(sum == b.identity);
    // V5 and V6 share the eigenvalue -1/3 but are orthogonal
    const auto& v5 = sys.projectors[4];
    const auto& v6 = sys.projectors[5];
    CHECK(v5.eigenvalue == rat(-1, 3));
    CHECK(v6.eigenvalue == rat(-1, 3));
    CHECK((v5.op * v6.op).is_zero());
    CHECK((v6.op * v5.op).is_zero());
    CHECK((b.casimir * v5.op - v5.op.scaled(rat(-1, 3))).is_zero());
    CHECK((b.casimir * v6.op - v6.op.scaled(rat(-1, 3))).is_zero());
}
