#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercas/engine.hpp"
#include "supercas/sl.hpp"
#include "supercas/suites.hpp"

using namespace supercas;

TEST_CASE("sl construction counts, normalization, rejection") {
    auto m = SlModel::build(4, 1);
    CHECK(m.dim_g() == 24);
    CHECK(m.adjoint_space().dim_even() == 16);
    CHECK(m.adjoint_space().dim_odd() == 8);
    CHECK(m.sdim_g() == Rational(8));
    CHECK_THROWS_AS(SlModel::build(3, 3), std::invalid_argument);
    auto swapped = SlModel::build(1, 4);
    CHECK(swapped.normalized());
    CHECK(swapped.M() == 4);
    CHECK(swapped.N() == 1);
    CHECK(swapped.omega() == 3);
    // sl(M|0) = sl(M) works too
    auto plain = SlModel::build(3, 0);
    CHECK(plain.dim_g() == 8);
}

TEST_CASE("sl(4|1) defining casimir, characteristic identity, projectors") {
    auto m = SlModel::build(4, 1);
    auto cf = m.casimir_defining();
    CHECK(m.casimir_defining_contraction() == cf);
    auto spec = m.defining_char_spec();
    REQUIRE(spec.terms.size() == 2);
    CHECK(spec.terms[0].root == rat(1, 9));  // (w-1)/(2w^2)
    CHECK(spec.terms[1].root == rat(-2, 9)); // -(w+1)/(2w^2)
    SuperMatrix zero(cf.row_space(), cf.col_space(), Storage::Sparse);
    CHECK(check_poly(cf, spec, zero).equal);
    CHECK(nonminimal_terms(cf, spec, zero).empty());
    auto sys = m.defining_projectors();
    CHECK(sys.projectors[0].op + sys.projectors[1].op == sys.identity);
    CHECK(sys.projectors[0].op * sys.projectors[0].op == sys.projectors[0].op);
    CHECK(sys.projectors[1].op * sys.projectors[1].op == sys.projectors[1].op);
    // brute-force antisymmetrizer rank: pairs i<j plus odd diagonal
    CHECK(sys.projectors[1].op.trace() == Rational(11));
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(projector_from_roots(cf, spec, j) == sys.projectors[j].op);
}

TEST_CASE("sl(3|1) R-matrix and YBE") {
    auto m = SlModel::build(3, 1);
    CHECK(m.r_matrix(Rational(0)) == m.perm2());
    auto forms = m.r_matrix_forms(rat(1, 3));
    REQUIRE(forms.size() == 3);
    CHECK(forms[1] == forms[0]);
    CHECK(forms[2] == forms[0]);
    auto rm = [&](const Rational& u) { return m.r_matrix(u); };
    auto res = verify_ybe(m.defining_space(), rm,
                          {{rat(1, 3), rat(1, 5)}, {rat(2, 7), rat(-3, 11)}});
    for (const auto& s : res) CHECK(s.equal);
    CHECK(verify_unitarity(m.defining_space(), rm, rat(2, 7)));
}

TEST_CASE("sl(3|1) adjoint bundle: two routes and relations") {
    auto m = SlModel::build(3, 1);
    auto b = m.adjoint_bundle();
    CHECK(b.pi2 * b.casimir_emb * b.iota2 == b.casimir);
    CHECK(b.pi2 * b.perm_emb * b.iota2 == b.perm);
    CHECK(b.pi2 * b.contraction_emb * b.iota2 == b.contraction);
    CHECK(b.pi2 * b.identity_emb * b.iota2 == b.identity);
    CHECK(b.pi2 * b.tilde_minus_emb * b.iota2 == b.tilde_minus);
    CHECK(b.contraction * b.contraction ==
          b.contraction.scaled(rat(m.omega() * m.omega() - 1)));
    CHECK(b.casimir * b.contraction == b.contraction.scaled(Rational(-1)));
    // tilde relations
    const auto& T = b.tilde_minus;
    SuperMatrix pplus = (b.identity + b.perm).scaled(rat(1, 2));
    SuperMatrix pminus = (b.identity - b.perm).scaled(rat(1, 2));
    CHECK((pplus * T).is_zero());
    CHECK((T * pplus).is_zero());
    CHECK((T * b.casimir_minus).is_zero());
    CHECK((b.casimir_minus * T).is_zero());
    CHECK(T * T == b.casimir_minus.scaled(Rational(2)) + pminus);
    CHECK((T * (T + b.identity) * (T - b.identity)).is_zero());
}

TEST_CASE("sl(2|1): omega=1 residual and nilpotent contraction") {
    auto m = SlModel::build(2, 1);
    auto b = m.adjoint_bundle();
    CHECK((b.contraction * b.contraction).is_zero()); // K^2 = (w^2-1)K = 0
    auto ids = sl_char_identities(1);
    PolySpec distinct;
    distinct.identity = b.identity;
    for (const auto& t : ids.casimir.terms) distinct.terms.push_back({t.root, 1});
    CHECK(check_poly(b.casimir, distinct, b.contraction.scaled(rat(1, 2))).equal);
    PolySpec spec;
    spec.identity = b.identity;
    spec.terms = ids.casimir.terms;
    SuperMatrix zero(b.adj2, b.adj2, Storage::Sparse);
    CHECK(check_poly(b.casimir, spec, zero).equal);
    CHECK(nonminimal_terms(b.casimir, spec, zero).empty());
}

TEST_CASE("sl(3|1): omega=2 residual operator") {
    auto m = SlModel::build(3, 1);
    auto b = m.adjoint_bundle();
    auto ids = sl_char_identities(2);
    CHECK(ids.casimir.sl_omega2_residual);
    PolySpec distinct;
    distinct.identity = b.identity;
    for (const auto& t : ids.casimir.terms) distinct.terms.push_back({t.root, 1});
    SuperMatrix pplus = (b.identity + b.perm).scaled(rat(1, 2));
    SuperMatrix cp2 = b.casimir_plus * b.casimir_plus;
    SuperMatrix expected =
        (pplus + b.contraction).scaled(rat(1, 16)) - cp2.scaled(rat(1, 4));
    CHECK(check_poly(b.casimir, distinct, expected).equal);
    CHECK(!expected.is_zero()); // the residual is genuinely nonzero here
    // the minimal zero identity needs k=2 at -1/2
    PolySpec spec;
    spec.identity = b.identity;
    spec.terms = ids.casimir.terms;
    SuperMatrix zero(b.adj2, b.adj2, Storage::Sparse);
    CHECK(check_poly(b.casimir, spec, zero).equal);
    CHECK(nonminimal_terms(b.casimir, spec, zero).empty());
    // generalized projector V3(+): (C+ + 1/2)^2 p = 0 but (C+ + 1/2) p != 0
    auto sys = m.adjoint_projectors(b);
    materialize_projectors(sys, b, &b.tilde_minus);
    const auto& p3 = sys.projectors.back();
    CHECK(p3.name == "V3(+)");
    SuperMatrix shift = b.casimir_plus + b.identity.scaled(rat(1, 2));
    CHECK(!(shift * p3.op).is_zero());
    CHECK((shift * shift * p3.op).is_zero());
}

TEST_CASE("sl(4|1) expected dimension table") {
    auto m = SlModel::build(4, 1);
    auto dims = m.expected_dims();
    REQUIRE(dims.size() == 7);
    long total = 0;
    for (const auto& d : dims) total += d.even + d.odd;
    CHECK(total == 576);
    CHECK(dims[3].name == "V1(+)");
    CHECK(dims[3].even == 1);
    CHECK(dims[3].odd == 0);
    CHECK(dims[2].even == 16); // V2(-) = (M^2+N^2-1, 2MN)
    CHECK(dims[2].odd == 8);
    CHECK(dims[6].even == 16); // V4(+)
    CHECK(dims[6].odd == 8);
    CHECK_THROWS_AS(SlModel::build(3, 1).expected_dims(), std::domain_error);
}

TEST_CASE("sl placement relation set") {
    auto m = SlModel::build(3, 1);
    auto res = verify_sl_krel(m, 1, 2, 3, 4);
    for (const auto& r : res) {
        INFO(r.name);
        CHECK(r.ok);
    }
    auto res2 = verify_sl_krel(m, 2, 4, 1, 3);
    for (const auto& r : res2) {
        INFO(r.name);
        CHECK(r.ok);
    }
}

TEST_CASE("sl(2|1) and sl(3|1) full suite smoke") {
    for (auto mn : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}}) {
        auto rep = run_instance(AlgebraKind::sl, mn.first, mn.second, all_suites(), 4);
        for (const auto& c : rep.checks) {
            INFO(rep.M, "|", rep.N, " ", c.suite, ": ", c.name, " -> ", c.status, " ",
                 c.computed);
            CHECK(c.status != "fail");
        }
    }
}
