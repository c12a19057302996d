#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercas/sl.hpp"
#include "supercas/vogel.hpp"

using namespace supercas;

TEST_CASE("vogel parameter table rows") {
    auto p = vogel_params(AlgebraKind::sl, 4, 1);
    CHECK(p.alpha == Rational(-2));
    CHECK(p.beta == Rational(2));
    CHECK(p.gamma == Rational(3));
    CHECK(p.t == Rational(3));
    CHECK(p.mu1 == rat(1, 9));
    CHECK(p.mu2 == rat(1, 36));

    auto q = vogel_params(AlgebraKind::osp, 5, 2); // omega = 3 > 1, odd M
    CHECK(q.alpha == Rational(-2));
    CHECK(q.beta == Rational(4));
    CHECK(q.gamma == Rational(-1));
    CHECK(q.t == Rational(1));
    CHECK(q.mu1 == rat(5, 2));
    CHECK(q.mu2 == rat(-1, 2));

    auto r = vogel_params(AlgebraKind::osp, 3, 4); // omega = -1 <= 1, odd M
    CHECK(r.alpha == Rational(1));
    CHECK(r.beta == Rational(-2));
    CHECK(r.gamma == rat(5, 2));
    CHECK(r.t == rat(3, 2));

    // mu closed forms agree with the family expressions for both columns
    for (long M : {3, 5, 7})
        for (long N : {0, 2, 4}) {
            if (M - N == 2) continue;
            auto pp = vogel_params(AlgebraKind::osp, M, N);
            CHECK(pp.mu1 == vogel_mu1(AlgebraKind::osp, M - N));
            CHECK(pp.mu2 == vogel_mu2(AlgebraKind::osp, M - N));
        }
    CHECK_THROWS_AS(vogel_params(AlgebraKind::osp, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(vogel_params(AlgebraKind::sl, 3, 3), std::invalid_argument);
}

TEST_CASE("universal cubic identity on small instances") {
    {
        auto m = OspModel::build(3, 2);
        auto b = m.adjoint_bundle();
        auto p = vogel_params(AlgebraKind::osp, 3, 2);
        CHECK(universal_cubic_residual(b, p).is_zero());
    }
    {
        auto m = SlModel::build(3, 1);
        auto b = m.adjoint_bundle();
        auto p = vogel_params(AlgebraKind::sl, 3, 1);
        CHECK(universal_cubic_residual(b, p).is_zero());
    }
}

TEST_CASE("superdimension formulas") {
    auto p = vogel_params(AlgebraKind::sl, 4, 1);
    CHECK(*sdim_from_mu(p) == Rational(8));
    CHECK(*sdim_from_params(p) == Rational(8));
    auto q = vogel_params(AlgebraKind::osp, 5, 2);
    CHECK(*sdim_from_mu(q) == Rational(3));
    CHECK(*sdim_from_params(q) == Rational(3));
    auto z = vogel_params(AlgebraKind::osp, 6, 2); // omega=4: gamma=0, mu2=0
    CHECK(!sdim_from_mu(z).has_value());
    CHECK(!sdim_from_params(z).has_value());
    CHECK_THROWS_AS(universal_sdims(z), std::domain_error);
}

TEST_CASE("universal projectors match sl(3|0) = sl(3) concrete system") {
    // a small non-super instance keeps this cheap; entrywise equality of the
    // universal symmetric projectors against the closed-form system
    auto m = SlModel::build(3, 0);
    auto b = m.adjoint_bundle();
    auto sys = m.adjoint_projectors(b);
    materialize_projectors(sys, b, &b.tilde_minus);
    auto p = vogel_params(AlgebraKind::sl, 3, 0);
    auto uni = universal_projectors(b, p);
    REQUIRE(uni.size() == 4);
    for (const auto& up : uni) {
        bool found = false;
        for (const auto& pr : sys.projectors) {
            if (pr.sector != +1 || pr.eigenvalue != up.eigenvalue) continue;
            found = true;
            CHECK(pr.op == up.op);
            CHECK(up.op.supertrace() == up.expected_sdim);
        }
        INFO("eigenvalue ", rat_str(up.eigenvalue));
        CHECK(found);
    }
}

TEST_CASE("universal series coefficients") {
    auto p = vogel_params(AlgebraKind::sl, 4, 1);
    auto c = casimir_series_universal(p, 8);
    REQUIRE(c.size() == 9);
    CHECK(c[0] == Rational(8));
    CHECK(c[1] == Rational(0));
    CHECK(c[2] == Rational(1));
    CHECK(c[3] == rat(-1, 4));
    CHECK(c[4] == rat(7, 24));
    CHECK(c[8] == rat(4147, 31104));
    auto q = vogel_params(AlgebraKind::osp, 5, 2);
    auto cq = casimir_series_universal(q, 8);
    CHECK(cq[0] == Rational(3));
    CHECK(cq[4] == rat(1, 2));
    CHECK(cq[8] == rat(11, 32));
}
