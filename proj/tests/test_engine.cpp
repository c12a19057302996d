#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercas/engine.hpp"
#include "supercas/slab.hpp"

using namespace supercas;

namespace {

// small diagonalizable toy: diag blocks with eigenvalues 0, 1, 1, -1/2 on a
// graded 4-dim space, plus one Jordan block variant
SuperMatrix toy_diag(const GradedSpace& s) {
    SuperMatrix c(s, s, Storage::Dense);
    c.set(1, 1, Rational(1));
    c.set(2, 2, Rational(1));
    c.set(3, 3, rat(-1, 2));
    return c;
}

SuperMatrix toy_jordan(const GradedSpace& s) {
    SuperMatrix c = toy_diag(s);
    c.set(1, 2, Rational(1)); // nilpotent part inside the eigenvalue-1 block
    return c;
}

} // namespace

TEST_CASE("projector_from_roots on toy operators") {
    auto s = GradedSpace::defining(3, 1);
    PolySpec spec;
    spec.identity = SuperMatrix::identity(s);

    // C = 0 with a single root: the projector is the identity
    SuperMatrix zero(s, s, Storage::Dense);
    spec.terms = {{Rational(0), 1}};
    CHECK(projector_from_roots(zero, spec, 0) == spec.identity);

    SuperMatrix c = toy_diag(s);
    spec.terms = {{Rational(0), 1}, {Rational(1), 1}, {rat(-1, 2), 1}};
    SuperMatrix sum(s, s, Storage::Dense);
    for (std::size_t j = 0; j < 3; ++j) {
        SuperMatrix p = projector_from_roots(c, spec, j);
        CHECK(p * p == p);
        CHECK((c * p - p.scaled(spec.terms[j].root)).is_zero());
        sum = sum + p;
    }
    CHECK(sum == spec.identity);
    // repeated roots are rejected
    spec.terms = {{Rational(0), 2}, {Rational(1), 1}};
    CHECK_THROWS_AS(projector_from_roots(c, spec, 0), std::invalid_argument);
}

TEST_CASE("generalized projectors degenerate to the simple construction") {
    auto s = GradedSpace::defining(3, 1);
    SuperMatrix c = toy_diag(s);
    PolySpec spec;
    spec.identity = SuperMatrix::identity(s);
    spec.terms = {{Rational(0), 1}, {Rational(1), 1}, {rat(-1, 2), 1}};
    auto gen = generalized_projectors(c, spec);
    for (std::size_t j = 0; j < 3; ++j) CHECK(gen[j] == projector_from_roots(c, spec, j));
}

TEST_CASE("generalized projectors on a Jordan block") {
    auto s = GradedSpace::defining(3, 1);
    SuperMatrix c = toy_jordan(s);
    PolySpec spec;
    spec.identity = SuperMatrix::identity(s);
    spec.terms = {{Rational(0), 1}, {Rational(1), 2}, {rat(-1, 2), 1}};
    SuperMatrix zero(s, s, Storage::Dense);
    CHECK(check_poly(c, spec, zero).equal);
    CHECK(nonminimal_terms(c, spec, zero).empty());
    auto gen = generalized_projectors(c, spec);
    SuperMatrix sum(s, s, Storage::Dense);
    for (std::size_t j = 0; j < 3; ++j) {
        const auto& p = gen[j];
        CHECK(p * p == p);
        // (C - a)^k p = 0
        SuperMatrix shift = c - spec.identity.scaled(spec.terms[j].root);
        SuperMatrix r = p;
        for (unsigned k = 0; k < spec.terms[j].multiplicity; ++k) r = shift * r;
        CHECK(r.is_zero());
        for (std::size_t i = 0; i < 3; ++i)
            if (i != j) CHECK((gen[i] * p).is_zero());
        sum = sum + p;
    }
    CHECK(sum == spec.identity);
    // the middle projector is genuinely generalized
    SuperMatrix shift = c - spec.identity.scaled(Rational(1));
    CHECK(!(shift * gen[1]).is_zero());
    // a too-small multiplicity is reported as breaking the identity
    PolySpec bad = spec;
    bad.terms[1].multiplicity = 1;
    CHECK(!check_poly(c, bad, zero).equal);
}

TEST_CASE("check_poly reports exact residuals") {
    auto s = GradedSpace::defining(2, 0);
    SuperMatrix c(s, s, Storage::Dense);
    c.set(0, 0, rat(1, 3));
    PolySpec spec;
    spec.identity = SuperMatrix::identity(s);
    spec.terms = {{Rational(0), 1}};
    SuperMatrix expected(s, s, Storage::Dense);
    expected.set(0, 0, rat(1, 3));
    auto rep = check_poly(c, spec, expected);
    CHECK(rep.equal);
    SuperMatrix wrong(s, s, Storage::Dense);
    auto rep2 = check_poly(c, spec, wrong);
    CHECK(!rep2.equal);
    CHECK(rep2.max_abs_numerator == "1");
}

TEST_CASE("dims_of") {
    auto s = GradedSpace::defining(2, 1);
    SuperMatrix zero(s, s, Storage::Dense);
    CHECK(dims_of(zero) == std::pair<long, long>{0, 0});
    SuperMatrix p(s, s, Storage::Dense);
    p.set(0, 0, Rational(1));
    p.set(2, 2, Rational(1));
    CHECK(dims_of(p) == std::pair<long, long>{1, 1});
    SuperMatrix notp(s, s, Storage::Dense);
    notp.set(0, 0, Rational(2));
    CHECK_THROWS_AS(dims_of(notp), std::domain_error);
}

TEST_CASE("slab kernels agree with SuperMatrix arithmetic") {
    auto s = GradedSpace::defining(3, 2);
    SuperMatrix a(s, s, Storage::Sparse);
    a.set(0, 1, rat(1, 2));
    a.set(1, 0, rat(-2, 3));
    a.set(2, 2, Rational(5));
    a.set(4, 3, rat(7, 5));
    ScaledOp op = ScaledOp::from(a);
    Slab b = identity_slab(5, 0, 5);
    Slab r = apply(op, b);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(r.entry(i, j) == a.at(i, j));
    // chained application matches the matrix square
    Slab r2 = apply(op, r);
    SuperMatrix a2 = a * a;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(r2.entry(i, j) == a2.at(i, j));
    // lincomb
    Slab comb = lincomb({{rat(2, 7), &r}, {rat(-1, 3), &r2}});
    SuperMatrix want = a.scaled(rat(2, 7)) - a2.scaled(rat(1, 3));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(comb.entry(i, j) == want.at(i, j));
    CHECK(equal_slabs(r, r));
    CHECK(!equal_slabs(r, r2));
    // trace accumulation
    Rational tr(0), str(0);
    accumulate_traces(r, 0, s.parities(), tr, str);
    CHECK(tr == a.trace());
    CHECK(str == a.supertrace());
}

TEST_CASE("slab kernels fall back to big integers exactly") {
    auto s = GradedSpace::defining(2, 0);
    SuperMatrix a(s, s, Storage::Dense);
    // values that overflow int64 after a few squarings
    a.set(0, 0, Rational(mpz_class("123456789012345678")));
    a.set(0, 1, Rational(1));
    a.set(1, 0, Rational(1));
    ScaledOp op = ScaledOp::from(a);
    Slab b = identity_slab(2, 0, 2);
    Slab cur = b;
    SuperMatrix m = SuperMatrix::identity(s);
    for (int k = 0; k < 3; ++k) {
        cur = apply(op, cur);
        m = a * m;
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(cur.entry(i, j) == m.at(i, j));
}

TEST_CASE("brauer relations hold for a tiny orthogonal case") {
    // so(3) = osp(3|0): P and K on V(3|0)
    auto v = GradedSpace::defining(3, 0);
    SuperMatrix p = superperm(v);
    SuperMatrix k(GradedSpace::tensor(v, v), GradedSpace::tensor(v, v), Storage::Dense);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) k.set(i * 3 + i, j * 3 + j, Rational(1));
    auto res = verify_brauer(p.with_storage(Storage::Sparse), k.with_storage(Storage::Sparse),
                             Rational(3), 4);
    for (const auto& r : res) {
        INFO(r.name);
        CHECK(r.ok);
    }
}
