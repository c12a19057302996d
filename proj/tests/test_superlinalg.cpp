#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercas/dump.hpp"
#include "supercas/linalg.hpp"

using namespace supercas;

namespace {

// Independent oracle for the multi-factor tensor-product sign: the matrix of
// X_1 (x) ... (x) X_n has entries
//   prod_t X_t^{k_t}_{m_t} * prod_t (-1)^{(sum_{u<t} [m_u]) ([k_t]+[m_t])}.
// Evaluated here entry by entry, independently of graded_kron.
Rational kron_oracle_entry(const std::vector<const SuperMatrix*>& factors,
                           const std::vector<std::size_t>& k, const std::vector<std::size_t>& m) {
    Rational v(1);
    int sign = 0;
    int prefix = 0;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        const auto& f = *factors[t];
        v *= f.at(k[t], m[t]);
        if (v == 0) return Rational(0);
        int hop = (f.row_space().parity(k[t]) + f.col_space().parity(m[t])) & 1;
        sign ^= (prefix & hop);
        prefix ^= f.col_space().parity(m[t]);
    }
    return sign ? -v : v;
}

SuperMatrix random_matrix(const GradedSpace& s, std::mt19937& rng, bool homogeneous_parity = false,
                          int parity = 0) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    SuperMatrix m(s, s, Storage::Dense);
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c) {
            if (homogeneous_parity && ((s.parity(r) + s.parity(c)) & 1) != parity) continue;
            m.set(r, c, rat(num(rng), den(rng)));
        }
    return m;
}

SuperMatrix unit_matrix(const GradedSpace& s, std::size_t i, std::size_t j) {
    SuperMatrix m(s, s, Storage::Dense);
    m.set(i, j, Rational(1));
    return m;
}

} // namespace

TEST_CASE("rational helpers stay canonical") {
    Rational r = rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(rat_str(r) == "-3/2");
    CHECK(rat_str(rat(8, 4)) == "2");
    CHECK(rat_parse("-3/2") == r);
    CHECK(rat_parse("7") == Rational(7));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    Rational sum = rat(1, 6) + rat(1, 3);
    CHECK(sum.get_den() == 2); // canonical after arithmetic
}

TEST_CASE("graded space bookkeeping") {
    auto v = GradedSpace::defining(2, 1);
    CHECK(v.dim() == 3);
    CHECK(v.sdim() == 1);
    CHECK(v.parity(0) == 0);
    CHECK(v.parity(2) == 1);
    auto vv = GradedSpace::tensor(v, v);
    CHECK(vv.dim() == 9);
    CHECK(vv.parity(2) == 1);     // (0,2)
    CHECK(vv.parity(2 * 3 + 2) == 0); // (2,2)
    CHECK(vv.factor_count() == 2);
    auto v4 = GradedSpace::tensor_power(v, 4);
    auto re = v4.regroup(2);
    CHECK(re.factor_count() == 2);
    CHECK(re.factor_dim(0) == 9);
    CHECK(re.same_parities(v4));
}

TEST_CASE("graded_kron matches the sign oracle on V(1|1)") {
    auto v = GradedSpace::defining(1, 1);
    // all sixteen single-entry pairs
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    auto e1 = unit_matrix(v, a, b);
                    auto e2 = unit_matrix(v, c, d);
                    auto k = graded_kron(e1, e2);
                    for (std::size_t r = 0; r < 4; ++r)
                        for (std::size_t cc = 0; cc < 4; ++cc) {
                            Rational want = kron_oracle_entry(
                                {&e1, &e2}, {r / 2, r % 2}, {cc / 2, cc % 2});
                            CHECK(k.at(r, cc) == want);
                        }
                }
    // the specific sign case: e_2^1 (x) e_2^1 entry ((2,2),(1,1)) is +1
    auto e21 = unit_matrix(v, 1, 0);
    auto kk = graded_kron(e21, e21);
    CHECK(kk.at(1 * 2 + 1, 0) == Rational(1));
}

TEST_CASE("graded_kron associativity and supertrace multiplicativity") {
    std::mt19937 rng(7);
    auto v = GradedSpace::defining(2, 2);
    for (int iter = 0; iter < 3; ++iter) {
        auto a = random_matrix(v, rng);
        auto b = random_matrix(v, rng);
        CHECK(graded_kron(a, b).supertrace() == a.supertrace() * b.supertrace());
        auto w = GradedSpace::defining(1, 1);
        auto c = random_matrix(w, rng);
        auto left = graded_kron(graded_kron(a, b), c);
        auto right = graded_kron(a, graded_kron(b, c));
        CHECK(left == right);
    }
    // three-factor kron against the oracle on V(1|1)
    auto w = GradedSpace::defining(1, 1);
    auto x = random_matrix(w, rng);
    auto y = random_matrix(w, rng);
    auto z = random_matrix(w, rng);
    auto k3 = graded_kron(graded_kron(x, y), z);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            Rational want = kron_oracle_entry({&x, &y, &z}, {r / 4, (r / 2) % 2, r % 2},
                                              {c / 4, (c / 2) % 2, c % 2});
            CHECK(k3.at(r, c) == want);
        }
}

TEST_CASE("superpermutation basics") {
    auto v10 = GradedSpace::defining(1, 0);
    CHECK(superperm(v10) == SuperMatrix::identity(GradedSpace::tensor(v10, v10)));
    auto v01 = GradedSpace::defining(0, 1);
    auto p01 = superperm(v01);
    CHECK(p01.at(0, 0) == Rational(-1));
    auto v = GradedSpace::defining(1, 1);
    auto p = superperm(v);
    CHECK(p * p == SuperMatrix::identity(GradedSpace::tensor(v, v)));
    // str P = sdim on V(M|N)^{(x)2}
    auto v32 = GradedSpace::defining(3, 2);
    CHECK(superperm(v32).supertrace() == Rational(1));
    // brute-force oracle: diagonal of P is supported on k1 = k2
    Rational s(0);
    for (std::size_t k = 0; k < 5; ++k) s += Rational(v32.parity(k) ? -1 : 1);
    CHECK(superperm(v32).supertrace() == s);
}

TEST_CASE("symmetric group relations hold for adjacent superpermutations") {
    auto v = GradedSpace::defining(2, 1);
    auto p2 = superperm(v);
    for (std::size_t s = 2; s <= 4; ++s) {
        std::vector<SuperMatrix> sig;
        for (std::size_t a = 1; a < s; ++a) sig.push_back(place(p2, {a, a + 1}, s));
        auto id = SuperMatrix::identity(GradedSpace::tensor_power(v, s), Storage::Sparse);
        for (std::size_t a = 0; a + 1 < s; ++a) CHECK(sig[a] * sig[a] == id);
        for (std::size_t a = 0; a + 2 < s; ++a)
            CHECK(sig[a] * sig[a + 1] * sig[a] == sig[a + 1] * sig[a] * sig[a + 1]);
        for (std::size_t a = 0; a + 1 < s; ++a)
            for (std::size_t b = a + 2; b + 1 < s; ++b)
                CHECK(sig[a] * sig[b] == sig[b] * sig[a]);
    }
}

TEST_CASE("placement: identity case, conjugation property, P13 chain") {
    std::mt19937 rng(11);
    auto v = GradedSpace::defining(1, 1);
    auto vv = GradedSpace::tensor(v, v);
    auto a = random_matrix(vv, rng);
    CHECK(place(a, {1, 2}, 2) == a);

    // P_{23} A_{12} P_{23} = A_{13} on V^{(x)4}
    auto p2 = superperm(v);
    auto p23 = place(p2, {2, 3}, 4);
    CHECK(p23 * place(a, {1, 2}, 4) * p23 == place(a, {1, 3}, 4));

    // P13 = P23 P12 P23 = P12 P23 P12 on V(2|1)^{(x)3}
    auto w = GradedSpace::defining(2, 1);
    auto q2 = superperm(w);
    auto q12 = place(q2, {1, 2}, 3);
    auto q23 = place(q2, {2, 3}, 3);
    auto q13 = place(q2, {1, 3}, 3);
    CHECK(q13 == q23 * q12 * q23);
    CHECK(q13 == q12 * q23 * q12);

    CHECK_THROWS_AS(place(a, {2, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(place(a, {1, 5}, 4), std::out_of_range);

    // reversed two-site placement matches superpermutation conjugation
    CHECK(place2(a, 3, 2, 4) == p23 * place(a, {2, 3}, 4) * p23);
}

TEST_CASE("supertrace of graded commutators vanishes") {
    std::mt19937 rng(23);
    auto v = GradedSpace::defining(2, 2);
    for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
            auto a = random_matrix(v, rng, true, pa);
            auto b = random_matrix(v, rng, true, pb);
            CHECK(graded_commutator(a, pa, b, pb).supertrace() == Rational(0));
        }
}

TEST_CASE("partial supertrace over the second factor") {
    std::mt19937 rng(31);
    auto v = GradedSpace::defining(1, 1);
    auto w = GradedSpace::defining(2, 1);
    // str2(I (x) I) = sdim(W) I
    auto id = graded_kron(SuperMatrix::identity(v), SuperMatrix::identity(w));
    CHECK(partial_supertrace_second(id) == SuperMatrix::identity(v).scaled(rat(w.sdim())));
    // str2(A (x) B) = str(B) A for even A, B
    auto a = random_matrix(v, rng, true, 0);
    auto b = random_matrix(v, rng, true, 0);
    CHECK(partial_supertrace_second(graded_kron(a, b)) == a.scaled(b.supertrace()));
    // str(str2 X) = str X, brute force both sides
    auto vv = GradedSpace::tensor(v, v);
    auto x = random_matrix(vv, rng);
    CHECK(partial_supertrace_second(x).supertrace() == x.supertrace());
    CHECK_THROWS_AS(partial_supertrace_second(random_matrix(v, rng)), std::invalid_argument);
}

TEST_CASE("dense and sparse storage agree bit for bit") {
    std::mt19937 rng(41);
    auto v = GradedSpace::defining(2, 2);
    auto a = random_matrix(v, rng);
    auto b = random_matrix(v, rng);
    auto ad = a.with_storage(Storage::Dense), as = a.with_storage(Storage::Sparse);
    auto bd = b.with_storage(Storage::Dense), bs = b.with_storage(Storage::Sparse);
    CHECK(ad == as);
    CHECK(ad * bd == as * bs);
    CHECK(ad + bd == as + bs);
    CHECK(graded_kron(ad, bd) == graded_kron(as, bs));
    CHECK((ad * bd).supertrace() == (as * bs).supertrace());
}

TEST_CASE("matrix dump format") {
    auto v = GradedSpace::defining(1, 1);
    SuperMatrix m(v, v, Storage::Dense);
    m.set(0, 1, rat(-1, 2));
    m.set(1, 0, Rational(3));
    CHECK(dump_matrix_json(m) ==
          R"({"rows":2,"cols":2,"parities":[0,1],"entries":[[0,1,"-1/2"],[1,0,"3"]]})");
}
