#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cpm/cpm_groups.hpp"
#include "cpm/reference_groups.hpp"

using namespace cpm;

TEST_CASE("closure of the trivial generator set") {
    auto G = closure(3, {{"1", MonomialMap::identity(3)}});
    CHECK(G.size() == 1);
    CHECK(quotient(G, G).table.n == 1);
}

TEST_CASE("closure orders of G_N and its modular extension") {
    CHECK(build(3).GN.size() == 108);
    CHECK(build(2).Gt.size() == 768);
}

TEST_CASE("closure aborts past the cap") {
    CHECK_THROWS_AS(closure(3, {{"u1", cpm_generator("u1", 3)}, {"u2", cpm_generator("u2", 3)}}, 5), ClosureOverflow);
}

TEST_CASE("center, normalizer and quotient") {
    auto b2 = build(2), b3 = build(3);
    CHECK(center(b3.GN).size() == 1);
    auto z = center(b2.GN);
    CHECK(z.size() == 4);
    CHECK(z.contains(power(b2("u1"), 2)));
    CHECK(z.contains(power(b2("u2"), 2)));
    CHECK(normalizer(b3.GN, b3.GN) == b3.GN);
    auto Q = quotient(b2.Gt, b2.GN);
    CHECK(Q.table.n == 24);
    CHECK(Q.kernel_size * Q.table.n == b2.Gt.size());
    CHECK(quotient(b3.GN, b3.H).table.n == 12);
}

TEST_CASE("quotient by a non-normal subgroup is rejected") {
    auto b = build(3);
    auto K = closure(3, {{"S", b("S")}});
    CHECK_THROWS_AS(quotient(b.Gt, K), NotNormal);
}

TEST_CASE("PSL2(Z4) reference matches a direct matrix count") {
    // SL2(Z4) has 48 elements; modulo -I there are 24
    std::set<std::array<int, 4>> psl;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                    if (((a * d - b * c) % 4 + 4) % 4 == 1) {
                        std::array<int, 4> m{a, b, c, d}, n{(4 - a) % 4, (4 - b) % 4, (4 - c) % 4, (4 - d) % 4};
                        psl.insert(std::min(m, n));
                    }
    CHECK(psl.size() == 24);
    CHECK(psl2_z4().table.n == 24);
    CHECK(sl2(4).table.n == 48);
    CHECK(z2_times_dihedral(5).table.n == 20);
}

TEST_CASE("presentation checks") {
    auto b = build(3);
    CHECK(check_relation("u1 u2 u1^-1 = U^2 u2^-3", b.named, 3).holds);
    CHECK(verify_presentation(b.GN, {}, b.named));
    CHECK(check_relation("T^4 = u2^2", build(4).named, 4).holds);
    CHECK_THROWS_AS(evaluate("u1 Q", b.named, 3), UnknownLabel);
}

TEST_CASE("transporter from H to H_l is a coset of the normalizer") {
    auto b = build(3);
    auto t = transporter(b.Gt, b.H, b.Hl);
    REQUIRE(t.has_value());
    auto NH = normalizer(b.Gt, b.H);
    CHECK(t->elements.size() == NH.size());
    CHECK(coset_equals(*t, inverse(b("S")), NH));
}

TEST_CASE("recognition of G~_N / G_N as PSL2(Z4)") {
    auto b = build(3);
    auto Q = quotient(b.Gt, b.GN);
    auto P = psl2_z4();
    auto hom = recognize(b.Gt, Q, {{b.gen("S", "S"), P.at("S")}, {b.gen("T", "T"), P.at("T*")}}, P.table);
    CHECK(hom.has_value());
    auto bad = recognize(b.Gt, Q, {{b.gen("S", "S"), P.at("T*")}, {b.gen("T", "T"), P.at("T*")}}, P.table);
    CHECK_FALSE(bad.has_value());
}
