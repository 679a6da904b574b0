#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpm/cpm_groups.hpp"

using namespace cpm;

namespace {

std::string failures(const VerificationReport& r) {
    std::string s;
    for (auto& c : r.checks)
        if (c.status == Status::fail) s += c.name + " [" + c.witness + "]; ";
    return s;
}

}  // namespace

TEST_CASE("all group suites pass for N = 2..5") {
    for (int N = 2; N <= 5; ++N) {
        CAPTURE(N);
        auto r = verify_all_groups(build(N));
        CHECK_MESSAGE(r.ok(), failures(r));
        CHECK(r.count(Status::pass) > 0);
    }
}

TEST_CASE("orders are 4N^3 and 96N^3") {
    for (int N = 2; N <= 4; ++N) {
        auto b = build(N);
        CHECK(b.GN.size() == static_cast<size_t>(4 * N * N * N));
        CHECK(b.Gt.size() == static_cast<size_t>(96 * N * N * N));
        CHECK(b.H.size() == static_cast<size_t>(N * N));
    }
}

TEST_CASE("named elements act on coordinates as stated") {
    const int N = 3;
    auto b = build(N);
    cplx w = zeta_pow(N, 4);
    ProjPoint p({cplx(0.3, 0.1), cplx(-1.2, 0.4), cplx(0.7, -0.9), cplx(1.1, 0.2)});
    auto [a, bb, c, d] = p.c;
    CHECK(approx_eq(apply(b("V0"), p), ProjPoint({w * a, bb, w * c, d})));
    CHECK(approx_eq(apply(b("V1"), p), ProjPoint({w * a, bb, c, w * d})));
    CHECK(approx_eq(apply(b("V0 V1"), p), ProjPoint({w * a, bb / w, c, d})));
    CHECK(approx_eq(apply(b("V0 V1^-1"), p), ProjPoint({a, bb, w * c, d / w})));
}

TEST_CASE("generators preserve the Fermat surface") {
    std::mt19937_64 rng(1);
    for (int N = 2; N <= 5; ++N) {
        // a^{2N} + c^{2N} = b^{2N} + d^{2N} with b, c, d random
        std::normal_distribution<double> g;
        cplx b0(g(rng), g(rng)), c0(g(rng), g(rng)), d0(g(rng), g(rng));
        cplx a0 = std::pow(std::pow(b0, 2 * N) + std::pow(d0, 2 * N) - std::pow(c0, 2 * N), 1.0 / (2 * N));
        ProjPoint p({a0, b0, c0, d0});
        for (auto* gname : {"u1", "u2", "U", "S", "T"}) {
            auto q = apply(cpm_generator(gname, N), p).c;
            cplx r = std::pow(q[0], 2 * N) + std::pow(q[2], 2 * N) - std::pow(q[1], 2 * N) - std::pow(q[3], 2 * N);
            CHECK(std::abs(r) < 1e-9);
        }
    }
}

TEST_CASE("dihedral classes of U, j, i") {
    auto b = build(4);
    auto cls = dihedral_classes(b);
    CHECK(cls.of(b("U")) == std::array<int, 3>{0, 1, 0});
    CHECK(cls.of(b("j")) == std::array<int, 3>{1, 0, 0});
    CHECK(cls.of(b("i")) == std::array<int, 3>{0, 0, 1});
    CHECK(cls.of(b("V0")) == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("divisibility epimorphism G_6 -> G_3 and G_4 -> G_2") {
    CHECK(verify_divisibility(build(3), build(6)).ok());
    CHECK(verify_divisibility(build(2), build(4)).ok());
}
