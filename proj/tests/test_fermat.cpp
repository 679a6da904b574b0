#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpm/fermat.hpp"

using namespace cpm;

namespace {
const cplx I(0, 1);
}

TEST_CASE("the all-ones point") {
    ProjPoint p({1, 1, 1, 1});
    for (int N = 2; N <= 5; ++N) {
        CHECK(on_surface(p, N));
        auto r = fiber_map(p, N);
        CHECK(chordal(r.base, BaseParam::from_kappa(I)) < 1e-12);
        CHECK(r.cls == FiberClass{FiberTag::deg_0_pm1, 1});
        CHECK(on_fiber(p, BaseParam::from_kappa(I), N));
    }
}

TEST_CASE("sampled fibers round-trip through the projection") {
    for (int N = 2; N <= 4; ++N) {
        BaseParam base = BaseParam::from_kappa(cplx(0.3, 0.4));
        auto pts = sample_fiber(base, N, 100, 11);
        CHECK(pts.size() == 100);
        for (auto& p : pts) {
            CHECK(on_surface(p, N));
            CHECK(on_fiber(p, base, N));
            CHECK(chordal(fiber_map(p, N).base, base) < 1e-9);
        }
    }
    CHECK(sample_fiber(BaseParam::from_kappa(0.5), 3, 0, 1).empty());
}

TEST_CASE("degenerate fiber at kappa' = i has a^N = d^N and b^N = c^N") {
    const int N = 3;
    for (auto& p : sample_fiber(BaseParam::from_kappa(I), N, 20, 2)) {
        auto x = p.normalized().c;
        CHECK(std::abs(std::pow(x[0], N) - std::pow(x[3], N)) < 1e-9);
        CHECK(std::abs(std::pow(x[1], N) - std::pow(x[2], N)) < 1e-9);
    }
}

TEST_CASE("a point with a = b and c = -d lies over kappa' = -1") {
    // N = 2: a = b, c = zeta^2 d = i d; a^2 = b^2, c^2 = -d^2
    ProjPoint p({1, 1, I, 1});
    auto r = fiber_map(p, 2);
    CHECK(chordal(r.base, BaseParam::from_kappa(-1)) < 1e-12);
}

TEST_CASE("base action of S and T") {
    CHECK(chordal(modular_action_base("S", BaseParam::from_kappa(2)), BaseParam::from_kappa(I / 2.0)) < 1e-12);
    CHECK(chordal(modular_action_base("T", BaseParam::from_kappa(I)), BaseParam::from_kappa(0)) < 1e-12);
    CHECK(chordal(modular_action_base("S T^2 S T^2", BaseParam::from_kappa(0.7)), BaseParam::from_kappa(-0.7)) < 1e-12);
}

TEST_CASE("G_N acts fiberwise and the modular generators act on the base") {
    auto b = build(3);
    auto pts = sample_fiber(random_smooth_base(5), 3, 5, 6);
    for (auto& p : pts)
        for (auto* w : {"u2", "u1 U", "S", "T", "S T^-1", "T S T"}) CHECK(equivariance_check(b, w, p));
}

TEST_CASE("Mobius group of the base has 24 elements") { CHECK(verify_aut_lambda().ok()); }

TEST_CASE("fibration and fixed-point suites pass") {
    for (int N = 2; N <= 4; ++N) {
        auto b = build(N);
        CHECK(verify_fibration(b, 200, 3).ok());
        CHECK(fixed_point_check(b, 30, 4).ok());
    }
}

TEST_CASE("singular sets over (0,1) for N = 3") {
    auto s = singular_points(degenerate_fiber({FiberTag::deg_0_pm1, 1}), 3);
    CHECK(s.sing0.size() == 3);
    CHECK(s.sing1.size() == 3);
    auto b = build(3);
    for (auto& p : s.sing0) CHECK(apply(b("V1"), p) == p);
}

TEST_CASE("fiber_map rejects points off the surface") {
    CHECK_THROWS_AS(fiber_map(ProjPoint({1, 0, 0, 0.5}), 3), DomainError);
}
