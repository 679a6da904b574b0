#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "cpm/hyperelliptic.hpp"

using namespace cpm;

namespace {
const cplx I(0, 1);
P1 fin(cplx z) { return BaseParam::from_kappa(z); }
}  // namespace

TEST_CASE("quotient maps land on their curves") {
    const int N = 3;
    BaseParam base = BaseParam::from_kappa(cplx(0.4, 0.2));
    for (auto& p : sample_fiber(base, N, 12, 3)) {
        CHECK(curve_residual(Quotient::H, invariants_H(p, N), N) < 1e-9);
        CHECK(curve_residual(Quotient::Hr, invariants_Hr(p, N), N) < 1e-9);
        CHECK(curve_residual(Quotient::Hl, invariants_Hl(p, N), N) < 1e-9);
    }
}

TEST_CASE("V1 does not change the H-invariants") {
    auto b = build(4);
    for (auto& p : sample_fiber(random_smooth_base(2), 4, 5, 3))
        CHECK(hyp_equal(invariants_H(p, 4), invariants_H(apply(b("V1"), p), 4)));
}

TEST_CASE("dihedral action formulas") {
    HypPoint h{fin(1), fin(2), BaseParam::from_kappa(cplx(0.4, 0.2))};
    auto r = dihedral_action(DihedralElement::parse("theta", 3), h, 3);
    CHECK(chordal(r.t, fin(zeta_pow(3, 4))) < 1e-12);
    CHECK(chordal(r.lambda, fin(2)) < 1e-12);
    CHECK(DihedralElement::parse("sigma sigma", 3) == DihedralElement{});
    CHECK(DihedralElement::parse("iota theta iota", 5) == DihedralElement::parse("theta^-1", 5));
    CHECK(DihedralElement::parse("theta^5", 5) == DihedralElement{});
    CHECK_THROWS_AS(DihedralElement::parse("rho", 3), UnknownLabel);
}

TEST_CASE("modular action of T") {
    HypPoint h{fin(1), fin(2), BaseParam::from_kk(0.6, 0.8)};
    auto r = modular_action_W("T", h, 3);
    CHECK(chordal(r.t, fin(zeta_pow(3, 2))) < 1e-12);
    CHECK(chordal(r.lambda, fin(0.5)) < 1e-12);
    auto [kp, k] = r.base.kk();
    CHECK(std::abs(kp - 5.0 / 3.0) < 1e-12);
    CHECK(std::abs(k - 4.0 * I / 3.0) < 1e-12);
    auto t4 = modular_action_W("T^2", modular_action_W("T^2", h, 3), 3);
    CHECK(chordal(t4.t, fin(zeta_pow(3, 8))) < 1e-12);
    CHECK(chordal(t4.base, h.base) < 1e-12);
}

TEST_CASE("degenerate membership") {
    CHECK(degenerate_membership({fin(1), fin(5), BaseParam::from_kappa(I)}, 3) ==
          std::vector{DegComponent::t_pow_one});
    CHECK(degenerate_membership({P1::infinity(), fin(1), BaseParam::from_kappa(1)}, 3)[0] == DegComponent::t_infinite);
    CHECK(degenerate_membership({fin(std::polar(1.0, std::numbers::pi / 4)), fin(3), BaseParam::infinity()}, 4) ==
          std::vector{DegComponent::t_pow_minus_one});
    CHECK_THROWS_AS(degenerate_membership({fin(1), fin(5), BaseParam::from_kappa(0.7)}, 3), DomainError);
}

TEST_CASE("genus N - 1") {
    CHECK(genus_check(3, BaseParam::from_kappa(0.3)) == 2);
    CHECK(genus_check(2, BaseParam::from_kappa(cplx(0.5, 0.7))) == 1);
    CHECK(genus_check(5, BaseParam::from_kappa(cplx(1.5, -0.7))) == 4);
    CHECK_THROWS_AS(genus_check(3, BaseParam::from_kappa(-1)), DomainError);
}

TEST_CASE("fundamental locus is rejected") {
    std::array<cplx, 4> x{0, 1, std::pow(2.0, 1.0 / 6), 1};
    CHECK_THROWS_AS(invariants_H(ProjPoint(x), 3), IndeterminateError);
}

TEST_CASE("quotient suites pass for N = 2..6") {
    for (int N = 2; N <= 6; ++N) {
        CAPTURE(N);
        CHECK(verify_quotients(build(N), 4 * N, 5).ok());
    }
}
