#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpm/cpm_groups.hpp"
#include "cpm/theta.hpp"

using namespace cpm;

namespace {
const cplx I(0, 1);
}

TEST_CASE("theta values") {
    CHECK(std::abs(theta(1, 0, cplx(0.3, 1.1))) == 0.0);
    auto [kp, k] = moduli_from_tau(I);
    CHECK(std::abs(k - kp) < 1e-12);
    auto [kp2, k2] = moduli_from_tau(cplx(0.3, 1.1));
    CHECK(std::abs(k2 * k2 + kp2 * kp2 - 1.0) < 1e-10);
    CHECK_THROWS_AS(theta(2, 0.1, cplx(0, 0.01)), PrecisionError);
}

TEST_CASE("product agrees with series") {
    for (cplx tau : {cplx(0.1, 0.6), cplx(-0.4, 1.3)})
        for (cplx v : {cplx(0.2, 0.1), cplx(1.3, -0.3)})
            for (int j = 1; j <= 4; ++j) CHECK(std::abs(theta(j, v, tau) - theta_series(j, v, tau)) < 1e-12);
}

TEST_CASE("transformation laws and identities") {
    cplx tau(0.2, 0.9), v(0.37, 0.11);
    CHECK(verify_transforms(tau, v).ok());
    CHECK(verify_algebraic(tau, v).ok());
    CHECK(std::abs(theta(4, v + 1.0, tau) - theta(4, v, tau)) < 1e-12);
    auto [kp, k] = moduli_from_tau(tau);
    CHECK(std::abs(k * std::pow(theta(4, 0, tau), 2) - kp * std::pow(theta(2, 0, tau), 2)) < 1e-12);
}

TEST_CASE("uniformization") {
    cplx tau(0.2, 0.9);
    ProjPoint p = uniformize(0.41, tau);
    CHECK(on_surface(p, 2));
    CHECK(chordal(fiber_map(p, 2).base, base_from_tau(tau)) < 1e-9);
    CHECK(approx_eq(uniformize(2.41, tau), p));
    ProjPoint z = uniformize(0, tau);
    CHECK(z.c[0] == 0.0);
    CHECK(on_fiber(z, base_from_tau(tau), 2));
}

TEST_CASE("correspondence rows") {
    cplx tau(0.2, 0.9), v(0.3, 0.05);
    CHECK(approx_eq(apply(cpm_generator("u2", 2), uniformize(v, tau)), uniformize(v + 0.5, tau)));
    CHECK(approx_eq(apply(cpm_generator("U", 2), uniformize(0, tau)), uniformize(0, tau)));
    CHECK(approx_eq(apply(cpm_generator("T", 2), uniformize(v, tau)), uniformize(v, tau + 1.0)));
    CHECK(verify_g2_correspondence(tau, 10, 1).ok());
}

TEST_CASE("orbit of 1/4") { CHECK(verify_quarter_orbit(cplx(0.2, 0.9)).ok()); }
