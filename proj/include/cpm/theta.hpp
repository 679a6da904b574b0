#pragma once
#include <array>
#include <cstdint>

#include "cpm/fermat.hpp"
#include "cpm/monomial.hpp"
#include "cpm/report.hpp"

namespace cpm {

struct PrecisionError : DomainError {
    using DomainError::DomainError;
};

constexpr double kMinImTau = 0.05;

// Number of product factors whose omitted tail changes the value by less than 1e-16 relatively.
int theta_terms(cplx v, cplx tau);

// Jacobi theta_j(v, tau), j = 1..4, from the product formula; terms = 0 picks theta_terms.
cplx theta(int j, cplx v, cplx tau, int terms = 0);
std::array<cplx, 4> thetas(cplx v, cplx tau, int terms = 0);
// Fourier series evaluation, used as an independent check of the product.
cplx theta_series(int j, cplx v, cplx tau);

// (k', k) = (theta4(0)^2, theta2(0)^2) / theta3(0)^2.
std::pair<cplx, cplx> moduli_from_tau(cplx tau);
BaseParam base_from_tau(cplx tau);

// [theta1 : theta2 : theta3 : theta4](v, tau) on the N = 2 Fermat surface.
ProjPoint uniformize(cplx v, cplx tau);

VerificationReport verify_evaluator(int samples, uint64_t seed);
VerificationReport verify_transforms(cplx tau, cplx v);
VerificationReport verify_algebraic(cplx tau, cplx v);
VerificationReport verify_uniformization(cplx tau, int samples, uint64_t seed);
VerificationReport verify_g2_correspondence(cplx tau, int samples, uint64_t seed);
// The orbit of v = 1/4 under u1, u2, U modulo 2Z + 2 tau Z.
VerificationReport verify_quarter_orbit(cplx tau);
// Everything above, with transforms and identities at `samples` random (v, tau).
VerificationReport verify_theta(cplx tau, int samples, uint64_t seed);

}  // namespace cpm
