#pragma once
#include <vector>

#include "cpm/monomial.hpp"

namespace cpm {

// Roots of sum coeffs[k] x^k; trailing zero leading coefficients are dropped.
std::vector<cplx> poly_roots(std::vector<cplx> coeffs);

// Groups nearby values; returns one representative and a multiplicity per cluster.
std::vector<std::pair<cplx, int>> cluster(const std::vector<cplx>& xs, double tol);

}  // namespace cpm
