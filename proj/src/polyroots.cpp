#include "cpm/polyroots.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

namespace cpm {

std::vector<cplx> poly_roots(std::vector<cplx> coeffs) {
    double scale = 0;
    for (auto& c : coeffs) scale = std::max(scale, std::abs(c));
    while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-14 * scale) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    Eigen::Matrix<cplx, Eigen::Dynamic, 1> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[static_cast<Eigen::Index>(k)] = coeffs[k];
    Eigen::PolynomialSolver<cplx, Eigen::Dynamic> solver(c);
    const auto& r = solver.roots();
    return {r.data(), r.data() + r.size()};
}

std::vector<std::pair<cplx, int>> cluster(const std::vector<cplx>& xs, double tol) {
    std::vector<std::pair<cplx, int>> out;
    for (auto& x : xs) {
        bool merged = false;
        for (auto& [rep, m] : out)
            if (std::abs(x - rep) <= tol * std::max(1.0, std::abs(rep))) {
                ++m;
                merged = true;
                break;
            }
        if (!merged) out.push_back({x, 1});
    }
    return out;
}

}  // namespace cpm
