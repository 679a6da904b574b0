#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cpm/cpm_groups.hpp"
#include "cpm/report.hpp"

namespace cpm {

// diag: C^2 / <diag(omega, omega)>, A: C^2 / <diag(omega, omega^-1)>.
enum class SingKind { diag, A };
std::string to_string(SingKind k);

struct SingularityType {
    SingKind kind = SingKind::A;
    int N = 2;
};

// Exponents (of z1, z2) of a monomial.
using Exponent = std::array<int, 2>;
// Chart coordinates (u, v) as two monomials.
using Chart = std::array<Exponent, 2>;

struct ResolutionData {
    SingularityType type;
    std::vector<Chart> charts;
    std::vector<int> self_intersection;        // E_1 .. E_r, read off the chart transitions
    std::vector<std::vector<int>> intersection;  // E_i . E_j
};

// Hirzebruch-Jung continued fraction n/q = b1 - 1/(b2 - ...).
std::vector<int> hj_fraction(int n, int q);

ResolutionData resolve(const SingularityType& s);

// Coefficients (alpha, beta) with m = alpha u + beta v; nullopt when m is not in the chart lattice.
std::optional<std::array<int, 2>> chart_coords(const Chart& c, const Exponent& m);

struct Multiplicities {
    std::vector<int> E;  // E_1 .. E_r
    int D0 = 0, DN = 0;
};
// Orders of vanishing of z1^N and z2^N along the exceptional and boundary divisors.
std::pair<Multiplicities, Multiplicities> divisor_multiplicities(const SingularityType& s);
inline std::pair<Multiplicities, Multiplicities> divisor_multiplicities(int N) {
    return divisor_multiplicities({SingKind::A, N});
}

enum class ChiImage { zero_one, one_zero, cover };
std::string to_string(ChiImage c);

struct CurveImage {
    std::string curve;
    ChiImage image = ChiImage::zero_one;
    int degree = 0;  // cover degree when image == cover
};

// Behavior of chi = [z1^N : z2^N] on the resolution of the A_{N-1} point.
struct ChiAnalysis {
    std::vector<CurveImage> curves;          // E_1 .. E_{N-1}, D_0, D_N
    std::optional<int> fundamental_point;    // chart index j of o_j
    int blowup_degree = 0;                   // degree of chi on the blow-up curve
};
ChiAnalysis chi_analysis(int N);

VerificationReport verify_resolution(int N);
VerificationReport classify_orbifold(const CpmGroupBundle& b);

}  // namespace cpm
