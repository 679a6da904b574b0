#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cpm/cpm_groups.hpp"
#include "cpm/monomial.hpp"
#include "cpm/report.hpp"

namespace cpm {

// Point of the base P^1 as [kappa0 : kappa1], kappa' = kappa0 / kappa1.
struct BaseParam {
    cplx k0{1}, k1{1};

    static BaseParam from_kappa(cplx kappa);
    static BaseParam infinity();
    // kappa' = k' + i k
    static BaseParam from_kk(cplx kp, cplx k);

    BaseParam normalized() const;
    bool is_infinite() const;
    cplx kappa() const;                // DomainError at infinity
    std::pair<cplx, cplx> kk() const;  // (k', k); DomainError at kappa' = 0, infinity
    std::string str() const;
};

// Chordal distance on P^1.
double chordal(const BaseParam& x, const BaseParam& y);

enum class FiberTag { smooth, deg_pm1_0, deg_0_pm1, deg_inf };

// sign is +1/-1 for the two fibers of a degenerate pair, 0 when smooth.
struct FiberClass {
    FiberTag tag = FiberTag::smooth;
    int sign = 0;
    std::string str() const;
    bool operator==(const FiberClass&) const = default;
};

FiberClass classify(const BaseParam& base, double tol = kEpsPt);
bool near_degenerate(const BaseParam& base, double radius = 1e3 * kEpsPt);

// Degenerate fiber x_p^N = i^s1 x_q^N, x_r^N = i^s2 x_s^N; its lines are
// x_p = zeta^{s1+4m} x_q, x_r = zeta^{s2+4n} x_s with (p,q,r,s) = pairs.
struct DegenerateFiber {
    std::string label;
    BaseParam base;
    FiberClass cls;
    std::array<int, 4> pairs;
    int s1 = 0, s2 = 0;
};

// The six degenerate fibers, ordered (1,0), (-1,0), (0,1), (0,-1), (inf,inf+), (inf,inf-).
const std::vector<DegenerateFiber>& degenerate_fibers();
const DegenerateFiber& degenerate_fiber(const FiberClass& cls);

// Sing^0 (a = 0) and Sing^1 (a != 0) of a degenerate fiber, exactly.
struct SingularSets {
    std::vector<ExactPoint> sing0, sing1;
};
SingularSets singular_points(const DegenerateFiber& f, int N);

double surface_residual(const ProjPoint& p, int N);
bool on_surface(const ProjPoint& p, int N, double tol = kEpsPt);
double fiber_residual(const ProjPoint& p, const BaseParam& base, int N);
bool on_fiber(const ProjPoint& p, const BaseParam& base, int N, double tol = kEpsPt);

struct FiberResult {
    BaseParam base;
    FiberClass cls;
    bool proximity_warning = false;
};

// Projection of the Fermat surface onto the base; DomainError off the surface.
FiberResult fiber_map(const ProjPoint& p, int N, double tol = kEpsPt);

std::vector<ProjPoint> sample_fiber(const BaseParam& base, int N, int count, uint64_t seed);

// Random base point in the annulus 0.3 <= |kappa'| <= 3, away from the degenerate set.
BaseParam random_smooth_base(uint64_t seed);

// Mobius transformation [[m0, m1], [m2, m3]] of the base.
struct Mobius {
    std::array<cplx, 4> m{1, 0, 0, 1};
    BaseParam operator()(const BaseParam& x) const;
    Mobius operator*(const Mobius& o) const;
};

// Base action of a word over u1 u2 U S T (G_N letters act trivially).
Mobius base_action(const std::string& word);
BaseParam modular_action_base(const std::string& word, const BaseParam& base);
bool equivariance_check(const CpmGroupBundle& b, const std::string& word, const ProjPoint& p,
                        double tol = kEpsPt);

VerificationReport verify_aut_lambda();
VerificationReport verify_fibration(const CpmGroupBundle& b, int samples, uint64_t seed);
// Fixed loci of V0, V1, V0V1, V0V1^-1 against the singular sets, and freeness of H on smooth fibers.
VerificationReport fixed_point_check(const CpmGroupBundle& b, int samples, uint64_t seed);

// Points of the surface fixed by a diagonal map, exactly.
std::vector<ExactPoint> fixed_points_on_surface(const MonomialMap& g);

}  // namespace cpm
