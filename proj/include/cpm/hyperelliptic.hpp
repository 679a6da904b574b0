#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "cpm/cpm_groups.hpp"
#include "cpm/fermat.hpp"

namespace cpm {

// Point of P^1 as a pair [x0 : x1].
using P1 = BaseParam;

struct IndeterminateError : DomainError {
    using DomainError::DomainError;
};

// (t, lambda) on a quotient curve over a base point.
struct HypPoint {
    P1 t, lambda;
    BaseParam base;
    std::string str() const;
};

enum class Quotient { H, Hr, Hl };
std::string to_string(Quotient q);

// H: (ab/cd, d^N/c^N); H_r: (ac/bd, i d^N/b^N); H_l: (omega^-1/2 ad/bc, b^N/c^N).
// IndeterminateError on the fundamental locus of the map.
HypPoint invariants(Quotient q, const ProjPoint& p, int N);
inline HypPoint invariants_H(const ProjPoint& p, int N) { return invariants(Quotient::H, p, N); }
inline HypPoint invariants_Hr(const ProjPoint& p, int N) { return invariants(Quotient::Hr, p, N); }
inline HypPoint invariants_Hl(const ProjPoint& p, int N) { return invariants(Quotient::Hl, p, N); }

// Scaled residual of the curve equation of the quotient family, homogenized in t and lambda.
double curve_residual(Quotient q, const HypPoint& h, int N);
bool hyp_equal(const HypPoint& x, const HypPoint& y, double tol = check_tol());

// sigma^s theta^a iota^b.
struct DihedralElement {
    int s = 0, a = 0, b = 0;
    static DihedralElement parse(const std::string& word, int N);
    bool operator==(const DihedralElement&) const = default;
};
DihedralElement operator*(const DihedralElement& x, const DihedralElement& y);
DihedralElement normal_form(const DihedralElement& d, int N);

HypPoint dihedral_action(const DihedralElement& d, const HypPoint& h, int N);
VerificationReport quotient_equivariance(const CpmGroupBundle& b, int samples, uint64_t seed);

enum class DegComponent { t_pow_one, t_pow_minus_one, t_infinite, lambda_zero, lambda_infinite, lambda_one,
                          lambda_minus_one };
std::string to_string(DegComponent c);
// Components of the degenerate curve over hp.base containing hp; empty if off the curve.
// DomainError on a smooth base.
std::vector<DegComponent> degenerate_membership(const HypPoint& hp, int N, double tol = kEpsPt);

// M is "T", "T^2" or "S T^-2 S^-1".
HypPoint modular_action_W(const std::string& M, const HypPoint& h, int N);
VerificationReport modular_consistency(const CpmGroupBundle& b, int samples, uint64_t seed);

VerificationReport cross_family_iso(const CpmGroupBundle& b, int samples, uint64_t seed);

// Riemann-Hurwitz for t^N = R(lambda); DomainError when branch points collide.
int genus_check(int N, const BaseParam& base);

// H-orbit collapse, curve equations, distinctness of the three quotients, genus.
VerificationReport verify_quotients(const CpmGroupBundle& b, int samples, uint64_t seed);

}  // namespace cpm
