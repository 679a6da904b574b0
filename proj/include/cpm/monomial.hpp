#pragma once
#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpm {

using cplx = std::complex<double>;

inline int mod(long long a, long long m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Exponent of zeta = e^{pi i / 2N}, always kept in [0, 4N).
class RootExponent {
public:
    RootExponent() = default;
    RootExponent(int value, int N) : N_(N), v_(mod(value, 4LL * N)) {}
    int value() const { return v_; }
    int N() const { return N_; }
    RootExponent operator+(const RootExponent& o) const { return {v_ + o.v_, N_}; }
    RootExponent operator-() const { return {-v_, N_}; }
    cplx value_c() const;
    bool operator==(const RootExponent&) const = default;

private:
    int N_ = 2;
    int v_ = 0;
};

cplx zeta_pow(int N, long long e);

// Projective map x_i -> zeta^{exps[i]} x_{perm[i]}.
struct MonomialMap {
    int N = 2;
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> exps{0, 0, 0, 0};

    static MonomialMap identity(int N);
    // Canonical (exps[0] == 0).
    static MonomialMap make(int N, std::array<int, 4> perm, std::array<int, 4> exps);
    // Keeps the given scalar; only canonical_eq identifies it with its canonical form.
    static MonomialMap raw(int N, std::array<int, 4> perm, std::array<int, 4> exps);

    MonomialMap canonical() const;
    bool is_canonical() const { return exps[0] == 0; }
    bool is_diagonal() const { return perm == std::array<int, 4>{0, 1, 2, 3}; }
    uint64_t key() const;
    std::string str() const;
    bool operator==(const MonomialMap&) const = default;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

MonomialMap compose(const MonomialMap& g, const MonomialMap& h);
MonomialMap inverse(const MonomialMap& g);
MonomialMap power(const MonomialMap& g, long long k);
bool canonical_eq(const MonomialMap& g, const MonomialMap& h);

struct ProjPoint {
    std::array<cplx, 4> c{};

    ProjPoint() = default;
    explicit ProjPoint(std::array<cplx, 4> coords);
    ProjPoint normalized() const;
    double max_abs() const;
    std::string str() const;
};

inline constexpr double kEpsPt = 1e-9;

// Relative projective distance; 0 when the points agree up to one scalar.
double proj_distance(const ProjPoint& p, const ProjPoint& q);
bool approx_eq(const ProjPoint& p, const ProjPoint& q, double tol = kEpsPt);

ProjPoint apply(const MonomialMap& g, const ProjPoint& p);

// Point whose coordinates are each 0 or a power of zeta (exps[i] < 0 means 0).
struct ExactPoint {
    int N = 2;
    std::array<int, 4> e{-1, -1, -1, -1};

    static ExactPoint make(int N, std::array<int, 4> e);
    bool is_zero(int i) const { return e[i] < 0; }
    ProjPoint numeric() const;
    std::string str() const;
    auto operator<=>(const ExactPoint&) const = default;
};

ExactPoint apply(const MonomialMap& g, const ExactPoint& p);

}  // namespace cpm
