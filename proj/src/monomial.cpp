#include "cpm/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cpm {

cplx zeta_pow(int N, long long e) {
    int r = mod(e, 4LL * N);
    return std::polar(1.0, std::numbers::pi * r / (2.0 * N));
}

cplx RootExponent::value_c() const { return zeta_pow(N_, v_); }

MonomialMap MonomialMap::identity(int N) { return make(N, {0, 1, 2, 3}, {0, 0, 0, 0}); }

MonomialMap MonomialMap::raw(int N, std::array<int, 4> perm, std::array<int, 4> exps) {
    if (N < 2) throw DomainError("N must be >= 2");
    std::array<bool, 4> seen{};
    for (int p : perm) {
        if (p < 0 || p > 3 || seen[p]) throw DomainError("not a permutation of {0,1,2,3}");
        seen[p] = true;
    }
    MonomialMap g;
    g.N = N;
    g.perm = perm;
    for (int i = 0; i < 4; ++i) g.exps[i] = mod(exps[i], 4LL * N);
    return g;
}

MonomialMap MonomialMap::make(int N, std::array<int, 4> perm, std::array<int, 4> exps) {
    return raw(N, perm, exps).canonical();
}

MonomialMap MonomialMap::canonical() const {
    MonomialMap g = *this;
    int s = exps[0];
    for (int i = 0; i < 4; ++i) g.exps[i] = mod(exps[i] - s, 4LL * N);
    return g;
}

uint64_t MonomialMap::key() const {
    uint64_t k = 0;
    for (int i = 0; i < 4; ++i) k = k * 4 + static_cast<uint64_t>(perm[i]);
    for (int i = 0; i < 4; ++i) k = (k << 12) | static_cast<uint64_t>(exps[i]);
    return k;
}

std::string MonomialMap::str() const {
    static const char* names = "abcd";
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ",";
        if (exps[i]) os << "z^" << exps[i] << "*";
        os << names[perm[i]];
    }
    os << "]";
    return os.str();
}

MonomialMap compose(const MonomialMap& g, const MonomialMap& h) {
    if (g.N != h.N) throw DomainError("compose: mismatched N");
    std::array<int, 4> p{}, e{};
    for (int i = 0; i < 4; ++i) {
        p[i] = h.perm[g.perm[i]];
        e[i] = g.exps[i] + h.exps[g.perm[i]];
    }
    return MonomialMap::make(g.N, p, e);
}

MonomialMap inverse(const MonomialMap& g) {
    std::array<int, 4> q{}, e{};
    for (int i = 0; i < 4; ++i) q[g.perm[i]] = i;
    for (int j = 0; j < 4; ++j) e[j] = -g.exps[q[j]];
    return MonomialMap::make(g.N, q, e);
}

MonomialMap power(const MonomialMap& g, long long k) {
    MonomialMap base = k < 0 ? inverse(g) : g.canonical();
    unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    MonomialMap r = MonomialMap::identity(g.N);
    while (n) {
        if (n & 1) r = compose(r, base);
        base = compose(base, base);
        n >>= 1;
    }
    return r;
}

bool canonical_eq(const MonomialMap& g, const MonomialMap& h) {
    if (g.N != h.N) throw DomainError("canonical_eq: mismatched N");
    return g.canonical() == h.canonical();
}

ProjPoint::ProjPoint(std::array<cplx, 4> coords) : c(coords) {
    if (max_abs() == 0.0) throw DomainError("projective point with all coordinates zero");
}

double ProjPoint::max_abs() const {
    double m = 0;
    for (auto& x : c) m = std::max(m, std::abs(x));
    return m;
}

ProjPoint ProjPoint::normalized() const {
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(c[i]) > std::abs(c[k])) k = i;
    ProjPoint r = *this;
    cplx s = c[k];
    for (auto& x : r.c) x /= s;
    return r;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os.precision(6);
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << c[i].real() << (c[i].imag() < 0 ? "-" : "+") << std::abs(c[i].imag()) << "i";
    }
    os << "]";
    return os.str();
}

double proj_distance(const ProjPoint& p, const ProjPoint& q) {
    ProjPoint a = p.normalized(), b = q.normalized();
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(a.c[i]) > std::abs(a.c[k])) k = i;
    if (std::abs(b.c[k]) == 0.0) return 1.0;
    cplx r = a.c[k] / b.c[k];
    double d = 0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a.c[i] - r * b.c[i]));
    return d;
}

bool approx_eq(const ProjPoint& p, const ProjPoint& q, double tol) { return proj_distance(p, q) <= tol; }

ProjPoint apply(const MonomialMap& g, const ProjPoint& p) {
    std::array<cplx, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = zeta_pow(g.N, g.exps[i]) * p.c[g.perm[i]];
    return ProjPoint(out).normalized();
}

ExactPoint ExactPoint::make(int N, std::array<int, 4> e) {
    ExactPoint p;
    p.N = N;
    int first = -1;
    for (int i = 0; i < 4; ++i)
        if (e[i] >= 0) { first = i; break; }
    if (first < 0) throw DomainError("projective point with all coordinates zero");
    int s = e[first];
    for (int i = 0; i < 4; ++i) p.e[i] = e[i] < 0 ? -1 : mod(e[i] - s, 4LL * N);
    return p;
}

ProjPoint ExactPoint::numeric() const {
    std::array<cplx, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = e[i] < 0 ? cplx(0) : zeta_pow(N, e[i]);
    return ProjPoint(c);
}

std::string ExactPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ",";
        if (e[i] < 0) os << "0";
        else if (e[i] == 0) os << "1";
        else os << "z^" << e[i];
    }
    os << "]";
    return os.str();
}

ExactPoint apply(const MonomialMap& g, const ExactPoint& p) {
    if (g.N != p.N) throw DomainError("apply: mismatched N");
    std::array<int, 4> e;
    for (int i = 0; i < 4; ++i) {
        int src = p.e[g.perm[i]];
        e[i] = src < 0 ? -1 : src + g.exps[i];
    }
    return ExactPoint::make(p.N, e);
}

}  // namespace cpm
