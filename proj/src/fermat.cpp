#include "cpm/fermat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace cpm {

namespace {

const cplx I(0, 1);

cplx ipow(int s) {
    static const cplx t[4] = {1, I, -1, -I};
    return t[mod(s, 4)];
}

ProjPoint norm_pt(const ProjPoint& p) { return p.normalized(); }

std::array<cplx, 4> powers(const ProjPoint& p, int N) {
    std::array<cplx, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = std::pow(p.c[i], N);
    return r;
}

// Coefficients of the fiber equations: 2i kappa0 kappa1 times (k, k', 1).
struct FiberCoeffs {
    cplx K, Kp, D;
};
FiberCoeffs coeffs(const BaseParam& b) {
    BaseParam n = b.normalized();
    cplx x = n.k0, y = n.k1;
    return {x * x - y * y, I * (x * x + y * y), 2.0 * I * x * y};
}

std::array<cplx, 4> fiber_equations(const std::array<cplx, 4>& P, const FiberCoeffs& f) {
    auto [A, B, C, D] = P;
    return {f.K * A + f.Kp * C - f.D * D, f.K * B - f.D * C + f.Kp * D, f.D * A + f.Kp * B - f.K * D,
            f.Kp * A + f.D * B - f.K * C};
}

// Roots of a k0^2 + b k0 k1 + c k1^2.
std::vector<BaseParam> quadratic_roots(cplx a, cplx b, cplx c) {
    auto solve = [](cplx a, cplx b, cplx c) {
        cplx s = std::sqrt(b * b - 4.0 * a * c);
        if (std::real(std::conj(b) * s) < 0) s = -s;
        cplx q = -(b + s) / 2.0;
        std::vector<cplx> r{q / a};
        r.push_back(std::abs(q) > 0 ? c / q : cplx(0));
        return r;
    };
    std::vector<BaseParam> out;
    if (std::abs(a) == 0 && std::abs(c) == 0) return {BaseParam::infinity(), BaseParam::from_kappa(0)};
    if (std::abs(a) >= std::abs(c)) {
        for (cplx z : solve(a, b, c)) out.push_back(BaseParam{z, 1});
    } else {
        for (cplx w : solve(c, b, a)) out.push_back(BaseParam{1, w});
    }
    return out;
}

// The base point whose fiber equations all vanish at P.
BaseParam common_root(const std::array<cplx, 4>& P) {
    auto [A, B, C, D] = P;
    std::array<std::array<cplx, 3>, 4> q = {{{A + I * C, -2.0 * I * D, -A + I * C},
                                             {B + I * D, -2.0 * I * C, -B + I * D},
                                             {I * B - D, 2.0 * I * A, I * B + D},
                                             {I * A - C, 2.0 * I * B, I * A + C}}};
    auto nrm = [](const std::array<cplx, 3>& f) { return std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]); };
    auto best = std::max_element(q.begin(), q.end(), [&](auto& x, auto& y) { return nrm(x) < nrm(y); });
    BaseParam pick;
    double pick_res = 1e300;
    for (const BaseParam& r : quadratic_roots((*best)[0], (*best)[1], (*best)[2])) {
        BaseParam n = r.normalized();
        double res = 0;
        for (auto& f : q) res = std::max(res, std::abs(f[0] * n.k0 * n.k0 + f[1] * n.k0 * n.k1 + f[2] * n.k1 * n.k1));
        if (res < pick_res) pick_res = res, pick = n;
    }
    return pick;
}

const std::vector<BaseParam>& degenerate_points() {
    static const std::vector<BaseParam> d = {BaseParam::from_kappa(1), BaseParam::from_kappa(-1),
                                             BaseParam::from_kappa(I),  BaseParam::from_kappa(-I),
                                             BaseParam::infinity(),     BaseParam::from_kappa(0)};
    return d;
}

std::vector<std::pair<std::string, int>> tokens(const std::string& word) {
    std::vector<std::pair<std::string, int>> out;
    std::istringstream is(word);
    std::string t;
    while (is >> t) {
        auto pos = t.find('^');
        if (pos == std::string::npos) out.push_back({t, 1});
        else out.push_back({t.substr(0, pos), std::stoi(t.substr(pos + 1))});
    }
    return out;
}

}  // namespace

BaseParam BaseParam::from_kappa(cplx kappa) { return BaseParam{kappa, 1}; }
BaseParam BaseParam::infinity() { return BaseParam{1, 0}; }
BaseParam BaseParam::from_kk(cplx kp, cplx k) { return from_kappa(kp + I * k); }

BaseParam BaseParam::normalized() const {
    cplx s = std::abs(k0) >= std::abs(k1) ? k0 : k1;
    if (std::abs(s) == 0) throw DomainError("base point with both coordinates zero");
    return {k0 / s, k1 / s};
}

bool BaseParam::is_infinite() const {
    BaseParam n = normalized();
    return std::abs(n.k1) <= 1e-14;
}

cplx BaseParam::kappa() const {
    if (is_infinite()) throw DomainError("kappa' is infinite");
    return k0 / k1;
}

std::pair<cplx, cplx> BaseParam::kk() const {
    cplx z = kappa();
    if (std::abs(z) <= 1e-14) throw DomainError("(k', k) infinite at kappa' = 0");
    return {(z + 1.0 / z) / 2.0, (z - 1.0 / z) / (2.0 * I)};
}

std::string BaseParam::str() const {
    std::ostringstream os;
    os.precision(12);
    if (is_infinite()) return "kappa'=inf";
    cplx z = kappa();
    os << "kappa'=" << z.real() + 0.0 << (z.imag() < 0 ? "" : "+") << z.imag() + 0.0 << "i";
    return os.str();
}

double chordal(const BaseParam& x, const BaseParam& y) {
    double nx = std::hypot(std::abs(x.k0), std::abs(x.k1)), ny = std::hypot(std::abs(y.k0), std::abs(y.k1));
    return std::abs(x.k0 * y.k1 - x.k1 * y.k0) / (nx * ny);
}

std::string FiberClass::str() const {
    switch (tag) {
        case FiberTag::smooth: return "smooth";
        case FiberTag::deg_pm1_0: return sign > 0 ? "deg(1,0)" : "deg(-1,0)";
        case FiberTag::deg_0_pm1: return sign > 0 ? "deg(0,1)" : "deg(0,-1)";
        case FiberTag::deg_inf: return sign > 0 ? "deg(inf,inf+)" : "deg(inf,inf-)";
    }
    return "?";
}

const std::vector<DegenerateFiber>& degenerate_fibers() {
    static const std::vector<DegenerateFiber> f = {
        {"(1,0)", BaseParam::from_kappa(1), {FiberTag::deg_pm1_0, 1}, {0, 1, 2, 3}, 2, 0},
        {"(-1,0)", BaseParam::from_kappa(-1), {FiberTag::deg_pm1_0, -1}, {0, 1, 2, 3}, 0, 2},
        {"(0,1)", BaseParam::from_kappa(I), {FiberTag::deg_0_pm1, 1}, {0, 3, 1, 2}, 0, 0},
        {"(0,-1)", BaseParam::from_kappa(-I), {FiberTag::deg_0_pm1, -1}, {0, 3, 1, 2}, 2, 2},
        {"(inf,inf+)", BaseParam::infinity(), {FiberTag::deg_inf, 1}, {0, 2, 1, 3}, 3, 3},
        {"(inf,inf-)", BaseParam::from_kappa(0), {FiberTag::deg_inf, -1}, {0, 2, 1, 3}, 1, 1},
    };
    return f;
}

const DegenerateFiber& degenerate_fiber(const FiberClass& cls) {
    for (auto& f : degenerate_fibers())
        if (f.cls == cls) return f;
    throw DomainError("not a degenerate fiber: " + cls.str());
}

FiberClass classify(const BaseParam& base, double tol) {
    const auto& f = degenerate_fibers();
    for (auto& d : f)
        if (chordal(base, d.base) <= tol) return d.cls;
    return {};
}

bool near_degenerate(const BaseParam& base, double radius) {
    for (auto& d : degenerate_fibers())
        if (chordal(base, d.base) < radius) return true;
    return false;
}

SingularSets singular_points(const DegenerateFiber& f, int N) {
    auto [p, q, r, s] = f.pairs;
    SingularSets out;
    for (int n = 0; n < N; ++n) {
        std::array<int, 4> e{-1, -1, -1, -1};
        e[r] = f.s2 + 4 * n;
        e[s] = 0;
        out.sing0.push_back(ExactPoint::make(N, e));
    }
    for (int m = 0; m < N; ++m) {
        std::array<int, 4> e{-1, -1, -1, -1};
        e[p] = f.s1 + 4 * m;
        e[q] = 0;
        out.sing1.push_back(ExactPoint::make(N, e));
    }
    std::sort(out.sing0.begin(), out.sing0.end());
    std::sort(out.sing1.begin(), out.sing1.end());
    return out;
}

double surface_residual(const ProjPoint& p, int N) {
    ProjPoint n = norm_pt(p);
    cplx r = 0;
    for (int i = 0; i < 4; ++i) r += (i % 2 ? -1.0 : 1.0) * std::pow(n.c[i], 2 * N);
    return std::abs(r);
}

bool on_surface(const ProjPoint& p, int N, double tol) { return surface_residual(p, N) <= tol; }

double fiber_residual(const ProjPoint& p, const BaseParam& base, int N) {
    auto P = powers(norm_pt(p), N);
    FiberClass cls = classify(base);
    if (cls.tag != FiberTag::smooth) {
        const DegenerateFiber& f = degenerate_fiber(cls);
        auto [a, b, c, d] = f.pairs;
        return std::max(std::abs(P[a] - ipow(f.s1) * P[b]), std::abs(P[c] - ipow(f.s2) * P[d]));
    }
    FiberCoeffs fc = coeffs(base);
    double scale = std::abs(fc.K) + std::abs(fc.Kp) + std::abs(fc.D);
    double r = 0;
    for (cplx e : fiber_equations(P, fc)) r = std::max(r, std::abs(e));
    return r / scale;
}

bool on_fiber(const ProjPoint& p, const BaseParam& base, int N, double tol) {
    return on_surface(p, N, tol) && fiber_residual(p, base, N) <= tol;
}

FiberResult fiber_map(const ProjPoint& p, int N, double tol) {
    ProjPoint n = norm_pt(p);
    if (!on_surface(n, N, tol))
        throw DomainError("fiber_map: point not on the Fermat surface (residual " + sci(surface_residual(n, N)) + ")");
    auto P = powers(n, N);
    auto [A, B, C, D] = P;
    const double ct = 1e-3 * tol;
    BaseParam base;
    cplx Dn = C * C - D * D;
    if (std::abs(Dn) > ct) {
        cplx X = A * C - B * D, Y = B * C - A * D;
        BaseParam n1{I * Dn - X, Y}, n2{Y, -X - I * Dn};
        double s1 = std::abs(n1.k0) + std::abs(n1.k1), s2 = std::abs(n2.k0) + std::abs(n2.k1);
        base = s1 >= s2 ? n1 : n2;
    } else if (std::max(std::abs(A + B), std::abs(C - D)) <= ct) {
        base = BaseParam::from_kappa(1);
    } else if (std::max(std::abs(A - B), std::abs(C + D)) <= ct) {
        base = BaseParam::from_kappa(-1);
    } else if (std::max(std::abs(A - B), std::abs(C - D)) <= ct) {
        base = BaseParam{I * C - A, A + I * C};
    } else if (std::max(std::abs(A + B), std::abs(C + D)) <= ct) {
        base = BaseParam{A - I * C, A + I * C};
    } else {
        base = common_root(P);
    }
    base = base.normalized();
    if (fiber_residual(n, base, N) > tol) {
        base = common_root(P);
        if (fiber_residual(n, base, N) > tol)
            throw std::logic_error("fiber_map: no base point found for " + n.str());
    }
    FiberResult r{base, classify(base, tol), false};
    r.proximity_warning = r.cls.tag == FiberTag::smooth && near_degenerate(base);
    return r;
}

std::vector<ProjPoint> sample_fiber(const BaseParam& base, int N, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rad(0.5, 2.0), ang(0.0, 2 * std::numbers::pi);
    std::uniform_int_distribution<int> root(0, N - 1);
    auto annulus = [&] { return std::polar(rad(rng), ang(rng)); };
    FiberClass cls = classify(base);
    std::vector<ProjPoint> out;
    for (int k = 0; k < count; ++k) {
        std::array<cplx, 4> x;
        if (cls.tag == FiberTag::deg_pm1_0) {
            const DegenerateFiber& f = degenerate_fiber(cls);
            auto [p, q, r, s] = f.pairs;
            x[q] = annulus();
            x[p] = zeta_pow(N, f.s1 + 4 * root(rng)) * x[q];
            x[s] = annulus();
            x[r] = zeta_pow(N, f.s2 + 4 * root(rng)) * x[s];
        } else {
            FiberCoeffs fc = coeffs(base);
            cplx c = annulus(), d = annulus();
            cplx A = (-fc.Kp * std::pow(c, N) + fc.D * std::pow(d, N)) / fc.K;
            cplx B = (fc.D * std::pow(c, N) - fc.Kp * std::pow(d, N)) / fc.K;
            cplx a = std::pow(A, 1.0 / N) * zeta_pow(N, 4 * root(rng));
            cplx b = std::pow(B, 1.0 / N) * zeta_pow(N, 4 * root(rng));
            x = {a, b, c, d};
        }
        out.push_back(ProjPoint(x).normalized());
    }
    return out;
}

BaseParam random_smooth_base(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> lr(std::log(0.3), std::log(3.0)), ang(0.0, 2 * std::numbers::pi);
    for (;;) {
        BaseParam b = BaseParam::from_kappa(std::polar(std::exp(lr(rng)), ang(rng)));
        if (!near_degenerate(b, 0.05)) return b;
    }
}

BaseParam Mobius::operator()(const BaseParam& x) const {
    return BaseParam{m[0] * x.k0 + m[1] * x.k1, m[2] * x.k0 + m[3] * x.k1}.normalized();
}

Mobius Mobius::operator*(const Mobius& o) const {
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3], m[2] * o.m[0] + m[3] * o.m[2],
             m[2] * o.m[1] + m[3] * o.m[3]}};
}

Mobius base_action(const std::string& word) {
    static const std::set<std::string> fiberwise = {"u1", "u2", "U",  "V0", "V1", "V2", "j",  "i",
                                                    "M0", "M1", "M2", "M3", "M4", "M5", "1"};
    const Mobius S{{0, I, 1, 0}}, Sinv{{0, I, 1, 0}}, T{{I, 1, 1, I}}, Tinv{{I, -1, -1, I}};
    Mobius r;
    for (auto& [lab, k] : tokens(word)) {
        if (fiberwise.count(lab)) continue;
        if (lab != "S" && lab != "T") throw UnknownLabel("unknown label in base word: " + lab);
        const Mobius& g = lab == "S" ? (k >= 0 ? S : Sinv) : (k >= 0 ? T : Tinv);
        for (int n = 0; n < std::abs(k); ++n) r = r * g;
    }
    return r;
}

BaseParam modular_action_base(const std::string& word, const BaseParam& base) { return base_action(word)(base); }

bool equivariance_check(const CpmGroupBundle& b, const std::string& word, const ProjPoint& p, double tol) {
    BaseParam lhs = fiber_map(apply(b(word), p), b.N).base;
    BaseParam rhs = base_action(word)(fiber_map(p, b.N).base);
    return chordal(lhs, rhs) <= tol;
}

namespace {

using Key = std::array<long long, 6>;
const std::array<cplx, 3> kProbePts = {cplx(0.37, 0.21), cplx(-1.3, 0.6), cplx(0.2, -2.1)};

Key key_of(const std::array<cplx, 3>& v) {
    Key k;
    for (int i = 0; i < 3; ++i) {
        k[2 * i] = std::llround(v[i].real() * 1e8);
        k[2 * i + 1] = std::llround(v[i].imag() * 1e8);
    }
    return k;
}

Key mobius_key(const Mobius& M) {
    std::array<cplx, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = M(BaseParam::from_kappa(kProbePts[i])).kappa();
    return key_of(v);
}

template <class F>
Key formula_key(F f) {
    std::array<cplx, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = f(kProbePts[i]);
    return key_of(v);
}

}  // namespace

VerificationReport verify_aut_lambda() {
    VerificationReport rep{"aut_lambda", 0, {}};
    const std::string anc = "automorphisms of the base preserving the degenerate set";
    Stopwatch sw;
    const Mobius S = base_action("S"), T = base_action("T");
    std::map<Key, Mobius> grp{{mobius_key(Mobius{}), Mobius{}}};
    std::vector<Mobius> frontier{Mobius{}};
    while (!frontier.empty()) {
        std::vector<Mobius> next;
        for (auto& M : frontier)
            for (auto* g : {&S, &T}) {
                Mobius P = *g * M;
                if (grp.emplace(mobius_key(P), P).second) next.push_back(P);
            }
        frontier = std::move(next);
    }
    rep.add("Mobius group generated by S, T has 24 elements", grp.size() == 24, anc,
            "order " + std::to_string(grp.size()), sw.ms());

    bool preserves = true;
    for (auto& [k, M] : grp) {
        for (auto& d : degenerate_points()) {
            BaseParam img = M(d);
            bool hit = std::any_of(degenerate_points().begin(), degenerate_points().end(),
                                   [&](auto& e) { return chordal(img, e) < 1e-12; });
            preserves = preserves && hit;
        }
    }
    rep.add("every element preserves {0, inf, +-1, +-i}", preserves, anc);

    // The 24 elements written through kappa'.
    std::vector<std::function<cplx(cplx)>> kap;
    for (int s : {1, -1}) {
        auto p = [s](cplx z) { return std::pow(z, s); };
        kap.push_back([p](cplx z) { return p(z); });
        kap.push_back([p](cplx z) { return p((1.0 + I * z) / (z + I)); });
        kap.push_back([s](cplx z) { return -std::pow(z, -s); });
        kap.push_back([s](cplx z) { return std::pow((z - I) / (I * z - 1.0), -s); });
        kap.push_back([s](cplx z) { return double(s) * I * std::pow(z, -s); });
        kap.push_back([s](cplx z) { return double(s) * I * std::pow((1.0 - z) / (1.0 + z), s); });
        kap.push_back([s](cplx z) { return double(s) * I * std::pow(z, s); });
        kap.push_back([s](cplx z) { return double(s) * I * std::pow((1.0 + z) / (1.0 - z), s); });
        kap.push_back([s](cplx z) { return std::pow((I * z - 1.0) / (I * z + 1.0), s); });
        kap.push_back([s](cplx z) { return std::pow((1.0 - I * z) / (1.0 + I * z), -s); });
        kap.push_back([s](cplx z) { return std::pow((1.0 + z) / (1.0 - z), s); });
        kap.push_back([s](cplx z) { return std::pow((z + 1.0) / (z - 1.0), -s); });
    }
    // The same 24 elements written through (k', k).
    using KK = std::pair<cplx, cplx>;
    std::vector<std::function<KK(cplx, cplx)>> kkf;
    for (double s : {1.0, -1.0}) {
        kkf.push_back([s](cplx kp, cplx k) { return KK{kp, s * k}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{1.0 / kp, s * I * k / kp}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{-kp, s * k}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{-1.0 / kp, s * I * k / kp}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{k, s * kp}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{1.0 / k, s * I * kp / k}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{-k, s * kp}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{-1.0 / k, s * I * kp / k}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{I * k / kp, s / kp}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{-I * k / kp, s / kp}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{I * kp / k, s / k}; });
        kkf.push_back([s](cplx kp, cplx k) { return KK{-I * kp / k, s / k}; });
    }
    std::set<Key> gkeys, kapkeys, kkkeys;
    for (auto& [k, M] : grp) gkeys.insert(k);
    for (auto& f : kap) kapkeys.insert(formula_key(f));
    for (auto& f : kkf)
        kkkeys.insert(formula_key([&f](cplx z) {
            auto [kp, k] = BaseParam::from_kappa(z).kk();
            auto [a, b] = f(kp, k);
            return a + I * b;
        }));
    rep.add("24 kappa' formulas are exactly the group", kapkeys == gkeys, anc,
            std::to_string(kapkeys.size()) + " distinct formulas");
    rep.add("24 (k', k) formulas are exactly the group", kkkeys == gkeys, anc,
            std::to_string(kkkeys.size()) + " distinct formulas");

    auto same = [](const Mobius& M, std::function<cplx(cplx)> f) {
        return mobius_key(M) == formula_key(f);
    };
    auto is_id = [&](const Mobius& M) { return same(M, [](cplx z) { return z; }); };
    rep.add("S^2 = T^4 = 1 on the base", is_id(S * S) && is_id(T * T * T * T), anc);
    rep.add("T^2: kappa' -> 1/kappa'", same(T * T, [](cplx z) { return 1.0 / z; }), anc);
    rep.add("S T^2 S: kappa' -> -1/kappa'", same(S * T * T * S, [](cplx z) { return -1.0 / z; }), anc);
    rep.add("(S T^2)^2: kappa' -> -kappa'", same(S * T * T * S * T * T, [](cplx z) { return -z; }), anc);

    const std::vector<BaseParam> src = {BaseParam::from_kappa(0), BaseParam::infinity(), BaseParam::from_kappa(1),
                                        BaseParam::from_kappa(-1), BaseParam::from_kappa(I), BaseParam::from_kappa(-I)};
    const std::vector<BaseParam> s_img = {BaseParam::infinity(),      BaseParam::from_kappa(0), BaseParam::from_kappa(I),
                                          BaseParam::from_kappa(-I), BaseParam::from_kappa(1), BaseParam::from_kappa(-1)};
    const std::vector<BaseParam> t_img = {BaseParam::from_kappa(-I), BaseParam::from_kappa(I), BaseParam::from_kappa(1),
                                          BaseParam::from_kappa(-1), BaseParam::from_kappa(0), BaseParam::infinity()};
    bool table = true;
    for (size_t k = 0; k < src.size(); ++k)
        table = table && chordal(S(src[k]), s_img[k]) < 1e-12 && chordal(T(src[k]), t_img[k]) < 1e-12;
    rep.add("S, T permute the degenerate points as tabulated", table, anc);
    return rep;
}

VerificationReport verify_fibration(const CpmGroupBundle& b, int samples, uint64_t seed) {
    VerificationReport rep{"fibration", b.N, {}};
    const int N = b.N;
    const std::string anc = "Fermat surface as a family of rapidity curves";
    std::mt19937_64 rng(seed);
    const int nbases = 10;
    const int per = std::max(1, (samples + nbases - 1) / nbases);
    std::vector<ProjPoint> pts;
    double worst_surface = 0, worst_fiber = 0, worst_trip = 0;
    int warnings = 0;
    {
        Stopwatch sw;
        for (int k = 0; k < nbases; ++k) {
            BaseParam base = random_smooth_base(rng());
            for (auto& p : sample_fiber(base, N, per, rng())) {
                if (static_cast<int>(pts.size()) >= samples) break;
                pts.push_back(p);
                worst_surface = std::max(worst_surface, surface_residual(p, N));
                worst_fiber = std::max(worst_fiber, fiber_residual(p, base, N));
                auto r = fiber_map(p, N);
                worst_trip = std::max(worst_trip, chordal(r.base, base));
                warnings += r.proximity_warning;
            }
        }
        rep.add("sampled points lie on the surface", worst_surface <= check_tol(), anc,
                std::to_string(pts.size()) + " points, max residual " + sci(worst_surface), sw.ms());
        rep.add("sampled points lie on their fiber", worst_fiber <= check_tol(), anc, "max residual " + sci(worst_fiber));
        rep.add("projection returns the sampling base", worst_trip <= check_tol() && warnings == 0, anc,
                "max chordal error " + sci(worst_trip));
    }
    {
        Stopwatch sw;
        bool ok = true;
        std::string bad;
        for (auto& f : degenerate_fibers()) {
            for (auto& p : sample_fiber(f.base, N, 20, rng())) {
                auto r = fiber_map(p, N);
                if (!on_fiber(p, f.base, N) || !(r.cls == f.cls) || chordal(r.base, f.base) > check_tol()) {
                    ok = false;
                    bad = f.label + " at " + p.str();
                }
            }
        }
        rep.add("degenerate fibers: samples project to their tagged base", ok, anc, bad, sw.ms());
    }
    {
        Stopwatch sw;
        std::uniform_int_distribution<size_t> pick(0, b.Gt.size() - 1);
        double worst = 0;
        for (auto& p : pts) {
            for (auto* g : {"u1", "u2", "U", "S", "T"}) worst = std::max(worst, surface_residual(apply(b(g), p), N));
            worst = std::max(worst, surface_residual(apply(b.Gt[pick(rng)], p), N));
        }
        rep.add("modular CP group preserves the surface", worst <= check_tol(), "modular CP group acts on the surface",
                "max residual " + sci(worst), sw.ms());
    }
    {
        Stopwatch sw;
        std::vector<std::string> letters = {"u1", "u2", "U", "S", "T", "u1^-1", "u2^-1", "U^-1", "S^-1", "T^-1"};
        std::vector<std::string> words{""};
        std::vector<std::string> all;
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::string> next;
            for (auto& w : words)
                for (auto& l : letters) next.push_back(w.empty() ? l : w + " " + l);
            all.insert(all.end(), next.begin(), next.end());
            words = std::move(next);
        }
        int fails = 0;
        std::string bad;
        for (size_t k = 0; k < std::min<size_t>(3, pts.size()); ++k)
            for (auto& w : all)
                if (!equivariance_check(b, w, pts[k])) {
                    ++fails;
                    bad = w;
                }
        rep.add("projection is equivariant for all words of length <= 3", fails == 0,
                "modular action on the base", std::to_string(all.size()) + " words" + (fails ? ", fails at " + bad : ""),
                sw.ms());
    }
    rep.append(verify_aut_lambda());
    return rep;
}

std::vector<ExactPoint> fixed_points_on_surface(const MonomialMap& g) {
    if (!g.is_diagonal()) throw DomainError("fixed_points_on_surface: map is not diagonal");
    MonomialMap c = g.canonical();
    std::map<int, std::vector<int>> eig;
    for (int i = 0; i < 4; ++i) eig[c.exps[i]].push_back(i);
    const int N = g.N;
    const int sigma[4] = {1, -1, 1, -1};
    std::vector<ExactPoint> out;
    for (auto& [e, idx] : eig) {
        if (idx.size() >= 3) throw DomainError("fixed locus is not finite for " + g.str());
        if (idx.size() != 2) continue;
        int p = idx[0], q = idx[1];
        int parity = sigma[p] * sigma[q] == -1 ? 0 : 1;
        for (int k = parity; k < 4 * N; k += 2) {
            std::array<int, 4> x{-1, -1, -1, -1};
            x[p] = k;
            x[q] = 0;
            out.push_back(ExactPoint::make(N, x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport fixed_point_check(const CpmGroupBundle& b, int samples, uint64_t seed) {
    VerificationReport rep{"fixed_points", b.N, {}};
    const int N = b.N;
    const std::string anc = "fixed points of H on the surface";
    auto unite = [&](std::vector<std::string> labels, bool s0, bool s1) {
        std::set<ExactPoint> u;
        for (auto& l : labels)
            for (auto& f : degenerate_fibers())
                if (f.label == l) {
                    auto s = singular_points(f, N);
                    if (s0) u.insert(s.sing0.begin(), s.sing0.end());
                    if (s1) u.insert(s.sing1.begin(), s.sing1.end());
                }
        return u;
    };
    auto fixed = [&](const std::string& w) {
        auto v = fixed_points_on_surface(b(w));
        return std::set<ExactPoint>(v.begin(), v.end());
    };
    auto cmp = [&](const std::string& name, const std::string& w, const std::set<ExactPoint>& expect) {
        auto got = fixed(w);
        rep.add(name, got == expect, anc, std::to_string(got.size()) + " vs " + std::to_string(expect.size()) + " points");
    };
    cmp("fixed points of V0 = Sing(W_inf,inf+-)", "V0", unite({"(inf,inf+)", "(inf,inf-)"}, true, true));
    cmp("fixed points of V1 = Sing(W_0,+-1)", "V1", unite({"(0,1)", "(0,-1)"}, true, true));
    if (N == 2) {
        cmp("N = 2: fixed points of V0 V1 = V0 V1^-1 = Sing(W_+-1,0)", "V0 V1", unite({"(1,0)", "(-1,0)"}, true, true));
        rep.skip("fixed points of V0 V1 = Sing^0(W_+-1,0)", anc, "N = 2: V0 V1 = V0 V1^-1 also fixes Sing^1");
        rep.skip("fixed points of V0 V1^-1 = Sing^1(W_+-1,0)", anc, "N = 2: V0 V1 = V0 V1^-1 also fixes Sing^0");
    } else {
        rep.skip("N = 2: fixed points of V0 V1 = V0 V1^-1 = Sing(W_+-1,0)", anc, "N >= 3");
        cmp("fixed points of V0 V1 = Sing^0(W_+-1,0)", "V0 V1", unite({"(1,0)", "(-1,0)"}, true, false));
        cmp("fixed points of V0 V1^-1 = Sing^1(W_+-1,0)", "V0 V1^-1", unite({"(1,0)", "(-1,0)"}, false, true));
    }
    {
        std::set<ExactPoint> all, four;
        for (auto& h : b.H.elements())
            if (!(h == MonomialMap::identity(N))) {
                auto v = fixed_points_on_surface(h);
                all.insert(v.begin(), v.end());
            }
        for (auto* w : {"V0", "V1", "V0 V1", "V0 V1^-1"}) {
            auto s = fixed(w);
            four.insert(s.begin(), s.end());
        }
        rep.add("fixed points of H = union of those of V0, V1, V0 V1, V0 V1^-1", all == four, anc,
                std::to_string(all.size()) + " points");
    }
    {
        bool stable = true, two = true;
        for (auto& f : degenerate_fibers()) {
            auto s = singular_points(f, N);
            for (auto* set : {&s.sing0, &s.sing1}) {
                std::set<ExactPoint> S(set->begin(), set->end());
                std::set<ExactPoint> orbit;
                for (auto& h : b.H.elements()) {
                    ExactPoint img = apply(h, set->front());
                    orbit.insert(img);
                    for (auto& x : *set) stable = stable && S.count(apply(h, x));
                }
                two = two && orbit == S;
            }
        }
        rep.add("singular sets are H-stable", stable, anc);
        rep.add("Sing^0 and Sing^1 of each degenerate fiber are single H-orbits", two, anc);
    }
    {
        Stopwatch sw;
        std::mt19937_64 rng(seed);
        int fixed_any = 0, total = 0;
        MonomialMap id = MonomialMap::identity(N);
        for (int k = 0; k < std::max(1, samples / 10); ++k) {
            BaseParam base = random_smooth_base(rng());
            for (auto& p : sample_fiber(base, N, 10, rng())) {
                ++total;
                for (auto& h : b.H.elements())
                    if (!(h == id) && proj_distance(apply(h, p), p) < 1e-6) ++fixed_any;
            }
        }
        rep.add("H acts freely on smooth fibers", fixed_any == 0, "H acts freely on smooth fibers",
                std::to_string(total) + " points", sw.ms());
    }
    return rep;
}

}  // namespace cpm
