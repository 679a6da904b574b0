#include "cpm/theta.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "cpm/cpm_groups.hpp"

namespace cpm {

namespace {

const cplx I(0, 1);
const double PI = std::numbers::pi;
const double kLaw = 1e-10;

double rel(cplx lhs, cplx rhs, double ref) { return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), ref}); }

double max_abs(const std::array<cplx, 4>& x) {
    double m = 0;
    for (auto& z : x) m = std::max(m, std::abs(z));
    return m;
}

cplx random_tau(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.5, 1.5);
    return {re(rng), im(rng)};
}

cplx random_v(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(0.0, 2.0), im(-0.4, 0.4);
    return {re(rng), im(rng)};
}

}  // namespace

int theta_terms(cplx v, cplx tau) {
    if (tau.imag() < kMinImTau) throw PrecisionError("theta: Im tau below " + std::to_string(kMinImTau));
    const double r = std::exp(-PI * tau.imag());  // |q|^(1/2)
    const double c = std::cosh(2 * PI * std::abs(v.imag()));
    // sum over omitted factors n > M of 2 c |q|^(n-1/2) + |q|^(2n-1) bounds the log of the tail
    for (int M = 1; M < 100000; ++M) {
        double qn = std::pow(r, 2 * M + 1);
        double tail = (2 * c * qn + qn * qn) / (1 - r * r);
        if (tail < 1e-17) return M;
    }
    throw PrecisionError("theta: truncation does not converge");
}

cplx theta(int j, cplx v, cplx tau, int terms) {
    if (j < 1 || j > 4) throw DomainError("theta: index must be 1..4");
    if (terms <= 0) terms = theta_terms(v, tau);
    const cplx q = std::exp(2.0 * PI * I * tau), qh = std::exp(PI * I * tau), q8 = std::exp(PI * I * tau / 4.0);
    const cplx c2 = std::cos(2.0 * PI * v);
    cplx q0 = 1, p = 1, qn = 1;
    for (int n = 1; n <= terms; ++n) {
        cplx qodd = qn * qh;  // q^(n - 1/2)
        qn *= q;
        q0 *= 1.0 - qn;
        switch (j) {
            case 1: p *= 1.0 - 2.0 * qn * c2 + qn * qn; break;
            case 2: p *= 1.0 + 2.0 * qn * c2 + qn * qn; break;
            case 3: p *= 1.0 + 2.0 * qodd * c2 + qodd * qodd; break;
            case 4: p *= 1.0 - 2.0 * qodd * c2 + qodd * qodd; break;
        }
    }
    if (j == 1) return 2.0 * q0 * q8 * std::sin(PI * v) * p;
    if (j == 2) return 2.0 * q0 * q8 * std::cos(PI * v) * p;
    return q0 * p;
}

std::array<cplx, 4> thetas(cplx v, cplx tau, int terms) {
    return {theta(1, v, tau, terms), theta(2, v, tau, terms), theta(3, v, tau, terms), theta(4, v, tau, terms)};
}

cplx theta_series(int j, cplx v, cplx tau) {
    if (tau.imag() < kMinImTau) throw PrecisionError("theta_series: Im tau below " + std::to_string(kMinImTau));
    // terms decay like exp(-pi Im tau k^2 + 2 pi |Im v| k)
    int K = 1;
    while (-PI * tau.imag() * K * K + 2 * PI * std::abs(v.imag()) * (K + 1) > std::log(1e-20)) ++K;
    cplx s = 0;
    for (int k = -K - 1; k <= K + 1; ++k) {
        double n = (j <= 2) ? k + 0.5 : k;
        cplx term = std::exp(PI * I * tau * n * n + 2.0 * PI * I * n * v);
        if (j == 1) term *= -I * (k % 2 ? -1.0 : 1.0);
        if (j == 4 && k % 2) term = -term;
        s += term;
    }
    return s;
}

std::pair<cplx, cplx> moduli_from_tau(cplx tau) {
    cplx t2 = theta(2, 0, tau), t3 = theta(3, 0, tau), t4 = theta(4, 0, tau);
    return {t4 * t4 / (t3 * t3), t2 * t2 / (t3 * t3)};
}

BaseParam base_from_tau(cplx tau) {
    auto [kp, k] = moduli_from_tau(tau);
    return BaseParam::from_kk(kp, k);
}

ProjPoint uniformize(cplx v, cplx tau) { return ProjPoint(thetas(v, tau)); }

VerificationReport verify_evaluator(int samples, uint64_t seed) {
    VerificationReport rep{"theta_evaluator", 2, {}};
    const std::string anc = "product formulas of the Jacobi theta functions";
    std::mt19937_64 rng(seed);
    double series = 0, doubling = 0;
    for (int s = 0; s < samples; ++s) {
        cplx tau = random_tau(rng), v = random_v(rng);
        int M = theta_terms(v, tau);
        for (int j = 1; j <= 4; ++j) {
            cplx x = theta(j, v, tau, M), scale = std::max(1.0, max_abs(thetas(v, tau, M)));
            series = std::max(series, std::abs(x - theta_series(j, v, tau)) / std::abs(scale));
            doubling = std::max(doubling, std::abs(x - theta(j, v, tau, 2 * M)) / std::abs(scale));
        }
    }
    rep.add("product agrees with the Fourier series", series <= 1e-11, anc, "max " + sci(series));
    rep.add("doubling the truncation changes nothing", doubling <= 1e-12, anc, "max " + sci(doubling));
    bool err = false;
    try {
        theta(1, 0.1, cplx(0.2, 0.01));
    } catch (const PrecisionError&) {
        err = true;
    }
    rep.add("small Im tau is rejected", err, anc);
    rep.add("theta1(0) = 0", std::abs(theta(1, 0, cplx(0.3, 1.1))) == 0.0, anc);
    auto [kp, k] = moduli_from_tau(I);
    rep.add("k = k' at tau = i", std::abs(k - kp) <= 1e-12, anc, sci(std::abs(k - kp)));
    return rep;
}

VerificationReport verify_transforms(cplx tau, cplx v) {
    VerificationReport rep{"theta_transforms", 2, {}};
    const std::string anc = "elliptic and modular transformation laws";
    auto t = thetas(v, tau);
    double ref = 1e-3 * max_abs(t);
    const cplx e = std::exp(-PI * I * (tau + 2.0 * v));
    const cplx s = std::sqrt(-I * tau) * std::exp(I * PI * v * v / tau);
    const cplx r8 = std::exp(I * PI / 4.0);
    auto law = [&](const std::string& name, cplx lhs, cplx rhs, double scale) {
        double d = rel(lhs, rhs, ref * scale);
        rep.add(name, d <= kLaw, anc, sci(d));
    };
    auto p1 = thetas(v + 1.0, tau), pt = thetas(v + tau, tau), t1 = thetas(v, tau + 1.0),
         ts = thetas(v / tau, -1.0 / tau);
    law("theta1(v+1) = -theta1", p1[0], -t[0], 1);
    law("theta2(v+1) = -theta2", p1[1], -t[1], 1);
    law("theta3(v+1) = theta3", p1[2], t[2], 1);
    law("theta4(v+1) = theta4", p1[3], t[3], 1);
    law("theta1(v+tau) = -e theta1", pt[0], -e * t[0], std::abs(e));
    law("theta2(v+tau) = e theta2", pt[1], e * t[1], std::abs(e));
    law("theta3(v+tau) = e theta3", pt[2], e * t[2], std::abs(e));
    law("theta4(v+tau) = -e theta4", pt[3], -e * t[3], std::abs(e));
    law("theta1(tau+1) = e^(i pi/4) theta1", t1[0], r8 * t[0], 1);
    law("theta2(tau+1) = e^(i pi/4) theta2", t1[1], r8 * t[1], 1);
    law("theta3(tau+1) = theta4", t1[2], t[3], 1);
    law("theta4(tau+1) = theta3", t1[3], t[2], 1);
    law("theta1(v/tau, -1/tau) = -i s theta1", ts[0], -I * s * t[0], std::abs(s));
    law("theta2(v/tau, -1/tau) = s theta4", ts[1], s * t[3], std::abs(s));
    law("theta3(v/tau, -1/tau) = s theta3", ts[2], s * t[2], std::abs(s));
    law("theta4(v/tau, -1/tau) = s theta2", ts[3], s * t[1], std::abs(s));
    return rep;
}

VerificationReport verify_algebraic(cplx tau, cplx v) {
    VerificationReport rep{"theta_algebraic", 2, {}};
    const std::string anc = "quadratic relations among theta functions";
    auto [kp, k] = moduli_from_tau(tau);
    auto t = thetas(v, tau);
    auto sq = [&](int j) { return t[j - 1] * t[j - 1]; };
    double ref = 1e-3 * max_abs(t) * max_abs(t);
    auto ident = [&](const std::string& name, cplx lhs, cplx rhs) {
        double d = rel(lhs, rhs, ref);
        rep.add(name, d <= kLaw, anc, sci(d));
    };
    ident("theta1^2 = k theta4^2 - k' theta2^2", sq(1), k * sq(4) - kp * sq(2));
    ident("theta2^2 = k theta3^2 - k' theta1^2", sq(2), k * sq(3) - kp * sq(1));
    ident("theta3^2 = k theta2^2 + k' theta4^2", sq(3), k * sq(2) + kp * sq(4));
    ident("theta4^2 = k theta1^2 + k' theta3^2", sq(4), k * sq(1) + kp * sq(3));
    double m = std::abs(k * k + kp * kp - 1.0);
    rep.add("k^2 + k'^2 = 1", m <= kLaw, anc, sci(m));
    cplx t2 = theta(2, 0, tau), t3 = theta(3, 0, tau), t4 = theta(4, 0, tau);
    double jq = rel(std::pow(t3, 4), std::pow(t2, 4) + std::pow(t4, 4), 0);
    rep.add("theta3(0)^4 = theta2(0)^4 + theta4(0)^4", jq <= kLaw, anc, sci(jq));
    return rep;
}

VerificationReport verify_uniformization(cplx tau, int samples, uint64_t seed) {
    VerificationReport rep{"uniformization", 2, {}};
    const std::string anc = "theta uniformization of the N = 2 fibers";
    BaseParam base = base_from_tau(tau);
    std::mt19937_64 rng(seed);
    double surf = 0, fib = 0, trip = 0, per = 0;
    std::vector<cplx> vs{0.0};
    for (int s = 0; s < samples; ++s) vs.push_back(random_v(rng));
    for (cplx v : vs) {
        ProjPoint p = uniformize(v, tau);
        surf = std::max(surf, surface_residual(p, 2));
        fib = std::max(fib, fiber_residual(p, base, 2));
        trip = std::max(trip, chordal(fiber_map(p, 2).base, base));
        per = std::max({per, proj_distance(p, uniformize(v + 2.0, tau)), proj_distance(p, uniformize(v + 2.0 * tau, tau))});
    }
    rep.add("uniformized points lie on the surface", surf <= check_tol(), anc, sci(surf));
    rep.add("uniformized points lie on the fiber over (k'(tau), k(tau))", fib <= check_tol(), anc, sci(fib));
    rep.add("fiber map recovers the base of tau", trip <= check_tol(), anc, base.str());
    rep.add("periodic under v -> v+2 and v -> v+2 tau", per <= check_tol(), anc, sci(per));
    rep.add("v = 0 gives a point with a = 0", uniformize(0, tau).c[0] == 0.0, anc);
    return rep;
}

VerificationReport verify_g2_correspondence(cplx tau, int samples, uint64_t seed) {
    VerificationReport rep{"g2_correspondence", 2, {}};
    const std::string anc = "generators of the N = 2 group acting on theta arguments";
    std::mt19937_64 rng(seed);
    std::vector<cplx> vs{0.0};
    for (int s = 0; s < samples; ++s) vs.push_back(random_v(rng));
    struct Row {
        std::string g;
        std::function<std::pair<cplx, cplx>(cplx, cplx)> arg;
    };
    const std::vector<Row> rows = {
        {"u1", [](cplx v, cplx t) { return std::pair{v + t / 2.0, t}; }},
        {"u2", [](cplx v, cplx t) { return std::pair{v + 0.5, t}; }},
        {"U", [](cplx v, cplx t) { return std::pair{-v, t}; }},
        {"S", [](cplx v, cplx t) { return std::pair{v / t, -1.0 / t}; }},
        {"T", [](cplx v, cplx t) { return std::pair{v, t + 1.0}; }},
    };
    for (auto& r : rows) {
        MonomialMap g = cpm_generator(r.g, 2);
        double worst = 0;
        for (cplx v : vs) {
            auto [v2, t2] = r.arg(v, tau);
            worst = std::max(worst, proj_distance(apply(g, uniformize(v, tau)), uniformize(v2, t2)));
        }
        rep.add(r.g + " acts on theta arguments as stated", worst <= check_tol(), anc, sci(worst));
    }
    double tb = chordal(base_from_tau(tau + 1.0), modular_action_base("T", base_from_tau(tau)));
    double sb = chordal(base_from_tau(-1.0 / tau), modular_action_base("S", base_from_tau(tau)));
    rep.add("tau -> tau+1 moves the base by the action of T", tb <= check_tol(), anc, sci(tb));
    rep.add("tau -> -1/tau moves the base by the action of S", sb <= check_tol(), anc, sci(sb));
    return rep;
}

VerificationReport verify_quarter_orbit(cplx tau) {
    VerificationReport rep{"quarter_orbit", 2, {}};
    const std::string anc = "orbit of v = 1/4 under u1, u2, U";
    // v = (x + y tau) / 4 with x, y mod 8
    using V = std::pair<int, int>;
    std::set<V> orbit{{1, 0}};
    std::vector<V> todo{{1, 0}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        for (V n : {V{x, (y + 2) % 8}, V{(x + 2) % 8, y}, V{(8 - x) % 8, (8 - y) % 8}})
            if (orbit.insert(n).second) todo.push_back(n);
    }
    rep.add("lattice orbit of 1/4 has 16 points", orbit.size() == 16, anc, std::to_string(orbit.size()));
    CpmGroupBundle b = build(2);
    std::vector<ProjPoint> pts;
    ProjPoint p = uniformize(0.25, tau);
    for (auto& g : b.GN.elements()) {
        ProjPoint x = apply(g, p);
        if (std::none_of(pts.begin(), pts.end(), [&](auto& y) { return approx_eq(x, y); })) pts.push_back(x);
    }
    bool match = pts.size() == orbit.size();
    for (auto [x, y] : orbit) {
        ProjPoint q = uniformize((double(x) + double(y) * tau) / 4.0, tau);
        match = match && std::any_of(pts.begin(), pts.end(), [&](auto& z) { return approx_eq(q, z); });
    }
    rep.add("G_2-orbit of the point at 1/4 has 16 points", pts.size() == 16, anc, std::to_string(pts.size()));
    rep.add("orbit points are the uniformized lattice orbit", match, anc);
    return rep;
}

VerificationReport verify_theta(cplx tau, int samples, uint64_t seed) {
    VerificationReport rep{"theta", 2, {}};
    rep.append(verify_evaluator(samples, seed));
    std::mt19937_64 rng(seed + 1);
    VerificationReport laws{"theta_transforms", 2, {}}, alg{"theta_algebraic", 2, {}};
    for (int s = 0; s < samples; ++s) {
        cplx t = random_tau(rng), v = random_v(rng);
        laws.append(verify_transforms(t, v));
        alg.append(verify_algebraic(t, v));
    }
    // one line per law, worst over the samples
    auto fold = [&](const VerificationReport& r) {
        std::vector<std::string> names;
        for (auto& c : r.checks)
            if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
        for (auto& n : names) {
            bool ok = true;
            std::string w;
            for (auto& c : r.checks)
                if (c.name == n) {
                    ok = ok && c.status == Status::pass;
                    if (w.empty() || c.status == Status::fail) w = c.witness;
                }
            rep.add(n, ok, r.checks.front().anchor, std::to_string(samples) + " samples, e.g. " + w);
        }
    };
    fold(laws);
    fold(alg);
    rep.append(verify_uniformization(tau, samples, seed + 2));
    rep.append(verify_g2_correspondence(tau, samples, seed + 3));
    rep.append(verify_quarter_orbit(tau));
    return rep;
}

}  // namespace cpm
