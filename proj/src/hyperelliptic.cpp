#include "cpm/hyperelliptic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cpm/polyroots.hpp"

namespace cpm {

namespace {

const cplx I(0, 1);
const double kIndeterminate = 1e-12;

P1 p1(cplx x0, cplx x1) { return BaseParam{x0, x1}.normalized(); }
P1 finite(cplx x) { return p1(x, 1); }

std::string show(const P1& x) {
    if (x.is_infinite()) return "inf";
    std::ostringstream os;
    os.precision(10);
    cplx z = x.kappa();
    os << z.real() + 0.0 << (z.imag() < 0 ? "" : "+") << z.imag() + 0.0 << "i";
    return os.str();
}

// (k', k) of a base point as P^1 pairs, finite on smooth bases.
std::pair<cplx, cplx> moduli(const BaseParam& base) {
    if (classify(base).tag != FiberTag::smooth && (base.is_infinite() || std::abs(base.kappa()) < 1e-14))
        throw DomainError("moduli at kappa' = 0 or infinity");
    return base.kk();
}

// Surface points over random smooth bases, four per base.
std::vector<ProjPoint> sample_points(int N, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ProjPoint> out;
    while (static_cast<int>(out.size()) < count)
        for (auto& p : sample_fiber(random_smooth_base(rng()), N, 4, rng()))
            if (static_cast<int>(out.size()) < count) out.push_back(p);
    return out;
}

const std::vector<std::string> kModular = {"T", "T^2", "S T^-2 S^-1"};

}  // namespace

std::string HypPoint::str() const { return "(t=" + show(t) + ", lambda=" + show(lambda) + "; " + base.str() + ")"; }

std::string to_string(Quotient q) {
    switch (q) {
        case Quotient::H: return "H";
        case Quotient::Hr: return "H_r";
        case Quotient::Hl: return "H_l";
    }
    return "?";
}

HypPoint invariants(Quotient q, const ProjPoint& p, int N) {
    ProjPoint n = p.normalized();
    auto [a, b, c, d] = n.c;
    cplx t0, t1, l0, l1;
    switch (q) {
        case Quotient::H: t0 = a * b, t1 = c * d, l0 = std::pow(d, N), l1 = std::pow(c, N); break;
        case Quotient::Hr: t0 = a * c, t1 = b * d, l0 = I * std::pow(d, N), l1 = std::pow(b, N); break;
        case Quotient::Hl:
            t0 = zeta_pow(N, -2) * a * d, t1 = b * c, l0 = std::pow(b, N), l1 = std::pow(c, N);
            break;
    }
    if (std::abs(t0) < kIndeterminate || std::abs(t1) < kIndeterminate)
        throw IndeterminateError("quotient map by " + to_string(q) + " is indeterminate at " + p.str());
    return {p1(t0, t1), p1(l0, l1), fiber_map(p, N).base};
}

double curve_residual(Quotient q, const HypPoint& h, int N) {
    auto [kp, k] = moduli(h.base);
    cplx t0 = h.t.k0, t1 = h.t.k1, l0 = h.lambda.k0, l1 = h.lambda.k1;
    cplx tN = std::pow(t0, N), sN = std::pow(t1, N);
    cplx lhs, rhs;
    switch (q) {
        case Quotient::H: lhs = k * k * tN * l0 * l1, rhs = sN * (l1 - kp * l0) * (l0 - kp * l1); break;
        case Quotient::Hr: lhs = tN * l0 * l1, rhs = sN * (k * l1 - I * kp * l0) * (k * l0 - I * kp * l1); break;
        case Quotient::Hl: lhs = kp * kp * tN * l0 * l1, rhs = sN * (l1 - k * l0) * (l0 - k * l1); break;
    }
    double scale = std::max({1.0, std::norm(k), std::norm(kp)});
    return std::abs(lhs - rhs) / scale;
}

bool hyp_equal(const HypPoint& x, const HypPoint& y, double tol) {
    return chordal(x.t, y.t) <= tol && chordal(x.lambda, y.lambda) <= tol && chordal(x.base, y.base) <= tol;
}

DihedralElement DihedralElement::parse(const std::string& word, int N) {
    std::istringstream is(word);
    std::string tok;
    DihedralElement r;
    while (is >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        int k = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) name = tok.substr(0, pos), k = std::stoi(tok.substr(pos + 1));
        DihedralElement g;
        if (name == "theta") g.a = 1;
        else if (name == "sigma") g.s = 1;
        else if (name == "iota") g.b = 1;
        else throw UnknownLabel("unknown dihedral label '" + name + "'");
        DihedralElement gk;
        if (k < 0) {
            g = g.a ? DihedralElement{0, -1, 0} : g;
            k = -k;
        }
        for (int n = 0; n < k; ++n) gk = gk * g;
        r = normal_form(r * gk, N);
    }
    return r;
}

DihedralElement operator*(const DihedralElement& x, const DihedralElement& y) {
    return {(x.s + y.s) % 2, x.a + (x.b ? -y.a : y.a), (x.b + y.b) % 2};
}

DihedralElement normal_form(const DihedralElement& d, int N) {
    return {((d.s % 2) + 2) % 2, static_cast<int>(mod(d.a, N)), ((d.b % 2) + 2) % 2};
}

HypPoint dihedral_action(const DihedralElement& d, const HypPoint& h, int N) {
    DihedralElement e = normal_form(d, N);
    HypPoint r = h;
    if (e.b) {
        // iota: (1/t, (1 - k' lambda)/(k' - lambda)) with k' = (k0^2 + k1^2)/(2 k0 k1)
        cplx p = h.base.k0 * h.base.k0 + h.base.k1 * h.base.k1, q = 2.0 * h.base.k0 * h.base.k1;
        r.t = p1(r.t.k1, r.t.k0);
        r.lambda = p1(q * r.lambda.k1 - p * r.lambda.k0, p * r.lambda.k1 - q * r.lambda.k0);
    }
    if (e.a) r.t = p1(zeta_pow(N, 4 * e.a) * r.t.k0, r.t.k1);
    if (e.s) r.lambda = p1(r.lambda.k1, r.lambda.k0);
    return r;
}

std::string to_string(DegComponent c) {
    switch (c) {
        case DegComponent::t_pow_one: return "t^N=1";
        case DegComponent::t_pow_minus_one: return "t^N=-1";
        case DegComponent::t_infinite: return "t^N=inf";
        case DegComponent::lambda_zero: return "lambda=0";
        case DegComponent::lambda_infinite: return "lambda=inf";
        case DegComponent::lambda_one: return "lambda=1";
        case DegComponent::lambda_minus_one: return "lambda=-1";
    }
    return "?";
}

std::vector<DegComponent> degenerate_membership(const HypPoint& hp, int N, double tol) {
    FiberClass cls = classify(hp.base);
    if (cls.tag == FiberTag::smooth) throw DomainError("degenerate_membership: smooth base " + hp.base.str());
    auto t_pow = [&](cplx v) { return chordal(p1(std::pow(hp.t.k0, N), std::pow(hp.t.k1, N)), finite(v)) <= tol; };
    auto lam = [&](const P1& v) { return chordal(hp.lambda, v) <= tol; };
    std::vector<DegComponent> out;
    switch (cls.tag) {
        case FiberTag::deg_0_pm1:
        case FiberTag::deg_inf:
            if (t_pow(cls.tag == FiberTag::deg_0_pm1 ? 1.0 : -1.0))
                out.push_back(cls.tag == FiberTag::deg_0_pm1 ? DegComponent::t_pow_one : DegComponent::t_pow_minus_one);
            if (lam(finite(0))) out.push_back(DegComponent::lambda_zero);
            if (lam(P1::infinity())) out.push_back(DegComponent::lambda_infinite);
            break;
        case FiberTag::deg_pm1_0:
            if (chordal(hp.t, P1::infinity()) <= tol) out.push_back(DegComponent::t_infinite);
            if (lam(finite(cls.sign))) out.push_back(cls.sign > 0 ? DegComponent::lambda_one : DegComponent::lambda_minus_one);
            break;
        case FiberTag::smooth: break;
    }
    return out;
}

HypPoint modular_action_W(const std::string& M, const HypPoint& h, int N) {
    HypPoint r = h;
    auto [kp, k] = moduli(h.base);
    if (M == "T") {
        r.t = p1(zeta_pow(N, 2) * h.t.k0, h.t.k1);
        r.lambda = p1(h.lambda.k1, h.lambda.k0);
        r.base = BaseParam::from_kk(1.0 / kp, I * k / kp);
    } else if (M == "T^2") {
        r.t = p1(zeta_pow(N, 4) * h.t.k0, h.t.k1);
        r.base = BaseParam::from_kk(kp, -k);
    } else if (M == "S T^-2 S^-1") {
        r.lambda = p1(-h.lambda.k0, h.lambda.k1);
        r.base = BaseParam::from_kk(-kp, k);
    } else {
        throw UnknownLabel("modular_action_W: unsupported element '" + M + "'");
    }
    return r;
}

int genus_check(int N, const BaseParam& base) {
    if (classify(base, 1e-9).tag != FiberTag::smooth) throw DomainError("genus_check: degenerate base " + base.str());
    auto [kp, k] = moduli(base);
    // R = (1 - k' lambda)(lambda - k') / (k^2 lambda): numerator and denominator coefficients, low to high
    std::vector<cplx> num = {-kp, 1.0 + kp * kp, -kp}, den = {0, k * k};
    std::vector<std::pair<P1, int>> divisor;  // point, order of R
    for (auto& [z, m] : cluster(poly_roots(num), 1e-9)) divisor.push_back({finite(z), m});
    for (auto& [z, m] : cluster(poly_roots(den), 1e-9)) divisor.push_back({finite(z), -m});
    divisor.push_back({P1::infinity(), 1 - 2});  // deg den - deg num
    for (size_t i = 0; i < divisor.size(); ++i)
        for (size_t j = i + 1; j < divisor.size(); ++j)
            if (chordal(divisor[i].first, divisor[j].first) < 1e-9)
                throw DomainError("genus_check: branch points collide at " + show(divisor[i].first));
    // each point of order m has N / gcd(N, m) sheets meeting: contributes N - gcd(N, m)
    int ram = 0;
    for (auto& [z, m] : divisor) ram += N - std::gcd(N, std::abs(m));
    // 2g - 2 = N (0 - 2) + ram
    if ((ram - 2 * N) % 2 != 0) throw std::logic_error("genus_check: odd ramification");
    return (ram - 2 * N) / 2 + 1;
}

VerificationReport quotient_equivariance(const CpmGroupBundle& b, int samples, uint64_t seed) {
    VerificationReport rep{"quotient_equivariance", b.N, {}};
    const int N = b.N;
    const std::string anc = "Z2 x D_N action on the H-quotient";
    const DihedralElement theta{0, 1, 0}, sigma{1, 0, 0}, iota{0, 0, 1};
    Stopwatch sw;
    auto pts = sample_points(N, samples, seed);
    DihedralClassMap cls = dihedral_classes(b);
    rep.add("U, j, i have classes theta, sigma, iota in G_N/H",
            cls.of(b("U")) == std::array<int, 3>{0, 1, 0} && cls.of(b("j")) == std::array<int, 3>{1, 0, 0} &&
                cls.of(b("i")) == std::array<int, 3>{0, 0, 1},
            anc);
    bool gens = true, all = true, curve = true;
    double worst = 0;
    std::string bad;
    for (auto& p : pts) {
        HypPoint h = invariants_H(p, N);
        for (auto [w, d] : {std::pair{"U", theta}, std::pair{"j", sigma}, std::pair{"i", iota}}) {
            HypPoint lhs = invariants_H(apply(b(w), p), N), rhs = dihedral_action(d, h, N);
            if (!hyp_equal(lhs, rhs)) gens = false, bad = std::string(w) + " at " + h.str();
            worst = std::max(worst, curve_residual(Quotient::H, rhs, N));
        }
    }
    for (size_t k = 0; k < std::min<size_t>(pts.size(), 4); ++k) {
        HypPoint h = invariants_H(pts[k], N);
        for (auto& g : b.GN.elements()) {
            auto c = cls.of(g);
            if (!hyp_equal(invariants_H(apply(g, pts[k]), N), dihedral_action({c[0], c[1], c[2]}, h, N))) all = false;
        }
    }
    curve = worst <= check_tol();
    rep.add("quotient map intertwines U, j, i with theta, sigma, iota", gens, anc, bad, sw.ms());
    rep.add("every element of G_N acts on (t, lambda) through its class", all, anc,
            std::to_string(b.GN.size()) + " elements at 4 points");
    rep.add("theta, sigma, iota preserve the curve", curve, anc, "max residual " + sci(worst));

    std::mt19937_64 rng(seed ^ 0x5bd1e995);
    std::uniform_int_distribution<int> s2(0, 1), sN(0, N - 1);
    bool rel = true, comp = true;
    for (auto& p : pts) {
        HypPoint h = invariants_H(p, N);
        rel = rel && hyp_equal(dihedral_action(sigma * sigma, h, N), h) &&
              hyp_equal(dihedral_action(sigma, dihedral_action(sigma, h, N), N), h) &&
              hyp_equal(dihedral_action(iota, dihedral_action(iota, h, N), N), h);
        HypPoint x = h;
        for (int n = 0; n < N; ++n) x = dihedral_action(theta, x, N);
        rel = rel && hyp_equal(x, h);
        DihedralElement u{s2(rng), sN(rng), s2(rng)}, v{s2(rng), sN(rng), s2(rng)};
        comp = comp && hyp_equal(dihedral_action(u * v, h, N), dihedral_action(u, dihedral_action(v, h, N), N));
    }
    rep.add("sigma^2 = iota^2 = theta^N = 1 pointwise", rel, anc);
    rep.add("normal-form product matches pointwise composition", comp, anc);
    if (N == 3) {
        HypPoint h{finite(1), finite(2), BaseParam::from_kappa(cplx(0.4, 0.2))};
        HypPoint r = dihedral_action(theta, h, N);
        rep.add("theta(1, 2) = (omega, 2) at N = 3",
                chordal(r.t, finite(zeta_pow(3, 4))) <= check_tol() && chordal(r.lambda, finite(2)) <= check_tol(), anc,
                r.str());
    }
    return rep;
}

VerificationReport modular_consistency(const CpmGroupBundle& b, int samples, uint64_t seed) {
    VerificationReport rep{"modular_consistency", b.N, {}};
    const int N = b.N;
    const std::string anc = "modular elements acting on the H-quotient family";
    auto pts = sample_points(N, samples, seed);
    for (auto& M : kModular) {
        Stopwatch sw;
        bool ok = true, base = true;
        std::string bad;
        for (auto& p : pts) {
            HypPoint lhs = invariants_H(apply(b(M), p), N), rhs = modular_action_W(M, invariants_H(p, N), N);
            if (!hyp_equal(lhs, rhs)) ok = false, bad = lhs.str() + " vs " + rhs.str();
            base = base && chordal(rhs.base, modular_action_base(M, invariants_H(p, N).base)) <= check_tol();
        }
        rep.add(M + ": quotient map commutes with the formula", ok, anc,
                bad.empty() ? std::to_string(pts.size()) + " points" : bad, sw.ms());
        rep.add(M + ": base formula agrees with the Mobius action", base, anc);
    }
    bool t4 = true;
    for (auto& p : pts) {
        HypPoint h = invariants_H(p, N), x = h;
        for (int n = 0; n < 4; ++n) x = modular_action_W("T", x, N);
        t4 = t4 && hyp_equal(x, dihedral_action({0, 2, 0}, h, N));
    }
    rep.add("T applied four times is theta^2 with the same base", t4, anc);
    return rep;
}

VerificationReport cross_family_iso(const CpmGroupBundle& b, int samples, uint64_t seed) {
    VerificationReport rep{"cross_family_iso", b.N, {}};
    const int N = b.N;
    const std::string anc = "isomorphisms between the H, H_r, H_l quotient families";
    auto pts = sample_points(N, samples, seed);
    Stopwatch sw;
    bool r_ok = true, l_ok = true, id = true;
    double worst[3] = {0, 0, 0};
    for (auto& p : pts) {
        HypPoint h = invariants_H(p, N), hr = invariants_Hr(p, N), hl = invariants_Hl(p, N);
        auto [kp, k] = moduli(h.base);
        HypPoint viaR = invariants_H(apply(b("S T S^-1"), p), N), viaL = invariants_H(apply(b("S"), p), N);
        r_ok = r_ok && chordal(viaR.t, hr.t) <= check_tol() && chordal(viaR.lambda, hr.lambda) <= check_tol() &&
               chordal(viaR.base, BaseParam::from_kk(I * kp / k, 1.0 / k)) <= check_tol();
        l_ok = l_ok && chordal(viaL.t, hl.t) <= check_tol() && chordal(viaL.lambda, hl.lambda) <= check_tol() &&
               chordal(viaL.base, BaseParam::from_kk(k, kp)) <= check_tol();
        id = id && hyp_equal(invariants_H(apply(b("1"), p), N), h);
        worst[0] = std::max(worst[0], curve_residual(Quotient::H, h, N));
        worst[1] = std::max(worst[1], curve_residual(Quotient::Hr, hr, N));
        worst[2] = std::max(worst[2], curve_residual(Quotient::Hl, hl, N));
    }
    rep.add("H_r-quotient equals H-quotient after S T S^-1, base (ik'/k, 1/k)", r_ok, anc,
            std::to_string(pts.size()) + " points", sw.ms());
    rep.add("H_l-quotient equals H-quotient after S, base (k, k')", l_ok, anc);
    rep.add("identity case of the quotient map", id, anc);
    const char* eq[3] = {"k^2 t^N = (1 - k' lambda)(1 - k'/lambda)", "t^N = (k - ik' lambda)(k - ik'/lambda)",
                         "k'^2 t^N = (1 - k lambda)(1 - k/lambda)"};
    for (int q = 0; q < 3; ++q)
        rep.add(to_string(static_cast<Quotient>(q)) + "-quotient satisfies " + eq[q], worst[q] <= check_tol(),
                "quotient curve equations", "max residual " + sci(worst[q]));
    if (N == 2) {
        bool r2 = true, l2 = true;
        for (auto& p : pts) {
            HypPoint h = invariants_H(p, N), hr = invariants_Hr(p, N), hl = invariants_Hl(p, N);
            auto [kp, k] = moduli(h.base);
            cplx t = h.t.kappa(), l = h.lambda.kappa();
            r2 = r2 && chordal(hr.t, finite(k * t / (1.0 - kp * l))) <= check_tol() &&
                 chordal(hr.lambda, finite(I * k * l / (1.0 - kp * l))) <= check_tol();
            l2 = l2 && chordal(hl.t, finite(I * k * t / (kp - 1.0 / l))) <= check_tol() &&
                 chordal(hl.lambda, finite((1.0 - kp * l) / k)) <= check_tol();
        }
        rep.add("N = 2: H to H_r birational formula", r2, "elliptic quotients at N = 2");
        rep.add("N = 2: H to H_l birational formula", l2, "elliptic quotients at N = 2");
    } else {
        rep.skip("N = 2: H to H_r birational formula", "elliptic quotients at N = 2", "only defined for N = 2");
        rep.skip("N = 2: H to H_l birational formula", "elliptic quotients at N = 2", "only defined for N = 2");
    }
    return rep;
}

VerificationReport verify_quotients(const CpmGroupBundle& b, int samples, uint64_t seed) {
    VerificationReport rep{"quotients", b.N, {}};
    const int N = b.N;
    const std::string anc = "invariant maps of the quotient families";
    auto pts = sample_points(N, samples, seed);
    const std::pair<Quotient, const FiniteGroup*> fam[3] = {{Quotient::H, &b.H}, {Quotient::Hr, &b.Hr},
                                                           {Quotient::Hl, &b.Hl}};
    for (auto [q, G] : fam) {
        Stopwatch sw;
        bool collapse = true, sizes = true;
        for (auto& p : pts) {
            HypPoint h = invariants(q, p, N);
            std::vector<ProjPoint> orbit;
            for (auto& g : G->elements()) {
                ProjPoint x = apply(g, p);
                if (!hyp_equal(invariants(q, x, N), h)) collapse = false;
                if (std::none_of(orbit.begin(), orbit.end(), [&](auto& y) { return approx_eq(x, y); }))
                    orbit.push_back(x);
            }
            sizes = sizes && orbit.size() == static_cast<size_t>(N) * N;
        }
        std::string Q = to_string(q);
        rep.add(Q + "-orbits of sampled points have N^2 points", sizes, anc, std::to_string(pts.size()) + " points",
                sw.ms());
        rep.add(Q + "-invariants agree along each orbit", collapse, anc);
    }
    if (N >= 3) {
        // some element of one subgroup moves the invariants of another
        bool distinct = true;
        std::string w;
        const ProjPoint& p = pts.front();
        for (auto [qa, Ga] : fam)
            for (auto [qb, Gb] : fam) {
                if (qa == qb) continue;
                HypPoint h = invariants(qb, p, N);
                bool moved = std::any_of(Ga->elements().begin(), Ga->elements().end(),
                                         [&](auto& g) { return !hyp_equal(invariants(qb, apply(g, p), N), h); });
                if (!moved) distinct = false, w = to_string(qa) + " preserves " + to_string(qb) + "-invariants";
            }
        rep.add("N >= 3: the three quotient maps have different fibers", distinct, anc, w);
    } else {
        bool same = b.H == b.Hr && b.H == b.Hl;
        rep.add("N = 2: H = H_r = H_l", same, anc);
    }
    {
        std::mt19937_64 rng(seed + 99);
        bool ok = true;
        std::string got;
        for (int k = 0; k < 5; ++k) {
            int g = genus_check(N, random_smooth_base(rng()));
            ok = ok && g == N - 1;
            got = std::to_string(g);
        }
        rep.add("quotient curves have genus N - 1", ok, "Riemann-Hurwitz for t^N = R(lambda)", "genus " + got);
        bool err = false;
        try {
            genus_check(N, BaseParam::from_kappa(1));
        } catch (const DomainError&) {
            err = true;
        }
        rep.add("genus_check rejects a degenerate base", err, "Riemann-Hurwitz for t^N = R(lambda)");
    }
    {
        bool err = false;
        std::array<cplx, 4> x{0, 1, std::pow(2.0, 0.5 / N), 1};  // surface point with ab = 0
        try {
            invariants_H(ProjPoint(x), N);
        } catch (const IndeterminateError&) {
            err = true;
        } catch (const DomainError&) {
        }
        auto s = singular_points(degenerate_fiber({FiberTag::deg_0_pm1, 1}), N);
        try {
            invariants_H(s.sing0.front().numeric(), N);
            err = false;
        } catch (const IndeterminateError&) {
        }
        rep.add("fundamental locus raises an indeterminate error", err, anc);
    }
    {
        bool ok = true;
        HypPoint x{finite(1), finite(5), BaseParam::from_kappa(I)};
        ok = ok && degenerate_membership(x, N) == std::vector{DegComponent::t_pow_one};
        HypPoint y{P1::infinity(), finite(1), BaseParam::from_kappa(1)};
        auto ym = degenerate_membership(y, N);
        ok = ok && ym == std::vector{DegComponent::t_infinite, DegComponent::lambda_one};
        HypPoint z{finite(std::polar(1.0, std::numbers::pi / N)), finite(3), BaseParam::infinity()};
        ok = ok && degenerate_membership(z, N) == std::vector{DegComponent::t_pow_minus_one};
        // quotient images of degenerate-fiber points land on the listed components
        for (auto& f : degenerate_fibers())
            for (auto& p : sample_fiber(f.base, N, 6, seed + 7)) {
                try {
                    if (degenerate_membership(invariants_H(p, N), N).empty()) ok = false;
                } catch (const IndeterminateError&) {
                }
            }
        rep.add("degenerate quotient curves decompose into the listed components", ok, "degenerate quotient curves");
    }
    rep.append(quotient_equivariance(b, samples, seed + 1));
    rep.append(modular_consistency(b, std::max(samples, 100), seed + 2));
    rep.append(cross_family_iso(b, std::max(samples, 100), seed + 3));
    return rep;
}

}  // namespace cpm
