#include "cpm/lines.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "cpm/polyroots.hpp"

namespace cpm {

namespace {

const cplx I(0, 1);

MonomialMap transport(LineFamily f, int N) {
    switch (f) {
        case LineFamily::AB_CD: return MonomialMap::identity(N);
        case LineFamily::AD_BC: return cpm_generator("S", N);
        case LineFamily::AC_BD: {
            MonomialMap S = cpm_generator("S", N), T = cpm_generator("T", N);
            return compose(compose(S, T), inverse(S));
        }
    }
    throw std::logic_error("bad family");
}

std::string transport_word(LineFamily f) {
    switch (f) {
        case LineFamily::AB_CD: return "1";
        case LineFamily::AD_BC: return "S";
        case LineFamily::AC_BD: return "S T S^-1";
    }
    return "1";
}

// Coefficients of kappa1 P - kappa0 Q with tiny entries cleared.
std::vector<cplx> preimage_poly(const std::vector<cplx>& P, const std::vector<cplx>& Q, const BaseParam& k) {
    BaseParam n = k.normalized();
    std::vector<cplx> c(std::max(P.size(), Q.size()), 0);
    for (size_t d = 0; d < P.size(); ++d) c[d] += n.k1 * P[d];
    for (size_t d = 0; d < Q.size(); ++d) c[d] -= n.k0 * Q[d];
    double s = 0;
    for (auto& x : c) s = std::max(s, std::abs(x));
    for (auto& x : c)
        if (std::abs(x) < 1e-12 * s) x = 0;
    return c;
}

int degree(const std::vector<cplx>& c) {
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d)
        if (std::abs(c[d]) > 0) return d;
    return -1;
}

}  // namespace

std::string to_string(LineFamily f) {
    switch (f) {
        case LineFamily::AB_CD: return "AB-CD";
        case LineFamily::AD_BC: return "AD-BC";
        case LineFamily::AC_BD: return "AC-BD";
    }
    return "?";
}

std::string LineIndex::str() const {
    std::ostringstream os;
    os << to_string(family) << " L(" << i << "," << j << ";" << m << "," << n << ")";
    return os.str();
}

LineForms normalize(LineForms f, int N) {
    for (auto& b : f) {
        if (b.p > b.q) {
            std::swap(b.p, b.q);
            b.e = -b.e;
        }
        b.e = mod(b.e, 4LL * N);
    }
    if (f[1] < f[0]) std::swap(f[0], f[1]);
    return f;
}

LineForms line_forms(const LineIndex& L, int N) {
    LineForms base{{{0, 1, 2 * L.i + 4 * L.m}, {2, 3, 2 * L.j + 4 * L.n}}};
    return transform(transport(L.family, N), normalize(base, N));
}

LineForms transform(const MonomialMap& g, const LineForms& f) {
    std::array<int, 4> inv;
    for (int k = 0; k < 4; ++k) inv[g.perm[k]] = k;
    LineForms out;
    for (int t = 0; t < 2; ++t) {
        int kp = inv[f[t].p], kq = inv[f[t].q];
        out[t] = {kp, kq, f[t].e + g.exps[kp] - g.exps[kq]};
    }
    return normalize(out, g.N);
}

ProjPoint point_on(const LineForms& f, cplx sigma, int N) {
    std::array<cplx, 4> x;
    x[f[0].q] = sigma;
    x[f[0].p] = zeta_pow(N, f[0].e) * sigma;
    x[f[1].q] = 1;
    x[f[1].p] = zeta_pow(N, f[1].e);
    return ProjPoint(x);
}

std::optional<ExactPoint> intersect(const LineForms& x, const LineForms& y, int N) {
    if (x[0].p != y[0].p || x[0].q != y[0].q || x[1].p != y[1].p || x[1].q != y[1].q)
        throw DomainError("intersect: lines use different coordinate pairings");
    bool eq0 = x[0].e == y[0].e, eq1 = x[1].e == y[1].e;
    if (eq0 && eq1) throw DomainError("intersect: lines coincide");
    if (!eq0 && !eq1) return std::nullopt;
    const Binomial& keep = eq0 ? x[0] : x[1];
    std::array<int, 4> e{-1, -1, -1, -1};
    e[keep.p] = keep.e;
    e[keep.q] = 0;
    return ExactPoint::make(N, e);
}

std::vector<LineIndex> enumerate_lines(int N) {
    std::vector<LineIndex> out;
    for (auto f : {LineFamily::AB_CD, LineFamily::AD_BC, LineFamily::AC_BD})
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int m = 0; m < N; ++m)
                    for (int n = 0; n < N; ++n) out.push_back({f, i, j, m, n});
    return out;
}

LineSet::LineSet(int N) : N_(N), lines_(enumerate_lines(N)) {
    for (size_t k = 0; k < lines_.size(); ++k)
        if (!index_.emplace(line_forms(lines_[k], N), static_cast<int>(k)).second)
            throw std::logic_error("two line indices give the same line: " + lines_[k].str());
}

int LineSet::find(const LineForms& f) const {
    auto it = index_.find(normalize(f, N_));
    return it == index_.end() ? -1 : it->second;
}

int LineSet::image(const MonomialMap& g, int line) const {
    int r = find(transform(g, line_forms(lines_[line], N_)));
    if (r < 0) throw std::logic_error("image of " + lines_[line].str() + " under " + g.str() + " is not indexed");
    return r;
}

std::vector<LineOrbit> line_orbits(const CpmGroupBundle& b, const LineSet& ls) {
    const int N = b.N;
    std::vector<int> seen(ls.lines().size(), -1);
    std::vector<LineOrbit> out;
    const std::vector<MonomialMap> gens = {b("u1"), b("u2"), b("U")};
    const cplx probes[3] = {{0.7, 0.2}, {-1.1, 0.5}, {0.3, -1.4}};
    for (size_t s = 0; s < ls.lines().size(); ++s) {
        if (seen[s] >= 0) continue;
        LineOrbit o{ls.lines()[s].family, {}, false, {}};
        std::deque<int> q{static_cast<int>(s)};
        seen[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            o.members.push_back(x);
            for (auto& g : gens) {
                int y = ls.image(g, x);
                if (seen[y] < 0) {
                    seen[y] = static_cast<int>(out.size());
                    q.push_back(y);
                }
            }
        }
        std::sort(o.members.begin(), o.members.end());
        LineForms f = line_forms(ls.lines()[o.members.front()], N);
        std::set<std::string> classes;
        for (cplx z : probes) {
            FiberResult r = fiber_map(point_on(f, z, N), N);
            classes.insert(r.cls.tag == FiberTag::smooth ? "smooth:" + r.base.str() : r.cls.str());
            o.fiber = r.cls;
        }
        o.horizontal = classes.size() > 1 || o.fiber.tag == FiberTag::smooth;
        if (o.horizontal) o.fiber = {};
        out.push_back(o);
    }
    return out;
}

CoverData horizontal_cover(const LineIndex& L, int N, uint64_t seed) {
    if (L.i != L.j) throw DomainError("horizontal_cover: " + L.str() + " lies in a degenerate fiber");
    // On the family AB-CD line, a^N = (-1)^i sigma^N b-scaled and c^N = (-1)^j; kappa' is Mobius in X = sigma^N.
    const double sA = L.i ? -1.0 : 1.0, sC = L.j ? -1.0 : 1.0;
    cplx a, bcoef, c, d;  // kappa0 = a X + b, kappa1 = c X + d
    if (L.i == 0) {
        a = -sA, bcoef = I * sC, c = sA, d = I * sC;
    } else {
        a = sA, bcoef = -I * sC, c = sA, d = I * sC;
    }
    Mobius M = base_action(transport_word(L.family));
    cplx pa = M.m[0] * a + M.m[1] * c, pb = M.m[0] * bcoef + M.m[1] * d;
    cplx qa = M.m[2] * a + M.m[3] * c, qb = M.m[2] * bcoef + M.m[3] * d;
    std::vector<cplx> P(N + 1, 0), Q(N + 1, 0);
    P[0] = pb, P[N] = pa, Q[0] = qb, Q[N] = qa;

    CoverData out;
    out.degree = N;
    const MonomialMap Mf = transport(L.family, N);
    LineForms base{{{0, 1, 2 * L.i + 4 * L.m}, {2, 3, 2 * L.j + 4 * L.n}}};
    base = normalize(base, N);

    BaseParam target = random_smooth_base(seed);
    auto roots = poly_roots(preimage_poly(P, Q, target));
    int verified = 0;
    for (auto& [z, mult] : cluster(roots, 1e-8)) {
        FiberResult r = fiber_map(apply(Mf, point_on(base, z, N)), N);
        if (mult == 1 && chordal(r.base, target) <= check_tol()) ++verified;
    }
    out.generic_preimages = verified;

    // critical points of P/Q: roots of P'Q - PQ', plus the point at infinity for any degree deficit
    std::vector<cplx> W(2 * N, 0);
    for (int i = 1; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            W[i - 1 + j] += double(i) * P[i] * Q[j];
            W[i - 1 + j] -= double(i) * Q[i] * P[j];
        }
    double ws = 0;
    for (auto& x : W) ws = std::max(ws, std::abs(x));
    for (auto& x : W)
        if (std::abs(x) < 1e-12 * ws) x = 0;
    int dw = degree(W);
    std::vector<std::pair<BaseParam, int>> crit;  // (value, e - 1)
    auto eval = [&](cplx z) {
        cplx p = 0, q = 0;
        for (int k = N; k >= 0; --k) p = p * z + P[k], q = q * z + Q[k];
        return BaseParam{p, q}.normalized();
    };
    for (auto& [z, mult] : cluster(poly_roots(W), 1e-6)) crit.push_back({eval(z), mult});
    if (dw < 2 * N - 2) crit.push_back({BaseParam{P[N], Q[N]}.normalized(), 2 * N - 2 - dw});
    for (auto& [v, r] : crit) {
        out.ramification_total += r;
        bool dup = false;
        for (auto& bv : out.branch_values) dup = dup || chordal(bv, v) < 1e-9;
        if (!dup) out.branch_values.push_back(v);
    }
    for (auto& bv : out.branch_values) {
        auto c = preimage_poly(P, Q, bv);
        int finite = static_cast<int>(cluster(poly_roots(c), 1e-6).size());
        bool at_inf = degree(c) < N;
        out.branch_preimages.push_back(finite + (at_inf ? 1 : 0));
    }
    return out;
}

VerificationReport horizontal_cover_check(const LineIndex& L, int N, uint64_t seed) {
    VerificationReport rep{"horizontal_cover", N, {}};
    const std::string anc = "horizontal lines cover the base N to 1";
    Stopwatch sw;
    CoverData c = horizontal_cover(L, N, seed);
    rep.add(L.str() + ": generic base point has N preimages", c.generic_preimages == N, anc,
            std::to_string(c.generic_preimages) + " preimages", sw.ms());
    bool two = c.branch_values.size() == 2 &&
               std::all_of(c.branch_preimages.begin(), c.branch_preimages.end(), [](int k) { return k == 1; });
    std::string bv;
    for (auto& v : c.branch_values) bv += (bv.empty() ? "" : ", ") + v.str();
    rep.add(L.str() + ": two branch values with one preimage each", two, anc, bv);
    rep.add(L.str() + ": total ramification 2N - 2", c.ramification_total == 2 * N - 2, anc,
            std::to_string(c.ramification_total));
    Mobius M = base_action(transport_word(L.family));
    std::vector<BaseParam> expect = {M(BaseParam::from_kappa(1)), M(BaseParam::from_kappa(-1))};
    bool match = c.branch_values.size() == 2;
    for (auto& e : expect)
        match = match && std::any_of(c.branch_values.begin(), c.branch_values.end(),
                                     [&](auto& v) { return chordal(v, e) < 1e-9; });
    rep.add(L.str() + ": branch values are the degenerate pair of its family", match, anc, bv);
    return rep;
}

LineForms fiber_line(const DegenerateFiber& f, int m, int n, int N) {
    auto [p, q, r, s] = f.pairs;
    return normalize(LineForms{{{p, q, f.s1 + 4 * m}, {r, s, f.s2 + 4 * n}}}, N);
}

VerificationReport verify_lines(const CpmGroupBundle& b, uint64_t seed) {
    VerificationReport rep{"lines", b.N, {}};
    const int N = b.N;
    const size_t n2 = static_cast<size_t>(N) * N;
    const std::string anc = "lines of the Fermat surface";
    LineSet ls(N);
    Stopwatch sw;
    auto orbits = line_orbits(b, ls);
    const std::map<LineFamily, FiberTag> family_fiber = {{LineFamily::AB_CD, FiberTag::deg_pm1_0},
                                                         {LineFamily::AD_BC, FiberTag::deg_0_pm1},
                                                         {LineFamily::AC_BD, FiberTag::deg_inf}};
    for (auto fam : {LineFamily::AB_CD, LineFamily::AD_BC, LineFamily::AC_BD}) {
        std::string F = to_string(fam);
        size_t count = std::count_if(ls.lines().begin(), ls.lines().end(), [&](auto& L) { return L.family == fam; });
        rep.add(F + ": 4N^2 lines", count == 4 * n2, anc, std::to_string(count));
        std::vector<size_t> sizes;
        int horiz = 0;
        std::set<int> signs;
        bool tags = true;
        for (auto& o : orbits) {
            if (o.family != fam) continue;
            sizes.push_back(o.members.size());
            if (o.horizontal) {
                ++horiz;
                tags = tags && o.members.size() == 2 * n2;
            } else {
                signs.insert(o.fiber.sign);
                tags = tags && o.fiber.tag == family_fiber.at(fam) && o.members.size() == n2;
            }
        }
        std::sort(sizes.begin(), sizes.end());
        std::string sz;
        for (auto s : sizes) sz += (sz.empty() ? "" : ", ") + std::to_string(s);
        rep.add(F + ": G_N-orbits of sizes N^2, N^2, 2N^2", sizes == std::vector<size_t>{n2, n2, 2 * n2}, anc, sz,
                sw.ms());
        rep.add(F + ": one horizontal orbit and the two degenerate fibers of the family",
                horiz == 1 && tags && signs == std::set<int>{-1, 1}, anc);
    }
    {
        std::set<int> expect, got;
        for (size_t k = 0; k < ls.lines().size(); ++k) {
            auto& L = ls.lines()[k];
            if (L.family == LineFamily::AB_CD && L.i == L.j) expect.insert(static_cast<int>(k));
        }
        for (auto& o : orbits)
            if (o.horizontal && o.family == LineFamily::AB_CD) got.insert(o.members.begin(), o.members.end());
        rep.add("AB-CD horizontal orbit = L(0,0) and L(1,1) lines", got == expect, anc);
        bool locus = true;
        for (int k : expect) {
            ProjPoint p = point_on(line_forms(ls.lines()[k], N), cplx(0.6, 0.9), N).normalized();
            cplx A = std::pow(p.c[0], N), B = std::pow(p.c[1], N), C = std::pow(p.c[2], N), D = std::pow(p.c[3], N);
            bool plus = std::abs(A - B) + std::abs(C - D) < 1e-12, minus = std::abs(A + B) + std::abs(C + D) < 1e-12;
            locus = locus && (plus || minus) && fiber_map(p, N).cls.tag == FiberTag::smooth;
        }
        rep.add("horizontal AB-CD lines lie in (a^N, c^N) = +-(b^N, d^N) off the degenerate fibers", locus, anc);
    }
    {
        bool ok = true;
        std::string bad;
        for (auto& o : orbits) {
            if (o.horizontal) continue;
            const DegenerateFiber& f = degenerate_fiber(o.fiber);
            std::set<LineForms> expect, got;
            for (int m = 0; m < N; ++m)
                for (int n = 0; n < N; ++n) expect.insert(fiber_line(f, m, n, N));
            for (int k : o.members) got.insert(line_forms(ls.lines()[k], N));
            if (expect != got) ok = false, bad = f.label;
            for (auto& fl : expect)
                if (!on_fiber(point_on(fl, cplx(0.8, -0.3), N), f.base, N)) ok = false, bad = f.label;
        }
        rep.add("each degenerate orbit is exactly the N^2 lines of one degenerate fiber", ok,
                "degenerate fibers are unions of N^2 lines", bad);
    }
    for (auto fam : {LineFamily::AB_CD, LineFamily::AD_BC, LineFamily::AC_BD})
        for (int s : {0, 1}) rep.append(horizontal_cover_check({fam, s, s, 0, 0}, N, seed + 17 * s));
    {
        Stopwatch sw2;
        bool iff = true, sets = true, rank = true;
        std::string which;
        for (auto& f : degenerate_fibers()) {
            std::set<ExactPoint> same_m, same_n;
            for (int m = 0; m < N; ++m)
                for (int n = 0; n < N; ++n)
                    for (int m2 = 0; m2 < N; ++m2)
                        for (int n2b = 0; n2b < N; ++n2b) {
                            if (m == m2 && n == n2b) continue;
                            auto x = intersect(fiber_line(f, m, n, N), fiber_line(f, m2, n2b, N), N);
                            bool meet = x.has_value();
                            iff = iff && (meet == (m == m2 || n == n2b));
                            if (meet) (m == m2 ? same_m : same_n).insert(*x);
                        }
            SingularSets S = singular_points(f, N);
            std::set<ExactPoint> s0(S.sing0.begin(), S.sing0.end()), s1(S.sing1.begin(), S.sing1.end());
            bool order_a = same_m == s1 && same_n == s0, order_b = same_m == s0 && same_n == s1;
            sets = sets && (order_a || order_b) && s0 != s1;
            if (which.empty()) which = order_a ? "shared m meets in Sing^1, shared n in Sing^0"
                                               : "shared m meets in Sing^0, shared n in Sing^1";
            // the fiber's two defining equations have dependent gradients exactly at Sing
            auto [p, q, r, s] = f.pairs;
            auto jac_rank_deficient = [&](const ProjPoint& x) {
                std::array<cplx, 4> g1{}, g2{};
                g1[p] = double(N) * std::pow(x.c[p], N - 1);
                g1[q] = -double(N) * std::pow(cplx(0, 1), f.s1) * std::pow(x.c[q], N - 1);
                g2[r] = double(N) * std::pow(x.c[r], N - 1);
                g2[s] = -double(N) * std::pow(cplx(0, 1), f.s2) * std::pow(x.c[s], N - 1);
                double minor = 0;
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j) minor = std::max(minor, std::abs(g1[i] * g2[j] - g1[j] * g2[i]));
                return minor < 1e-9;
            };
            for (auto* set : {&S.sing0, &S.sing1})
                for (auto& x : *set) rank = rank && jac_rank_deficient(x.numeric().normalized());
            rank = rank && !jac_rank_deficient(point_on(fiber_line(f, 0, 0, N), cplx(0.9, 0.4), N).normalized());
        }
        rep.add("lines of a degenerate fiber meet iff they share m or n", iff, "intersections of degenerate lines", "",
                sw2.ms());
        rep.add("shared-m and shared-n intersections are Sing^0 and Sing^1", sets, "intersections of degenerate lines",
                which);
        rep.add("singular sets are where the fiber equations have dependent gradients", rank,
                "singular points of degenerate fibers");
    }
    return rep;
}

}  // namespace cpm
