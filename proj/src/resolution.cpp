#include "cpm/resolution.hpp"

#include <sstream>

#include "cpm/fermat.hpp"

namespace cpm {

namespace {

Exponent operator+(const Exponent& x, const Exponent& y) { return {x[0] + y[0], x[1] + y[1]}; }
Exponent operator*(int k, const Exponent& x) { return {k * x[0], k * x[1]}; }

int det(const Chart& c) { return c[0][0] * c[1][1] - c[0][1] * c[1][0]; }

// b such that next.u = cur.u^b cur.v and next.v = cur.u^-1; the curve {cur.v = 0} then has self-intersection -b.
std::optional<int> transition_weight(const Chart& cur, const Chart& next) {
    if (next[1] != -1 * cur[0]) return std::nullopt;
    Exponent r{next[0][0] - cur[1][0], next[0][1] - cur[1][1]};
    for (int b = -64; b <= 64; ++b)
        if (b * cur[0] == r) return b;
    return std::nullopt;
}

std::string show(const Exponent& e) { return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")"; }

}  // namespace

std::string to_string(SingKind k) { return k == SingKind::diag ? "diag(omega,omega)" : "A"; }

std::string to_string(ChiImage c) {
    switch (c) {
        case ChiImage::zero_one: return "[0,1]";
        case ChiImage::one_zero: return "[1,0]";
        case ChiImage::cover: return "cover";
    }
    return "?";
}

std::vector<int> hj_fraction(int n, int q) {
    if (n < 1 || q < 1 || q >= n + (n == 1)) throw DomainError("hj_fraction: need 0 < q < n");
    std::vector<int> b;
    while (q > 0) {
        int k = (n + q - 1) / q;  // ceiling
        b.push_back(k);
        int r = k * q - n;
        n = q;
        q = r;
    }
    return b;
}

ResolutionData resolve(const SingularityType& s) {
    const int N = s.N;
    if (N < 2) throw DomainError("resolve: N must be at least 2");
    ResolutionData r{s, {}, {}, {}};
    if (s.kind == SingKind::diag) {
        // (z1^N, z2/z1) and (z1/z2, z2^N)
        r.charts = {Chart{{{N, 0}, {-1, 1}}}, Chart{{{1, -1}, {0, N}}}};
    } else {
        for (int j = 0; j < N; ++j) r.charts.push_back(Chart{{{j + 1, 1 - N + j}, {-j, N - j}}});
    }
    for (size_t j = 0; j + 1 < r.charts.size(); ++j) {
        // in the diag case the exceptional curve is {u_0 = 0}, glued with the roles of u and v swapped
        auto w = s.kind == SingKind::diag
                     ? transition_weight(Chart{{r.charts[0][1], r.charts[0][0]}}, Chart{{r.charts[1][1], r.charts[1][0]}})
                     : transition_weight(r.charts[j], r.charts[j + 1]);
        if (!w) throw std::logic_error("resolve: chart transition is not of chain form");
        r.self_intersection.push_back(-*w);
    }
    const size_t n = r.self_intersection.size();
    r.intersection.assign(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        r.intersection[i][i] = r.self_intersection[i];
        if (i + 1 < n) r.intersection[i][i + 1] = r.intersection[i + 1][i] = 1;
    }
    return r;
}

std::optional<std::array<int, 2>> chart_coords(const Chart& c, const Exponent& m) {
    int d = det(c);
    int a = m[0] * c[1][1] - m[1] * c[1][0], b = c[0][0] * m[1] - c[0][1] * m[0];
    if (d == 0 || a % d || b % d) return std::nullopt;
    return std::array<int, 2>{a / d, b / d};
}

std::pair<Multiplicities, Multiplicities> divisor_multiplicities(const SingularityType& s) {
    ResolutionData r = resolve(s);
    const int N = s.N;
    auto mult = [&](const Exponent& m) {
        Multiplicities out;
        if (s.kind == SingKind::A) {
            // E_j = {u_j = 0} in chart j, D_0 = {u_0 = 0}, D_N = {v_{N-1} = 0}
            for (int j = 1; j < N; ++j) out.E.push_back(chart_coords(r.charts[j], m).value()[0]);
            out.D0 = chart_coords(r.charts[0], m).value()[0];
            out.DN = chart_coords(r.charts[N - 1], m).value()[1];
        } else {
            // E = {u_0 = 0}; proper transforms of z1 = 0 and z2 = 0 are {u_1 = 0} and {v_0 = 0}
            out.E.push_back(chart_coords(r.charts[0], m).value()[0]);
            out.D0 = chart_coords(r.charts[1], m).value()[0];
            out.DN = chart_coords(r.charts[0], m).value()[1];
        }
        return out;
    };
    return {mult({N, 0}), mult({0, N})};
}

ChiAnalysis chi_analysis(int N) {
    ResolutionData r = resolve({SingKind::A, N});
    auto [m1, m2] = divisor_multiplicities(N);
    ChiAnalysis out;
    const Exponent ratio{N, -N};  // z1^N / z2^N
    for (int j = 1; j < N; ++j) {
        CurveImage c{"E_" + std::to_string(j), ChiImage::zero_one, 0};
        if (m1.E[j - 1] < m2.E[j - 1]) c.image = ChiImage::one_zero;
        if (m1.E[j - 1] == m2.E[j - 1]) {
            // on E_j = {u_j = 0} chi restricts to v_j^beta
            c.image = ChiImage::cover;
            c.degree = std::abs(chart_coords(r.charts[j], ratio).value()[1]);
        }
        out.curves.push_back(c);
    }
    out.curves.push_back({"D_0", m1.D0 > m2.D0 ? ChiImage::zero_one : ChiImage::one_zero, 0});
    out.curves.push_back({"D_N", m1.DN > m2.DN ? ChiImage::zero_one : ChiImage::one_zero, 0});
    for (int j = 0; j < N; ++j) {
        auto ab = chart_coords(r.charts[j], ratio).value();
        if (ab[0] * ab[1] < 0) {
            // chi = u^a v^b near o_j; blowing up gives u'^(a+b) w^b on the new chart
            out.fundamental_point = j;
            out.blowup_degree = ab[0] + ab[1] == 0 ? std::abs(ab[1]) : 0;
        }
    }
    return out;
}

VerificationReport verify_resolution(int N) {
    VerificationReport rep{"resolution", N, {}};
    const std::string anc = "minimal resolution of the quotient singularities";
    Stopwatch sw;
    ResolutionData d = resolve({SingKind::diag, N});
    ResolutionData a = resolve({SingKind::A, N});
    rep.add("diag type: one exceptional curve of self-intersection -N",
            d.self_intersection == std::vector<int>{-N}, anc, "", sw.ms());
    rep.add("A type: chain of N - 1 curves of self-intersection -2",
            a.self_intersection == std::vector<int>(N - 1, -2), anc);
    rep.add("continued fractions agree: N/1 and N/(N-1)",
            hj_fraction(N, 1) == std::vector<int>{N} && hj_fraction(N, N - 1) == std::vector<int>(N - 1, 2), anc);
    bool inv = true, trans = true;
    for (auto* r : {&d, &a}) {
        int w = r->type.kind == SingKind::diag ? 1 : -1;
        for (auto& c : r->charts) {
            inv = inv && det(c) == N;
            for (auto& m : c) inv = inv && ((m[0] + w * m[1]) % N == 0);
        }
    }
    for (int j = 0; j + 1 < N; ++j) {
        const Chart &c = a.charts[j], &n = a.charts[j + 1];
        trans = trans && n[0] == 2 * c[0] + c[1] && n[1] == -1 * c[0];
    }
    rep.add("chart monomials are invariant and span the invariant lattice", inv, anc);
    rep.add("u_{j+1} = u_j^2 v_j and v_{j+1} = u_j^-1 on consecutive charts", trans, anc);
    std::string rows;
    for (auto& c : a.charts) rows += "(" + show(c[0]) + "," + show(c[1]) + ")";
    rep.add("A type: charts j = 0..N-1 are (j+1, 1-N+j), (-j, N-j)",
            a.charts.size() == static_cast<size_t>(N) && a.charts.front()[0] == Exponent{1, 1 - N} &&
                a.charts.back()[1] == Exponent{1 - N, 1},
            anc, rows);

    auto [m1, m2] = divisor_multiplicities(N);
    bool mult = m1.D0 == N && m1.DN == 0 && m2.D0 == 0 && m2.DN == N;
    for (int j = 1; j < N; ++j) mult = mult && m1.E[j - 1] == N - j && m2.E[j - 1] == j;
    std::ostringstream w;
    w << "(z1^N) = ";
    for (int j = 1; j < N; ++j) w << m1.E[j - 1] << " E_" << j << " + ";
    w << m1.D0 << " D_0";
    rep.add("multiplicities: E_j has N - j in z1^N and j in z2^N, boundary divisors N", mult,
            "divisors of z1^N and z2^N", w.str());
    // a principal divisor meets every compact curve trivially
    bool zero = true;
    for (auto* m : {&m1, &m2})
        for (int j = 0; j < N - 1; ++j) {
            int s = 0;
            for (int i = 0; i < N - 1; ++i) s += m->E[i] * a.intersection[i][j];
            if (j == 0) s += m->D0;
            if (j == N - 2) s += m->DN;
            zero = zero && s == 0;
        }
    auto [d1, d2] = divisor_multiplicities({SingKind::diag, N});
    zero = zero && d1.E[0] * d.intersection[0][0] + d1.D0 == 0 && d2.E[0] * d.intersection[0][0] + d2.DN == 0;
    rep.add("(z1^N) . E_j = (z2^N) . E_j = 0 for every exceptional curve", zero, "divisors of z1^N and z2^N");

    ChiAnalysis chi = chi_analysis(N);
    bool ok = chi.curves[N - 1].image == ChiImage::zero_one && chi.curves[N].image == ChiImage::one_zero;
    for (int j = 1; j < N; ++j) {
        const CurveImage& c = chi.curves[j - 1];
        if (2 * j < N) ok = ok && c.image == ChiImage::zero_one;
        if (2 * j > N) ok = ok && c.image == ChiImage::one_zero;
        if (2 * j == N) ok = ok && c.image == ChiImage::cover && c.degree == 2;
    }
    std::string cw;
    for (auto& c : chi.curves)
        cw += c.curve + "->" + to_string(c.image) + (c.degree ? std::to_string(c.degree) : "") + " ";
    rep.add("chi on E_j is [0,1] for j < N/2 and [1,0] for j > N/2", ok, "the map chi = [z1^N : z2^N]", cw);
    if (N % 2 == 0) {
        rep.add("even N: E_{N/2} covers P^1 twice, no fundamental point", !chi.fundamental_point.has_value(),
                "the map chi = [z1^N : z2^N]");
    } else {
        rep.add("odd N: single fundamental point o_{(N-1)/2}, one blow-up maps isomorphically",
                chi.fundamental_point == (N - 1) / 2 && chi.blowup_degree == 1, "the map chi = [z1^N : z2^N]",
                chi.fundamental_point ? "o_" + std::to_string(*chi.fundamental_point) : "none");
    }
    return rep;
}

VerificationReport classify_orbifold(const CpmGroupBundle& b) {
    VerificationReport rep{"orbifold", b.N, {}};
    const int N = b.N;
    Stopwatch sw;
    for (auto& f : degenerate_fibers()) {
        SingularSets S = singular_points(f, N);
        SingKind expect = f.cls.tag == FiberTag::deg_pm1_0 ? SingKind::A : SingKind::diag;
        bool ok = true;
        std::string w;
        for (auto* set : {&S.sing0, &S.sing1})
            for (auto& p : *set) {
                std::vector<MonomialMap> stab;
                for (auto& h : b.H.elements())
                    if (apply(h, p) == p) stab.push_back(h);
                std::vector<int> zero;
                int nz = -1;
                for (int i = 0; i < 4; ++i) {
                    if (p.is_zero(i)) zero.push_back(i);
                    else nz = i;
                }
                if (zero.size() != 2) throw std::logic_error("singular point without two vanishing coordinates");
                // weights of z = x_zero / x_nonzero in units of omega
                bool found = false;
                SingKind kind = SingKind::diag;
                int c2 = 0;
                for (auto& h : stab) {
                    if (!h.is_diagonal()) continue;
                    long long w1 = h.exps[zero[0]] - h.exps[nz], w2 = h.exps[zero[1]] - h.exps[nz];
                    if (mod(w1, 4LL * N) != 4) continue;
                    c2 = static_cast<int>(mod(w2, 4LL * N));
                    found = c2 % 4 == 0;
                    kind = c2 == 4 ? SingKind::diag : SingKind::A;
                    if (c2 != 4 && c2 != 4 * (N - 1)) found = false;
                    if (element_order(h) != N) found = false;
                }
                bool type_ok = found && (kind == expect || N == 2);
                if (stab.size() != static_cast<size_t>(N) || !type_ok) {
                    ok = false;
                    w = p.str() + ": stabilizer " + std::to_string(stab.size()) + ", weights (1," +
                        std::to_string(c2 / 4) + ")";
                }
            }
        if (w.empty()) w = std::to_string(S.sing0.size() + S.sing1.size()) + " points, type " + to_string(expect);
        rep.add(f.label + ": H-stabilizers are cyclic of order N acting as " + to_string(expect), ok,
                "local structure of the H-quotient at its singular points", w, sw.ms());
    }
    return rep;
}

}  // namespace cpm
