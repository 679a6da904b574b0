#include "cpm/cpm_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "cpm/reference_groups.hpp"

namespace cpm {

MonomialMap cpm_generator(const std::string& name, int N) {
    if (name == "u1") return MonomialMap::make(N, {3, 2, 1, 0}, {2, 0, 0, 2});
    if (name == "u2") return MonomialMap::make(N, {1, 0, 3, 2}, {0, 4, 0, 0});
    if (name == "U") return MonomialMap::make(N, {0, 1, 2, 3}, {4, 0, 0, 0});
    if (name == "S") return MonomialMap::make(N, {0, 3, 2, 1}, {-2, 0, 0, 0});
    if (name == "T") return MonomialMap::make(N, {0, 1, 3, 2}, {1, 1, 0, 0});
    throw std::invalid_argument("unknown generator " + name);
}

MonomialMap curve_symmetry(int j, int N) {
    switch (j) {
        case 0: return MonomialMap::make(N, {0, 1, 2, 3}, {4, 0, 4, 0});
        case 1: return MonomialMap::make(N, {0, 1, 2, 3}, {4, 0, 0, 4});
        case 2: return MonomialMap::make(N, {0, 1, 2, 3}, {4, 4, 0, 0});
        case 3: return MonomialMap::make(N, {2, 3, 0, 1}, {0, 2, -2, -4});
        case 4: return MonomialMap::make(N, {0, 1, 2, 3}, {0, 0, -4, 0});
        case 5: return MonomialMap::make(N, {3, 2, 1, 0}, {0, 2, -2, 0});
    }
    throw std::invalid_argument("curve symmetry index out of range");
}

namespace {

const std::vector<std::string> kProbe = {"u1 u2 u1^-1 = U^2 u2^-3", "S u1 S^-1 = u2", "T u1 T^-1 = u1 u2^-1"};

std::string probe_convention(const Alphabet& a, int N) {
    auto passes = [&](bool reversed) {
        return std::all_of(kProbe.begin(), kProbe.end(),
                           [&](auto& r) { return check_relation(r, a, N, reversed).holds; });
    };
    bool fwd = passes(false), rev = passes(true);
    if (fwd && !rev) return "x.y = x after y; reversed order fails the probe relations";
    if (fwd && rev) throw ConventionError("both composition orders pass the probe relations");
    if (rev) throw ConventionError("relations hold only for reversed composition");
    throw ConventionError("neither composition order satisfies the defining relations");
}

struct Rel {
    std::string name, relation, anchor;
};

void run_relations(VerificationReport& rep, const CpmGroupBundle& b, const std::vector<Rel>& rels) {
    for (auto& r : rels) {
        Stopwatch sw;
        auto res = check_relation(r.relation, b.named, b.N);
        rep.add(r.name, res.holds, r.anchor, res.holds ? r.relation : res.witness, sw.ms());
    }
}

std::string sizes(size_t a, size_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

std::string hom_witness(const std::optional<GroupHom>& h) {
    if (!h) return "no isomorphism with the given generator images";
    std::ostringstream os;
    for (size_t i = 0; i < h->generator_map.size(); ++i)
        os << (i ? ", " : "") << h->generator_map[i].first << "->" << h->generator_map[i].second;
    return os.str();
}

std::vector<uint64_t> cyclic_keys(const MonomialMap& g) {
    std::vector<uint64_t> k;
    MonomialMap id = MonomialMap::identity(g.N), x = id;
    do {
        k.push_back(x.key());
        x = compose(x, g);
    } while (x != id);
    std::sort(k.begin(), k.end());
    return k;
}

using CycPair = std::set<std::vector<uint64_t>>;
CycPair cyc_pair(const MonomialMap& a, const MonomialMap& b) { return {cyclic_keys(a), cyclic_keys(b)}; }

}  // namespace

CpmGroupBundle build(int N, size_t cap) {
    if (N < 2) throw DomainError("build: N must be >= 2");
    CpmGroupBundle b;
    b.N = N;
    for (auto* g : {"u1", "u2", "U", "S", "T"}) b.named[g] = cpm_generator(g, N);
    b.convention = probe_convention(b.named, N);

    b.GN = closure(N, {{"u1", b.named["u1"]}, {"u2", b.named["u2"]}, {"U", b.named["U"]}}, cap);
    b.Gt = closure(N, {{"u1", b.named["u1"]}, {"u2", b.named["u2"]}, {"U", b.named["U"]}, {"S", b.named["S"]},
                       {"T", b.named["T"]}}, cap);
    const size_t n3 = static_cast<size_t>(N) * N * N;
    if (b.GN.size() != 4 * n3 || b.Gt.size() != 96 * n3)
        throw std::runtime_error("group orders differ from 4N^3 / 96N^3: " + sizes(b.GN.size(), b.Gt.size()));

    auto def = [&](const std::string& name, const std::string& word) { b.named[name] = b(word); };
    def("V0", "U^2 u2^-2 u1^-2");
    def("V1", "u1^2");
    def("V2", "u2^2");
    def("j", "U u2^-1");
    def("i", "U u2^-1 u1");
    def("M0", "V0");
    def("M1", "u1^2");
    def("M2", "u2^2");
    def("M3", "U u2 u1");
    def("M4", "U^-1 u2^2 u1^2");
    def("M5", "U^-1 u2^2 u1");

    b.H = closure(N, {b.gen("V0", "V0"), b.gen("V1", "V1")}, cap);
    b.Hl = closure(N, {b.gen("V0", "V0"), b.gen("V2", "V2")}, cap);
    b.Hr = closure(N, {b.gen("V1", "V1"), b.gen("V2", "V2")}, cap);
    b.GN1 = closure(N, {b.gen("u1^2", "u1^2"), b.gen("u2^2", "u2^2"), b.gen("U", "U")}, cap);
    b.GN1p = closure(N, {b.gen("V0", "V0"), b.gen("V1", "V1"), b.gen("V2", "V2")}, cap);
    return b;
}

VerificationReport verify_presentations(const CpmGroupBundle& b) {
    VerificationReport rep{"presentations", b.N, {}};
    rep.add("composition convention", true, "defining relations fix the product order", b.convention);
    const std::string cp = "CP group defining relations";
    const std::string eq = "equivalent forms of the CP relations";
    const std::string der = "consequences of the CP relations";
    const std::string fin = "finite-level relations";
    const std::string mod = "modular extension relations";
    const std::string sym = "classical curve symmetries as group words";
    std::vector<Rel> rels = {
        {"u1 u2 u1^-1 = U^2 u2^-3", "u1 u2 u1^-1 = U^2 u2^-3", cp},
        {"u1 U u1^-1 = u1^-1 U u1 = U^-1 u1^2", "u1 U u1^-1 = u1^-1 U u1 = U^-1 u1^2", cp},
        {"u2 U u2^-1 = u2^-1 U u2 = U^-1 u2^2", "u2 U u2^-1 = u2^-1 U u2 = U^-1 u2^2", cp},
        {"u1^2 U = U u1^2", "u1^2 U = U u1^2", eq},
        {"u2^2 U = U u2^2", "u2^2 U = U u2^2", eq},
        {"u1 u2 = u2 U^-2 u1", "u1 u2 = u2 U^-2 u1", eq},
        {"u1 u2^2 u1^-1 = u2^-2", "u1 u2^2 u1^-1 = u2^-2", der},
        {"u1^2 u2^2 = u2^2 u1^2", "u1^2 u2^2 = u2^2 u1^2", der},
        {"u2 u1 u2^-1 = U^-2 u2^4 u1", "u2 u1 u2^-1 = U^-2 u2^4 u1", der},
        {"u2 u1^2 u2^-1 = u1^-2", "u2 u1^2 u2^-1 = u1^-2", der},
        {"(U^-1 u1^-3 U) u2 = u2^-3 u1^3", "U^-1 u1^-3 U u2 = u2^-3 u1^3", der},
        {"u1 = u2 U^-2 u1 u2^-1", "u1 = u2 U^-2 u1 u2^-1", der},
        {"u1^2N = 1", "u1^" + std::to_string(2 * b.N), fin},
        {"u2^2N = 1", "u2^" + std::to_string(2 * b.N), fin},
        {"U^N = 1", "U^" + std::to_string(b.N), fin},
        {"S u1 S^-1 = u2", "S u1 S^-1 = u2", mod},
        {"S u2 S^-1 = U^-1 u1 U = U^-2 u1^3", "S u2 S^-1 = U^-1 u1 U = U^-2 u1^3", mod},
        {"S U S^-1 = U", "S U S^-1 = U", mod},
        {"S^-1 u1 S = U u2 U^-1 = U^2 u2^-1", "S^-1 u1 S = U u2 U^-1 = U^2 u2^-1", mod},
        {"S^-1 u2 S = u1", "S^-1 u2 S = u1", mod},
        {"T u1 T^-1 = u1 u2^-1 = U^2 u2^-1 u1", "T u1 T^-1 = u1 u2^-1 = U^2 u2^-1 u1", mod},
        {"T u2 T^-1 = u2", "T u2 T^-1 = u2", mod},
        {"T U T^-1 = U", "T U T^-1 = U", mod},
        {"T^-1 u1 T = u1 u2 = U^2 u2^-3 u1", "T^-1 u1 T = u1 u2 = U^2 u2^-3 u1", mod},
        {"S^2 = (ST)^3 = U^-1", "S^2 = S T S T S T = U^-1", mod},
        {"T^4 = u2^2", "T^4 = u2^2", mod},
        {"S T S^-1 = (T S T)^-1", "S T S^-1 = T^-1 S^-1 T^-1", mod},
        {"S^2 T = T S^2", "S^2 T = T S^2", mod},
        {"S (u1^2, u2^2, U) S^-1 = (u2^2, u1^2, U)", "S u1^2 S^-1 = u2^2", mod},
        {"S u2^2 S^-1 = u1^2", "S u2^2 S^-1 = u1^2", mod},
        {"T u1^2 T^-1 = U^2 u2^-2 u1^-2", "T u1^2 T^-1 = U^2 u2^-2 u1^-2", mod},
        {"T u2^2 T^-1 = u2^2", "T u2^2 T^-1 = u2^2", mod},
        {"(S^-1 T S)^4 = u1^2", "S^-1 T S S^-1 T S S^-1 T S S^-1 T S = u1^2", mod},
        {"M1 = u1^2", "M1 = u1^2", sym},
        {"M2 = u2^2", "M2 = u2^2", sym},
        {"M3 = U u2 u1", "M3 = U u2 u1", sym},
        {"M4 = U^-1 u2^2 u1^2", "M4 = U^-1 u2^2 u1^2", sym},
        {"M5 = U^-1 u2^2 u1", "M5 = U^-1 u2^2 u1", sym},
        {"u1 = M5^-1 M4", "u1 = M5^-1 M4", sym},
        {"u2 = M3 M5", "u2 = M3 M5", sym},
        {"U = M1 M2 M4^-1", "U = M1 M2 M4^-1", sym},
        {"V0 = M0, V1 = M1, V2 = M2", "V0 = M0", sym},
        {"V1 = M1", "V1 = M1", sym},
        {"V2 = M2", "V2 = M2", sym},
    };
    for (int i = 1; i <= 2; ++i) {
        std::string u = "u" + std::to_string(i);
        for (int k = -b.N; k <= b.N; ++k) {
            std::string ks = std::to_string(k), k2 = std::to_string(2 * k), mk = std::to_string(-k);
            rels.push_back({u + " U^k " + u + "^-1 = U^-k " + u + "^2k (k=" + ks + ")",
                            u + " U^" + ks + " " + u + "^-1 = U^" + mk + " " + u + "^" + k2, eq});
            rels.push_back({u + "^-1 U^k " + u + " = U^-k " + u + "^2k (k=" + ks + ")",
                            u + "^-1 U^" + ks + " " + u + " = U^" + mk + " " + u + "^" + k2, eq});
        }
    }
    run_relations(rep, b, rels);
    for (int j = 0; j <= 5; ++j) {
        std::string nm = "M" + std::to_string(j);
        MonomialMap lit = curve_symmetry(j, b.N);
        bool ok = lit == b.named.at(nm);
        rep.add(nm + " word equals its coordinate formula", ok, sym,
                ok ? lit.str() : lit.str() + " vs " + b.named.at(nm).str());
    }
    return rep;
}

VerificationReport verify_structure(const CpmGroupBundle& b) {
    VerificationReport rep{"structure", b.N, {}};
    const int N = b.N;
    const size_t n3 = static_cast<size_t>(N) * N * N;
    const std::string anc_sol = "solvable structure of G_N";
    {
        Stopwatch sw;
        rep.add("|G_N| = 4N^3", b.GN.size() == 4 * n3, "order of the CP group", sizes(b.GN.size(), 4 * n3), sw.ms());
        rep.add("|Gt_N| = 96N^3", b.Gt.size() == 96 * n3, "order of the modular CP group", sizes(b.Gt.size(), 96 * n3));
    }
    {
        Stopwatch sw;
        bool ok = b.GN1.size() == n3 && b.GN1.is_abelian() && b.GN1.subset_of(b.GN);
        rep.add("G_N1 = <u1^2, u2^2, U> abelian of order N^3", ok, anc_sol,
                "order " + std::to_string(b.GN1.size()), sw.ms());
    }
    {
        Stopwatch sw;
        bool ok = is_normal(b.Gt, b.GN) && is_normal(b.Gt, b.GN1);
        rep.add("G_N and G_N1 normal in Gt_N", ok, "normal subgroups of the modular CP group", "", sw.ms());
    }
    {
        Stopwatch sw;
        auto Q = quotient(b.GN, b.GN1);
        auto Z = z2_squared();
        auto h = recognize(b.GN, Q, {{b.gen("u1", "u1"), Z.at("(1,0)")}, {b.gen("u2", "u2"), Z.at("(0,1)")},
                                     {b.gen("U", "U"), 0}},
                           Z.table);
        rep.add("G_N / G_N1 = Z2^2", h.has_value(), anc_sol, hom_witness(h), sw.ms());
    }
    {
        Stopwatch sw;
        FiniteGroup Z = center(b.GN);
        bool commutes = std::all_of(Z.elements().begin(), Z.elements().end(), [&](auto& z) {
            return std::all_of(b.GN.elements().begin(), b.GN.elements().end(),
                               [&](auto& g) { return compose(z, g) == compose(g, z); });
        });
        rep.add("center of G_N commutes elementwise with G_N", commutes, "center of G_N", "", sw.ms());
        if (N % 2 == 1) {
            rep.add("Cent(G_N) trivial for odd N", Z.size() == 1, "center of G_N", "order " + std::to_string(Z.size()));
            rep.skip("Cent(G_N) = <u1^N, u2^N> = Z2^2 for even N", "center of G_N", "N odd");
        } else {
            rep.skip("Cent(G_N) trivial for odd N", "center of G_N", "N even");
            FiniteGroup expect = closure(N, {b.gen("u1^N", "u1^" + std::to_string(N)),
                                             b.gen("u2^N", "u2^" + std::to_string(N))});
            bool z2sq = Z.size() == 4 && std::all_of(Z.elements().begin(), Z.elements().end(),
                                                     [](auto& z) { return element_order(z) <= 2; });
            rep.add("Cent(G_N) = <u1^N, u2^N> = Z2^2 for even N", Z == expect && z2sq, "center of G_N",
                    "order " + std::to_string(Z.size()));
        }
    }
    {
        Stopwatch sw;
        FiniteGroup Z = center(b.Gt);
        rep.add("Cent(Gt_N) trivial", Z.size() == 1, "center of the modular CP group",
                "order " + std::to_string(Z.size()), sw.ms());
    }
    {
        Stopwatch sw;
        auto Q = quotient(b.Gt, b.GN);
        auto P = psl2_z4();
        auto h = recognize(b.Gt, Q, {{b.gen("u1", "u1"), 0}, {b.gen("u2", "u2"), 0}, {b.gen("U", "U"), 0},
                                     {b.gen("S", "S"), P.at("S")}, {b.gen("T", "T"), P.at("T*")}},
                           P.table);
        bool ok = h.has_value() && b.Gt.size() == b.GN.size() * Q.table.n;
        rep.add("Gt_N / G_N = PSL2(Z4) via (S,T) -> (S,T*)", ok, "modular quotient is PSL2(Z4)", hom_witness(h),
                sw.ms());
    }
    {
        Stopwatch sw;
        FiniteGroup K = closure(N, {b.gen("u1", "u1"), b.gen("u2", "u2"), b.gen("U", "U"), b.gen("T^2", "T^2"),
                                    b.gen("S T^-2 S^-1", "S T^-2 S^-1")});
        auto Q = quotient(b.Gt, K);
        auto R = sl2(2);
        auto h = recognize(b.Gt, Q, {{b.gen("u1", "u1"), 0}, {b.gen("u2", "u2"), 0}, {b.gen("U", "U"), 0},
                                     {b.gen("S", "S"), R.at("S")}, {b.gen("T", "T"), R.at("T")}},
                           R.table);
        rep.add("Gt_N / <G_N, T^2, S T^-2 S^-1> = SL2(Z2)", h.has_value(), "reduction of the modular quotient mod 2",
                hom_witness(h), sw.ms());
    }
    {
        Stopwatch sw;
        FiniteGroup ST = closure(N, {b.gen("S", "S"), b.gen("T", "T")});
        FiniteGroup inter = intersection(b.GN, ST);
        FiniteGroup gen3 = closure(N, {b.gen("S^2", "S^2"), b.gen("T^4", "T^4"), b.gen("(S^-1 T S)^4", "S^-1 T^4 S")});
        bool ok = inter == b.GN1 && gen3 == b.GN1 && is_normal(ST, b.GN1);
        rep.add("G_N cap <S,T> = G_N1 = <S^2, T^4, (S^-1 T S)^4>", ok, "modular generators meet G_N in G_N1",
                "|<S,T>| = " + std::to_string(ST.size()) + ", |cap| = " + std::to_string(inter.size()), sw.ms());
    }
    {
        size_t o = b.GN1p.size();
        if (N == 2) {
            rep.add("G'_21 = H for N = 2", b.GN1p == b.H, "subgroup generated by V0, V1, V2", "order " + std::to_string(o));
            rep.skip("|G'_N1| > N^2 for N >= 3", "subgroup generated by V0, V1, V2", "N = 2");
        } else {
            rep.skip("G'_21 = H for N = 2", "subgroup generated by V0, V1, V2", "N >= 3");
            rep.add("|G'_N1| > N^2 for N >= 3", o > static_cast<size_t>(N * N), "subgroup generated by V0, V1, V2",
                    "order " + std::to_string(o));
        }
        rep.add("G'_N1 normal in Gt_N", is_normal(b.Gt, b.GN1p) && b.GN1p.subset_of(b.GN1),
                "subgroup generated by V0, V1, V2");
    }
    return rep;
}

VerificationReport verify_subgroup_lattice(const CpmGroupBundle& b) {
    VerificationReport rep{"subgroup_lattice", b.N, {}};
    const int N = b.N;
    const std::string lat = "subgroups H, H_l, H_r";
    const std::string nrm = "normalizers of H";
    {
        Stopwatch sw;
        size_t n2 = static_cast<size_t>(N) * N;
        bool ok = is_normal(b.GN, b.H) && is_normal(b.GN, b.Hl) && is_normal(b.GN, b.Hr) && b.H.size() == n2 &&
                  b.Hl.size() == n2 && b.Hr.size() == n2;
        rep.add("H, H_l, H_r normal in G_N of order N^2", ok, lat,
                sizes(b.H.size(), n2) + ", " + std::to_string(b.Hl.size()) + ", " + std::to_string(b.Hr.size()),
                sw.ms());
    }
    if (N == 2) {
        rep.add("N = 2: H = H_l = H_r = G'_21", b.H == b.Hl && b.H == b.Hr && b.H == b.GN1p, lat);
        rep.skip("N >= 3: H, H_l, H_r pairwise distinct", lat, "N = 2");
    } else {
        rep.skip("N = 2: H = H_l = H_r = G'_21", lat, "N >= 3");
        rep.add("N >= 3: H, H_l, H_r pairwise distinct", !(b.H == b.Hl) && !(b.H == b.Hr) && !(b.Hl == b.Hr), lat);
    }

    // conjugation image of the generator pairs as a function of the SL2(Z2) class
    {
        Stopwatch sw;
        FiniteGroup K = closure(N, {b.gen("u1", "u1"), b.gen("u2", "u2"), b.gen("U", "U"), b.gen("T^2", "T^2"),
                                    b.gen("S T^-2 S^-1", "S T^-2 S^-1")});
        auto Q = quotient(b.Gt, K);
        auto R = sl2(2);
        auto h = recognize(b.Gt, Q, {{b.gen("u1", "u1"), 0}, {b.gen("u2", "u2"), 0}, {b.gen("U", "U"), 0},
                                     {b.gen("S", "S"), R.at("S")}, {b.gen("T", "T"), R.at("T")}},
                           R.table);
        if (!h) {
            rep.add("conjugation class table of H generators", false, "conjugates of H by class in SL2(Z2)",
                    "SL2(Z2) quotient not recognized");
        } else {
            const auto& Tb = R.table;
            int s = R.at("S"), t = R.at("T");
            int st = Tb.op(s, t), sts = Tb.op(st, Tb.inv[s]), stst = Tb.op(sts, t);
            std::map<int, std::string> expect = {{0, "H"}, {t, "H"}, {s, "H_l"}, {st, "H_l"}, {sts, "H_r"}, {stst, "H_r"}};
            CycPair Ho = cyc_pair(b.named.at("V0"), b.named.at("V1"));
            CycPair Hlo = cyc_pair(b.named.at("V0"), b.named.at("V2"));
            CycPair Hro = cyc_pair(b.named.at("V1"), b.named.at("V2"));
            std::map<int, std::set<std::string>> seen, seen_sub;
            for (size_t v = 0; v < b.Gt.size(); ++v) {
                const MonomialMap& V = b.Gt[v];
                int cls = h->image[Q.coset_of[v]];
                CycPair c = cyc_pair(conj(V, b.named.at("V0")), conj(V, b.named.at("V1")));
                seen[cls].insert(c == Ho ? "H" : c == Hlo ? "H_l" : c == Hro ? "H_r" : "other");
                if (N >= 3) {
                    std::vector<MonomialMap> img;
                    for (auto& x : b.H.elements()) img.push_back(conj(V, x));
                    FiniteGroup C(N, img, {});
                    seen_sub[cls].insert(C == b.H ? "H" : C == b.Hl ? "H_l" : C == b.Hr ? "H_r" : "other");
                }
            }
            for (auto& [cls, label] : expect) {
                bool ok = seen[cls] == std::set<std::string>{label};
                std::string lab = Tb.names[cls];
                std::string got;
                for (auto& x : seen[cls]) got += (got.empty() ? "" : ",") + x;
                rep.add("class " + lab + " conjugates {V0,V1} to generators of " + label, ok,
                        "conjugates of H by class in SL2(Z2)", "observed " + got);
                if (N >= 3) {
                    bool ok2 = seen_sub[cls] == std::set<std::string>{label};
                    rep.add("class " + lab + " conjugates H to " + label, ok2, "conjugates of H by class in SL2(Z2)");
                } else {
                    rep.skip("class " + lab + " conjugates H to " + label, "conjugates of H by class in SL2(Z2)",
                             "N = 2: H = H_l = H_r");
                }
            }
        }
        rep.checks.back().elapsed_ms = sw.ms();
    }

    FiniteGroup NH = normalizer(b.Gt, b.H);
    auto GNplus = [&](std::vector<std::pair<std::string, std::string>> extra) {
        std::vector<Generator> g{b.gen("u1", "u1"), b.gen("u2", "u2"), b.gen("U", "U")};
        for (auto& [l, w] : extra) g.push_back(b.gen(l, w));
        return closure(N, g);
    };
    if (N == 2) {
        rep.skip("N(H) = <G_N, T^-1, S T^2 S^-1>", nrm, "N = 2: H is normal in Gt_2 (order " +
                                                           std::to_string(NH.size()) + ")");
    } else {
        Stopwatch sw;
        FiniteGroup expect = GNplus({{"T^-1", "T^-1"}, {"S T^2 S^-1", "S T^2 S^-1"}});
        rep.add("N(H) = <G_N, T^-1, S T^2 S^-1>", NH == expect, nrm, sizes(NH.size(), expect.size()), sw.ms());
    }
    {
        Stopwatch sw;
        auto tl = transporter(b.Gt, b.H, b.Hl);
        bool ok = tl && coset_equals(*tl, b("S^-1"), NH);
        rep.add("N(H; H_l) = S^-1 N(H)", ok, nrm, tl ? "coset of size " + std::to_string(tl->elements.size()) : "empty",
                sw.ms());
        auto tr = transporter(b.Gt, b.H, b.Hr);
        bool ok2 = tr && coset_equals(*tr, b("S T^-1 S^-1"), NH);
        rep.add("N(H; H_r) = S T^-1 S^-1 N(H)", ok2, nrm,
                tr ? "coset of size " + std::to_string(tr->elements.size()) : "empty");
    }
    if (N == 2) {
        rep.skip("N(H_l) = <G_N, S T^-1 S^-1, T^2>", nrm, "N = 2");
        rep.skip("N(H_r) = <G_N, T^2 S, S T^2 S^-1>", nrm, "N = 2");
    } else {
        Stopwatch sw;
        FiniteGroup NHl = normalizer(b.Gt, b.Hl), NHr = normalizer(b.Gt, b.Hr);
        FiniteGroup el = GNplus({{"S T^-1 S^-1", "S T^-1 S^-1"}, {"T^2", "T^2"}});
        FiniteGroup er = GNplus({{"T^2 S", "T^2 S"}, {"S T^2 S^-1", "S T^2 S^-1"}});
        rep.add("N(H_l) = <G_N, S T^-1 S^-1, T^2>", NHl == el, nrm, sizes(NHl.size(), el.size()), sw.ms());
        rep.add("N(H_r) = <G_N, T^2 S, S T^2 S^-1>", NHr == er, nrm, sizes(NHr.size(), er.size()));
        std::vector<MonomialMap> c;
        for (auto& x : NH.elements()) c.push_back(conj(b("S T^-1 S^-1"), x));
        rep.add("N(H_r) = (S T^-1 S^-1) N(H) (S T^-1 S^-1)^-1", FiniteGroup(N, c, {}) == NHr, nrm);
    }
    return rep;
}

DihedralClassMap dihedral_classes(const CpmGroupBundle& b) {
    const int N = b.N;
    auto mul = [N](std::array<int, 3> x, std::array<int, 3> y) {
        return std::array<int, 3>{(x[0] + y[0]) % 2, mod(x[1] + (x[2] ? -y[1] : y[1]), N), (x[2] + y[2]) % 2};
    };
    std::vector<std::pair<MonomialMap, std::array<int, 3>>> gens = {
        {b.named.at("U"), {0, 1, 0}}, {b.named.at("j"), {1, 0, 0}}, {b.named.at("i"), {0, 0, 1}}};
    DihedralClassMap m;
    MonomialMap id = MonomialMap::identity(N);
    m.cls[id.key()] = {0, 0, 0};
    std::deque<MonomialMap> q{id};
    while (!q.empty()) {
        MonomialMap x = q.front();
        q.pop_front();
        for (auto& [g, c] : gens) {
            MonomialMap y = compose(x, g);
            auto cy = mul(m.cls[x.key()], c);
            auto [it, fresh] = m.cls.emplace(y.key(), cy);
            if (fresh) q.push_back(y);
            else if (it->second != cy) throw std::logic_error("dihedral class map not well defined");
        }
    }
    return m;
}

std::array<int, 3> DihedralClassMap::of(const MonomialMap& g) const {
    auto it = cls.find(g.canonical().key());
    if (it == cls.end()) throw std::invalid_argument("element not in G_N");
    return it->second;
}

VerificationReport verify_dihedral(const CpmGroupBundle& b) {
    VerificationReport rep{"dihedral", b.N, {}};
    const int N = b.N;
    const std::string vu = "presentation of G_N by V0, V1, U, j, i";
    std::string sN = std::to_string(N);
    std::vector<Rel> rels = {
        {"V0 V1 = V1 V0", "V0 V1 = V1 V0", vu},
        {"U V0 U^-1 = V0", "U V0 U^-1 = V0", vu},
        {"U V1 U^-1 = V1", "U V1 U^-1 = V1", vu},
        {"j V0 j^-1 = V0^-1", "j V0 j^-1 = V0^-1", vu},
        {"j V1 j^-1 = V1^-1", "j V1 j^-1 = V1^-1", vu},
        {"i V0 i^-1 = V0", "i V0 i^-1 = V0", vu},
        {"i V1 i^-1 = V1^-1", "i V1 i^-1 = V1^-1", vu},
        {"j^2 = i^2 = 1", "j^2 = i^2 = 1", vu},
        {"U j = V0 V1 j U", "U j = V0 V1 j U", vu},
        {"U i = V0 i U^-1", "U i = V0 i U^-1", vu},
        {"j i = V1 i j", "j i = V1 i j", vu},
        {"V0^N = V1^N = U^N = 1", "V0^" + sN + " = V1^" + sN + " = U^" + sN + " = 1", vu},
        {"u1 = j i", "u1 = j i", vu},
        {"u2 = j U", "u2 = j U", vu},
    };
    run_relations(rep, b, rels);

    auto D = z2_times_dihedral(N);
    auto dihedral = [&](const FiniteGroup& K, const std::string& name, const std::string& wt, const std::string& ws,
                        const std::string& wi) {
        Stopwatch sw;
        auto Q = quotient(b.GN, K);
        auto h = recognize(b.GN, Q, {{b.gen(wt, wt), D.at("theta")}, {b.gen(ws, ws), D.at("sigma")},
                                     {b.gen(wi, wi), D.at("iota")}},
                           D.table);
        rep.add("G_N / " + name + " = Z2 x D_N via (" + wt + ", " + ws + ", " + wi + ") -> (theta, sigma, iota)",
                h.has_value() && Q.table.n == 4 * N, "dihedral quotients of G_N", hom_witness(h), sw.ms());
    };
    dihedral(b.H, "H", "U", "j", "i");
    dihedral(b.Hl, "H_l", "U", "U u1^-1", "U u2^-1 u1^-1");
    dihedral(b.Hr, "H_r", "U", "U u2^-1 u1", "U u2^-1 u1^2");
    {
        // the H_r assignment compared with the conjugate of (U, j, i) by S T^-1 S^-1
        MonomialMap c = b("S T^-1 S^-1");
        bool agree = conj(c, b("U")) == b("U") && conj(c, b("j")) == b("U u2^-1 u1") &&
                     conj(c, b("i")) == b("U u2^-1 u1^2");
        MonomialMap cl = b("S^-1");
        bool agree_l = conj(cl, b("U")) == b("U") && conj(cl, b("j")) == b("U u1^-1") &&
                       conj(cl, b("i")) == b("U u2^-1 u1^-1");
        rep.add("H_r generator assignment agrees with conjugation by S T^-1 S^-1", agree,
                "dihedral quotients of G_N", agree ? "" : "assignment differs from the conjugated structure");
        rep.add("H_l generator assignment agrees with conjugation by S^-1", agree_l, "dihedral quotients of G_N");
    }
    {
        Stopwatch sw;
        bool even = N % 2 == 0;
        auto R = z2sq_semidirect(!even);
        auto Q = quotient(b.Gt, b.GN1p);
        auto h = recognize(b.Gt, Q, {{b.gen("u1", "u1"), R.at("u1")}, {b.gen("u2", "u2"), R.at("u2")},
                                     {b.gen("U", "U"), even ? R.at("-I") : 0}, {b.gen("S", "S"), R.at("S")},
                                     {b.gen("T", "T"), R.at("T*")}},
                           R.table);
        std::string nm = even ? "Gt_N / G'_N1 = Z2^2 x| SL2(Z4) (N even)" : "Gt_N / G'_N1 = Z2^2 x| PSL2(Z4) (N odd)";
        std::string other = even ? "Gt_N / G'_N1 = Z2^2 x| PSL2(Z4) (N odd)" : "Gt_N / G'_N1 = Z2^2 x| SL2(Z4) (N even)";
        rep.add(nm, h.has_value(), "quotient by the subgroup generated by V0, V1, V2", hom_witness(h), sw.ms());
        rep.skip(other, "quotient by the subgroup generated by V0, V1, V2", even ? "N even" : "N odd");
    }
    {
        Stopwatch sw;
        auto m = dihedral_classes(b);
        bool ok = m.cls.size() == b.GN.size();
        for (auto& h : b.H.elements()) ok = ok && m.of(h) == std::array<int, 3>{0, 0, 0};
        rep.add("class map G_N -> Z2 x D_N is well defined with kernel H", ok, "dihedral quotients of G_N", "",
                sw.ms());
    }
    return rep;
}

VerificationReport verify_conjugation_tables(const CpmGroupBundle& b) {
    VerificationReport rep{"conjugation_tables", b.N, {}};
    const int N = b.N;
    const std::string gn = "conjugation by G_N on V0, V1, U, j, i";
    const std::string lr = "conjugation by S^-1 and S T^-1 S^-1";
    const std::string g12 = "conjugation on V0, V1, V2";
    const std::string nh = "conjugation by <T^-1, S T^2 S^-1>";
    std::vector<Rel> rels = {
        {"C_u1(V0, V1) = (V0^-1, V1)", "u1 V0 u1^-1 = V0^-1", gn},
        {"C_u1(V1) = V1", "u1 V1 u1^-1 = V1", gn},
        {"C_u1(U) = U^-1 u1^2 = V1 U^-1", "u1 U u1^-1 = U^-1 u1^2 = V1 U^-1", gn},
        {"C_u1(j) = U u2^-1 u1^-2 = V1 j", "u1 j u1^-1 = U u2^-1 u1^-2 = V1 j", gn},
        {"C_u1(i) = U u2^-1 u1^-1 = V1 i", "u1 i u1^-1 = U u2^-1 u1^-1 = V1 i", gn},
        {"C_u1^2(V0, V1) = (V0, V1)", "u1^2 V0 u1^-2 = V0", gn},
        {"C_u1^2(V1) = V1", "u1^2 V1 u1^-2 = V1", gn},
        {"C_u1^2(U) = U", "u1^2 U u1^-2 = U", gn},
        {"C_u1^2(j) = U u2^-1 u1^-4 = V1^2 j", "u1^2 j u1^-2 = U u2^-1 u1^-4 = V1^2 j", gn},
        {"C_u1^2(i) = U u2^-1 u1^-3 = V1^2 i", "u1^2 i u1^-2 = U u2^-1 u1^-3 = V1^2 i", gn},
        {"C_u2(V0, V1) = (V0^-1, V1^-1)", "u2 V0 u2^-1 = V0^-1", gn},
        {"C_u2(V1) = V1^-1", "u2 V1 u2^-1 = V1^-1", gn},
        {"C_u2(U) = U^-1 u2^2 = V2 U^-1", "u2 U u2^-1 = U^-1 u2^2 = V2 U^-1", gn},
        {"C_u2(j) = U^-1 u2 = V2 U^-2 j", "u2 j u2^-1 = U^-1 u2 = V2 U^-2 j", gn},
        {"C_u2(i) = U u2 u1 = V2 i", "u2 i u2^-1 = U u2 u1 = V2 i", gn},
        {"C_u2^2(V0, V1) = (V0, V1)", "u2^2 V0 u2^-2 = V0", gn},
        {"C_u2^2(V1) = V1", "u2^2 V1 u2^-2 = V1", gn},
        {"C_u2^2(U) = U", "u2^2 U u2^-2 = U", gn},
        {"C_u2^2(j) = U u2^-1 = j", "u2^2 j u2^-2 = U u2^-1 = j", gn},
        {"C_u2^2(i) = U u2^3 u1 = V2^2 i", "u2^2 i u2^-2 = U u2^3 u1 = V2^2 i", gn},
        {"C_U(V0, V1) = (V0, V1)", "U V0 U^-1 = V0", gn},
        {"C_U(V1) = V1", "U V1 U^-1 = V1", gn},
        {"C_U(U) = U", "U U U^-1 = U", gn},
        {"C_U(j) = U^3 u2^-3 = V0 V1 j", "U j U^-1 = U^3 u2^-3 = V0 V1 j", gn},
        {"C_U(i) = U u2 u1^-1 = V1 V2 i", "U i U^-1 = U u2 u1^-1 = V1 V2 i", gn},
        {"V2 = U^2 V0^-1 V1^-1", "V2 = U^2 V0^-1 V1^-1", gn},
        {"C_S^-1(V0, V1) = (V0, V2)", "S^-1 V0 S = V0", lr},
        {"C_S^-1(V1) = V2", "S^-1 V1 S = V2", lr},
        {"C_S^-1(U) = U", "S^-1 U S = U", lr},
        {"C_S^-1(j) = U u1^-1", "S^-1 j S = U u1^-1", lr},
        {"C_S^-1(i) = U u2^-1 u1^-1", "S^-1 i S = U u2^-1 u1^-1", lr},
        {"C_ST^-1S^-1(V0, V1) = (V2, V1)", "S T^-1 S^-1 V0 S T S^-1 = V2", lr},
        {"C_ST^-1S^-1(V1) = V1", "S T^-1 S^-1 V1 S T S^-1 = V1", lr},
        {"C_ST^-1S^-1(U) = U", "S T^-1 S^-1 U S T S^-1 = U", lr},
        {"C_ST^-1S^-1(j) = U u2^-1 u1", "S T^-1 S^-1 j S T S^-1 = U u2^-1 u1", lr},
        {"C_ST^-1S^-1(i) = U u2^-1 u1^2", "S T^-1 S^-1 i S T S^-1 = U u2^-1 u1^2", lr},
        {"C_U(V0, V1, V2) = (V0, V1, V2)", "U V2 U^-1 = V2", g12},
        {"C_u1(V0, V1, V2) = (V0^-1, V1, V2^-1)", "u1 V2 u1^-1 = V2^-1", g12},
        {"C_u2(V2) = V2", "u2 V2 u2^-1 = V2", g12},
        {"S (V0, V1, V2) S^-1 = (V0, V2, V1)", "S V0 S^-1 = V0", g12},
        {"S V1 S^-1 = V2", "S V1 S^-1 = V2", g12},
        {"S V2 S^-1 = V1", "S V2 S^-1 = V1", g12},
        {"T (V0, V1, V2) T^-1 = (V1, V0, V2)", "T V0 T^-1 = V1", g12},
        {"T V1 T^-1 = V0", "T V1 T^-1 = V0", g12},
        {"T V2 T^-1 = V2", "T V2 T^-1 = V2", g12},
        {"T^-4 = u2^-2", "T^-4 = u2^-2", nh},
        {"S T^4 S^-1 = u1^2", "S T^4 S^-1 = u1^2", nh},
        {"(S T^2 S^-1) T^-1 = T^-3 (S T^2 S^-1) U u1^-2", "S T^2 S^-1 T^-1 = T^-3 S T^2 S^-1 U u1^-2", nh},
        {"(S T^2 S^-1) T^-2 = T^-2 (S T^2 S^-1)", "S T^2 S^-1 T^-2 = T^-2 S T^2 S^-1", nh},
        {"(S T^2 S^-1) T^-3 = T^-1 (S T^2 S^-1) U u1^-2 u2^-2", "S T^2 S^-1 T^-3 = T^-1 S T^2 S^-1 U u1^-2 u2^-2", nh},
    };
    run_relations(rep, b, rels);

    {
        Stopwatch sw;
        bool ok = true;
        std::string bad;
        for (int k = -2 * N; k <= 2 * N; ++k) {
            std::string ks = std::to_string(k);
            MonomialMap M = b("T^" + std::to_string(-k));
            bool row = conj(M, b("U")) == b("U") && conj(M, b("j")) == b("j") &&
                       conj(M, b("i")) == b("u2^" + std::to_string(-k) + " i");
            bool swap = mod(k, 2) == 1;
            row = row && conj(M, b("V0")) == b(swap ? "V1" : "V0") && conj(M, b("V1")) == b(swap ? "V0" : "V1");
            MonomialMap P = b("S T^" + std::to_string(2 * k) + " S^-1");
            std::string u12k = "u1^" + std::to_string(2 * k);
            bool row2 = conj(P, b("U")) == b("U") && conj(P, b("j")) == b(u12k + " j") &&
                        conj(P, b("i")) == b(u12k + " i") && conj(P, b("V0")) == b("V0") &&
                        conj(P, b("V1")) == b("V1");
            if (!row || !row2) {
                ok = false;
                bad += " k=" + ks;
            }
        }
        rep.add("C_T^-k and C_ST^2kS^-1 rows on (V0, V1, U, j, i), |k| <= 2N", ok, nh,
                ok ? "" : "fails at" + bad, sw.ms());
    }
    {
        Stopwatch sw;
        FiniteGroup M2 = closure(N, {b.gen("T^-2", "T^-2"), b.gen("S T^2 S^-1", "S T^2 S^-1")});
        bool ok = std::all_of(M2.elements().begin(), M2.elements().end(), [&](auto& M) {
            return conj(M, b("V0")) == b("V0") && conj(M, b("V1")) == b("V1");
        });
        rep.add("<T^-2, S T^2 S^-1> fixes V0 and V1", ok, nh, "", sw.ms());
    }
    {
        Stopwatch sw;
        FiniteGroup M = closure(N, {b.gen("T^-1", "T^-1"), b.gen("S T^2 S^-1", "S T^2 S^-1")});
        rep.add("G_N cap <T^-1, S T^2 S^-1> = G_N1", intersection(b.GN, M) == b.GN1, nh, "", sw.ms());
        FiniteGroup big = closure(N, {b.gen("u1", "u1"), b.gen("u2", "u2"), b.gen("U", "U"), b.gen("T^-1", "T^-1"),
                                      b.gen("S T^2 S^-1", "S T^2 S^-1")});
        std::set<int> cosets;
        auto Q = quotient(b.Gt, b.GN);
        for (int k = 0; k < 4; ++k) {
            cosets.insert(Q.coset_of[b.Gt.find(b("T^" + std::to_string(-k)))]);
            cosets.insert(Q.coset_of[b.Gt.find(b("S T^2 S^-1 T^" + std::to_string(-k)))]);
        }
        bool ok = big.size() == 8 * b.GN.size() && cosets.size() == 8;
        rep.add("|G_N <T^-1, S T^2 S^-1> / G_N| = 8 with representatives T^-k, S T^2 S^-1 T^-k", ok, nh,
                "index " + std::to_string(big.size() / b.GN.size()) + ", distinct cosets " +
                    std::to_string(cosets.size()));
    }
    return rep;
}

VerificationReport verify_all_groups(const CpmGroupBundle& b) {
    VerificationReport all{"group", b.N, {}};
    for (auto f : {verify_presentations, verify_structure, verify_subgroup_lattice, verify_dihedral,
                   verify_conjugation_tables}) {
        auto r = f(b);
        for (auto& c : r.checks) {
            Check x = c;
            x.name = r.suite + ": " + c.name;
            all.checks.push_back(x);
        }
    }
    return all;
}

VerificationReport verify_divisibility(const CpmGroupBundle& small, const CpmGroupBundle& big) {
    VerificationReport rep{"divisibility", big.N, {}};
    if (big.N % small.N != 0) {
        rep.skip("generator-preserving epimorphism G_N' -> G_N", "N divides N'", "N does not divide N'");
        return rep;
    }
    Stopwatch sw;
    std::unordered_map<uint64_t, MonomialMap> img;
    MonomialMap id = MonomialMap::identity(big.N);
    img.emplace(id.key(), MonomialMap::identity(small.N));
    std::deque<MonomialMap> q{id};
    bool ok = true;
    const std::vector<std::string> gens = {"u1", "u2", "U"};
    while (!q.empty() && ok) {
        MonomialMap x = q.front();
        q.pop_front();
        for (auto& g : gens) {
            MonomialMap y = compose(x, big.named.at(g));
            MonomialMap fy = compose(img.at(x.key()), small.named.at(g));
            auto [it, fresh] = img.emplace(y.key(), fy);
            if (fresh) q.push_back(y);
            else if (it->second != fy) ok = false;
        }
    }
    std::set<uint64_t> image;
    for (auto& [k, v] : img) image.insert(v.key());
    bool onto = ok && image.size() == small.GN.size();
    rep.add("generator-preserving epimorphism G_" + std::to_string(big.N) + " -> G_" + std::to_string(small.N), onto,
            "N divides N'", "image order " + std::to_string(image.size()), sw.ms());
    return rep;
}

}  // namespace cpm
