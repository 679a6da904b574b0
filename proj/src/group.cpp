#include "cpm/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace cpm {

FiniteGroup::FiniteGroup(int N, std::vector<MonomialMap> elements, std::vector<Generator> generators)
    : N_(N), elems_(std::move(elements)), gens_(std::move(generators)) {
    index_.reserve(elems_.size() * 2);
    for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i].key(), static_cast<int>(i));
}

int FiniteGroup::find(const MonomialMap& g) const {
    auto it = index_.find(g.canonical().key());
    return it == index_.end() ? -1 : it->second;
}

bool FiniteGroup::subset_of(const FiniteGroup& other) const {
    return std::all_of(elems_.begin(), elems_.end(), [&](const MonomialMap& g) { return other.contains(g); });
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
    return size() == other.size() && subset_of(other);
}

bool FiniteGroup::is_abelian() const {
    for (auto& a : gens_)
        for (auto& b : gens_)
            if (compose(a.map, b.map) != compose(b.map, a.map)) return false;
    return true;
}

FiniteGroup closure(int N, const std::vector<Generator>& gens, size_t cap) {
    std::vector<MonomialMap> steps;
    for (auto& g : gens) {
        if (g.map.N != N) throw DomainError("closure: generator with different N");
        steps.push_back(g.map.canonical());
        steps.push_back(inverse(g.map));
    }
    std::vector<MonomialMap> elems{MonomialMap::identity(N)};
    std::unordered_map<uint64_t, int> seen{{elems[0].key(), 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (auto& s : steps) {
            MonomialMap y = compose(elems[head], s);
            if (seen.emplace(y.key(), static_cast<int>(elems.size())).second) {
                elems.push_back(y);
                if (elems.size() > cap)
                    throw ClosureOverflow("closure exceeded cap of " + std::to_string(cap) + " elements");
            }
        }
    }
    return FiniteGroup(N, std::move(elems), gens);
}

FiniteGroup closure(const std::vector<MonomialMap>& gens, size_t cap) {
    if (gens.empty()) throw DomainError("closure: empty generator list");
    std::vector<Generator> labeled;
    for (size_t i = 0; i < gens.size(); ++i) labeled.push_back({"g" + std::to_string(i), gens[i]});
    return closure(gens[0].N, labeled, cap);
}

MonomialMap conj(const MonomialMap& v, const MonomialMap& g) { return compose(compose(v, g), inverse(v)); }

int element_order(const MonomialMap& g) {
    MonomialMap id = MonomialMap::identity(g.N), x = g.canonical();
    int k = 1;
    while (x != id) {
        x = compose(x, g);
        ++k;
    }
    return k;
}

static std::vector<MonomialMap> gens_or_all(const FiniteGroup& H) {
    std::vector<MonomialMap> out;
    for (auto& g : H.generators()) out.push_back(g.map);
    if (out.empty()) out = H.elements();
    return out;
}

FiniteGroup center(const FiniteGroup& G) {
    auto gens = gens_or_all(G);
    std::vector<MonomialMap> z;
    for (auto& x : G.elements())
        if (std::all_of(gens.begin(), gens.end(), [&](auto& g) { return compose(x, g) == compose(g, x); }))
            z.push_back(x);
    return FiniteGroup(G.N(), std::move(z), {});
}

FiniteGroup normalizer(const FiniteGroup& G, const FiniteGroup& H) {
    auto gens = gens_or_all(H);
    std::vector<MonomialMap> out;
    for (auto& g : G.elements())
        if (std::all_of(gens.begin(), gens.end(), [&](auto& h) { return H.contains(conj(g, h)); }))
            out.push_back(g);
    return FiniteGroup(G.N(), std::move(out), {});
}

bool is_normal(const FiniteGroup& G, const FiniteGroup& K) {
    if (!K.subset_of(G)) return false;
    auto gens = gens_or_all(K);
    for (auto& g : G.elements())
        for (auto& k : gens)
            if (!K.contains(conj(g, k))) return false;
    return true;
}

FiniteGroup intersection(const FiniteGroup& A, const FiniteGroup& B) {
    std::vector<MonomialMap> out;
    for (auto& a : A.elements())
        if (B.contains(a)) out.push_back(a);
    return FiniteGroup(A.N(), std::move(out), {});
}

bool coset_equals(const Coset& c, const MonomialMap& x, const FiniteGroup& K) {
    if (c.elements.size() != K.size()) return false;
    FiniteGroup set(x.N, c.elements, {});
    return std::all_of(K.elements().begin(), K.elements().end(),
                       [&](auto& k) { return set.contains(compose(x, k)); });
}

std::optional<Coset> transporter(const FiniteGroup& G, const FiniteGroup& H, const FiniteGroup& H2) {
    if (H.size() != H2.size()) return std::nullopt;
    auto gens = gens_or_all(H);
    std::vector<MonomialMap> out;
    for (auto& g : G.elements())
        if (std::all_of(gens.begin(), gens.end(), [&](auto& h) { return H2.contains(conj(g, h)); }))
            out.push_back(g);
    if (out.empty()) return std::nullopt;
    Coset c{out.front(), out};
    if (!coset_equals(c, c.rep, normalizer(G, H)))
        throw std::logic_error("transporter is not a coset of the normalizer");
    return c;
}

int TableGroup::order_of(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = op(x, a);
        ++k;
    }
    return k;
}

std::map<int, int> TableGroup::order_histogram() const {
    std::map<int, int> h;
    for (int a = 0; a < n; ++a) ++h[order_of(a)];
    return h;
}

QuotientGroup quotient(const FiniteGroup& G, const FiniteGroup& K) {
    if (!is_normal(G, K)) throw NotNormal("quotient: subgroup is not normal");
    QuotientGroup Q;
    Q.kernel_size = K.size();
    Q.coset_of.assign(G.size(), -1);
    for (size_t g = 0; g < G.size(); ++g) {
        if (Q.coset_of[g] >= 0) continue;
        int c = static_cast<int>(Q.reps.size());
        Q.reps.push_back(static_cast<int>(g));
        for (auto& k : K.elements()) {
            int idx = G.find(compose(G[g], k));
            if (idx < 0 || Q.coset_of[idx] >= 0) throw std::logic_error("coset partition failed");
            Q.coset_of[idx] = c;
        }
    }
    int n = static_cast<int>(Q.reps.size());
    if (static_cast<size_t>(n) * K.size() != G.size()) throw std::logic_error("coset partition size mismatch");

    MonomialMap shift = K.generators().empty() ? K[K.size() - 1] : K.generators().back().map;
    TableGroup& T = Q.table;
    T.n = n;
    T.table.assign(static_cast<size_t>(n) * n, 0);
    T.inv.assign(n, 0);
    T.names.assign(n, "");
    for (int a = 0; a < n; ++a) {
        T.names[a] = G[Q.reps[a]].str();
        const MonomialMap& x = G[Q.reps[a]];
        MonomialMap x2 = compose(x, shift);
        for (int b = 0; b < n; ++b) {
            const MonomialMap& y = G[Q.reps[b]];
            int c = Q.coset_of[G.find(compose(x, y))];
            // a second pair of representatives must land in the same coset
            if (Q.coset_of[G.find(compose(x2, compose(shift, y)))] != c)
                throw std::logic_error("coset multiplication not well defined");
            T.table[static_cast<size_t>(a) * n + b] = c;
            if (c == 0) T.inv[a] = b;
        }
    }
    return Q;
}

std::optional<GroupHom> recognize(const FiniteGroup& G, const QuotientGroup& Q,
                                  const std::vector<std::pair<Generator, int>>& gen_images,
                                  const TableGroup& target) {
    const int n = Q.table.n;
    if (n != target.n) return std::nullopt;
    if (Q.table.order_histogram() != target.order_histogram()) return std::nullopt;

    std::vector<int> img(n, -1), elem_img(G.size(), -1);
    int id = G.find(MonomialMap::identity(G.N()));
    elem_img[id] = 0;
    img[Q.coset_of[id]] = 0;
    std::deque<int> queue{id};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (auto& [gen, t] : gen_images) {
            int y = G.find(compose(G[x], gen.map));
            if (y < 0) return std::nullopt;
            int ty = target.op(elem_img[x], t);
            int c = Q.coset_of[y];
            if (img[c] < 0) img[c] = ty;
            else if (img[c] != ty) return std::nullopt;
            if (elem_img[y] < 0) {
                elem_img[y] = ty;
                queue.push_back(y);
            }
        }
    }
    std::vector<char> hit(n, 0);
    for (int c = 0; c < n; ++c) {
        if (img[c] < 0 || hit[img[c]]) return std::nullopt;
        hit[img[c]] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (img[Q.table.op(a, b)] != target.op(img[a], img[b])) return std::nullopt;

    GroupHom hom;
    for (auto& [gen, t] : gen_images) hom.generator_map.emplace_back(gen.label, target.names[t]);
    hom.image = std::move(img);
    return hom;
}

MonomialMap evaluate(const std::string& word, const Alphabet& alpha, int N, bool reversed) {
    std::istringstream is(word);
    std::string tok;
    MonomialMap r = MonomialMap::identity(N);
    while (is >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        long long k = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            name = tok.substr(0, pos);
            try {
                k = std::stoll(tok.substr(pos + 1));
            } catch (const std::exception&) {
                throw UnknownLabel("bad exponent in token '" + tok + "'");
            }
        }
        auto it = alpha.find(name);
        if (it == alpha.end()) throw UnknownLabel("unknown generator label '" + name + "'");
        if (it->second.N != N) throw DomainError("evaluate: label with different N");
        MonomialMap f = power(it->second, k);
        r = reversed ? compose(f, r) : compose(r, f);
    }
    return r;
}

RelationResult check_relation(const std::string& relation, const Alphabet& alpha, int N, bool reversed) {
    std::vector<std::string> sides;
    size_t start = 0;
    for (size_t pos; (pos = relation.find('=', start)) != std::string::npos; start = pos + 1)
        sides.push_back(relation.substr(start, pos - start));
    sides.push_back(relation.substr(start));
    if (sides.size() == 1) sides.push_back("1");
    RelationResult res{true, ""};
    MonomialMap first = evaluate(sides[0], alpha, N, reversed);
    std::ostringstream wit;
    wit << first.str();
    for (size_t i = 1; i < sides.size(); ++i) {
        MonomialMap other = evaluate(sides[i], alpha, N, reversed);
        wit << " vs " << other.str();
        if (other != first) res.holds = false;
    }
    res.witness = res.holds ? "" : wit.str();
    return res;
}

bool verify_presentation(const FiniteGroup& G, const std::vector<std::string>& relations, const Alphabet& alpha) {
    Alphabet full = alpha;
    for (auto& g : G.generators()) full.emplace(g.label, g.map);
    return std::all_of(relations.begin(), relations.end(),
                       [&](auto& r) { return check_relation(r, full, G.N()).holds; });
}

}  // namespace cpm
