#include "cpm/reference_groups.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cpm {

int ReferenceGroup::at(const std::string& label) const {
    auto it = named.find(label);
    if (it == named.end()) throw std::invalid_argument(name + " has no element named " + label);
    return it->second;
}

namespace {

using Elem = std::vector<int>;

// Cayley table of a group given by explicit elements and a product; elems[0] must be the identity.
TableGroup tabulate(const std::vector<Elem>& elems, const std::function<Elem(const Elem&, const Elem&)>& mul,
                    const std::function<std::string(const Elem&)>& show) {
    std::map<Elem, int> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], static_cast<int>(i));
    if (idx.size() != elems.size()) throw std::logic_error("duplicate reference elements");
    TableGroup T;
    T.n = static_cast<int>(elems.size());
    T.table.assign(elems.size() * elems.size(), 0);
    T.inv.assign(elems.size(), -1);
    T.names.clear();
    for (int a = 0; a < T.n; ++a) {
        T.names.push_back(show(elems[a]));
        for (int b = 0; b < T.n; ++b) {
            auto it = idx.find(mul(elems[a], elems[b]));
            if (it == idx.end()) throw std::logic_error("reference group not closed");
            T.table[static_cast<size_t>(a) * T.n + b] = it->second;
            if (it->second == 0) T.inv[a] = b;
        }
    }
    return T;
}

int index_of(const std::vector<Elem>& elems, const Elem& e) {
    auto it = std::find(elems.begin(), elems.end(), e);
    if (it == elems.end()) throw std::logic_error("element not in reference group");
    return static_cast<int>(it - elems.begin());
}

std::string show_vec(const Elem& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

Elem matmul(const Elem& A, const Elem& B, int m, size_t off = 0) {
    auto r = [m](int x) { return ((x % m) + m) % m; };
    return {r(A[off] * B[off] + A[off + 1] * B[off + 2]), r(A[off] * B[off + 1] + A[off + 1] * B[off + 3]),
            r(A[off + 2] * B[off] + A[off + 3] * B[off + 2]), r(A[off + 2] * B[off + 1] + A[off + 3] * B[off + 3])};
}

Elem projectivize(const Elem& A) {
    Elem neg(4);
    for (int i = 0; i < 4; ++i) neg[i] = (4 - A[i]) % 4;
    return std::min(A, neg);
}

std::vector<Elem> sl2_elements(int m, bool projective) {
    std::vector<Elem> out{{1, 0, 0, 1}};
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    if (((a * d - b * c) % m + m) % m != 1 % m) continue;
                    Elem M{a, b, c, d};
                    if (projective) M = projectivize(M);
                    if (std::find(out.begin(), out.end(), M) == out.end()) out.push_back(M);
                }
    return out;
}

}  // namespace

ReferenceGroup trivial_group() { return {"1", TableGroup{}, {{"1", 0}}}; }

ReferenceGroup z2_squared() {
    std::vector<Elem> el{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    auto mul = [](const Elem& x, const Elem& y) { return Elem{(x[0] + y[0]) % 2, (x[1] + y[1]) % 2}; };
    ReferenceGroup R{"Z2^2", tabulate(el, mul, show_vec), {}};
    R.named = {{"1", 0}, {"(1,0)", 1}, {"(0,1)", 2}};
    return R;
}

ReferenceGroup z2_times_dihedral(int N) {
    // (s, a, b) = sigma^s theta^a iota^b with iota theta = theta^-1 iota; faithful for every N >= 2.
    auto mul = [N](const Elem& x, const Elem& y) {
        return Elem{(x[0] + y[0]) % 2, ((x[1] + (x[2] ? -y[1] : y[1])) % N + N) % N, (x[2] + y[2]) % 2};
    };
    std::vector<Elem> el;
    for (int s = 0; s < 2; ++s)
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < N; ++a) el.push_back({s, a, b});
    Elem theta{0, 1 % N, 0}, sigma{1, 0, 0}, iota{0, 0, 1};
    ReferenceGroup R{"Z2xD" + std::to_string(N), tabulate(el, mul, show_vec), {}};
    R.named = {{"1", 0}, {"theta", index_of(el, theta)}, {"sigma", index_of(el, sigma)}, {"iota", index_of(el, iota)}};
    return R;
}

ReferenceGroup sl2(int m) {
    auto el = sl2_elements(m, false);
    auto mul = [m](const Elem& A, const Elem& B) { return matmul(A, B, m); };
    ReferenceGroup R{"SL2(Z" + std::to_string(m) + ")", tabulate(el, mul, show_vec), {}};
    R.named["1"] = 0;
    if (m == 2) {
        R.named["S"] = index_of(el, {0, 1, 1, 0});
        R.named["T"] = index_of(el, {1, 0, 1, 1});
    } else {
        R.named["S"] = index_of(el, {0, m - 1, 1, 0});
        R.named["T*"] = index_of(el, {1, 0, m - 1, 1});
        R.named["-I"] = index_of(el, {m - 1, 0, 0, m - 1});
    }
    return R;
}

ReferenceGroup psl2_z4() {
    auto el = sl2_elements(4, true);
    auto mul = [](const Elem& A, const Elem& B) { return projectivize(matmul(A, B, 4)); };
    ReferenceGroup R{"PSL2(Z4)", tabulate(el, mul, show_vec), {}};
    R.named = {{"1", 0}, {"S", index_of(el, projectivize({0, 3, 1, 0}))}, {"T*", index_of(el, projectivize({1, 0, 3, 1}))}};
    return R;
}

ReferenceGroup z2sq_semidirect(bool projective) {
    // (x1, x2, A): (x, A)(y, B) = (x + (A mod 2) y, AB)
    auto mats = sl2_elements(4, projective);
    std::vector<Elem> el;
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (auto& A : mats) el.push_back({x1, x2, A[0], A[1], A[2], A[3]});
    auto mul = [projective](const Elem& X, const Elem& Y) {
        int y1 = (X[2] * Y[0] + X[3] * Y[1]) % 2, y2 = (X[4] * Y[0] + X[5] * Y[1]) % 2;
        Elem C = matmul(X, Y, 4, 2);
        if (projective) C = projectivize(C);
        return Elem{(X[0] + y1) % 2, (X[1] + y2) % 2, C[0], C[1], C[2], C[3]};
    };
    auto norm = [projective](Elem M) { return projective ? projectivize(M) : M; };
    auto mk = [&](int x1, int x2, Elem M) {
        M = norm(M);
        return Elem{x1, x2, M[0], M[1], M[2], M[3]};
    };
    ReferenceGroup R{std::string("Z2^2x") + (projective ? "PSL2(Z4)" : "SL2(Z4)"), tabulate(el, mul, show_vec), {}};
    R.named = {{"1", 0},
               {"u1", index_of(el, mk(1, 0, {1, 0, 0, 1}))},
               {"u2", index_of(el, mk(0, 1, {1, 0, 0, 1}))},
               {"S", index_of(el, mk(0, 0, {0, 3, 1, 0}))},
               {"T*", index_of(el, mk(0, 0, {1, 0, 3, 1}))},
               {"-I", index_of(el, mk(0, 0, {3, 0, 0, 3}))}};
    return R;
}

}  // namespace cpm
