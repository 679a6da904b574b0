#pragma once
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpm/monomial.hpp"

namespace cpm {

struct Generator {
    std::string label;
    MonomialMap map;
};

inline constexpr size_t kDefaultCap = 200000;

struct ClosureOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerated group of canonical monomial maps. Subgroups are FiniteGroups too;
// operations that need the ambient group take it explicitly.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(int N, std::vector<MonomialMap> elements, std::vector<Generator> generators);

    int N() const { return N_; }
    size_t size() const { return elems_.size(); }
    const std::vector<MonomialMap>& elements() const { return elems_; }
    const MonomialMap& operator[](size_t i) const { return elems_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }

    int find(const MonomialMap& g) const;
    bool contains(const MonomialMap& g) const { return find(g) >= 0; }
    bool subset_of(const FiniteGroup& other) const;
    bool operator==(const FiniteGroup& other) const;
    bool is_abelian() const;

private:
    int N_ = 2;
    std::vector<MonomialMap> elems_;
    std::vector<Generator> gens_;
    std::unordered_map<uint64_t, int> index_;
};

FiniteGroup closure(int N, const std::vector<Generator>& gens, size_t cap = kDefaultCap);
FiniteGroup closure(const std::vector<MonomialMap>& gens, size_t cap = kDefaultCap);

MonomialMap conj(const MonomialMap& v, const MonomialMap& g);  // v g v^-1
int element_order(const MonomialMap& g);

FiniteGroup center(const FiniteGroup& G);
FiniteGroup normalizer(const FiniteGroup& G, const FiniteGroup& H);
bool is_normal(const FiniteGroup& G, const FiniteGroup& K);
FiniteGroup intersection(const FiniteGroup& A, const FiniteGroup& B);

struct Coset {
    MonomialMap rep;
    std::vector<MonomialMap> elements;
};
// {g : g H g^-1 = H2}, verified to be the left coset rep * N(H); nullopt if empty.
std::optional<Coset> transporter(const FiniteGroup& G, const FiniteGroup& H, const FiniteGroup& H2);
bool coset_equals(const Coset& c, const MonomialMap& x, const FiniteGroup& K);

// Finite group given by its Cayley table; element 0 is the identity.
struct TableGroup {
    int n = 1;
    std::vector<int> table{0};
    std::vector<int> inv{0};
    std::vector<std::string> names{"1"};

    int op(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
    int order_of(int a) const;
    std::map<int, int> order_histogram() const;
};

struct NotNormal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuotientGroup {
    std::vector<int> coset_of;  // indexed like the parent's elements
    std::vector<int> reps;      // parent indices, one per coset
    TableGroup table;
    size_t kernel_size = 1;
};

QuotientGroup quotient(const FiniteGroup& G, const FiniteGroup& K);

// Generator-level homomorphism from a quotient, extended to a full element map.
struct GroupHom {
    std::vector<std::pair<std::string, std::string>> generator_map;  // label -> target name
    std::vector<int> image;                                          // coset -> target index
};

// Builds the map coset(g) -> target by walking words in the labeled generators,
// then checks well-definedness, bijectivity and the full multiplication table.
std::optional<GroupHom> recognize(const FiniteGroup& G, const QuotientGroup& Q,
                                  const std::vector<std::pair<Generator, int>>& gen_images,
                                  const TableGroup& target);

// Words: whitespace-separated tokens "x" or "x^k" (k may be negative); "1" is the identity.
using Alphabet = std::map<std::string, MonomialMap>;

struct UnknownLabel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Left-to-right product; reversed=true multiplies in the opposite order.
MonomialMap evaluate(const std::string& word, const Alphabet& alpha, int N, bool reversed = false);

struct RelationResult {
    bool holds = false;
    std::string witness;
};
// "w1 = w2 = ..." or a single word meaning w = 1.
RelationResult check_relation(const std::string& relation, const Alphabet& alpha, int N, bool reversed = false);
bool verify_presentation(const FiniteGroup& G, const std::vector<std::string>& relations, const Alphabet& alpha);

}  // namespace cpm
