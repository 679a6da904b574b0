#pragma once
#include <array>
#include <string>
#include <unordered_map>

#include "cpm/group.hpp"
#include "cpm/report.hpp"

namespace cpm {

struct CpmGroupBundle {
    int N = 2;
    FiniteGroup GN;       // <u1, u2, U>
    FiniteGroup Gt;       // <u1, u2, U, S, T>
    Alphabet named;       // u1 u2 U S T V0 V1 V2 j i M0..M5
    FiniteGroup H, Hl, Hr, GN1, GN1p;
    std::string convention;

    MonomialMap operator()(const std::string& word) const { return evaluate(word, named, N); }
    Generator gen(const std::string& label, const std::string& word) const { return {label, (*this)(word)}; }
};

struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The five generators as explicit coordinate maps.
MonomialMap cpm_generator(const std::string& name, int N);
// The six classical curve symmetries M0..M5 written out coordinatewise.
MonomialMap curve_symmetry(int j, int N);

CpmGroupBundle build(int N, size_t cap = kDefaultCap);

VerificationReport verify_presentations(const CpmGroupBundle& b);
VerificationReport verify_structure(const CpmGroupBundle& b);
VerificationReport verify_subgroup_lattice(const CpmGroupBundle& b);
VerificationReport verify_dihedral(const CpmGroupBundle& b);
VerificationReport verify_conjugation_tables(const CpmGroupBundle& b);
VerificationReport verify_all_groups(const CpmGroupBundle& b);

// Generator-preserving epimorphism G_big -> G_small for small.N | big.N.
VerificationReport verify_divisibility(const CpmGroupBundle& small, const CpmGroupBundle& big);

// Class of each G_N element in Z2 x D_N as (s, a, b) = sigma^s theta^a iota^b, via G_N/H.
struct DihedralClassMap {
    std::unordered_map<uint64_t, std::array<int, 3>> cls;
    std::array<int, 3> of(const MonomialMap& g) const;
};
DihedralClassMap dihedral_classes(const CpmGroupBundle& b);

}  // namespace cpm
