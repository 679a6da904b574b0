#pragma once
#include <map>
#include <string>

#include "cpm/group.hpp"

namespace cpm {

// Concrete groups built from explicit elements, used as targets for recognize().
struct ReferenceGroup {
    std::string name;
    TableGroup table;
    std::map<std::string, int> named;

    int at(const std::string& label) const;
};

ReferenceGroup trivial_group();
ReferenceGroup z2_squared();                 // (1,0), (0,1)
ReferenceGroup z2_times_dihedral(int N);     // theta, sigma, iota as sigma^s theta^a iota^b
ReferenceGroup sl2(int m);                   // m in {2,4}; S, T (m=2) or S, T*, -I (m=4)
ReferenceGroup psl2_z4();                    // S, T*
ReferenceGroup z2sq_semidirect(bool projective);  // u1, u2, S, T*, -I

}  // namespace cpm
