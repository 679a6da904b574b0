#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpm/cpm_groups.hpp"
#include "cpm/fermat.hpp"

namespace cpm {

// Three families of line pairs: the a,b / c,d equations and their S and S T S^-1 transports.
enum class LineFamily { AB_CD = 0, AD_BC = 1, AC_BD = 2 };
std::string to_string(LineFamily f);

// Family AB_CD: a = omega^{i/2+m} b, c = omega^{j/2+n} d; the other families are
// the images of that line under S and S T S^-1.
struct LineIndex {
    LineFamily family = LineFamily::AB_CD;
    int i = 0, j = 0, m = 0, n = 0;
    std::string str() const;
    auto operator<=>(const LineIndex&) const = default;
};

// x_p = zeta^e x_q with p < q.
struct Binomial {
    int p = 0, q = 1, e = 0;
    auto operator<=>(const Binomial&) const = default;
};
using LineForms = std::array<Binomial, 2>;

LineForms normalize(LineForms f, int N);
LineForms line_forms(const LineIndex& L, int N);
LineForms transform(const MonomialMap& g, const LineForms& f);
ProjPoint point_on(const LineForms& f, cplx sigma, int N);

// Intersection of two lines in the same coordinate pairing; nullopt if disjoint,
// throws if the lines coincide.
std::optional<ExactPoint> intersect(const LineForms& x, const LineForms& y, int N);

class LineSet {
public:
    explicit LineSet(int N);
    int N() const { return N_; }
    const std::vector<LineIndex>& lines() const { return lines_; }
    int find(const LineForms& f) const;
    // Index of g . L; logic_error when the image is not a line of the set.
    int image(const MonomialMap& g, int line) const;

private:
    int N_;
    std::vector<LineIndex> lines_;
    std::map<LineForms, int> index_;
};

std::vector<LineIndex> enumerate_lines(int N);

struct LineOrbit {
    LineFamily family;
    std::vector<int> members;  // indices into LineSet::lines()
    bool horizontal = false;
    FiberClass fiber;  // for degenerate orbits
};

std::vector<LineOrbit> line_orbits(const CpmGroupBundle& b, const LineSet& ls);

// Pushforward of a horizontal line along the projection: preimage counts and branch values.
struct CoverData {
    int degree = 0;
    int generic_preimages = 0;
    std::vector<BaseParam> branch_values;
    std::vector<int> branch_preimages;
    int ramification_total = 0;  // sum of (e - 1) over the line
};
CoverData horizontal_cover(const LineIndex& L, int N, uint64_t seed);
VerificationReport horizontal_cover_check(const LineIndex& L, int N, uint64_t seed);

// The lines x_p = zeta^{s1+4m} x_q, x_r = zeta^{s2+4n} x_s of a degenerate fiber.
LineForms fiber_line(const DegenerateFiber& f, int m, int n, int N);

VerificationReport verify_lines(const CpmGroupBundle& b, uint64_t seed);

}  // namespace cpm
