#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpm/resolution.hpp"

using namespace cpm;

TEST_CASE("self-intersections") {
    CHECK(resolve({SingKind::A, 3}).self_intersection == std::vector{-2, -2});
    CHECK(resolve({SingKind::diag, 2}).self_intersection == std::vector{-2});
    CHECK(resolve({SingKind::diag, 5}).self_intersection == std::vector{-5});
    auto a = resolve({SingKind::A, 4});
    CHECK(a.intersection[0][1] == 1);
    CHECK(a.intersection[0][2] == 0);
}

TEST_CASE("A_3 charts") {
    auto a = resolve({SingKind::A, 4});
    std::vector<Chart> expect = {Chart{{{1, -3}, {0, 4}}}, Chart{{{2, -2}, {-1, 3}}}, Chart{{{3, -1}, {-2, 2}}},
                                 Chart{{{4, 0}, {-3, 1}}}};
    CHECK(a.charts == expect);
}

TEST_CASE("continued fractions") {
    CHECK(hj_fraction(7, 3) == std::vector{3, 2, 2});
    CHECK(hj_fraction(5, 1) == std::vector{5});
    CHECK(hj_fraction(5, 4) == std::vector{2, 2, 2, 2});
}

TEST_CASE("multiplicities") {
    auto [m1, m2] = divisor_multiplicities(3);
    CHECK(m1.E == std::vector{2, 1});
    CHECK(m1.D0 == 3);
    auto [n1, n2] = divisor_multiplicities(2);
    CHECK(n1.E == std::vector{1});
    CHECK(n1.D0 == 2);
    auto [p1, p2] = divisor_multiplicities(5);
    CHECK(p2.E == std::vector{1, 2, 3, 4});
    CHECK(p2.DN == 5);
}

TEST_CASE("chi analysis") {
    auto c3 = chi_analysis(3);
    CHECK(c3.curves[0].image == ChiImage::zero_one);
    CHECK(c3.curves[1].image == ChiImage::one_zero);
    CHECK(c3.fundamental_point == 1);
    CHECK(c3.blowup_degree == 1);
    auto c2 = chi_analysis(2);
    CHECK(c2.curves[0].image == ChiImage::cover);
    CHECK(c2.curves[0].degree == 2);
    CHECK_FALSE(c2.fundamental_point.has_value());
    auto c4 = chi_analysis(4);
    CHECK(c4.curves[0].image == ChiImage::zero_one);
    CHECK(c4.curves[1].image == ChiImage::cover);
    CHECK(c4.curves[2].image == ChiImage::one_zero);
}

TEST_CASE("resolution suite passes for N <= 12") {
    for (int N = 2; N <= 12; ++N) CHECK(verify_resolution(N).ok());
}

TEST_CASE("orbifold types of the singular points") {
    for (int N = 2; N <= 5; ++N) CHECK(classify_orbifold(build(N)).ok());
}
