#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpm/lines.hpp"

using namespace cpm;

TEST_CASE("4N^2 lines per family and orbit sizes N^2, N^2, 2N^2") {
    for (int N = 2; N <= 5; ++N) {
        auto b = build(N);
        LineSet ls(N);
        CHECK(ls.lines().size() == static_cast<size_t>(12 * N * N));
        auto orbits = line_orbits(b, ls);
        CHECK(orbits.size() == 9);
        for (auto& o : orbits) {
            size_t expect = o.horizontal ? 2 * N * N : N * N;
            CHECK(o.members.size() == expect);
        }
    }
}

TEST_CASE("lines lie on the surface") {
    const int N = 3;
    for (auto& L : enumerate_lines(N))
        for (cplx s : {cplx(0.2, 0.5), cplx(-1.3, 0.1)}) CHECK(on_surface(point_on(line_forms(L, N), s, N), N));
}

TEST_CASE("intersection of degenerate lines") {
    const int N = 3;
    auto& f = degenerate_fiber({FiberTag::deg_pm1_0, 1});
    CHECK(intersect(fiber_line(f, 0, 0, N), fiber_line(f, 1, 1, N), N) == std::nullopt);
    auto x = intersect(fiber_line(f, 0, 0, N), fiber_line(f, 0, 2, N), N);
    REQUIRE(x.has_value());
    CHECK(on_fiber(x->numeric(), f.base, N));
    CHECK_THROWS_AS(intersect(fiber_line(f, 0, 0, N), fiber_line(f, 0, 0, N), N), DomainError);
}

TEST_CASE("horizontal cover of L(0,0;0,0) at N = 3") {
    auto c = horizontal_cover({LineFamily::AB_CD, 0, 0, 0, 0}, 3, 4);
    CHECK(c.generic_preimages == 3);
    CHECK(c.branch_values.size() == 2);
    CHECK(c.ramification_total == 4);
    CHECK(horizontal_cover({LineFamily::AB_CD, 1, 1, 0, 0}, 2, 4).generic_preimages == 2);
}

TEST_CASE("line suite passes") {
    for (int N = 2; N <= 4; ++N) CHECK(verify_lines(build(N), 1).ok());
}
