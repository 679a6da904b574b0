#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "cpm/monomial.hpp"

using namespace cpm;

namespace {

MonomialMap random_map(std::mt19937_64& rng, int N) {
    std::array<int, 4> p{0, 1, 2, 3}, e;
    std::shuffle(p.begin(), p.end(), rng);
    for (auto& x : e) x = static_cast<int>(rng() % (4 * N));
    return MonomialMap::make(N, p, e);
}

ProjPoint random_point(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return ProjPoint({cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng))});
}

}  // namespace

TEST_CASE("zeta powers are 4N-th roots of unity") {
    for (int N = 2; N <= 6; ++N) {
        CHECK(std::abs(zeta_pow(N, 4 * N) - 1.0) < 1e-14);
        CHECK(std::abs(zeta_pow(N, 1) - std::polar(1.0, std::numbers::pi / (2 * N))) < 1e-14);
        CHECK(std::abs(zeta_pow(N, -3) * zeta_pow(N, 3) - 1.0) < 1e-14);
    }
    CHECK(RootExponent(-1, 3).value() == 11);
}

TEST_CASE("compose is associative and matches pointwise application") {
    std::mt19937_64 rng(3);
    for (int N : {2, 3, 5}) {
        for (int k = 0; k < 1000; ++k) {
            auto a = random_map(rng, N), b = random_map(rng, N), c = random_map(rng, N);
            REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
        for (int k = 0; k < 200; ++k) {
            auto g = random_map(rng, N), h = random_map(rng, N);
            auto p = random_point(rng);
            CHECK(approx_eq(apply(compose(g, h), p), apply(g, apply(h, p))));
        }
    }
}

TEST_CASE("inverse, power and canonical form") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        auto g = random_map(rng, 4);
        CHECK(compose(g, inverse(g)) == MonomialMap::identity(4));
        CHECK(power(g, 3) == compose(g, compose(g, g)));
        CHECK(power(g, -2) == inverse(compose(g, g)));
        CHECK(g.canonical().canonical() == g.canonical());
    }
    auto raw = MonomialMap::raw(3, {1, 0, 3, 2}, {2, 5, 2, 2});
    CHECK_FALSE(raw.is_canonical());
    CHECK(canonical_eq(raw, raw.canonical()));
    CHECK(raw.canonical().exps[0] == 0);
}

TEST_CASE("scalar maps are the identity projectively") {
    auto s = MonomialMap::make(3, {0, 1, 2, 3}, {4, 4, 4, 4});
    CHECK(s == MonomialMap::identity(3));
}

TEST_CASE("exact points follow numeric application") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
        auto g = random_map(rng, 3);
        ExactPoint p = ExactPoint::make(3, {-1, 2, 0, 7});
        CHECK(approx_eq(apply(g, p).numeric(), apply(g, p.numeric())));
    }
}

TEST_CASE("compose rejects mismatched N") { CHECK_THROWS_AS(compose(MonomialMap::identity(2), MonomialMap::identity(3)), DomainError); }
