#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "blowup7/divisor_class.hpp"

using namespace blowup7;

namespace {

DivisorClass dc(std::int64_t a, std::vector<std::int64_t> b)
{
    return DivisorClass(a, std::move(b));
}

DivisorClass random_class(std::mt19937& rng, int r, std::int64_t lo, std::int64_t hi)
{
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<std::int64_t> b(static_cast<std::size_t>(r));
    for (auto& v : b)
        v = dist(rng);
    return DivisorClass(dist(rng), std::move(b));
}

}  // namespace

TEST_CASE("intersection pairing has signature (1,-1,...,-1)")
{
    CHECK(intersect(dc(1, {0, 0, 0, 0, 0, 0, 0}), dc(1, {0, 0, 0, 0, 0, 0, 0})) == 1);
    CHECK(intersect(dc(1, {1, 0, 0, 0, 0, 0, 0}), dc(4, {2, 1, 1, 1, 1, 1, 1})) == 2);
    CHECK(intersect(dc(3, {1, 1, 1, 1, 1, 1, 1}), dc(3, {1, 1, 1, 1, 1, 1, 1})) == 2);

    // basis pairings
    const auto H = dc(1, {0, 0, 0});
    const auto E1 = dc(0, {-1, 0, 0});
    const auto E2 = dc(0, {0, -1, 0});
    CHECK(self_intersection(H) == 1);
    CHECK(self_intersection(E1) == -1);
    CHECK(intersect(H, E1) == 0);
    CHECK(intersect(E1, E2) == 0);
}

TEST_CASE("intersect rejects classes of different rank")
{
    CHECK_THROWS_MATCHES(intersect(dc(1, {0, 0}), dc(1, {0, 0, 0})), std::invalid_argument,
                         Catch::Matchers::Message("incompatible lattice ranks"));
    CHECK_THROWS_MATCHES(dc(1, {0, 0}) + dc(1, {0, 0, 0}), std::invalid_argument,
                         Catch::Matchers::Message("incompatible lattice ranks"));
}

TEST_CASE("canonical class")
{
    const auto K7 = canonical_class(7);
    CHECK(K7 == dc(-3, {-1, -1, -1, -1, -1, -1, -1}));
    CHECK(self_intersection(K7) == 2);
    CHECK(self_intersection(canonical_class(6)) == 3);
    CHECK(intersect(K7, dc(1, {1, 0, 0, 0, 0, 0, 0})) == -2);
    CHECK_THROWS_AS(canonical_class(0), std::invalid_argument);
}

TEST_CASE("genus on worked classes")
{
    CHECK(genus(dc(2, {1, 1, 1, 1, 0, 0, 0})) == 0);
    CHECK(genus(dc(3, {1, 1, 1, 1, 1, 1, 1})) == 1);
    CHECK(genus(dc(4, {2, 1, 1, 1, 1, 1, 1})) == 2);
    // exceptional and line classes are rational
    CHECK(genus(dc(0, {-1, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(genus(dc(1, {1, 1, 0, 0, 0, 0, 0})) == 0);
    // smooth plane quintic through no points
    CHECK(genus(dc(5, {0, 0, 0, 0, 0, 0, 0})) == 6);
}

TEST_CASE("genus: adjunction and binomial forms agree")
{
    // exhaustive at small rank
    for (int r = 1; r <= 3; ++r) {
        std::vector<std::int64_t> b(static_cast<std::size_t>(r), 0);
        const std::int64_t lim = (r == 3) ? 4 : 10;
        const auto sweep = [&](auto&& self, int pos) -> void {
            if (pos == r) {
                for (std::int64_t a = -10; a <= 10; ++a) {
                    const DivisorClass d(a, b);
                    const std::int64_t via_pairing =
                        (self_intersection(d) + k_degree(d)) / 2 + 1;
                    CHECK(genus(d) == via_pairing);
                }
                return;
            }
            for (std::int64_t v = -lim; v <= lim; ++v) {
                b[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1);
            }
        };
        sweep(sweep, 0);
    }
    // randomized at r = 7
    std::mt19937 rng(20260823);
    for (int i = 0; i < 2000; ++i) {
        const auto d = random_class(rng, 7, -10, 10);
        CHECK(genus(d) == (self_intersection(d) + k_degree(d)) / 2 + 1);
    }
}

TEST_CASE("square-zero rational classes meet K in -2")
{
    // exhaustive sweep at r = 2
    int seen = 0;
    for (std::int64_t a = -6; a <= 6; ++a)
        for (std::int64_t b1 = -6; b1 <= 6; ++b1)
            for (std::int64_t b2 = -6; b2 <= 6; ++b2) {
                const DivisorClass d(a, {b1, b2});
                if (self_intersection(d) == 0 && genus(d) == 0) {
                    CHECK(k_degree(d) == -2);
                    ++seen;
                }
            }
    CHECK(seen > 0);

    // explicit fiber classes at r = 7
    for (const auto& d : {dc(1, {1, 0, 0, 0, 0, 0, 0}), dc(2, {1, 1, 1, 1, 0, 0, 0}),
                          dc(3, {2, 1, 1, 1, 1, 1, 0}), dc(4, {2, 2, 2, 1, 1, 1, 1}),
                          dc(5, {2, 2, 2, 2, 2, 2, 1})}) {
        REQUIRE(self_intersection(d) == 0);
        REQUIRE(genus(d) == 0);
        CHECK(k_degree(d) == -2);
    }
}

TEST_CASE("expected dimension on worked classes")
{
    CHECK(expected_dimension(dc(1, {1, 0, 0, 0, 0, 0, 0})) == 1);
    CHECK(expected_dimension(dc(3, {1, 1, 1, 1, 1, 1, 1})) == 2);
    CHECK(expected_dimension(dc(0, {0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(expected_dimension(dc(2, {0, 0, 0, 0, 0, 0, 0})) == 5);
}

TEST_CASE("surface invariants")
{
    const auto s7 = surface_invariants(7);
    CHECK(s7.k_squared == 2);
    CHECK(s7.chi_top == 10);
    CHECK(s7.b2 == 8);
    CHECK(s7.b1 == 0);
    CHECK(s7.q == 0);
    CHECK(s7.chi_structure == 1);

    CHECK(surface_invariants(0).k_squared == 9);
    CHECK(surface_invariants(0).chi_top == 3);
    CHECK(surface_invariants(0).b2 == 1);
    CHECK(surface_invariants(6).k_squared == 3);
    CHECK(surface_invariants(6).chi_top == 9);
    CHECK(surface_invariants(6).b2 == 7);

    for (int r = 0; r <= 20; ++r) {
        const auto s = surface_invariants(r);
        CHECK(12 * s.chi_structure == s.chi_top + s.k_squared);
    }
}

TEST_CASE("bilinearity and symmetry of the pairing")
{
    std::mt19937 rng(12345);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_class(rng, 7, -6, 6);
        const auto y = random_class(rng, 7, -6, 6);
        const auto z = random_class(rng, 7, -6, 6);
        CHECK(intersect(x + y, z) == intersect(x, z) + intersect(y, z));
        CHECK(intersect(x, y) == intersect(y, x));
        CHECK(intersect(x - y, z) == intersect(x, z) - intersect(y, z));
        CHECK(intersect(-x, y) == -intersect(x, y));
    }
}

TEST_CASE("string round trip")
{
    const auto d = dc(4, {2, 1, 1, 1, 1, 1, 1});
    CHECK(to_string(d) == "4;2,1,1,1,1,1,1");
    CHECK(parse_divisor_class("4;2,1,1,1,1,1,1") == d);
    CHECK(parse_divisor_class("-3;-1,-1,-1,-1,-1,-1,-1") == canonical_class(7));
    CHECK(parse_divisor_class(to_string(dc(0, {-1, 0}))) == dc(0, {-1, 0}));

    CHECK_THROWS_AS(parse_divisor_class(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4;"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("a;1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4;1,,1"), std::invalid_argument);
}

TEST_CASE("rank-zero classes are rejected")
{
    CHECK_THROWS_AS(DivisorClass(1, {}), std::invalid_argument);
}

TEST_CASE("arithmetic overflow is detected, not wrapped")
{
    const auto big = dc(std::numeric_limits<std::int64_t>::max(), {0});
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(intersect(big, big), std::overflow_error);
}
