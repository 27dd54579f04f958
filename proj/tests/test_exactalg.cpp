#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "blowup7/factorization.hpp"
#include "blowup7/number_field.hpp"
#include "blowup7/polynomial.hpp"

using namespace blowup7;
using Catch::Matchers::Message;

namespace {

Poly<Rational> P(std::vector<std::int64_t> coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs)
        c.emplace_back(v);
    return Poly<Rational>{std::move(c)};
}

Rational rat(std::int64_t n, std::int64_t d = 1)
{
    return Rational(Integer(n), Integer(d));
}

Poly<Rational> random_poly(std::mt19937& rng, int degree, std::int64_t lo, std::int64_t hi)
{
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c)
        v = Rational(dist(rng));
    while (c.back().is_zero())
        c.back() = Rational(dist(rng));
    return Poly<Rational>{std::move(c)};
}

/// Rational-root screen via the rational root theorem, for primitive
/// integer-coefficient input.
bool has_rational_root(const Poly<Rational>& p)
{
    const auto prim = blowup7::detail::content_and_primitive(p).second;
    if (prim.c.front().is_zero())
        return true;  // root at zero
    const Integer c0 = Integer(boost::multiprecision::numerator(prim.c.front()));
    const Integer lc = Integer(boost::multiprecision::numerator(prim.leading()));
    for (const auto& num : blowup7::detail::positive_divisors(c0))
        for (const auto& den : blowup7::detail::positive_divisors(lc)) {
            if (evaluate(prim, Rational(num, den)).is_zero())
                return true;
            if (evaluate(prim, Rational(-num, den)).is_zero())
                return true;
        }
    return false;
}

}  // namespace

TEST_CASE("polynomial arithmetic, evaluation, and printing")
{
    const auto p = P({-1, 0, 1});  // t^2 - 1
    const auto q = P({-1, 1});     // t - 1

    CHECK(p.degree() == 2);
    CHECK(Poly<Rational>{}.degree() == -1);
    CHECK(P({0, 0, 0}) == Poly<Rational>{});  // trailing zeros trim to the zero polynomial

    CHECK(p + q == P({-2, 1, 1}));
    CHECK(p - p == Poly<Rational>{});
    CHECK(q * q == P({1, -2, 1}));
    CHECK(p * Poly<Rational>{} == Poly<Rational>{});
    CHECK(rat(3) * q == P({-3, 3}));

    CHECK(evaluate(p, rat(3)) == rat(8));
    CHECK(evaluate(Poly<Rational>{}, rat(5)) == rat(0));
    CHECK(derivative(P({7, -2, 0, 5})) == P({-2, 0, 15}));
    CHECK(derivative(P({4})) == Poly<Rational>{});
    CHECK(coefficient(p, 5, rat(0)) == rat(0));

    CHECK(to_string(P({-1, 0, 1})) == "t^2 - 1");
    CHECK(to_string(P({0, -3, 2}), "u") == "2*u^2 - 3*u");
    CHECK(to_string(Poly<Rational>{}) == "0");
    CHECK(to_string(Poly<Rational>{{rat(1, 2)}}) == "1/2");
}

TEST_CASE("division with remainder is exact over the rationals")
{
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng, 1 + trial % 6, -9, 9);
        const auto q = random_poly(rng, 1 + trial % 3, -9, 9);
        const auto [quot, rem] = divmod(p, q);
        CHECK(q * quot + rem == p);
        CHECK(rem.degree() < q.degree());
    }

    CHECK(exact_div(P({-1, 0, 1}), P({-1, 1})) == P({1, 1}));
    CHECK_THROWS_MATCHES(exact_div(P({1, 0, 1}), P({-1, 1})), std::invalid_argument,
                         Message("inexact polynomial division"));
    CHECK_THROWS_AS(divmod(P({1, 1}), Poly<Rational>{}), std::invalid_argument);
}

TEST_CASE("gcd worked examples")
{
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));         // gcd(t^2-1, t-1) = t-1
    CHECK(poly_gcd(P({-1, 0, 0, 1}), P({1, 1, 1})) == P({1, 1, 1}));  // gcd(t^3-1, t^2+t+1)
    CHECK(poly_gcd(P({2, 2}), Poly<Rational>{}) == P({1, 1}));        // gcd with zero, made monic
    CHECK_THROWS_MATCHES(poly_gcd(Poly<Rational>{}, Poly<Rational>{}), std::invalid_argument,
                         Message("gcd of two zero polynomials"));
}

TEST_CASE("gcd of scaled coprime products recovers the common factor")
{
    std::mt19937 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = monic(random_poly(rng, 1 + trial % 3, -5, 5));
        const auto a = random_poly(rng, 1 + trial % 2, -5, 5);
        const auto b = random_poly(rng, 1 + (trial + 1) % 2, -5, 5);
        if (poly_gcd(a, b).degree() != 0)
            continue;  // keep only coprime cofactor pairs
        CHECK(poly_gcd(a * g, b * g) == g);
        CHECK(poly_gcd(a, b) == P({1}));
        ++checked;
    }
    CHECK(checked > 60);
}

TEST_CASE("extended gcd returns a Bezout identity")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const auto p = random_poly(rng, 1 + trial % 4, -7, 7);
        const auto q = random_poly(rng, 1 + trial % 3, -7, 7);
        const auto [g, u, v] = extended_gcd(p, q);
        CHECK(u * p + v * q == g);
        CHECK(g == poly_gcd(p, q));
        CHECK(g.leading() == rat(1));
    }
}

TEST_CASE("square-free decomposition separates multiplicities")
{
    const auto a = P({-1, 1});  // t - 1
    const auto b = P({2, 1});   // t + 2

    const auto parts = squarefree_decomposition(a * a * b * b * b);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair{a, 2});
    CHECK(parts[1] == std::pair{b, 3});

    const auto pure = squarefree_decomposition(P({0, 0, 0, 1}));  // t^3
    REQUIRE(pure.size() == 1);
    CHECK(pure[0] == std::pair{P({0, 1}), 3});

    const auto flat = squarefree_decomposition(P({6, 5, 1}));  // already square-free
    REQUIRE(flat.size() == 1);
    CHECK(flat[0] == std::pair{P({6, 5, 1}), 1});

    const auto mixed = squarefree_decomposition(P({-3, 1}) * P({1, 0, 1}) * P({1, 0, 1}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0] == std::pair{P({-3, 1}), 1});
    CHECK(mixed[1] == std::pair{P({1, 0, 1}), 2});

    CHECK(squarefree_part(a * a * b * b * b) == a * b);
    CHECK(squarefree_decomposition(P({5})).empty());
    CHECK_THROWS_AS(squarefree_decomposition(Poly<Rational>{}), std::invalid_argument);
}

TEST_CASE("interpolation recovers exact polynomials")
{
    CHECK(interpolate({{rat(0), rat(1)}, {rat(1), rat(2)}, {rat(2), rat(5)}}) == P({1, 0, 1}));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 4, -9, 9);
        std::vector<std::pair<Rational, Rational>> samples;
        for (int x = -2; x <= 2; ++x)
            samples.emplace_back(rat(x), evaluate(p, rat(x)));
        CHECK(interpolate(samples) == p);
    }
}

TEST_CASE("determinants by fraction-free elimination")
{
    using Row = std::vector<Rational>;
    CHECK(determinant(std::vector<Row>{}, rat(1)) == rat(1));
    CHECK(determinant(std::vector<Row>{{rat(7)}}, rat(1)) == rat(7));
    CHECK(determinant(std::vector<Row>{{rat(1), rat(2)}, {rat(3), rat(4)}}, rat(1)) == rat(-2));
    CHECK(determinant(std::vector<Row>{{rat(0), rat(1)}, {rat(1), rat(0)}}, rat(1)) == rat(-1));
    CHECK(determinant(std::vector<Row>{{rat(1), rat(2), rat(3)},
                                       {rat(4), rat(5), rat(6)},
                                       {rat(7), rat(8), rat(9)}},
                      rat(1)) == rat(0));
    CHECK(determinant(std::vector<Row>{{rat(2), rat(0), rat(1)},
                                       {rat(1), rat(3), rat(2)},
                                       {rat(0), rat(1), rat(4)}},
                      rat(1)) == rat(21));

    using PRow = std::vector<Poly<Rational>>;
    const auto t = P({0, 1});
    CHECK(determinant(std::vector<PRow>{{t, P({1})}, {P({1}), t}}, P({1})) == P({-1, 0, 1}));
}

TEST_CASE("resultants follow the Sylvester conventions")
{
    // Res_x(x^2 - t, x - 1) = 1 - t, with coefficients in Q[t]
    using PP = Poly<Poly<Rational>>;
    const PP p{{P({0, -1}), P({}), P({1})}};
    const PP q{{P({-1}), P({1})}};
    CHECK(resultant(p, q) == P({1, -1}));

    CHECK(resultant(p, p) == Poly<Rational>{});
    CHECK(resultant(P({3, 1, 2}), P({3, 1, 2})) == rat(0));

    // degenerate shapes
    CHECK(resultant(Poly<Rational>{}, P({1, 1})) == rat(0));
    CHECK(resultant(P({1, 1}), Poly<Rational>{}) == rat(0));
    CHECK(resultant(P({3}), P({5, 0, 1})) == rat(9));
    CHECK(resultant(P({5, 0, 1}), P({3})) == rat(9));
    CHECK(resultant(P({3}), P({5})) == rat(1));
    CHECK_THROWS_MATCHES(resultant(Poly<Rational>{}, Poly<Rational>{}), std::invalid_argument,
                         Message("resultant of two zero polynomials"));

    // swap symmetry: Res(q, p) = (-1)^(deg p * deg q) Res(p, q)
    CHECK(resultant(P({-4, 0, 1}), P({-1, 1})) == rat(-3));
    CHECK(resultant(P({-1, 1}), P({-4, 0, 1})) == rat(-3));
    CHECK(resultant(P({-2, 1}), P({-5, 1})) == rat(-3));
    CHECK(resultant(P({-5, 1}), P({-2, 1})) == rat(3));
}

TEST_CASE("two conics eliminate to a binary quartic")
{
    using PP = Poly<Poly<Rational>>;
    const auto u = P({0, 1});
    const auto one = P({1});

    // p, q monic in x with linear-in-u roots {u, -u} and {2u+1, 3u}
    const auto a = u, b = rat(-1) * u, c = P({1, 2}), d = P({0, 3});
    const PP p{{a * b, -(a + b), one}};
    const PP q{{c * d, -(c + d), one}};
    const auto res = resultant(p, q);
    CHECK(res == P({0, 0, 8, 32, 24}));
    CHECK(res == (a - c) * (a - d) * (b - c) * (b - d));
    CHECK(res.degree() == 4);

    // randomized: the resultant of monic root-built conics is the exact
    // product of root differences, a binary form of degree at most 2*2 = 4
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ra = random_poly(rng, trial % 2, -3, 3);
        const auto rb = random_poly(rng, (trial + 1) % 2, -3, 3);
        const auto rc = random_poly(rng, 1, -3, 3);
        const auto rd = random_poly(rng, 1, -3, 3);
        const PP f{{ra * rb, -(ra + rb), one}};
        const PP g{{rc * rd, -(rc + rd), one}};
        const auto r = resultant(f, g);
        CHECK(r == (ra - rc) * (ra - rd) * (rb - rc) * (rb - rd));
        CHECK(r.degree() <= 4);
    }
}

TEST_CASE("factorization worked examples")
{
    const auto cyc = factor_q(P({-1, 0, 0, 1}));  // t^3 - 1
    CHECK(cyc.unit == rat(1));
    REQUIRE(cyc.factors.size() == 2);
    CHECK(cyc.factors[0] == QFactor{P({-1, 1}), 1});
    CHECK(cyc.factors[1] == QFactor{P({1, 1, 1}), 1});

    const auto quartic = factor_q(P({0, -1, 0, 0, 1}));  // t^4 - t
    CHECK(quartic.unit == rat(1));
    REQUIRE(quartic.factors.size() == 3);
    CHECK(quartic.factors[0] == QFactor{P({-1, 1}), 1});
    CHECK(quartic.factors[1] == QFactor{P({0, 1}), 1});
    CHECK(quartic.factors[2] == QFactor{P({1, 1, 1}), 1});

    const auto square = factor_q(P({9, 0, -12, 0, 4}));  // (2t^2 - 3)^2
    CHECK(square.unit == rat(1));
    REQUIRE(square.factors.size() == 1);
    CHECK(square.factors[0] == QFactor{P({-3, 0, 2}), 2});

    const auto scaled = factor_q(P({2, -2}));  // -2(t - 1)
    CHECK(scaled.unit == rat(-2));
    REQUIRE(scaled.factors.size() == 1);
    CHECK(scaled.factors[0] == QFactor{P({-1, 1}), 1});

    const auto constant = factor_q(P({5}));
    CHECK(constant.unit == rat(5));
    CHECK(constant.factors.empty());

    CHECK_THROWS_MATCHES(factor_q(Poly<Rational>{}), std::invalid_argument,
                         Message("cannot factor the zero polynomial"));
    CHECK_THROWS_MATCHES(factor_q(P({1, 0, 0, 0, 0, 0, 0, 1})), std::invalid_argument,
                         Message("degree cap"));
}

TEST_CASE("factorization splits quartics and quintics without rational roots")
{
    // t^4 + t^2 + 1 = (t^2 - t + 1)(t^2 + t + 1)
    const auto quartic = factor_q(P({1, 0, 1, 0, 1}));
    CHECK(quartic.unit == rat(1));
    REQUIRE(quartic.factors.size() == 2);
    CHECK(quartic.factors[0] == QFactor{P({1, -1, 1}), 1});
    CHECK(quartic.factors[1] == QFactor{P({1, 1, 1}), 1});

    // t^5 + t^4 + 1 = (t^2 + t + 1)(t^3 - t + 1)
    const auto quintic = factor_q(P({1, 0, 0, 0, 1, 1}));
    REQUIRE(quintic.factors.size() == 2);
    CHECK(quintic.factors[0] == QFactor{P({1, 1, 1}), 1});
    CHECK(quintic.factors[1] == QFactor{P({1, -1, 0, 1}), 1});

    CHECK(is_irreducible_q(P({1, 0, 0, 0, 1})));     // t^4 + 1
    CHECK(is_irreducible_q(P({1, 0, 0, 1, 0, 0, 1})));  // t^6 + t^3 + 1
    CHECK_FALSE(is_irreducible_q(P({1, 0, 1, 0, 1})));
    CHECK_FALSE(is_irreducible_q(P({5})));
}

TEST_CASE("factorization reconstructs randomized products of small irreducibles")
{
    const std::vector<Poly<Rational>> pool = {
        P({0, 1}),     P({-1, 1}),   P({1, 1}),       P({2, 1}),    P({-1, 2}),
        P({1, 0, 1}),  P({1, 1, 1}), P({-2, 0, 1}),   P({-3, 0, 2}),
        P({-2, 0, 0, 1}), P({1, 1, 0, 1}),
    };
    const std::vector<Rational> units = {rat(1), rat(-1), rat(2), rat(-3), rat(1, 2), rat(-5, 3)};

    std::mt19937 rng(20260823);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> upick(0, units.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);

    for (int trial = 0; trial < 80; ++trial) {
        std::map<std::vector<Rational>, int> expected;
        Poly<Rational> product{{units[upick(rng)]}};
        int degree = 0;
        for (int k = count(rng); k > 0; --k) {
            const auto& f = pool[pick(rng)];
            if (degree + f.degree() > 6)
                continue;
            degree += f.degree();
            product = product * f;
            ++expected[f.c];
        }
        if (degree == 0)
            continue;

        const auto fac = factor_q(product);
        CHECK(expand(fac) == product);

        std::map<std::vector<Rational>, int> got;
        for (const auto& [factor, mult] : fac.factors) {
            got[factor.c] = mult;
            CHECK(is_irreducible_q(factor));  // second pass over each reported factor
            if (factor.degree() >= 2)
                CHECK_FALSE(has_rational_root(factor));
        }
        CHECK(got == expected);
    }
}

TEST_CASE("low-degree irreducibility matches the rational root screen")
{
    std::mt19937 rng(19);
    for (int trial = 0; trial < 120; ++trial) {
        const auto p = random_poly(rng, 2 + trial % 2, -6, 6);
        CHECK(is_irreducible_q(p) == !has_rational_root(p));
    }
}

TEST_CASE("number field arithmetic in Q[t]/(m)")
{
    const auto m = P({1, 1, 1});  // t^2 + t + 1
    const auto w = NumberFieldElement::generator(m);
    const auto one = NumberFieldElement::from_rational(m, rat(1));

    CHECK(w * w * w == one);                 // a cube root of unity
    CHECK(w * w == -one - w);                // t^2 = -1 - t mod m
    CHECK(w.inverse() == -one - w);          // 1/t = t^2 mod m
    CHECK(w * w.inverse() == one);
    CHECK((one + w) / w == -w);
    CHECK(is_zero(evaluate_in_field(m, w)));
    CHECK(is_zero(w - w));
    CHECK(one_like(w) == one);
    CHECK(zero_like(w) == w.lift(rat(0)));
    CHECK(exact_div(one + one, one + one) == one);
    CHECK(to_string(w * w) == "-t - 1");

    // sqrt(2) in Q[t]/(t^2 - 2)
    const auto m2 = P({-2, 0, 1});
    const auto s = NumberFieldElement::generator(m2);
    CHECK(s * s == NumberFieldElement::from_rational(m2, rat(2)));
    CHECK(s.inverse() == NumberFieldElement(m2, P({0, 1}) * Poly<Rational>{{rat(1, 2)}}));
    CHECK(evaluate_in_field(P({-2, 0, 1}), s) == s.lift(rat(0)));

    // a degree-1 modulus makes the field plain Q: t = 2 mod (t - 2)
    const auto m1 = P({-2, 1});
    CHECK(NumberFieldElement::generator(m1) == NumberFieldElement::from_rational(m1, rat(2)));
    const auto x = NumberFieldElement::from_rational(m1, rat(5, 3));
    CHECK(x + NumberFieldElement::generator(m1) == NumberFieldElement::from_rational(m1, rat(11, 3)));
    CHECK(x.field_degree() == 1);
    CHECK(w.field_degree() == 2);

    // moduli are normalized to monic form before use
    CHECK(NumberFieldElement::generator(P({2, 2})) ==
          NumberFieldElement::from_rational(P({1, 1}), rat(-1)));
}

TEST_CASE("number field construction rejects bad moduli and mixed fields")
{
    const auto m = P({1, 1, 1});
    const auto w = NumberFieldElement::generator(m);
    const auto s = NumberFieldElement::generator(P({-2, 0, 1}));

    CHECK_THROWS_MATCHES(NumberFieldElement::generator(P({-1, 0, 1})), std::invalid_argument,
                         Message("reducible modulus"));
    CHECK_THROWS_MATCHES(NumberFieldElement::generator(P({1, 0, 0, 0, 0, 0, 0, 1})),
                         std::invalid_argument, Message("degree cap"));
    CHECK_THROWS_MATCHES(NumberFieldElement::generator(P({3})), std::invalid_argument,
                         Message("number field modulus must have degree >= 1"));
    CHECK_THROWS_MATCHES(w + s, std::invalid_argument, Message("mixed number fields"));
    CHECK_THROWS_MATCHES(w * s, std::invalid_argument, Message("mixed number fields"));
    CHECK_THROWS_MATCHES(w.lift(rat(0)).inverse(), std::invalid_argument,
                         Message("division by zero in number field"));
}

TEST_CASE("polynomial algorithms run over number field coefficients")
{
    const auto m = P({1, 1, 1});
    const auto w = NumberFieldElement::generator(m);
    const auto one = w.lift(rat(1));
    const auto two = w.lift(rat(2));

    // gcd of (x - w)(x + 1) and (x - w)(x + 2) over Q(w)[x]
    using PF = Poly<NumberFieldElement>;
    const PF common{{-w, one}};
    const PF left = common * PF{{one, one}};
    const PF right = common * PF{{two, one}};
    CHECK(poly_gcd(left, right) == common);
    CHECK(squarefree_part(common * common * PF{{one, one}}) == common * PF{{one, one}});
    CHECK(evaluate(left, w) == w.lift(rat(0)));

    const auto [g, u, v] = extended_gcd(left, right);
    CHECK(u * left + v * right == g);
    CHECK(g == common);
}
