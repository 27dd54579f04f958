#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blowup7/polynomial.hpp"
#include "blowup7/rational.hpp"

namespace blowup7 {

namespace detail {

/// Split p = content * primitive with the primitive part an integer-
/// coefficient polynomial with positive leading coefficient.
inline std::pair<Rational, Poly<Rational>> content_and_primitive(const Poly<Rational>& p)
{
    if (is_zero(p))
        throw std::invalid_argument("content of the zero polynomial");
    Integer den_lcm = 1;
    for (const auto& v : p.c)
        den_lcm = boost::multiprecision::lcm(den_lcm, Integer(boost::multiprecision::denominator(v)));
    Integer num_gcd = 0;
    for (const auto& v : p.c) {
        const Rational scaled = v * Rational(den_lcm);
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(boost::multiprecision::numerator(scaled)));
    }
    Rational content(num_gcd, den_lcm);
    if (p.leading() < Rational(0))
        content = -content;
    std::vector<Rational> prim;
    prim.reserve(p.c.size());
    for (const auto& v : p.c)
        prim.push_back(v / content);
    return {content, Poly<Rational>{std::move(prim)}};
}

inline std::vector<Integer> positive_divisors(const Integer& n)
{
    Integer m = n < 0 ? Integer(-n) : n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            if (d * d != m)
                out.push_back(m / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool has_integer_coefficients(const Poly<Rational>& p)
{
    for (const auto& v : p.c)
        if (boost::multiprecision::denominator(v) != 1)
            return false;
    return true;
}

/// One nontrivial primitive integer factor of a square-free primitive
/// integer polynomial, by Kronecker's method: a degree-d factor g satisfies
/// g(x) | p(x) at every integer x, so interpolate all divisor combinations
/// through d+1 points and test divisibility.  Returns the zero polynomial
/// when p is irreducible.
inline Poly<Rational> kronecker_factor(const Poly<Rational>& p)
{
    const int n = p.degree();
    // Sample a pool of integer points once and rank them by how many
    // divisors their value has; the trial at degree d then interpolates
    // through the d+1 cheapest points, which keeps the combination count
    // small even when some evaluations are highly composite.
    struct Sample {
        Rational x;
        std::vector<Integer> signed_divisors;
    };
    std::vector<Sample> pool;
    const int want = n / 2 + 4;
    for (Integer x = 0; static_cast<int>(pool.size()) < want;
         x = x <= 0 ? Integer(1 - x) : Integer(-x)) {
        const Rational value = evaluate(p, Rational(x));
        if (value.is_zero())
            return Poly<Rational>{{Rational(-x), Rational(1)}};  // integer root t - x
        std::vector<Integer> signed_divisors;
        for (const auto& div : positive_divisors(Integer(boost::multiprecision::numerator(value)))) {
            signed_divisors.push_back(div);
            signed_divisors.push_back(-div);
        }
        pool.push_back({Rational(x), std::move(signed_divisors)});
    }
    std::sort(pool.begin(), pool.end(), [](const Sample& a, const Sample& b) {
        if (a.signed_divisors.size() != b.signed_divisors.size())
            return a.signed_divisors.size() < b.signed_divisors.size();
        return a.x < b.x;
    });
    for (int d = 1; d <= n / 2; ++d) {
        const std::size_t m = static_cast<std::size_t>(d) + 1;
        std::vector<std::size_t> odometer(m, 0);
        while (true) {
            std::vector<std::pair<Rational, Rational>> sample;
            for (std::size_t i = 0; i < m; ++i)
                sample.emplace_back(pool[i].x, Rational(pool[i].signed_divisors[odometer[i]]));
            const Poly<Rational> candidate = interpolate(sample);
            if (candidate.degree() == d && candidate.leading() > Rational(0) &&
                has_integer_coefficients(candidate)) {
                const auto prim = content_and_primitive(candidate).second;
                if (prim.degree() == d && is_zero(divmod(p, prim).second))
                    return prim;
            }
            std::size_t pos = 0;
            while (pos < m && ++odometer[pos] == pool[pos].signed_divisors.size()) {
                odometer[pos] = 0;
                ++pos;
            }
            if (pos == m)
                break;
        }
    }
    return Poly<Rational>{};
}

/// Complete split of a square-free primitive integer polynomial into
/// primitive irreducible factors with positive leading coefficients.
inline std::vector<Poly<Rational>> split_primitive(const Poly<Rational>& p)
{
    if (p.degree() <= 1)
        return {p};
    const Poly<Rational> g = kronecker_factor(p);
    if (is_zero(g))
        return {p};  // irreducible
    const Poly<Rational> rest = content_and_primitive(exact_div(p, g)).second;
    auto out = split_primitive(g);
    auto tail = split_primitive(rest);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

inline bool factor_order(const Poly<Rational>& a, const Poly<Rational>& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i])
            return a.c[i] < b.c[i];
    return false;
}

}  // namespace detail

struct QFactor {
    Poly<Rational> factor;  // primitive over the integers, positive leading coefficient
    int multiplicity = 1;

    bool operator==(const QFactor&) const = default;
};

struct QFactorization {
    Rational unit;                 // p == unit * prod factor^multiplicity
    std::vector<QFactor> factors;  // irreducible, canonically ordered
};

/// Complete factorization over the rationals for degree <= 6: square-free
/// decomposition, then Kronecker trial factorization of each part (degree-1
/// trials subsume rational-root extraction).
inline QFactorization factor_q(const Poly<Rational>& p)
{
    if (is_zero(p))
        throw std::invalid_argument("cannot factor the zero polynomial");
    if (p.degree() > 6)
        throw std::invalid_argument("degree cap");
    QFactorization out;
    if (p.degree() == 0) {
        out.unit = p.c.front();
        return out;
    }
    auto [content, primitive] = detail::content_and_primitive(p);
    out.unit = content * primitive.leading();
    const Poly<Rational> pm = monic(primitive);
    for (const auto& [part, mult] : squarefree_decomposition(pm)) {
        auto [part_content, part_primitive] = detail::content_and_primitive(part);
        out.unit = out.unit * ring_pow(part_content, mult, Rational(1));
        for (auto& factor : detail::split_primitive(part_primitive))
            out.factors.push_back({std::move(factor), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const QFactor& a, const QFactor& b) {
                  return detail::factor_order(a.factor, b.factor);
              });
    return out;
}

inline bool is_irreducible_q(const Poly<Rational>& p)
{
    if (p.degree() < 1)
        return false;
    const auto fac = factor_q(p);
    return fac.factors.size() == 1 && fac.factors.front().multiplicity == 1;
}

/// Rebuild unit * prod factor^multiplicity; used by tests and consumers to
/// confirm factorizations exactly.
inline Poly<Rational> expand(const QFactorization& fac)
{
    Poly<Rational> acc{{fac.unit}};
    for (const auto& [factor, mult] : fac.factors)
        for (int i = 0; i < mult; ++i)
            acc = acc * factor;
    return acc;
}

}  // namespace blowup7
