#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "blowup7/rational.hpp"

namespace blowup7 {

// Coefficient-ring hooks.  Polynomial code never names a concrete ring; it
// builds constants from values it already holds, so rings whose elements
// carry context (number fields) work the same as Rational.
inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational exact_div(const Rational& a, const Rational& b)
{
    if (b.is_zero())
        throw std::invalid_argument("division by zero");
    return a / b;
}

/// Dense univariate polynomial, lowest degree first; trailing zero
/// coefficients are trimmed so the zero polynomial has an empty vector.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim()
    {
        while (!c.empty() && is_zero(c.back()))
            c.pop_back();
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool operator==(const Poly&) const = default;

    const K& leading() const
    {
        if (c.empty())
            throw std::invalid_argument("zero polynomial has no leading coefficient");
        return c.back();
    }
};

template <class K>
bool is_zero(const Poly<K>& p)
{
    return p.c.empty();
}

template <class K>
Poly<K> zero_like(const Poly<K>&)
{
    return Poly<K>{};
}

template <class K>
Poly<K> one_like(const Poly<K>& sample)
{
    if (!sample.c.empty())
        return Poly<K>{{one_like(sample.c.front())}};
    if constexpr (std::is_default_constructible_v<K>)
        return Poly<K>{{one_like(K{})}};
    else
        throw std::invalid_argument("cannot build a unit without a coefficient for context");
}

template <class K>
Poly<K> operator+(const Poly<K>& p, const Poly<K>& q)
{
    std::vector<K> out;
    const std::size_t n = std::max(p.c.size(), q.c.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < p.c.size() && i < q.c.size())
            out.push_back(p.c[i] + q.c[i]);
        else if (i < p.c.size())
            out.push_back(p.c[i]);
        else
            out.push_back(q.c[i]);
    }
    return Poly<K>{std::move(out)};
}

template <class K>
Poly<K> operator-(const Poly<K>& p)
{
    std::vector<K> out;
    out.reserve(p.c.size());
    for (const auto& v : p.c)
        out.push_back(-v);
    return Poly<K>{std::move(out)};
}

template <class K>
Poly<K> operator-(const Poly<K>& p, const Poly<K>& q)
{
    return p + (-q);
}

template <class K>
Poly<K> operator*(const Poly<K>& p, const Poly<K>& q)
{
    if (p.c.empty() || q.c.empty())
        return Poly<K>{};
    std::vector<K> out;
    out.reserve(p.c.size() + q.c.size() - 1);
    const K zero = zero_like(p.c.front());
    out.assign(p.c.size() + q.c.size() - 1, zero);
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (std::size_t j = 0; j < q.c.size(); ++j)
            out[i + j] = out[i + j] + p.c[i] * q.c[j];
    return Poly<K>{std::move(out)};
}

template <class K>
Poly<K> operator*(const K& s, const Poly<K>& p)
{
    std::vector<K> out;
    out.reserve(p.c.size());
    for (const auto& v : p.c)
        out.push_back(s * v);
    return Poly<K>{std::move(out)};
}

/// Coefficient of x^i, defaulting to zero beyond the stored length.
template <class K>
K coefficient(const Poly<K>& p, std::size_t i, const K& context)
{
    if (i < p.c.size())
        return p.c[i];
    return zero_like(context);
}

template <class K>
K evaluate(const Poly<K>& p, const K& x)
{
    K acc = zero_like(x);
    for (std::size_t i = p.c.size(); i-- > 0;)
        acc = acc * x + p.c[i];
    return acc;
}

template <class K>
Poly<K> derivative(const Poly<K>& p)
{
    if (p.c.size() <= 1)
        return Poly<K>{};
    std::vector<K> out;
    out.reserve(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) {
        K term = p.c[i];
        for (std::size_t k = 1; k < i; ++k)
            term = term + p.c[i];
        out.push_back(term);  // i * c_i without requiring an integer action
    }
    return Poly<K>{std::move(out)};
}

/// Quotient and remainder over a coefficient field.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& p, const Poly<K>& q)
{
    if (is_zero(q))
        throw std::invalid_argument("polynomial division by zero");
    if (p.degree() < q.degree())
        return {Poly<K>{}, p};
    const K zero = zero_like(q.leading());
    std::vector<K> rem = p.c;
    std::vector<K> quot(static_cast<std::size_t>(p.degree() - q.degree() + 1), zero);
    for (int d = p.degree(); d >= q.degree();) {
        const K factor = exact_div(rem[static_cast<std::size_t>(d)], q.leading());
        quot[static_cast<std::size_t>(d - q.degree())] = factor;
        for (std::size_t i = 0; i < q.c.size(); ++i) {
            const std::size_t pos = static_cast<std::size_t>(d - q.degree()) + i;
            rem[pos] = rem[pos] - factor * q.c[i];
        }
        rem[static_cast<std::size_t>(d)] = zero;  // cancel exactly
        --d;
        while (d >= 0 && is_zero(rem[static_cast<std::size_t>(d)]) && d >= q.degree())
            --d;
    }
    return {Poly<K>{std::move(quot)}, Poly<K>{std::move(rem)}};
}

/// Exact division; throws if the division leaves a remainder.
template <class K>
Poly<K> exact_div(const Poly<K>& p, const Poly<K>& q)
{
    auto [quot, rem] = divmod(p, q);
    if (!is_zero(rem))
        throw std::invalid_argument("inexact polynomial division");
    return quot;
}

template <class K>
Poly<K> monic(const Poly<K>& p)
{
    if (is_zero(p))
        return p;
    const K inv = exact_div(one_like(p.leading()), p.leading());
    return inv * p;
}

/// Monic gcd by the Euclidean algorithm over a coefficient field.
template <class K>
Poly<K> poly_gcd(const Poly<K>& p, const Poly<K>& q)
{
    if (is_zero(p) && is_zero(q))
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly<K> a = p, b = q;
    while (!is_zero(b)) {
        auto [quot, rem] = divmod(a, b);
        (void)quot;
        a = std::move(b);
        b = monic(rem);  // normalize each step to keep coefficients tame
    }
    return monic(a);
}

/// Extended Euclid: returns (g, u, v) with u*p + v*q = g, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> extended_gcd(const Poly<K>& p, const Poly<K>& q)
{
    if (is_zero(p) && is_zero(q))
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly<K> r0 = p, r1 = q;
    const Poly<K> one = one_like(is_zero(p) ? q : p);
    Poly<K> s0 = one, s1{};
    Poly<K> t0{}, t1 = one;
    while (!is_zero(r1)) {
        auto [quot, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly<K> s2 = s0 - quot * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<K> t2 = t0 - quot * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // scale to make the gcd monic
    const K lead = r0.leading();
    const K inv = exact_div(one_like(lead), lead);
    return {inv * r0, inv * s0, inv * t0};
}

/// Yun's square-free decomposition over a field of characteristic zero:
/// p = unit * prod g_i^i with the g_i pairwise coprime and square-free.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p)
{
    if (is_zero(p))
        throw std::invalid_argument("square-free decomposition of zero");
    std::vector<std::pair<Poly<K>, int>> out;
    if (p.degree() == 0)
        return out;
    const Poly<K> pm = monic(p);
    const Poly<K> d = poly_gcd(pm, derivative(pm));
    if (d.degree() == 0) {
        out.emplace_back(pm, 1);
        return out;
    }
    Poly<K> c = exact_div(pm, d);
    Poly<K> w = exact_div(derivative(pm), d);
    int i = 1;
    while (c.degree() > 0) {
        const Poly<K> y = w - derivative(c);
        if (is_zero(y)) {
            // the remaining part is the top-multiplicity factor
            out.emplace_back(monic(c), i);
            break;
        }
        const Poly<K> g = poly_gcd(c, y);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        c = exact_div(c, g);
        w = exact_div(y, g);
        ++i;
    }
    return out;
}

/// Product of the distinct irreducible factors, monic.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p)
{
    Poly<K> out = one_like(p);
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        out = out * factor;
    return out;
}

/// Lagrange interpolation through (x_i, y_i) with distinct x_i.
inline Poly<Rational> interpolate(const std::vector<std::pair<Rational, Rational>>& points)
{
    Poly<Rational> acc{};
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly<Rational> basis{{Rational(1)}};
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * Poly<Rational>{{-points[j].first, Rational(1)}};
            denom = denom * (points[i].first - points[j].first);
        }
        acc = acc + exact_div(points[i].second, denom) * basis;
    }
    return acc;
}

/// Determinant by fraction-free (Bareiss) elimination; valid over any
/// integral domain with exact division.
template <class T>
T determinant(std::vector<std::vector<T>> m, const T& one)
{
    const std::size_t n = m.size();
    if (n == 0)
        return one;
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant needs a square matrix");
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m[pivot][k]))
            ++pivot;
        if (pivot == n)
            return zero_like(one);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = zero_like(one);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <class T>
T ring_pow(const T& base, int e, const T& one)
{
    T acc = one;
    for (int i = 0; i < e; ++i)
        acc = acc * base;
    return acc;
}

/// Sylvester resultant of p and q as polynomials in the distinguished
/// variable, with coefficients in any exact integral domain T.  Conventions
/// for the degenerate shapes: Res(0, q) = 0, Res(c, q) = c^deg(q) for a
/// constant c, Res(c, d) = 1 for two nonzero constants; both zero is an
/// error.  The determinant vanishes at a specialization iff the specialized
/// pair has a common root or both leading coefficients vanish there.
template <class T>
T resultant(const Poly<T>& p, const Poly<T>& q)
{
    if (is_zero(p) && is_zero(q))
        throw std::invalid_argument("resultant of two zero polynomials");
    if (is_zero(p))
        return zero_like(q.leading());
    if (is_zero(q))
        return zero_like(p.leading());
    const T one = one_like(p.leading());
    const int dp = p.degree(), dq = q.degree();
    if (dp == 0 && dq == 0)
        return one;
    if (dp == 0)
        return ring_pow(p.c.front(), dq, one);
    if (dq == 0)
        return ring_pow(q.c.front(), dp, one);

    const std::size_t n = static_cast<std::size_t>(dp + dq);
    const T zero = zero_like(one);
    std::vector<std::vector<T>> m(n, std::vector<T>(n, zero));
    // dq rows of p's coefficients, highest degree first, then dp rows of q's
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
                p.c[static_cast<std::size_t>(dp - k)];
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k)
            m[static_cast<std::size_t>(dq + row)][static_cast<std::size_t>(row + k)] =
                q.c[static_cast<std::size_t>(dq - k)];
    return determinant(std::move(m), one);
}

inline std::string to_string(const Poly<Rational>& p, const std::string& var = "t")
{
    if (is_zero(p))
        return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const Rational& v = p.c[static_cast<std::size_t>(d)];
        if (v.is_zero())
            continue;
        const bool negative = v < Rational(0);
        const Rational mag = negative ? -v : v;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit_coeff = mag == Rational(1) && d > 0;
        if (!unit_coeff)
            out += to_string(mag);
        if (d > 0) {
            if (!unit_coeff)
                out += "*";
            out += var;
            if (d > 1)
                out += "^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace blowup7
