#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blowup7/checked_int.hpp"

namespace blowup7 {

/// A divisor class a*H - sum_i b_i*E_i on the blow-up of P^2 at r points,
/// written against the basis {H, E_1, ..., E_r} of the Picard lattice.
/// Effective plane curves then carry b_i >= 0; the exceptional curve E_i
/// itself is (0; ..., b_i = -1, ...).
struct DivisorClass {
    std::int64_t h = 0;               // coefficient of H
    std::vector<std::int64_t> b;      // subtracted multiplicities at E_1..E_r

    DivisorClass() = default;
    DivisorClass(std::int64_t a, std::vector<std::int64_t> mults)
        : h(a), b(std::move(mults))
    {
        if (b.empty())
            throw std::invalid_argument("divisor class needs r >= 1");
    }

    int rank() const { return static_cast<int>(b.size()); }

    bool operator==(const DivisorClass&) const = default;

    DivisorClass operator+(const DivisorClass& o) const
    {
        require_same_rank(o);
        DivisorClass r = *this;
        r.h = checked_add(r.h, o.h);
        for (std::size_t i = 0; i < b.size(); ++i)
            r.b[i] = checked_add(r.b[i], o.b[i]);
        return r;
    }

    DivisorClass operator-(const DivisorClass& o) const
    {
        require_same_rank(o);
        DivisorClass r = *this;
        r.h = checked_sub(r.h, o.h);
        for (std::size_t i = 0; i < b.size(); ++i)
            r.b[i] = checked_sub(r.b[i], o.b[i]);
        return r;
    }

    DivisorClass operator-() const
    {
        DivisorClass r = *this;
        r.h = checked_sub(0, r.h);
        for (auto& v : r.b)
            v = checked_sub(0, v);
        return r;
    }

    void require_same_rank(const DivisorClass& o) const
    {
        if (b.size() != o.b.size())
            throw std::invalid_argument("incompatible lattice ranks");
    }
};

/// Intersection pairing of signature (1, -1, ..., -1):
/// (a1; b1) . (a2; b2) = a1*a2 - sum_i b1_i*b2_i.
inline std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2)
{
    d1.require_same_rank(d2);
    std::int64_t acc = checked_mul(d1.h, d2.h);
    for (std::size_t i = 0; i < d1.b.size(); ++i)
        acc = checked_sub(acc, checked_mul(d1.b[i], d2.b[i]));
    return acc;
}

inline std::int64_t self_intersection(const DivisorClass& d)
{
    return intersect(d, d);
}

/// K = -3H + sum E_i, i.e. (a; b) = (-3; -1, ..., -1) in the stored sign
/// convention.
inline DivisorClass canonical_class(int r)
{
    if (r < 1)
        throw std::invalid_argument("canonical_class needs r >= 1");
    return DivisorClass(-3, std::vector<std::int64_t>(static_cast<std::size_t>(r), -1));
}

inline std::int64_t k_degree(const DivisorClass& d)
{
    return intersect(d, canonical_class(d.rank()));
}

/// Arithmetic genus by adjunction, g = (D.D + D.K)/2 + 1.  Agrees identically
/// with the binomial form (a-1)(a-2)/2 - sum b_i(b_i-1)/2, which is asserted.
/// Negative values are legal for lattice elements that are not curve classes.
inline std::int64_t genus(const DivisorClass& d)
{
    const std::int64_t dd = self_intersection(d);
    const std::int64_t dk = k_degree(d);
    const std::int64_t sum = checked_add(dd, dk);
    assert(sum % 2 == 0);
    const std::int64_t g = sum / 2 + 1;

    std::int64_t binom = checked_mul(checked_sub(d.h, 1), checked_sub(d.h, 2)) / 2;
    for (const auto bi : d.b)
        binom = checked_sub(binom, checked_mul(bi, checked_sub(bi, 1)) / 2);
    assert(binom == g);
    (void)binom;
    return g;
}

/// Riemann-Roch lower bound for dim |D|:
/// (a+1)(a+2)/2 - 1 - sum b_i(b_i+1)/2.
inline std::int64_t expected_dimension(const DivisorClass& d)
{
    std::int64_t v = checked_sub(checked_mul(checked_add(d.h, 1), checked_add(d.h, 2)) / 2, 1);
    for (const auto bi : d.b)
        v = checked_sub(v, checked_mul(bi, checked_add(bi, 1)) / 2);
    return v;
}

struct SurfaceInvariants {
    std::int64_t k_squared = 0;
    std::int64_t chi_top = 0;
    std::int64_t b2 = 0;
    std::int64_t b1 = 0;
    std::int64_t q = 0;
    std::int64_t chi_structure = 0;

    bool operator==(const SurfaceInvariants&) const = default;
};

/// Numeric invariants of the blow-up of P^2 at r points (r = 0 is P^2
/// itself).  The Noether identity 12*chi(O) = chi_top + K^2 holds by
/// construction and is asserted.
inline SurfaceInvariants surface_invariants(int r)
{
    if (r < 0)
        throw std::invalid_argument("surface_invariants needs r >= 0");
    SurfaceInvariants s;
    s.k_squared = 9 - r;
    s.chi_top = 3 + r;
    s.b2 = r + 1;
    s.b1 = 0;
    s.q = 0;
    s.chi_structure = 1;
    assert(12 * s.chi_structure == s.chi_top + s.k_squared);
    assert(s.b2 - 2 * s.b1 == s.chi_top - 2);
    return s;
}

// --- text form -------------------------------------------------------------

/// "a;b1,b2,...,br", e.g. "4;2,1,1,1,1,1,1".
inline std::string to_string(const DivisorClass& d)
{
    std::ostringstream os;
    os << d.h << ';';
    for (std::size_t i = 0; i < d.b.size(); ++i) {
        if (i)
            os << ',';
        os << d.b[i];
    }
    return os.str();
}

inline DivisorClass parse_divisor_class(const std::string& text)
{
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("malformed divisor class (missing ';'): \"" + text + "\"");
    const auto parse_int = [&](const std::string& tok) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer \"" + tok + "\" in divisor class");
        }
        if (used != tok.size())
            throw std::invalid_argument("malformed integer \"" + tok + "\" in divisor class");
        return v;
    };
    const std::int64_t a = parse_int(text.substr(0, semi));
    std::vector<std::int64_t> b;
    std::string rest = text.substr(semi + 1);
    std::size_t pos = 0;
    while (true) {
        const auto comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        b.push_back(parse_int(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return DivisorClass(a, std::move(b));
}

/// Deterministic order used for enumeration output: by a, then by the
/// multiset of b sorted descending, then lexicographically on raw b.
inline bool enumeration_order(const DivisorClass& x, const DivisorClass& y)
{
    if (x.h != y.h)
        return x.h < y.h;
    auto xs = x.b, ys = y.b;
    std::sort(xs.rbegin(), xs.rend());
    std::sort(ys.rbegin(), ys.rend());
    if (xs != ys)
        return xs < ys;
    return x.b < y.b;
}

}  // namespace blowup7
