#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "blowup7/factorization.hpp"
#include "blowup7/polynomial.hpp"
#include "blowup7/rational.hpp"

namespace blowup7 {

/// Element of Q[t]/(m(t)) for a monic irreducible modulus m of degree <= 6.
/// Degree-1 moduli give plain rationals, which lets every algebraic point
/// cluster use one representation.  The public constructors certify the
/// modulus once; arithmetic stays on the certified fast path.
class NumberFieldElement {
public:
    NumberFieldElement(Poly<Rational> modulus, Poly<Rational> value)
        : modulus_(certify(std::move(modulus)))
    {
        value_ = divmod(value, modulus_).second;
    }

    static NumberFieldElement from_rational(const Poly<Rational>& modulus, const Rational& v)
    {
        return NumberFieldElement(modulus, Poly<Rational>{{v}});
    }

    static NumberFieldElement generator(const Poly<Rational>& modulus)
    {
        return NumberFieldElement(modulus, Poly<Rational>{{Rational(0), Rational(1)}});
    }

    const Poly<Rational>& modulus() const { return modulus_; }
    const Poly<Rational>& value() const { return value_; }
    int field_degree() const { return modulus_.degree(); }

    /// Rational constant in this element's field, skipping recertification.
    NumberFieldElement lift(const Rational& v) const
    {
        return NumberFieldElement(unchecked{}, modulus_, Poly<Rational>{{v}});
    }

    bool operator==(const NumberFieldElement&) const = default;

    NumberFieldElement operator+(const NumberFieldElement& o) const
    {
        require_same_field(o);
        return NumberFieldElement(unchecked{}, modulus_, value_ + o.value_);
    }
    NumberFieldElement operator-(const NumberFieldElement& o) const
    {
        require_same_field(o);
        return NumberFieldElement(unchecked{}, modulus_, value_ - o.value_);
    }
    NumberFieldElement operator-() const
    {
        return NumberFieldElement(unchecked{}, modulus_, -value_);
    }
    NumberFieldElement operator*(const NumberFieldElement& o) const
    {
        require_same_field(o);
        return NumberFieldElement(unchecked{}, modulus_, divmod(value_ * o.value_, modulus_).second);
    }

    NumberFieldElement inverse() const
    {
        if (is_zero(value_))
            throw std::invalid_argument("division by zero in number field");
        // u*value + v*modulus = 1 since the modulus is irreducible
        const auto [g, u, v] = extended_gcd(value_, modulus_);
        (void)v;
        if (g.degree() != 0)
            throw std::logic_error("modulus not irreducible after all");
        return NumberFieldElement(unchecked{}, modulus_, divmod(u, modulus_).second);
    }

    NumberFieldElement operator/(const NumberFieldElement& o) const
    {
        return *this * o.inverse();
    }

private:
    struct unchecked {};
    NumberFieldElement(unchecked, Poly<Rational> modulus, Poly<Rational> value)
        : modulus_(std::move(modulus)), value_(std::move(value))
    {
        value_.trim();
    }

    static Poly<Rational> certify(Poly<Rational> modulus)
    {
        if (modulus.degree() < 1)
            throw std::invalid_argument("number field modulus must have degree >= 1");
        if (modulus.degree() > 6)
            throw std::invalid_argument("degree cap");
        Poly<Rational> m = monic(std::move(modulus));
        if (m.degree() > 1 && !is_irreducible_q(m))
            throw std::invalid_argument("reducible modulus");
        return m;
    }

    void require_same_field(const NumberFieldElement& o) const
    {
        if (modulus_ != o.modulus_)
            throw std::invalid_argument("mixed number fields");
    }

    Poly<Rational> modulus_;
    Poly<Rational> value_;
};

inline bool is_zero(const NumberFieldElement& v) { return is_zero(v.value()); }
inline NumberFieldElement zero_like(const NumberFieldElement& v) { return v.lift(Rational(0)); }
inline NumberFieldElement one_like(const NumberFieldElement& v) { return v.lift(Rational(1)); }
inline NumberFieldElement exact_div(const NumberFieldElement& a, const NumberFieldElement& b)
{
    return a / b;
}

/// Horner evaluation of a rational-coefficient polynomial at a field element.
inline NumberFieldElement evaluate_in_field(const Poly<Rational>& p, const NumberFieldElement& x)
{
    NumberFieldElement acc = x.lift(Rational(0));
    for (std::size_t i = p.c.size(); i-- > 0;)
        acc = acc * x + x.lift(p.c[i]);
    return acc;
}

inline std::string to_string(const NumberFieldElement& v)
{
    return to_string(v.value());
}

}  // namespace blowup7
