#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blowup7/polynomial.hpp"
#include "blowup7/rational.hpp"

namespace blowup7 {

/// Ternary quadratic form F(x) = x^T * gram * x over the rationals.
struct TernaryQuadraticForm {
    std::array<std::array<Rational, 3>, 3> gram{};

    TernaryQuadraticForm() = default;
    explicit TernaryQuadraticForm(std::array<std::array<Rational, 3>, 3> g) : gram(std::move(g))
    {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (gram[i][j] != gram[j][i])
                    throw std::invalid_argument("Gram matrix must be symmetric");
    }

    /// Convenience builder from the coefficients of
    /// c00*x0^2 + c11*x1^2 + c22*x2^2 + c01*x0*x1 + c02*x0*x2 + c12*x1*x2.
    static TernaryQuadraticForm from_coefficients(const Rational& c00, const Rational& c11,
                                                  const Rational& c22, const Rational& c01,
                                                  const Rational& c02, const Rational& c12)
    {
        const Rational half(1, 2);
        TernaryQuadraticForm f;
        f.gram = {{{c00, half * c01, half * c02},
                   {half * c01, c11, half * c12},
                   {half * c02, half * c12, c22}}};
        return f;
    }

    bool operator==(const TernaryQuadraticForm&) const = default;

    bool is_zero_form() const
    {
        for (const auto& row : gram)
            for (const auto& v : row)
                if (!v.is_zero())
                    return false;
        return true;
    }
};

/// Evaluate the form at coordinates in any commutative ring K; `lift` embeds
/// a Rational into K (for number fields this carries the modulus context).
template <class K, class Lift>
K evaluate_form(const TernaryQuadraticForm& f, const std::array<K, 3>& x, Lift lift)
{
    K acc = lift(Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            acc = acc + lift(f.gram[i][j]) * x[i] * x[j];
    return acc;
}

inline Rational evaluate_form(const TernaryQuadraticForm& f, const std::array<Rational, 3>& x)
{
    return evaluate_form(f, x, [](const Rational& v) { return v; });
}

template <class K>
using Matrix3 = std::array<std::array<K, 3>, 3>;

template <class K>
bool matrix_is_zero(const Matrix3<K>& m)
{
    for (const auto& row : m)
        for (const auto& v : row)
            if (!is_zero(v))
                return false;
    return true;
}

/// Cofactor-expansion determinant; exact over any commutative ring.
template <class K>
K det3(const Matrix3<K>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Adjugate (transposed cofactor matrix): m * adjugate3(m) = det3(m) * I.
template <class K>
Matrix3<K> adjugate3(const Matrix3<K>& m)
{
    Matrix3<K> a = m;
    a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    a[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    a[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    a[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    a[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return a;
}

/// Exact rank over an integral domain: rank 2 means det = 0 with a nonzero
/// 2x2 minor, rank 1 means all 2x2 minors vanish on a nonzero matrix.
template <class K>
int rank3(const Matrix3<K>& m)
{
    if (!is_zero(det3(m)))
        return 3;
    if (!matrix_is_zero(adjugate3(m)))
        return 2;
    if (!matrix_is_zero(m))
        return 1;
    return 0;
}

/// Kernel generator of a rank-2 matrix: any nonzero adjugate column.
template <class K>
std::array<K, 3> kernel_line(const Matrix3<K>& m)
{
    const Matrix3<K> a = adjugate3(m);
    for (std::size_t col = 0; col < 3; ++col)
        if (!is_zero(a[0][col]) || !is_zero(a[1][col]) || !is_zero(a[2][col]))
            return {a[0][col], a[1][col], a[2][col]};
    throw std::logic_error("kernel_line called on a matrix of rank below 2");
}

/// Kernel plane of a rank-1 matrix, spanned by two vectors orthogonal to the
/// first nonzero row.
template <class K>
std::pair<std::array<K, 3>, std::array<K, 3>> kernel_plane(const Matrix3<K>& m)
{
    for (const auto& row : m) {
        const K& n0 = row[0];
        const K& n1 = row[1];
        const K& n2 = row[2];
        if (!is_zero(n0))
            return {{-n1, n0, zero_like(n0)}, {-n2, zero_like(n0), n0}};
        if (!is_zero(n1))
            return {{one_like(n1), zero_like(n1), zero_like(n1)}, {zero_like(n1), -n2, n1}};
        if (!is_zero(n2))
            return {{one_like(n2), zero_like(n2), zero_like(n2)},
                    {zero_like(n2), one_like(n2), zero_like(n2)}};
    }
    throw std::logic_error("kernel_plane called on the zero matrix");
}

/// Homogeneous binary form of the given formal degree, stored dehomogenized
/// at u0 = 1.  The deficit (formal degree minus stored degree) records the
/// multiplicity of the root at [0:1].
struct BinaryForm {
    Poly<Rational> dehom;
    int formal_degree = 0;

    BinaryForm() = default;
    BinaryForm(Poly<Rational> p, int degree) : dehom(std::move(p)), formal_degree(degree)
    {
        if (formal_degree < 0)
            throw std::invalid_argument("binary form degree must be nonnegative");
        if (dehom.degree() > formal_degree)
            throw std::invalid_argument("binary form degree overflow");
    }

    bool operator==(const BinaryForm&) const = default;

    bool is_zero_form() const { return is_zero(dehom); }
    int deficit() const { return is_zero(dehom) ? formal_degree : formal_degree - dehom.degree(); }
};

inline std::string to_string(const BinaryForm& f, const std::string& var = "t")
{
    std::string out = to_string(f.dehom, var);
    if (!f.is_zero_form() && f.deficit() > 0)
        out += " (vanishing to order " + std::to_string(f.deficit()) + " at [0:1])";
    return out;
}

}  // namespace blowup7
