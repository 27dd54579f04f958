#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blowup7/factorization.hpp"
#include "blowup7/number_field.hpp"
#include "blowup7/polynomial.hpp"
#include "blowup7/rational.hpp"
#include "blowup7/ternary_form.hpp"

namespace blowup7 {

/// Surface of bidegree (2,2) in P^1 x P^2 cut out by
/// y0^2 F0(x) + y1^2 F1(x) + y0 y1 F2(x) = 0.
struct Surface22 {
    TernaryQuadraticForm f0, f1, f2;

    Surface22(TernaryQuadraticForm a, TernaryQuadraticForm b, TernaryQuadraticForm c)
        : f0(std::move(a)), f1(std::move(b)), f2(std::move(c))
    {
        if (f0.is_zero_form() && f1.is_zero_form() && f2.is_zero_form())
            throw std::invalid_argument("all forms zero");
    }
};

/// Galois orbit of points of P^2: coordinates are polynomials in a root t of
/// the irreducible modulus; degree-1 moduli describe plain rational points.
struct AlgebraicPointCluster {
    Poly<Rational> modulus;                // monic irreducible, degree >= 1
    std::array<Poly<Rational>, 3> coords;  // degree < deg(modulus); first nonzero coordinate is 1

    int degree() const { return modulus.degree(); }
    bool operator==(const AlgebraicPointCluster&) const = default;
};

inline std::string to_string(const AlgebraicPointCluster& c)
{
    std::string out = "[" + to_string(c.coords[0]) + ", " + to_string(c.coords[1]) + ", " +
                      to_string(c.coords[2]) + "]";
    if (c.degree() > 1)
        out += " with " + to_string(c.modulus) + " = 0";
    return out;
}

/// Galois orbit of points of the base P^1, same conventions.
struct FiberPointCluster {
    Poly<Rational> modulus;
    std::array<Poly<Rational>, 2> coords;

    int degree() const { return modulus.degree(); }
    bool operator==(const FiberPointCluster&) const = default;
};

inline std::string to_string(const FiberPointCluster& c)
{
    std::string out = "[" + to_string(c.coords[0]) + ", " + to_string(c.coords[1]) + "]";
    if (c.degree() > 1)
        out += " with " + to_string(c.modulus) + " = 0";
    return out;
}

struct CommonZeros {
    bool shared_component = false;          // two of the forms cut out a common curve
    std::vector<AlgebraicPointCluster> clusters;

    int total_degree() const
    {
        int sum = 0;
        for (const auto& c : clusters)
            sum += c.degree();
        return sum;
    }
};

namespace detail {

inline Poly<Rational> linear_t()
{
    return Poly<Rational>{{Rational(0), Rational(1)}};
}

/// View of a ternary form as a quadratic in x2 over the x0 = 1 chart,
/// with the content data needed for shared-component detection.
struct ChartForm {
    Poly<Rational> a;        // x2^2 coefficient (a constant)
    Poly<Rational> b;        // x2 coefficient, degree <= 1 in s = x1/x0
    Poly<Rational> c;        // x2-free part, degree <= 2 in s
    Poly<Rational> content;  // monic gcd of the nonzero coefficient polynomials
    int deficit = 0;         // power of x0 dividing every coefficient form
};

inline ChartForm chart_form(const TernaryQuadraticForm& f)
{
    const auto& g = f.gram;
    ChartForm out;
    out.a = Poly<Rational>{{g[2][2]}};
    out.b = Poly<Rational>{{Rational(2) * g[0][2], Rational(2) * g[1][2]}};
    out.c = Poly<Rational>{{g[0][0], Rational(2) * g[0][1], g[1][1]}};

    const std::array<std::pair<const Poly<Rational>*, int>, 3> parts = {
        {{&out.a, 0}, {&out.b, 1}, {&out.c, 2}}};
    Poly<Rational> content{};
    int deficit = -1;
    for (const auto& [p, formal] : parts) {
        if (is_zero(*p))
            continue;
        content = is_zero(content) ? monic(*p) : poly_gcd(content, *p);
        const int d = formal - p->degree();
        deficit = deficit < 0 ? d : std::min(deficit, d);
    }
    if (deficit < 0)
        throw std::logic_error("chart form of the zero form");
    out.content = content;
    out.deficit = deficit;
    return out;
}

inline Poly<Poly<Rational>> chart_poly(const ChartForm& f)
{
    return Poly<Poly<Rational>>{{f.c, f.b, f.a}};
}

inline Poly<Poly<Rational>> primitive_chart_poly(const ChartForm& f)
{
    std::vector<Poly<Rational>> coeffs;
    for (const auto* p : {&f.c, &f.b, &f.a})
        coeffs.push_back(is_zero(*p) ? Poly<Rational>{} : exact_div(*p, f.content));
    return Poly<Poly<Rational>>{std::move(coeffs)};
}

inline bool proportional_forms(const TernaryQuadraticForm& f, const TernaryQuadraticForm& g)
{
    Rational ratio(0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Rational& a = f.gram[i][j];
            const Rational& b = g.gram[i][j];
            if (a.is_zero() != b.is_zero())
                return false;
            if (a.is_zero())
                continue;
            const Rational r = b / a;
            if (ratio.is_zero())
                ratio = r;
            else if (r != ratio)
                return false;
        }
    return true;  // both zero forms never reach here
}

/// Nonzero forms with proportional duplicates removed.
inline std::vector<TernaryQuadraticForm> distinct_forms(const Surface22& s)
{
    std::vector<TernaryQuadraticForm> out;
    for (const auto* f : {&s.f0, &s.f1, &s.f2}) {
        if (f->is_zero_form())
            continue;
        bool duplicate = false;
        for (const auto& kept : out)
            if (proportional_forms(kept, *f))
                duplicate = true;
        if (!duplicate)
            out.push_back(*f);
    }
    return out;
}

/// Two distinct nonzero conics share a curve iff their x2-contents have a
/// common factor (including a shared power of x0) or their x2-primitive
/// parts have identically vanishing resultant.
inline bool pair_shares_component(const ChartForm& f, const ChartForm& g)
{
    if (poly_gcd(f.content, g.content).degree() >= 1)
        return true;
    if (f.deficit >= 1 && g.deficit >= 1)
        return true;
    const auto fp = primitive_chart_poly(f);
    const auto gp = primitive_chart_poly(g);
    if (fp.degree() >= 1 && gp.degree() >= 1 && is_zero(resultant(fp, gp)))
        return true;
    return false;
}

inline AlgebraicPointCluster normalized_cluster(std::array<NumberFieldElement, 3> c)
{
    std::size_t lead = 3;
    for (std::size_t i = 0; i < 3 && lead == 3; ++i)
        if (!is_zero(c[i]))
            lead = i;
    if (lead == 3)
        throw std::logic_error("cluster coordinates are all zero");
    const NumberFieldElement inv = c[lead].inverse();
    AlgebraicPointCluster out;
    out.modulus = c[lead].modulus().degree() == 1 ? linear_t() : c[lead].modulus();
    for (std::size_t i = 0; i < 3; ++i)
        out.coords[i] = (c[i] * inv).value();
    return out;
}

inline bool cluster_satisfies_forms(const std::vector<TernaryQuadraticForm>& forms,
                                    const std::array<NumberFieldElement, 3>& x)
{
    for (const auto& f : forms) {
        const auto lift = [&](const Rational& v) { return x[0].lift(v); };
        if (!is_zero(evaluate_form(f, x, lift)))
            return false;
    }
    return true;
}

inline bool cluster_order(const AlgebraicPointCluster& a, const AlgebraicPointCluster& b)
{
    const auto key = [](const AlgebraicPointCluster& c) {
        return std::tuple(c.degree(), to_string(c.modulus), to_string(c.coords[0]),
                          to_string(c.coords[1]), to_string(c.coords[2]));
    };
    return key(a) < key(b);
}

/// Common zeros with x0 != 0, as seen through the x2-resultant of the first
/// two distinct forms.  Returns nothing when the projection is not generic
/// enough (a direction carries two points that only a coordinate change can
/// separate).
inline std::optional<std::vector<AlgebraicPointCluster>> main_chart_zeros(
    const std::vector<TernaryQuadraticForm>& forms, bool& shared)
{
    std::vector<AlgebraicPointCluster> out;
    const ChartForm cf = chart_form(forms[0]);
    const ChartForm cg = chart_form(forms[1]);
    const Poly<Rational> res = resultant(chart_poly(cf), chart_poly(cg));
    if (is_zero(res)) {
        shared = true;  // defensive: the screens above should already have fired
        return out;
    }
    if (res.degree() == 0)
        return out;

    std::vector<Poly<Poly<Rational>>> chart_polys;
    for (const auto& f : forms)
        chart_polys.push_back(chart_poly(chart_form(f)));

    for (const auto& [factor, mult] : factor_q(res).factors) {
        (void)mult;  // the locus is set-theoretic
        const Poly<Rational> m = monic(factor);
        const NumberFieldElement sigma = NumberFieldElement::generator(m);

        // specialize every form at s = sigma
        std::vector<Poly<NumberFieldElement>> specialized;
        for (const auto& cp : chart_polys) {
            std::vector<NumberFieldElement> coeffs;
            for (const auto& coeff : cp.c)
                coeffs.push_back(evaluate_in_field(coeff, sigma));
            specialized.push_back(Poly<NumberFieldElement>{std::move(coeffs)});
        }

        const auto& fs = specialized[0];
        const auto& gs = specialized[1];
        Poly<NumberFieldElement> h;
        if (is_zero(fs) && is_zero(gs)) {
            shared = true;  // the direction line lies on both forms
            return out;
        }
        if (is_zero(fs))
            h = monic(gs);
        else if (is_zero(gs))
            h = monic(fs);
        else
            h = poly_gcd(fs, gs);
        if (h.degree() <= 0)
            continue;  // spurious resultant root (leading coefficients vanished)
        h = squarefree_part(h);

        const NumberFieldElement one = sigma.lift(Rational(1));
        const auto push_if_on_surface = [&](const std::array<NumberFieldElement, 3>& x) {
            if (cluster_satisfies_forms(forms, x))
                out.push_back(normalized_cluster(x));
        };

        if (h.degree() == 1) {
            const NumberFieldElement xi = -h.c[0];  // h is monic
            push_if_on_surface({one, sigma, xi});
            continue;
        }
        // two or more x2-values over this direction
        if (m.degree() > 1)
            return std::nullopt;  // needs a field extension: retry in new coordinates
        // rational direction: the gcd has rational coefficients, so factor it
        std::vector<Rational> lowered;
        for (const auto& v : h.c)
            lowered.push_back(coefficient(v.value(), 0, Rational(0)));
        for (const auto& [part, pmult] : factor_q(Poly<Rational>{std::move(lowered)}).factors) {
            (void)pmult;
            const Poly<Rational> pm = monic(part);
            const NumberFieldElement tau = NumberFieldElement::generator(pm);
            const Rational sigma0 = coefficient(sigma.value(), 0, Rational(0));
            push_if_on_surface({tau.lift(Rational(1)), tau.lift(sigma0), tau});
        }
    }
    return out;
}

/// Common zeros on the line x0 = 0: the explicit second chart.
inline std::vector<AlgebraicPointCluster> infinity_chart_zeros(
    const std::vector<TernaryQuadraticForm>& forms, bool& shared)
{
    std::vector<AlgebraicPointCluster> out;

    // the corner [0,0,1]
    bool corner = true;
    for (const auto& f : forms)
        if (!f.gram[2][2].is_zero())
            corner = false;
    if (corner)
        out.push_back(AlgebraicPointCluster{
            linear_t(),
            {Poly<Rational>{}, Poly<Rational>{}, Poly<Rational>{{Rational(1)}}}});

    // points [0, 1, u]: restrictions to x0 = 0, dehomogenized at x1 = 1
    Poly<Rational> g{};
    bool any_restriction = false;
    for (const auto& f : forms) {
        const Poly<Rational> r{{f.gram[1][1], Rational(2) * f.gram[1][2], f.gram[2][2]}};
        if (is_zero(r))
            continue;
        any_restriction = true;
        g = is_zero(g) ? monic(r) : poly_gcd(g, r);
    }
    if (!any_restriction) {
        shared = true;  // every form vanishes on the whole line x0 = 0
        return out;
    }
    if (g.degree() <= 0)
        return out;
    for (const auto& [factor, mult] : factor_q(squarefree_part(g)).factors) {
        (void)mult;
        const Poly<Rational> m = monic(factor);
        const NumberFieldElement u = NumberFieldElement::generator(m);
        const std::array<NumberFieldElement, 3> x = {u.lift(Rational(0)), u.lift(Rational(1)), u};
        if (cluster_satisfies_forms(forms, x))
            out.push_back(normalized_cluster(x));
    }
    return out;
}

/// Linear change of x-coordinates moving the center of the x2-projection
/// along the moment curve; k = 0 is the identity.
inline Matrix3<Rational> projection_change(int k)
{
    const Rational kk(k);
    Matrix3<Rational> p = {{{Rational(1), Rational(0), Rational(0)},
                            {Rational(0), Rational(1), Rational(0)},
                            {Rational(0), Rational(0), Rational(1)}}};
    if (k > 0) {
        p[0][2] = Rational(1);
        p[1][2] = kk;
        p[2][2] = kk * kk;
    }
    return p;
}

inline TernaryQuadraticForm transform_form(const TernaryQuadraticForm& f,
                                           const Matrix3<Rational>& p)
{
    TernaryQuadraticForm out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l)
                    acc += p[k][i] * f.gram[k][l] * p[l][j];
            out.gram[i][j] = acc;
        }
    return out;
}

/// Map a cluster found in z-coordinates back through x = P z and renormalize.
inline AlgebraicPointCluster map_cluster(const AlgebraicPointCluster& c, const Matrix3<Rational>& p)
{
    const std::array<NumberFieldElement, 3> z = {
        NumberFieldElement(c.modulus, c.coords[0]),
        NumberFieldElement(c.modulus, c.coords[1]),
        NumberFieldElement(c.modulus, c.coords[2]),
    };
    std::array<NumberFieldElement, 3> x = {z[0].lift(Rational(0)), z[0].lift(Rational(0)),
                                           z[0].lift(Rational(0))};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            x[i] = x[i] + z[j].lift(p[i][j]) * z[j];
    return normalized_cluster(x);
}

}  // namespace detail

/// Set-theoretic common zero locus of the nonzero forms among F0, F1, F2.
/// Reports a shared component instead of a list when two of the forms cut
/// out a common curve; otherwise the total cluster degree is at most 4.
inline CommonZeros common_zeros(const Surface22& s)
{
    CommonZeros result;
    const auto forms = detail::distinct_forms(s);
    if (forms.size() == 1) {
        result.shared_component = true;  // a single conic vanishes on a curve
        return result;
    }
    std::vector<detail::ChartForm> charts;
    for (const auto& f : forms)
        charts.push_back(detail::chart_form(f));
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (detail::pair_shares_component(charts[i], charts[j])) {
                result.shared_component = true;
                return result;
            }

    for (int k = 0; k <= 30; ++k) {
        const Matrix3<Rational> p = detail::projection_change(k);
        std::vector<TernaryQuadraticForm> moved;
        for (const auto& f : forms)
            moved.push_back(k == 0 ? f : detail::transform_form(f, p));

        bool shared = false;
        auto main = detail::main_chart_zeros(moved, shared);
        if (shared) {
            result.shared_component = true;  // defensive; the screens above should catch this
            return result;
        }
        if (!main)
            continue;  // projection not generic for this k
        auto infinity = detail::infinity_chart_zeros(moved, shared);
        if (shared) {
            result.shared_component = true;
            return result;
        }

        result.clusters = std::move(*main);
        for (auto& c : infinity)
            result.clusters.push_back(std::move(c));
        if (k > 0)
            for (auto& c : result.clusters)
                c = detail::map_cluster(c, p);
        std::sort(result.clusters.begin(), result.clusters.end(), detail::cluster_order);
        if (result.total_degree() > 4)
            throw std::logic_error("common zero count exceeds the Bezout bound");
        return result;
    }
    throw std::logic_error("no generic projection found");
}

/// Vertical (-2) lines P^1 x {P} for P a common zero of the three forms.
struct MinusTwoLine {
    AlgebraicPointCluster point;

    bool operator==(const MinusTwoLine&) const = default;
};

inline std::string to_string(const MinusTwoLine& line)
{
    return "P^1 x " + to_string(line.point);
}

inline std::vector<MinusTwoLine> minus_two_lines(const Surface22& s)
{
    const CommonZeros z = common_zeros(s);
    if (z.shared_component)
        throw std::runtime_error("non-isolated (-2) locus");
    std::vector<MinusTwoLine> out;
    out.reserve(z.clusters.size());
    for (const auto& c : z.clusters)
        out.push_back(MinusTwoLine{c});
    return out;
}

/// Number of (-2) lines counted with cluster degree (conjugate lines count
/// separately).
inline int line_count(const std::vector<MinusTwoLine>& lines)
{
    int sum = 0;
    for (const auto& l : lines)
        sum += l.point.degree();
    return sum;
}

/// Gram matrix of the fiber conic over y: M(y) = y0^2 G0 + y0 y1 G2 + y1^2 G1.
template <class K, class Lift>
Matrix3<K> fiber_matrix_in(const Surface22& s, const K& y0, const K& y1, Lift lift)
{
    Matrix3<K> m = {{{y0, y0, y0}, {y0, y0, y0}, {y0, y0, y0}}};  // placeholder entries
    const K a = y0 * y0, b = y0 * y1, c = y1 * y1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = a * lift(s.f0.gram[i][j]) + b * lift(s.f2.gram[i][j]) +
                      c * lift(s.f1.gram[i][j]);
    return m;
}

inline Matrix3<Rational> fiber_matrix(const Surface22& s, const Rational& y0, const Rational& y1)
{
    if (y0.is_zero() && y1.is_zero())
        throw std::invalid_argument("zero fiber coordinates");
    return fiber_matrix_in(s, y0, y1, [](const Rational& v) { return v; });
}

/// det M(y) as a binary sextic in (y0, y1), stored dehomogenized at y0 = 1.
inline BinaryForm discriminant_sextic(const Surface22& s)
{
    Matrix3<Poly<Rational>> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = Poly<Rational>{
                {s.f0.gram[i][j], s.f2.gram[i][j], s.f1.gram[i][j]}};
    return BinaryForm(det3(m), 6);
}

/// Honesty of the conic bundle: no fiber of the first projection is a double
/// line (rank M(y) >= 2 for every y).
struct HonestyReport {
    bool honest = true;
    bool everywhere_degenerate = false;        // rank <= 1 for every y
    std::vector<FiberPointCluster> witnesses;  // fibers of rank <= 1, when not honest
};

inline HonestyReport is_honest_bundle(const Surface22& s)
{
    HonestyReport report;
    Matrix3<Poly<Rational>> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = Poly<Rational>{
                {s.f0.gram[i][j], s.f2.gram[i][j], s.f1.gram[i][j]}};
    const Matrix3<Poly<Rational>> adj = adjugate3(m);

    if (matrix_is_zero(adj)) {
        report.honest = false;
        report.everywhere_degenerate = true;
        return report;
    }

    // gcd of the nine minor quartics: its roots are the rank <= 1 fibers
    Poly<Rational> g{};
    for (const auto& row : adj)
        for (const auto& entry : row) {
            if (is_zero(entry))
                continue;
            g = is_zero(g) ? monic(entry) : poly_gcd(g, entry);
        }
    if (g.degree() >= 1)
        for (const auto& [factor, mult] : factor_q(squarefree_part(g)).factors) {
            (void)mult;
            const Poly<Rational> mm = monic(factor);
            if (mm.degree() == 1)
                report.witnesses.push_back(FiberPointCluster{
                    detail::linear_t(),
                    {Poly<Rational>{{Rational(1)}}, Poly<Rational>{{-mm.c[0]}}}});
            else
                report.witnesses.push_back(
                    FiberPointCluster{mm, {Poly<Rational>{{Rational(1)}}, detail::linear_t()}});
        }

    // the fiber over [0:1] is not covered by the dehomogenized minors
    Matrix3<Rational> at_infinity;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            at_infinity[i][j] = s.f1.gram[i][j];
    if (rank3(at_infinity) <= 1)
        report.witnesses.push_back(FiberPointCluster{
            detail::linear_t(), {Poly<Rational>{}, Poly<Rational>{{Rational(1)}}}});

    report.honest = report.witnesses.empty();
    return report;
}

enum class SingularKind { Point, FiberLine, WholeFiber, BaseCurve };

inline std::string to_string(SingularKind k)
{
    switch (k) {
    case SingularKind::Point: return "point";
    case SingularKind::FiberLine: return "fiber-line";
    case SingularKind::WholeFiber: return "whole-fiber";
    case SingularKind::BaseCurve: return "base-curve";
    }
    throw std::logic_error("unknown singular kind");
}

/// One component of the singular locus of the (2,2) hypersurface.
struct SingularComponent {
    SingularKind kind = SingularKind::Point;
    FiberPointCluster fiber;                      // y (unused for BaseCurve)
    std::optional<AlgebraicPointCluster> point;   // Point: the x-coordinates
    std::vector<std::array<Poly<Rational>, 3>> span;  // FiberLine: spanning x-vectors
    std::array<Poly<Rational>, 3> base_curve{};   // BaseCurve: x as polynomials in the base parameter

    bool operator==(const SingularComponent&) const = default;
};

inline std::string to_string(const SingularComponent& c)
{
    switch (c.kind) {
    case SingularKind::Point:
        return "point y=" + to_string(c.fiber) + " x=" + to_string(*c.point);
    case SingularKind::FiberLine: {
        std::string out = "fiber-line y=" + to_string(c.fiber) + " span{";
        for (std::size_t i = 0; i < c.span.size(); ++i) {
            if (i)
                out += ", ";
            out += "[" + to_string(c.span[i][0]) + ", " + to_string(c.span[i][1]) + ", " +
                   to_string(c.span[i][2]) + "]";
        }
        return out + "}";
    }
    case SingularKind::WholeFiber:
        return "whole-fiber y=" + to_string(c.fiber);
    case SingularKind::BaseCurve:
        return "base-curve x(t)=[" + to_string(c.base_curve[0]) + ", " +
               to_string(c.base_curve[1]) + ", " + to_string(c.base_curve[2]) + "]";
    }
    throw std::logic_error("unknown singular kind");
}

namespace detail {

/// Pointwise singularity analysis of the fiber over one root cluster of the
/// discriminant.  y = (1, t) for a main-chart modulus, or (0, 1) at infinity.
inline std::vector<SingularComponent> analyze_fiber(const Surface22& s, const Poly<Rational>& modulus,
                                                    bool at_infinity)
{
    std::vector<SingularComponent> out;
    const Poly<Rational> m = monic(modulus);
    const NumberFieldElement gen = NumberFieldElement::generator(m);
    const NumberFieldElement one = gen.lift(Rational(1));
    const NumberFieldElement zero = gen.lift(Rational(0));
    const NumberFieldElement y0 = at_infinity ? zero : one;
    const NumberFieldElement y1 = at_infinity ? one : gen;
    const auto lift = [&](const Rational& v) { return gen.lift(v); };

    const Poly<Rational> house = m.degree() == 1 ? linear_t() : m;
    FiberPointCluster fiber{house, {y0.value(), m.degree() == 1 ? y1.value() : linear_t()}};

    const Matrix3<NumberFieldElement> fm = fiber_matrix_in(s, y0, y1, lift);
    const int rank = rank3(fm);
    if (rank == 3)
        return out;  // not a degenerate fiber after all

    const auto partials = [&](const std::array<NumberFieldElement, 3>& x) {
        const NumberFieldElement two = lift(Rational(2));
        const NumberFieldElement p1 =
            two * y0 * evaluate_form(s.f0, x, lift) + y1 * evaluate_form(s.f2, x, lift);
        const NumberFieldElement p2 =
            two * y1 * evaluate_form(s.f1, x, lift) + y0 * evaluate_form(s.f2, x, lift);
        return std::pair(p1, p2);
    };

    if (rank == 2) {
        const std::array<NumberFieldElement, 3> x = kernel_line(fm);
        const auto [p1, p2] = partials(x);
        if (is_zero(p1) && is_zero(p2)) {
            SingularComponent c;
            c.kind = SingularKind::Point;
            c.fiber = fiber;
            c.point = normalized_cluster(x);
            out.push_back(std::move(c));
        }
        return out;
    }
    if (rank == 0) {
        SingularComponent c;
        c.kind = SingularKind::WholeFiber;
        c.fiber = fiber;
        out.push_back(std::move(c));
        return out;
    }

    // rank 1: the kernel is the plane of a pencil x = u v1 + w v2
    const auto [v1, v2] = kernel_plane(fm);
    const auto quad = [&](const std::array<NumberFieldElement, 3>& a,
                          const std::array<NumberFieldElement, 3>& b,
                          int which) {
        // binary quadratic A u^2 + B uw + C w^2 of one partial on the pencil
        const std::array<NumberFieldElement, 3> sum = {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
        const auto pa = partials(a);
        const auto pb = partials(b);
        const auto ps = partials(sum);
        const NumberFieldElement A = which == 0 ? pa.first : pa.second;
        const NumberFieldElement C = which == 0 ? pb.first : pb.second;
        const NumberFieldElement S = which == 0 ? ps.first : ps.second;
        return std::array<NumberFieldElement, 3>{A, S - A - C, C};
    };
    const auto q1 = quad(v1, v2, 0);
    const auto q2 = quad(v1, v2, 1);
    const bool z1 = is_zero(q1[0]) && is_zero(q1[1]) && is_zero(q1[2]);
    const bool z2 = is_zero(q2[0]) && is_zero(q2[1]) && is_zero(q2[2]);
    if (z1 && z2) {
        SingularComponent c;
        c.kind = SingularKind::FiberLine;
        c.fiber = fiber;
        c.span = {{v1[0].value(), v1[1].value(), v1[2].value()},
                  {v2[0].value(), v2[1].value(), v2[2].value()}};
        out.push_back(std::move(c));
        return out;
    }

    const auto push_point = [&](const std::array<NumberFieldElement, 3>& x) {
        SingularComponent c;
        c.kind = SingularKind::Point;
        c.fiber = fiber;
        c.point = normalized_cluster(x);
        out.push_back(std::move(c));
    };

    // dehomogenize at w = 1: x(v) = v*v1 + v2
    const Poly<NumberFieldElement> Q1{{q1[2], q1[1], q1[0]}};
    const Poly<NumberFieldElement> Q2{{q2[2], q2[1], q2[0]}};
    Poly<NumberFieldElement> g;
    if (is_zero(Q1))
        g = monic(Q2);
    else if (is_zero(Q2))
        g = monic(Q1);
    else
        g = poly_gcd(Q1, Q2);

    // the pencil point [u:w] = [1:0] (x = v1) lies outside the w = 1 chart
    if (is_zero(q1[0]) && is_zero(q2[0]))
        push_point(v1);

    if (g.degree() == 1) {
        const NumberFieldElement rho = -g.c[0];
        push_point({rho * v1[0] + v2[0], rho * v1[1] + v2[1], rho * v1[2] + v2[2]});
    } else if (g.degree() >= 2) {
        g = squarefree_part(g);
        if (g.degree() == 1) {
            const NumberFieldElement rho = -g.c[0];
            push_point({rho * v1[0] + v2[0], rho * v1[1] + v2[1], rho * v1[2] + v2[2]});
        } else if (m.degree() > 1) {
            throw std::runtime_error("unsupported field extension");
        } else {
            // rational fiber: lower the pencil gcd to Q and extend per factor
            std::vector<Rational> lowered;
            for (const auto& v : g.c)
                lowered.push_back(coefficient(v.value(), 0, Rational(0)));
            for (const auto& [part, pmult] : factor_q(Poly<Rational>{std::move(lowered)}).factors) {
                (void)pmult;
                const Poly<Rational> pm = monic(part);
                const NumberFieldElement tau = NumberFieldElement::generator(pm);
                const auto lower = [&](const NumberFieldElement& v) {
                    return tau.lift(coefficient(v.value(), 0, Rational(0)));
                };
                const std::array<NumberFieldElement, 3> x = {
                    tau * lower(v1[0]) + lower(v2[0]),
                    tau * lower(v1[1]) + lower(v2[1]),
                    tau * lower(v1[2]) + lower(v2[2]),
                };
                SingularComponent c;
                c.kind = SingularKind::Point;
                c.fiber = fiber;
                c.point = normalized_cluster(x);
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

}  // namespace detail

/// Exact singular locus of the (2,2) hypersurface.  An empty list certifies
/// smoothness: singular points can only sit over roots of the discriminant.
inline std::vector<SingularComponent> singular_points(const Surface22& s)
{
    std::vector<SingularComponent> out;
    const BinaryForm disc = discriminant_sextic(s);

    if (!disc.is_zero_form()) {
        if (disc.dehom.degree() >= 1)
            for (const auto& [factor, mult] : factor_q(squarefree_part(disc.dehom)).factors) {
                (void)mult;
                auto comps = detail::analyze_fiber(s, factor, false);
                for (auto& c : comps)
                    out.push_back(std::move(c));
            }
        if (disc.deficit() >= 1) {
            auto comps = detail::analyze_fiber(s, detail::linear_t(), true);
            for (auto& c : comps)
                out.push_back(std::move(c));
        }
        return out;
    }

    // identically vanishing discriminant: every fiber is degenerate
    Matrix3<Poly<Rational>> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = Poly<Rational>{
                {s.f0.gram[i][j], s.f2.gram[i][j], s.f1.gram[i][j]}};
    const Matrix3<Poly<Rational>> adj = adjugate3(m);
    if (matrix_is_zero(adj))
        throw std::runtime_error("unsupported degenerate pencil");

    // generic kernel direction x(t) from a nonzero adjugate column
    std::array<Poly<Rational>, 3> xt{};
    for (std::size_t col = 0; col < 3 && is_zero(xt[0]) && is_zero(xt[1]) && is_zero(xt[2]); ++col)
        if (!is_zero(adj[0][col]) || !is_zero(adj[1][col]) || !is_zero(adj[2][col]))
            xt = {adj[0][col], adj[1][col], adj[2][col]};
    Poly<Rational> content{};
    for (const auto& p : xt)
        if (!is_zero(p))
            content = is_zero(content) ? monic(p) : poly_gcd(content, p);
    for (auto& p : xt)
        if (!is_zero(p))
            p = exact_div(p, content);

    const auto lift_poly = [](const Rational& v) { return Poly<Rational>{{v}}; };
    const Poly<Rational> t = detail::linear_t();
    const Poly<Rational> one{{Rational(1)}};
    const Poly<Rational> p1 =
        Rational(2) * (one * evaluate_form(s.f0, xt, lift_poly)) + t * evaluate_form(s.f2, xt, lift_poly);
    const Poly<Rational> p2 =
        Rational(2) * (t * evaluate_form(s.f1, xt, lift_poly)) + one * evaluate_form(s.f2, xt, lift_poly);
    const bool base_curve = is_zero(p1) && is_zero(p2);

    // candidate special fibers: rank-drop points of the generic kernel and,
    // when the base curve is not entirely singular, roots shared by the two
    // partial conditions
    std::vector<Poly<Rational>> candidates;
    const auto add_roots = [&](const Poly<Rational>& g) {
        if (g.degree() < 1)
            return;
        for (const auto& [factor, mult] : factor_q(squarefree_part(g)).factors) {
            (void)mult;
            const Poly<Rational> mm = monic(factor);
            if (std::find(candidates.begin(), candidates.end(), mm) == candidates.end())
                candidates.push_back(mm);
        }
    };
    Poly<Rational> adj_gcd{};
    for (const auto& row : adj)
        for (const auto& entry : row) {
            if (is_zero(entry))
                continue;
            adj_gcd = is_zero(adj_gcd) ? monic(entry) : poly_gcd(adj_gcd, entry);
        }
    add_roots(adj_gcd);
    if (!base_curve) {
        Poly<Rational> g;
        if (is_zero(p1))
            g = p2;
        else if (is_zero(p2))
            g = p1;
        else
            g = poly_gcd(p1, p2);
        add_roots(g);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Poly<Rational>& a, const Poly<Rational>& b) {
                  return std::tuple(a.degree(), to_string(a)) < std::tuple(b.degree(), to_string(b));
              });

    for (const auto& mm : candidates) {
        auto comps = detail::analyze_fiber(s, mm, false);
        for (auto& c : comps) {
            const bool comparable =
                c.kind == SingularKind::Point &&
                (c.point->modulus.degree() == 1 || c.point->modulus == mm);
            if (base_curve && comparable) {
                // skip points that already lie on the base curve
                const NumberFieldElement gen = NumberFieldElement::generator(mm);
                const std::array<NumberFieldElement, 3> on_curve = {
                    evaluate_in_field(xt[0], gen), evaluate_in_field(xt[1], gen),
                    evaluate_in_field(xt[2], gen)};
                const auto& q = c.point->coords;
                const std::array<NumberFieldElement, 3> found = {
                    NumberFieldElement(c.point->modulus.degree() == 1 ? mm : c.point->modulus, q[0]),
                    NumberFieldElement(c.point->modulus.degree() == 1 ? mm : c.point->modulus, q[1]),
                    NumberFieldElement(c.point->modulus.degree() == 1 ? mm : c.point->modulus, q[2]),
                };
                const bool proportional = is_zero(on_curve[0] * found[1] - on_curve[1] * found[0]) &&
                                          is_zero(on_curve[0] * found[2] - on_curve[2] * found[0]) &&
                                          is_zero(on_curve[1] * found[2] - on_curve[2] * found[1]);
                if (proportional)
                    continue;
            }
            out.push_back(std::move(c));
        }
    }
    {
        // limit direction of the base curve over [0:1]
        std::array<Rational, 3> limit = {Rational(0), Rational(0), Rational(0)};
        if (base_curve) {
            int d = 0;
            for (const auto& p : xt)
                d = std::max(d, p.degree());
            for (std::size_t i = 0; i < 3; ++i)
                limit[i] = coefficient(xt[i], d, Rational(0));
        }
        auto comps = detail::analyze_fiber(s, detail::linear_t(), true);
        for (auto& c : comps) {
            if (base_curve && c.kind == SingularKind::Point && c.point->modulus.degree() == 1) {
                const auto& q = c.point->coords;
                const std::array<Rational, 3> f = {coefficient(q[0], 0, Rational(0)),
                                                   coefficient(q[1], 0, Rational(0)),
                                                   coefficient(q[2], 0, Rational(0))};
                const bool on_limit = limit[0] * f[1] - limit[1] * f[0] == Rational(0) &&
                                      limit[0] * f[2] - limit[2] * f[0] == Rational(0) &&
                                      limit[1] * f[2] - limit[2] * f[1] == Rational(0);
                if (on_limit)
                    continue;  // the closure of the base curve covers this point
            }
            out.push_back(std::move(c));
        }
    }
    if (base_curve) {
        SingularComponent c;
        c.kind = SingularKind::BaseCurve;
        c.base_curve = xt;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace blowup7
