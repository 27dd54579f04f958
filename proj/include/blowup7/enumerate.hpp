#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blowup7/divisor_class.hpp"

namespace blowup7 {

enum class FamilyLabel {
    EXCEPTIONAL,        // E_i                      (0; ..., -1, ...)
    LINE_THROUGH_TWO,   // L_ij = H - E_i - E_j     (1; 1,1,0,...)
    CONIC_THROUGH_FIVE, // G_ij = 2H - five E_k     (2; 1^5, 0,...)
    CUBIC_DOUBLE_POINT, // F_i  = 3H - 2E_i - sum   (3; 2,1,...,1)
    ROOT_DIFFERENCE,    // E_i - E_j
    ROOT_LINE_THREE,    // H - E_i - E_j - E_k
    ROOT_CONIC_SIX,     // 2H - six E_k
    CB_CASE_I,          // H - E_i
    CB_CASE_II,         // 2H - four E_k
    CB_CASE_III,        // 3H - 2E_i - five E_k
    CB_CASE_IV,         // 4H - four E_k - three 2E_l
    CB_CASE_V,          // 5H - E_i - six 2E_k
    OTHER,
};

inline std::string to_string(FamilyLabel f)
{
    switch (f) {
        case FamilyLabel::EXCEPTIONAL: return "exceptional";
        case FamilyLabel::LINE_THROUGH_TWO: return "line-through-two";
        case FamilyLabel::CONIC_THROUGH_FIVE: return "conic-through-five";
        case FamilyLabel::CUBIC_DOUBLE_POINT: return "cubic-double-point";
        case FamilyLabel::ROOT_DIFFERENCE: return "root-difference";
        case FamilyLabel::ROOT_LINE_THREE: return "root-line-three";
        case FamilyLabel::ROOT_CONIC_SIX: return "root-conic-six";
        case FamilyLabel::CB_CASE_I: return "cb-case-i";
        case FamilyLabel::CB_CASE_II: return "cb-case-ii";
        case FamilyLabel::CB_CASE_III: return "cb-case-iii";
        case FamilyLabel::CB_CASE_IV: return "cb-case-iv";
        case FamilyLabel::CB_CASE_V: return "cb-case-v";
        case FamilyLabel::OTHER: return "other";
    }
    return "other";
}

/// Pattern match on (a, sorted multiplicities); independent of coordinate
/// order by construction.
inline FamilyLabel classify(const DivisorClass& d)
{
    std::vector<std::int64_t> s = d.b;
    std::sort(s.rbegin(), s.rend());
    const auto count = [&](std::int64_t v) {
        return static_cast<int>(std::count(s.begin(), s.end(), v));
    };
    const int n = static_cast<int>(s.size());
    const int zeros = count(0), ones = count(1), twos = count(2), minus = count(-1);

    if (d.h == 0 && minus == 1 && zeros == n - 1)
        return FamilyLabel::EXCEPTIONAL;
    if (d.h == 0 && minus == 1 && ones == 1 && zeros == n - 2)
        return FamilyLabel::ROOT_DIFFERENCE;
    if (d.h == 1 && ones == 2 && zeros == n - 2)
        return FamilyLabel::LINE_THROUGH_TWO;
    if (d.h == 1 && ones == 1 && zeros == n - 1)
        return FamilyLabel::CB_CASE_I;
    if (d.h == 1 && ones == 3 && zeros == n - 3)
        return FamilyLabel::ROOT_LINE_THREE;
    if (d.h == 2 && ones == 4 && zeros == n - 4)
        return FamilyLabel::CB_CASE_II;
    if (d.h == 2 && ones == 5 && zeros == n - 5)
        return FamilyLabel::CONIC_THROUGH_FIVE;
    if (d.h == 2 && ones == 6 && zeros == n - 6)
        return FamilyLabel::ROOT_CONIC_SIX;
    if (d.h == 3 && twos == 1 && ones == 5 && zeros == n - 6)
        return FamilyLabel::CB_CASE_III;
    if (d.h == 3 && twos == 1 && ones == n - 1)
        return FamilyLabel::CUBIC_DOUBLE_POINT;
    if (d.h == 4 && twos == 3 && ones == 4 && zeros == n - 7)
        return FamilyLabel::CB_CASE_IV;
    if (d.h == 5 && twos == 6 && ones == 1 && zeros == n - 7)
        return FamilyLabel::CB_CASE_V;
    return FamilyLabel::OTHER;
}

struct ClassFamily {
    FamilyLabel label = FamilyLabel::OTHER;
    std::vector<DivisorClass> members;

    static ClassFamily make(FamilyLabel label, std::vector<DivisorClass> members)
    {
        for (const auto& m : members)
            if (classify(m) != label)
                throw std::invalid_argument("class " + to_string(m) +
                                            " does not match family " + to_string(label));
        return ClassFamily{label, std::move(members)};
    }
};

inline std::vector<ClassFamily> group_by_family(const std::vector<DivisorClass>& classes)
{
    std::map<FamilyLabel, std::vector<DivisorClass>> buckets;
    for (const auto& d : classes)
        buckets[classify(d)].push_back(d);
    std::vector<ClassFamily> out;
    for (auto& [label, members] : buckets)
        out.push_back(ClassFamily::make(label, std::move(members)));
    return out;
}

namespace detail {

inline std::int64_t isqrt64(std::int64_t v)
{
    if (v < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

/// All integer vectors b of the given length with sum(b_i^2) == q_target and
/// either sum(b_i) == *s_exact or sum(b_i) >= *s_min.  Coordinates are
/// bounded by |b_i| <= sqrt(remaining square budget); Cauchy-Schwarz prunes
/// branches whose sum constraint became unreachable.
inline void sweep_b(int length, std::int64_t q_target,
                    std::optional<std::int64_t> s_exact,
                    std::optional<std::int64_t> s_min,
                    bool nonnegative,
                    const std::function<void(const std::vector<std::int64_t>&)>& emit)
{
    std::vector<std::int64_t> b(static_cast<std::size_t>(length), 0);
    const std::function<void(int, std::int64_t, std::int64_t)> rec =
        [&](int pos, std::int64_t q_rem, std::int64_t s_rem) {
            const int n_rem = length - pos;
            if (q_rem < 0)
                return;
            if (n_rem == 0) {
                if (q_rem != 0)
                    return;
                if (s_exact && s_rem != 0)
                    return;
                if (s_min && s_rem > 0)
                    return;  // still owe sum but no coordinates left
                emit(b);
                return;
            }
            if (s_exact && s_rem * s_rem > static_cast<std::int64_t>(n_rem) * q_rem)
                return;
            if (s_min && s_rem > 0 && s_rem * s_rem > static_cast<std::int64_t>(n_rem) * q_rem)
                return;
            const std::int64_t hi = isqrt64(q_rem);
            const std::int64_t lo = nonnegative ? 0 : -hi;
            for (std::int64_t v = hi; v >= lo; --v) {
                b[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, q_rem - v * v, s_rem - v);
            }
            b[static_cast<std::size_t>(pos)] = 0;
        };
    rec(0, q_target, s_exact ? *s_exact : (s_min ? *s_min : 0));
}

/// Largest a with (9-r)a^2 + 6*kdeg*a + (kdeg^2 + r*self) <= 0, the
/// Cauchy-Schwarz consequence of D.K = kdeg and D.D = self on rank 1+r.
/// Empty optional when no a >= a_min qualifies; throws when the quadratic
/// term vanishes or flips sign (the class set is infinite).
inline std::optional<std::int64_t> max_degree(int r, std::int64_t kdeg, std::int64_t self,
                                              std::int64_t a_min)
{
    if (r >= 9)
        throw std::invalid_argument("infinite class set");
    const auto value = [&](std::int64_t a) {
        return (9 - r) * a * a + 6 * kdeg * a + (kdeg * kdeg + r * self);
    };
    const double disc = 36.0 * static_cast<double>(kdeg) * static_cast<double>(kdeg) -
                        4.0 * (9 - r) * static_cast<double>(kdeg * kdeg + r * self);
    if (disc < 0)
        return std::nullopt;
    const auto hi = static_cast<std::int64_t>(
                        (-6.0 * static_cast<double>(kdeg) + std::sqrt(disc)) / (2.0 * (9 - r))) +
                    2;
    std::optional<std::int64_t> best;
    for (std::int64_t a = a_min; a <= hi; ++a)
        if (value(a) <= 0)
            best = a;
    return best;
}

struct AdjunctionSweep {
    std::int64_t kdeg = 0;   // required D.K
    std::int64_t self = 0;   // required D.D
    std::int64_t a_min = 0;
    bool nonnegative = false;
};

/// Classes with the two exact pairing constraints, canonically ordered.
inline std::vector<DivisorClass> classes_with(int r, const AdjunctionSweep& spec)
{
    std::vector<DivisorClass> out;
    const auto cap = max_degree(r, spec.kdeg, spec.self, spec.a_min);
    if (!cap)
        return out;
    for (std::int64_t a = spec.a_min; a <= *cap; ++a) {
        // D.K = -3a + sum b  and  D.D = a^2 - sum b^2.
        const std::int64_t s_target = 3 * a + spec.kdeg;
        const std::int64_t q_target = a * a - spec.self;
        sweep_b(r, q_target, s_target, std::nullopt, spec.nonnegative,
                [&](const std::vector<std::int64_t>& b) {
                    out.emplace_back(a, b);
                });
    }
    std::sort(out.begin(), out.end(), enumeration_order);
    return out;
}

}  // namespace detail

/// All (-1)-classes: a >= 0, D.D = -1, genus 0 (equivalently D.K = -1).
/// 56 classes at r = 7, the classical 27 at r = 6, 240 at r = 8.
inline std::vector<DivisorClass> minus_one_classes(int r)
{
    if (r < 1)
        throw std::invalid_argument("minus_one_classes needs r >= 1");
    if (r >= 9)
        throw std::invalid_argument("infinite class set");
    return detail::classes_with(r, {.kdeg = -1, .self = -1, .a_min = 0, .nonnegative = false});
}

/// (-2)-root classes: D.D = -2, D.K = 0, a >= 0.  With normalized = true the
/// a = 0 family keeps one orientation per pair, E_i - E_j with i < j; the
/// full +/- root set is the union with the negatives (126 roots at r = 7).
inline std::vector<DivisorClass> minus_two_classes(int r, bool normalized = true)
{
    if (r < 1)
        throw std::invalid_argument("minus_two_classes needs r >= 1");
    if (r >= 9)
        throw std::invalid_argument("infinite class set");
    auto all = detail::classes_with(r, {.kdeg = 0, .self = -2, .a_min = 0, .nonnegative = false});
    std::vector<DivisorClass> keep;
    for (auto& d : all) {
        if (d.h == 0) {
            const auto first_nonzero = std::find_if(d.b.begin(), d.b.end(),
                                                    [](std::int64_t v) { return v != 0; });
            if (first_nonzero == d.b.end() || *first_nonzero != -1)
                continue;  // keep the E_i - E_j orientation only
        }
        keep.push_back(std::move(d));
    }
    if (normalized)
        return keep;
    std::vector<DivisorClass> signed_set = keep;
    for (const auto& d : keep)
        signed_set.push_back(-d);
    std::sort(signed_set.begin(), signed_set.end(), enumeration_order);
    return signed_set;
}

/// Fiber classes of conic bundle structures: a >= 1, b_i >= 0, D.D = 0,
/// genus 0.  At r = 7 these are the 126 classes split 7/35/42/35/7 across
/// degrees a = 1..5.
inline std::vector<DivisorClass> conic_bundle_classes(int r = 7)
{
    if (r < 1)
        throw std::invalid_argument("conic_bundle_classes needs r >= 1");
    if (r >= 9)
        throw std::invalid_argument("infinite class set");
    return detail::classes_with(r, {.kdeg = -2, .self = 0, .a_min = 1, .nonnegative = true});
}

/// Classes of generically-finite degree-two maps to P^2: a > 0, b_i >= 0,
/// at least one b_i > 0, D.D = 2, and the expected-dimension constraint
/// sum b_i >= 3a - 2.  Uniquely 3H - sum E_i at r = 7.
inline std::vector<DivisorClass> degree_two_classes(int r = 7, std::int64_t degree_cap = 0)
{
    if (r < 1)
        throw std::invalid_argument("degree_two_classes needs r >= 1");
    if (r >= 9)
        throw std::invalid_argument("infinite class set");
    std::int64_t cap = degree_cap;
    if (cap <= 0) {
        const auto derived = detail::max_degree(r, -2, 2, 1);
        if (!derived)
            return {};
        cap = *derived;
    }
    std::vector<DivisorClass> out;
    for (std::int64_t a = 1; a <= cap; ++a) {
        const std::int64_t q_target = a * a - 2;
        if (q_target <= 0)
            continue;  // rules out a = 1 and the all-zero multiplicity row
        detail::sweep_b(r, q_target, std::nullopt, 3 * a - 2, true,
                        [&](const std::vector<std::int64_t>& b) {
                            out.emplace_back(a, b);
                        });
    }
    std::sort(out.begin(), out.end(), enumeration_order);
    return out;
}

/// The (-1)-classes meeting the polarization with degree one; these are the
/// lines of the embedding defined by L.  For L = 4H - 2E_1 - sum E_i the
/// result is E_2..E_7 and L_12..L_17.
inline std::vector<DivisorClass> lines_under_polarization(const DivisorClass& L)
{
    std::vector<DivisorClass> out;
    for (auto& c : minus_one_classes(L.rank()))
        if (intersect(c, L) == 1)
            out.push_back(std::move(c));
    return out;
}

}  // namespace blowup7
