#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "blowup7/checked_int.hpp"
#include "blowup7/divisor_class.hpp"
#include "blowup7/enumerate.hpp"

namespace blowup7 {

/// Quadratic transformation centered at three of the blown-up points
/// (1-based indices).
struct CremonaMove {
    std::array<int, 3> centers{};

    bool operator==(const CremonaMove&) const = default;
};

/// Relabelling of the blown-up points: new coordinate i takes the old
/// coordinate map[i] (1-based).
struct IndexPermutation {
    std::vector<int> map;

    bool operator==(const IndexPermutation&) const = default;
};

using ReductionStep = std::variant<CremonaMove, IndexPermutation>;

inline void validate(const CremonaMove& m, int r)
{
    const auto& c = m.centers;
    for (const int idx : c)
        if (idx < 1 || idx > r)
            throw std::invalid_argument("invalid Cremona centers");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
        throw std::invalid_argument("invalid Cremona centers");
}

/// a' = 2a - b_i - b_j - b_k; the three center multiplicities become
/// a - (sum of the other two); an involutive lattice isometry fixing K.
inline DivisorClass apply(const CremonaMove& m, const DivisorClass& d)
{
    validate(m, d.rank());
    const std::int64_t bi = d.b[static_cast<std::size_t>(m.centers[0] - 1)];
    const std::int64_t bj = d.b[static_cast<std::size_t>(m.centers[1] - 1)];
    const std::int64_t bk = d.b[static_cast<std::size_t>(m.centers[2] - 1)];
    DivisorClass out = d;
    out.h = checked_sub(checked_mul(2, d.h), checked_add(checked_add(bi, bj), bk));
    out.b[static_cast<std::size_t>(m.centers[0] - 1)] = checked_sub(d.h, checked_add(bj, bk));
    out.b[static_cast<std::size_t>(m.centers[1] - 1)] = checked_sub(d.h, checked_add(bi, bk));
    out.b[static_cast<std::size_t>(m.centers[2] - 1)] = checked_sub(d.h, checked_add(bi, bj));
    return out;
}

inline DivisorClass apply(const IndexPermutation& p, const DivisorClass& d)
{
    const int r = d.rank();
    if (static_cast<int>(p.map.size()) != r)
        throw std::invalid_argument("permutation length does not match rank");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    DivisorClass out = d;
    for (int i = 0; i < r; ++i) {
        const int src = p.map[static_cast<std::size_t>(i)];
        if (src < 1 || src > r || seen[static_cast<std::size_t>(src - 1)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(src - 1)] = true;
        out.b[static_cast<std::size_t>(i)] = d.b[static_cast<std::size_t>(src - 1)];
    }
    return out;
}

/// Named apply_step (not apply) so unqualified calls with a std::variant
/// argument cannot drift to std::apply through ADL.
inline DivisorClass apply_step(const ReductionStep& step, const DivisorClass& d)
{
    return std::visit([&](const auto& s) { return apply(s, d); }, step);
}

/// Transcript of a reduction: replaying `moves` from `start` must land on
/// `end` exactly.
struct ReductionCertificate {
    DivisorClass start;
    std::vector<ReductionStep> moves;
    DivisorClass end;

    bool operator==(const ReductionCertificate&) const = default;
};

inline DivisorClass replay(const ReductionCertificate& cert)
{
    DivisorClass d = cert.start;
    for (const auto& step : cert.moves)
        d = apply_step(step, d);
    return d;
}

/// Greedy Weyl-chamber reduction: repeatedly apply the move at the three
/// largest multiplicities while it strictly decreases a (i.e. while
/// b_i + b_j + b_k > a), then sort the multiplicities descending.  The a
/// coefficient strictly decreases on every move, and the orbit under moves
/// and permutations is finite for r <= 8, so the loop terminates.
inline ReductionCertificate reduce(const DivisorClass& d)
{
    ReductionCertificate cert{d, {}, d};
    DivisorClass cur = d;
    const int r = cur.rank();

    if (r >= 3) {
        for (int guard = 0;; ++guard) {
            if (guard > 10000)
                throw std::runtime_error("reduction did not terminate");
            std::vector<int> order(static_cast<std::size_t>(r));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                return cur.b[static_cast<std::size_t>(x)] > cur.b[static_cast<std::size_t>(y)];
            });
            std::array<int, 3> centers{order[0] + 1, order[1] + 1, order[2] + 1};
            std::sort(centers.begin(), centers.end());
            const std::int64_t s = cur.b[static_cast<std::size_t>(centers[0] - 1)] +
                                   cur.b[static_cast<std::size_t>(centers[1] - 1)] +
                                   cur.b[static_cast<std::size_t>(centers[2] - 1)];
            if (s <= cur.h)
                break;
            const CremonaMove m{centers};
            cur = apply(m, cur);
            cert.moves.emplace_back(m);
        }
    }

    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return cur.b[static_cast<std::size_t>(x)] > cur.b[static_cast<std::size_t>(y)];
    });
    const bool already_sorted =
        std::is_sorted(order.begin(), order.end());
    if (!already_sorted) {
        IndexPermutation perm;
        perm.map.reserve(static_cast<std::size_t>(r));
        for (const int idx : order)
            perm.map.push_back(idx + 1);
        cur = apply(perm, cur);
        cert.moves.emplace_back(std::move(perm));
    }

    cert.end = cur;
    return cert;
}

/// Canonical representative of the Weyl orbit (descending multiplicities).
inline DivisorClass canonical_form(const DivisorClass& d)
{
    return reduce(d).end;
}

/// Same Weyl orbit, i.e. connected by quadratic transformations and point
/// relabellings.
inline bool equivalent(const DivisorClass& d1, const DivisorClass& d2)
{
    d1.require_same_rank(d2);
    return canonical_form(d1) == canonical_form(d2);
}

/// The very-ample classes embedding the blow-up in P^1 x P^2 as a (2,2)
/// divisor: each conic-bundle fiber class D' plus the degree-two class
/// 3H - sum E_i.  126 classes at r = 7; every member L has L.L = 6,
/// L.K = -4, genus 2 (confirmed by direct evaluation).
inline std::vector<DivisorClass> polarization_catalogue(int r = 7)
{
    const DivisorClass two_to_one(3, std::vector<std::int64_t>(static_cast<std::size_t>(r), 1));
    std::vector<DivisorClass> out;
    for (const auto& fiber : conic_bundle_classes(r))
        out.push_back(fiber + two_to_one);
    std::sort(out.begin(), out.end(), enumeration_order);
    return out;
}

}  // namespace blowup7
