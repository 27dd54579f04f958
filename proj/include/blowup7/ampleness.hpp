#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blowup7/cremona.hpp"
#include "blowup7/divisor_class.hpp"

namespace blowup7 {

/// Incidence data for the blown-up points, 1-based indices.  Only the listed
/// incidences are assumed; whether actual points with exactly these
/// incidences exist is not checked.
struct PointConfiguration {
    int r = 7;
    std::vector<std::vector<int>> collinear;       // >= 3 points on one line
    std::vector<std::vector<int>> conconic;        // exactly 6 points on one conic
    std::vector<std::pair<int, int>> infinitely_near;  // (i, j): P_j infinitely near P_i

    bool operator==(const PointConfiguration&) const = default;
};

inline void validate(const PointConfiguration& config)
{
    if (config.r < 1)
        throw std::invalid_argument("configuration needs r >= 1");
    const auto check_index = [&](int idx) {
        if (idx < 1 || idx > config.r)
            throw std::invalid_argument("point index out of range");
    };
    const auto as_set = [&](const std::vector<int>& group) {
        std::set<int> s;
        for (const int idx : group) {
            check_index(idx);
            if (!s.insert(idx).second)
                throw std::invalid_argument("duplicate index in incidence set");
        }
        return s;
    };

    std::vector<std::set<int>> lines;
    for (const auto& group : config.collinear) {
        if (group.size() < 3)
            throw std::invalid_argument("collinear set needs at least 3 points");
        lines.push_back(as_set(group));
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(),
                                  lines[j].end(), std::back_inserter(common));
            if (common.size() >= 2)
                throw std::invalid_argument("two collinear sets share more than one point");
        }

    std::set<std::set<int>> conics;
    for (const auto& group : config.conconic) {
        if (group.size() != 6)
            throw std::invalid_argument("conconic set needs exactly 6 points");
        if (!conics.insert(as_set(group)).second)
            throw std::invalid_argument("duplicate conconic set");
    }

    std::set<std::pair<int, int>> pairs;
    for (const auto& [i, j] : config.infinitely_near) {
        check_index(i);
        check_index(j);
        if (i == j)
            throw std::invalid_argument("infinitely-near pair must have distinct indices");
        if (!pairs.insert({i, j}).second)
            throw std::invalid_argument("duplicate infinitely-near pair");
    }
}

/// The (-2) classes made effective by the configuration: H - E_i - E_j - E_k
/// for each 3-subset of a collinear set, 2H - sum of six E for each conconic
/// set, and E_i - E_j for P_j infinitely near P_i.
inline std::vector<DivisorClass> effective_minus_two(const PointConfiguration& config)
{
    validate(config);
    const auto n = static_cast<std::size_t>(config.r);
    std::vector<DivisorClass> out;

    for (const auto& group : config.collinear) {
        std::vector<int> pts = group;
        std::sort(pts.begin(), pts.end());
        const std::size_t m = pts.size();
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = x + 1; y < m; ++y)
                for (std::size_t z = y + 1; z < m; ++z) {
                    std::vector<std::int64_t> b(n, 0);
                    b[static_cast<std::size_t>(pts[x] - 1)] = 1;
                    b[static_cast<std::size_t>(pts[y] - 1)] = 1;
                    b[static_cast<std::size_t>(pts[z] - 1)] = 1;
                    out.emplace_back(1, std::move(b));
                }
    }
    for (const auto& group : config.conconic) {
        std::vector<std::int64_t> b(n, 0);
        for (const int idx : group)
            b[static_cast<std::size_t>(idx - 1)] = 1;
        out.emplace_back(2, std::move(b));
    }
    for (const auto& [i, j] : config.infinitely_near) {
        std::vector<std::int64_t> b(n, 0);
        b[static_cast<std::size_t>(i - 1)] = -1;  // class E_i - E_j
        b[static_cast<std::size_t>(j - 1)] = 1;
        out.emplace_back(0, std::move(b));
    }

    std::sort(out.begin(), out.end(), enumeration_order);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

enum class AmpleVerdict {
    VeryAmple,     // criterion satisfied in some reachable basis
    NotVeryAmple,  // an effective (-2) class N has L.N <= 0: no basis can help
    NotVerified,   // criterion not satisfied within the searched bases
};

inline std::string to_string(AmpleVerdict v)
{
    switch (v) {
        case AmpleVerdict::VeryAmple: return "very-ample";
        case AmpleVerdict::NotVeryAmple: return "not-very-ample";
        case AmpleVerdict::NotVerified: return "not-verified";
    }
    return "not-verified";
}

struct AmplenessReport {
    AmpleVerdict verdict = AmpleVerdict::NotVerified;
    int failed_condition = 0;              // 1..7 per the criterion, 0 on pass
    std::optional<DivisorClass> witness;   // class violating the failed condition
    DivisorClass basis_class;              // L presented in the checked basis
    ReductionCertificate normalization;    // replayable route from L to basis_class
    int search_depth_used = 0;
};

namespace detail {

/// First violated condition among (i)-(v), (vii) for a descending-sorted
/// presentation; condition (vi) is basis-independent and handled by the
/// caller.  Returns {0, nullopt} on pass.
inline std::pair<int, std::optional<DivisorClass>> check_presentation(const DivisorClass& L)
{
    const auto r = L.b.size();
    if (!std::is_sorted(L.b.begin(), L.b.end(), std::greater<>()))  // condition (iv)
        throw std::logic_error("presentation must be sorted descending");

    const auto line_witness = [&](std::size_t ones) {
        std::vector<std::int64_t> b(r, 0);
        std::fill_n(b.begin(), ones, 1);
        return DivisorClass(1, std::move(b));
    };
    if (L.h - L.b[0] <= 0)
        return {1, line_witness(1)};
    if (L.h - L.b[0] - L.b[1] <= 0)
        return {2, line_witness(2)};
    if (L.h - L.b[0] - L.b[1] - L.b[2] < 0)
        return {3, line_witness(3)};
    for (std::size_t i = 0; i < r; ++i)
        if (L.b[i] <= 0) {
            std::vector<std::int64_t> b(r, 0);
            b[i] = -1;  // the exceptional class E_{i+1}
            return {5, DivisorClass(0, std::move(b))};
        }
    if (k_degree(L) > -3)
        return {7, canonical_class(static_cast<int>(r))};
    return {0, std::nullopt};
}

}  // namespace detail

/// Very-ampleness criterion for blow-ups of the plane.  The criterion
/// quantifies existentially over exceptional configurations (bases), so L is
/// first carried to its Weyl-canonical presentation by the greedy reduction;
/// search_depth > 0 additionally explores presentations reachable by that
/// many further quadratic moves.  Condition (vi) -- L.N > 0 for every
/// effective (-2) class N of the configuration -- is invariant under basis
/// change and is checked first in the original coordinates; its failure is
/// the one definitive negative.
inline AmplenessReport is_very_ample(const DivisorClass& L, const PointConfiguration& config,
                                     int search_depth = 0)
{
    validate(config);
    if (L.rank() != config.r)
        throw std::invalid_argument("incompatible lattice ranks");
    if (config.r < 3)
        throw std::invalid_argument("very-ampleness criterion needs r >= 3");

    AmplenessReport report;
    report.normalization = reduce(L);
    report.basis_class = report.normalization.end;
    report.search_depth_used = 0;

    for (const auto& root : effective_minus_two(config)) {
        if (intersect(L, root) <= 0) {
            report.verdict = AmpleVerdict::NotVeryAmple;
            report.failed_condition = 6;
            report.witness = root;
            return report;
        }
    }

    auto [violated, witness] = detail::check_presentation(report.basis_class);
    if (violated == 0) {
        report.verdict = AmpleVerdict::VeryAmple;
        return report;
    }

    // Breadth-first search over further quadratic moves, each followed by a
    // descending re-sort; every explored presentation stays replayably
    // linked to L.
    struct Node {
        DivisorClass presented;
        std::vector<ReductionStep> steps;  // from L
    };
    std::set<std::string> visited{to_string(report.basis_class)};
    std::vector<Node> frontier{{report.basis_class, report.normalization.moves}};
    const int r = config.r;
    for (int depth = 1; depth <= search_depth; ++depth) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int i = 1; i <= r - 2; ++i)
                for (int j = i + 1; j <= r - 1; ++j)
                    for (int k = j + 1; k <= r; ++k) {
                        const CremonaMove m{{i, j, k}};
                        auto steps = node.steps;
                        DivisorClass cand = apply(m, node.presented);
                        steps.emplace_back(m);
                        // re-sort descending, recording the permutation
                        std::vector<int> order(static_cast<std::size_t>(r));
                        std::iota(order.begin(), order.end(), 0);
                        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                            return cand.b[static_cast<std::size_t>(x)] >
                                   cand.b[static_cast<std::size_t>(y)];
                        });
                        if (!std::is_sorted(order.begin(), order.end())) {
                            IndexPermutation perm;
                            for (const int idx : order)
                                perm.map.push_back(idx + 1);
                            cand = apply(perm, cand);
                            steps.emplace_back(std::move(perm));
                        }
                        if (!visited.insert(to_string(cand)).second)
                            continue;
                        auto [v2, w2] = detail::check_presentation(cand);
                        if (v2 == 0) {
                            report.verdict = AmpleVerdict::VeryAmple;
                            report.basis_class = cand;
                            report.normalization =
                                ReductionCertificate{L, std::move(steps), cand};
                            report.search_depth_used = depth;
                            return report;
                        }
                        next.push_back({std::move(cand), std::move(steps)});
                    }
        }
        frontier = std::move(next);
        report.search_depth_used = depth;
    }

    report.verdict = AmpleVerdict::NotVerified;
    report.failed_condition = violated;
    report.witness = witness;
    report.search_depth_used = search_depth;
    return report;
}

}  // namespace blowup7
