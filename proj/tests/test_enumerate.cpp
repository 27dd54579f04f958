#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "blowup7/enumerate.hpp"

using namespace blowup7;

namespace {

std::map<FamilyLabel, int> family_counts(const std::vector<DivisorClass>& classes)
{
    std::map<FamilyLabel, int> counts;
    for (const auto& d : classes)
        ++counts[classify(d)];
    return counts;
}

bool all_distinct(const std::vector<DivisorClass>& classes)
{
    std::set<std::string> seen;
    for (const auto& d : classes)
        if (!seen.insert(to_string(d)).second)
            return false;
    return true;
}

}  // namespace

TEST_CASE("56 minus-one classes at r = 7")
{
    const auto classes = minus_one_classes(7);
    REQUIRE(classes.size() == 56);
    CHECK(all_distinct(classes));

    const auto counts = family_counts(classes);
    CHECK(counts.at(FamilyLabel::EXCEPTIONAL) == 7);
    CHECK(counts.at(FamilyLabel::LINE_THROUGH_TWO) == 21);
    CHECK(counts.at(FamilyLabel::CONIC_THROUGH_FIVE) == 21);
    CHECK(counts.at(FamilyLabel::CUBIC_DOUBLE_POINT) == 7);

    for (const auto& d : classes) {
        CHECK(self_intersection(d) == -1);
        CHECK(genus(d) == 0);
        CHECK(k_degree(d) == -1);
        CHECK(d.h >= 0);
        CHECK(d.h <= 3);
    }
}

TEST_CASE("minus-one class counts at other ranks")
{
    CHECK(minus_one_classes(1).size() == 1);
    CHECK(minus_one_classes(1).front() == DivisorClass(0, {-1}));
    CHECK(minus_one_classes(2).size() == 3);   // E1, E2, L12
    CHECK(minus_one_classes(6).size() == 27);  // the 27 lines of a cubic surface
    CHECK(minus_one_classes(8).size() == 240);

    CHECK_THROWS_MATCHES(minus_one_classes(9), std::invalid_argument,
                         Catch::Matchers::Message("infinite class set"));
    CHECK_THROWS_AS(minus_one_classes(0), std::invalid_argument);
}

TEST_CASE("63 normalized minus-two roots at r = 7, 126 with signs")
{
    const auto roots = minus_two_classes(7);
    REQUIRE(roots.size() == 63);
    CHECK(all_distinct(roots));

    const auto counts = family_counts(roots);
    CHECK(counts.at(FamilyLabel::ROOT_DIFFERENCE) == 21);
    CHECK(counts.at(FamilyLabel::ROOT_LINE_THREE) == 35);
    CHECK(counts.at(FamilyLabel::ROOT_CONIC_SIX) == 7);

    for (const auto& d : roots) {
        CHECK(self_intersection(d) == -2);
        CHECK(k_degree(d) == 0);
        CHECK(d.h >= 0);
        CHECK(d.h <= 2);
    }

    const auto full = minus_two_classes(7, false);
    REQUIRE(full.size() == 126);
    CHECK(all_distinct(full));
    // closed under negation
    for (const auto& d : full)
        CHECK(std::find(full.begin(), full.end(), -d) != full.end());
}

TEST_CASE("minus-two roots at r = 3")
{
    const auto roots = minus_two_classes(3);
    REQUIRE(roots.size() == 4);
    const auto counts = family_counts(roots);
    CHECK(counts.at(FamilyLabel::ROOT_DIFFERENCE) == 3);
    CHECK(counts.at(FamilyLabel::ROOT_LINE_THREE) == 1);
}

TEST_CASE("root-difference normalization picks E_i - E_j with i < j")
{
    for (const auto& d : minus_two_classes(7)) {
        if (d.h != 0)
            continue;
        // class E_i - E_j stores b_i = -1, b_j = +1; normalized means the
        // -1 entry comes first
        const auto it = std::find_if(d.b.begin(), d.b.end(),
                                     [](std::int64_t v) { return v != 0; });
        REQUIRE(it != d.b.end());
        CHECK(*it == -1);
    }
}

TEST_CASE("126 conic-bundle classes split 7/35/42/35/7")
{
    const auto classes = conic_bundle_classes(7);
    REQUIRE(classes.size() == 126);
    CHECK(all_distinct(classes));

    std::map<std::int64_t, int> by_degree;
    for (const auto& d : classes)
        ++by_degree[d.h];
    CHECK(by_degree == std::map<std::int64_t, int>{{1, 7}, {2, 35}, {3, 42}, {4, 35}, {5, 7}});

    const auto counts = family_counts(classes);
    CHECK(counts.at(FamilyLabel::CB_CASE_I) == 7);
    CHECK(counts.at(FamilyLabel::CB_CASE_II) == 35);
    CHECK(counts.at(FamilyLabel::CB_CASE_III) == 42);
    CHECK(counts.at(FamilyLabel::CB_CASE_IV) == 35);
    CHECK(counts.at(FamilyLabel::CB_CASE_V) == 7);

    for (const auto& d : classes) {
        CHECK(self_intersection(d) == 0);
        CHECK(genus(d) == 0);
        CHECK(k_degree(d) == -2);
        CHECK(*std::min_element(d.b.begin(), d.b.end()) >= 0);
    }

    const auto contains = [&](const DivisorClass& d) {
        return std::find(classes.begin(), classes.end(), d) != classes.end();
    };
    CHECK(contains(DivisorClass(1, {1, 0, 0, 0, 0, 0, 0})));
    CHECK(contains(DivisorClass(5, {1, 2, 2, 2, 2, 2, 2})));
}

TEST_CASE("the unique degree-two map class is 3H - sum E_i")
{
    const auto classes = degree_two_classes(7);
    REQUIRE(classes.size() == 1);
    CHECK(classes.front() == DivisorClass(3, {1, 1, 1, 1, 1, 1, 1}));

    // stays unique under a generous degree cap
    const auto relaxed = degree_two_classes(7, 12);
    REQUIRE(relaxed.size() == 1);
    CHECK(relaxed.front() == classes.front());

    // the expected-dimension constraint is doing real work: this class meets
    // every other requirement but fails sum b >= 3a - 2
    const DivisorClass d(2, {1, 1, 0, 0, 0, 0, 0});
    CHECK(self_intersection(d) == 2);
    CHECK(std::find(classes.begin(), classes.end(), d) == classes.end());
}

TEST_CASE("12 lines under the polarization (4;2,1,1,1,1,1,1)")
{
    const DivisorClass L(4, {2, 1, 1, 1, 1, 1, 1});
    const auto lines = lines_under_polarization(L);
    REQUIRE(lines.size() == 12);

    std::vector<DivisorClass> exceptional, through_p1;
    for (const auto& c : lines) {
        CHECK(self_intersection(c) == -1);
        CHECK(genus(c) == 0);
        CHECK(intersect(c, L) == 1);
        if (classify(c) == FamilyLabel::EXCEPTIONAL)
            exceptional.push_back(c);
        else {
            REQUIRE(classify(c) == FamilyLabel::LINE_THROUGH_TWO);
            CHECK(c.b[0] == 1);  // all lines pass through the double point
            through_p1.push_back(c);
        }
    }
    REQUIRE(exceptional.size() == 6);
    REQUIRE(through_p1.size() == 6);
    // E_1 itself is not a line: E_1 . L = 2
    CHECK(std::find(lines.begin(), lines.end(), DivisorClass(0, {-1, 0, 0, 0, 0, 0, 0})) ==
          lines.end());

    // E_i . L_1j = delta_ij, and the matched pairs sum to the fiber class
    const DivisorClass fiber(1, {1, 0, 0, 0, 0, 0, 0});
    for (const auto& e : exceptional) {
        int partners = 0;
        for (const auto& l : through_p1) {
            const auto p = intersect(e, l);
            CHECK((p == 0 || p == 1));
            if (p == 1) {
                ++partners;
                CHECK(e + l == fiber);
            }
        }
        CHECK(partners == 1);
    }
    // no intersections within either six-element family
    for (const auto& batch : {exceptional, through_p1})
        for (std::size_t i = 0; i < batch.size(); ++i)
            for (std::size_t j = i + 1; j < batch.size(); ++j)
                CHECK(intersect(batch[i], batch[j]) == 0);
}

TEST_CASE("enumeration output is canonically sorted and deterministic")
{
    const auto a = minus_one_classes(7);
    const auto b = minus_one_classes(7);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(), enumeration_order));
    const auto cb = conic_bundle_classes(7);
    CHECK(std::is_sorted(cb.begin(), cb.end(), enumeration_order));
}

TEST_CASE("family construction rejects mislabelled members")
{
    CHECK_THROWS_AS(
        ClassFamily::make(FamilyLabel::EXCEPTIONAL, {DivisorClass(1, {1, 1, 0, 0, 0, 0, 0})}),
        std::invalid_argument);
    CHECK_NOTHROW(
        ClassFamily::make(FamilyLabel::LINE_THROUGH_TWO, {DivisorClass(1, {1, 1, 0, 0, 0, 0, 0})}));
}

TEST_CASE("grouping by family covers every class exactly once")
{
    const auto classes = minus_one_classes(7);
    const auto families = group_by_family(classes);
    std::size_t total = 0;
    for (const auto& f : families)
        total += f.members.size();
    CHECK(total == classes.size());
    CHECK(families.size() == 4);
}
