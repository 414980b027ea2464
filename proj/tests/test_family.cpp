#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "test_support.hpp"
#include "ucs/family.hpp"

using namespace ucs;

namespace {

SetFamily fam(int n, std::vector<SubsetMask> members) { return SetFamily(n, std::move(members)); }

// Membership columns: column(i) = indices of the members containing i.
// A family separates iff all n columns are pairwise distinct.
bool separating_by_columns(const SetFamily& f) {
    std::vector<std::set<int>> columns(static_cast<std::size_t>(f.ground_size()));
    for (int idx = 0; idx < f.size(); ++idx)
        for (int i = 1; i <= f.ground_size(); ++i)
            if (f.members()[static_cast<std::size_t>(idx)] >> (i - 1) & 1)
                columns[static_cast<std::size_t>(i - 1)].insert(idx);
    for (std::size_t a = 0; a < columns.size(); ++a)
        for (std::size_t b = a + 1; b < columns.size(); ++b)
            if (columns[a] == columns[b]) return false;
    return true;
}

SetFamily complement_family(const SetFamily& f) {
    std::vector<SubsetMask> rest;
    for (SubsetMask m = 0; m <= full_mask(f.ground_size()); ++m)
        if (!f.contains(m)) rest.push_back(m);
    return SetFamily::from_sorted_unique(f.ground_size(), std::move(rest));
}

}  // namespace

TEST_CASE("mask helpers") {
    CHECK(full_mask(1) == 0b1u);
    CHECK(full_mask(4) == 0b1111u);
    CHECK(set_size(0) == 0);
    CHECK(set_size(0b1011u) == 3);
    CHECK(subset_of(0b001u, 0b011u));
    CHECK(!subset_of(0b100u, 0b011u));
    CHECK(subset_of(0u, 0u));
    CHECK(format_mask(0) == "{}");
    CHECK(format_mask(0b101u) == "{1,3}");
}

TEST_CASE("constructor validates and sorts") {
    const SetFamily f(3, {0b110u, 0b001u});
    CHECK(f.members() == std::vector<SubsetMask>{0b001u, 0b110u});
    CHECK(f.ground_size() == 3);
    CHECK(f.size() == 2);
    CHECK(f.contains(0b110u));
    CHECK(!f.contains(0b010u));
    CHECK(f.union_of_members() == 0b111u);

    CHECK_THROWS_AS(SetFamily(2, {0b01u, 0b01u}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(SetFamily(2, {0b100u}), std::invalid_argument);        // outside P([2])
    CHECK_THROWS_AS(SetFamily(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(SetFamily(kMaxGroundSize + 1, {}), std::invalid_argument);
    CHECK_NOTHROW(SetFamily(kMaxGroundSize, {}));
}

TEST_CASE("classification of the standard small examples") {
    SUBCASE("missing union") {
        const FamilyFlags flags = classify_family(fam(2, {0b00u, 0b01u, 0b10u}));
        CHECK(!flags.union_closed);
        CHECK(flags.intersection_closed);
        CHECK(flags.nontrivial);
        CHECK(flags.contains_empty);
        CHECK(!flags.contains_full);
    }
    SUBCASE("chain") {
        const FamilyFlags flags = classify_family(fam(2, {0b00u, 0b01u, 0b11u}));
        CHECK(flags.union_closed);
        CHECK(flags.intersection_closed);
        CHECK(flags.nontrivial);
        CHECK(flags.separating);
        CHECK(flags.contains_empty);
        CHECK(flags.contains_full);
        CHECK(!flags.up_set);
    }
    SUBCASE("power set of {1,2} plus the full set") {
        const SetFamily f(3, {0b000u, 0b001u, 0b010u, 0b011u, 0b111u});
        const FamilyFlags flags = classify_family(f);
        CHECK(flags.union_closed);
        CHECK(flags.intersection_closed);
        CHECK(flags.nontrivial);
        CHECK(flags.separating == separating_by_columns(f));
        CHECK(flags.separating);
    }
    SUBCASE("up-set") {
        const FamilyFlags flags = classify_family(fam(2, {0b01u, 0b11u}));
        CHECK(flags.up_set);
        CHECK(flags.union_closed);
        CHECK(flags.nontrivial);
    }
    SUBCASE("empty family") {
        const FamilyFlags flags = classify_family(fam(2, {}));
        CHECK(flags.union_closed);  // vacuously
        CHECK(flags.intersection_closed);
        CHECK(!flags.nontrivial);
        CHECK(!flags.separating);  // both columns are empty
    }
}

TEST_CASE("classification agrees with definitions on every family over n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        oracle::for_each_family(n, [&](const SetFamily& f) {
            const FamilyFlags flags = classify_family(f);
            CHECK(flags.separating == separating_by_columns(f));
            // union-closed + nontrivial forces [n] itself to be a member
            if (flags.union_closed && flags.nontrivial) CHECK(flags.contains_full);
            bool closed = true, intersection = true, upset = true;
            for (SubsetMask a : f.members())
                for (SubsetMask b : f.members()) {
                    if (!f.contains(a | b)) closed = false;
                    if (!f.contains(a & b)) intersection = false;
                }
            for (SubsetMask a : f.members())
                for (SubsetMask s = a;; s = (s + 1) | a) {
                    if (!f.contains(s)) upset = false;
                    if (s == full_mask(n)) break;
                }
            CHECK(flags.union_closed == closed);
            CHECK(flags.intersection_closed == intersection);
            CHECK(flags.up_set == upset);
            CHECK(flags.up_set == is_up_set(f));
        });
    }
}

TEST_CASE("intersecting detection") {
    CHECK(is_intersecting(fam(3, {0b011u, 0b110u, 0b111u})));
    CHECK(!is_intersecting(fam(3, {0b001u, 0b110u})));
    CHECK(!is_intersecting(fam(3, {0b000u, 0b111u})));  // {} kills it
    CHECK(is_intersecting(fam(3, {})));                 // vacuously
    CHECK(is_intersecting(fam(3, {0b101u})));
}

TEST_CASE("union closure") {
    SUBCASE("adds the missing union") {
        const SetFamily closed = union_closure(fam(2, {0b01u, 0b10u}));
        CHECK(closed.members() == std::vector<SubsetMask>{0b01u, 0b10u, 0b11u});
    }
    SUBCASE("three pairs over [3] need only the triple") {
        const SetFamily closed = union_closure(fam(3, {0b011u, 0b110u, 0b101u}));
        CHECK(closed.members() == std::vector<SubsetMask>{0b011u, 0b101u, 0b110u, 0b111u});
    }
    SUBCASE("idempotent and extensive on random generators") {
        std::mt19937_64 rng(20240817);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            std::set<SubsetMask> distinct;
            const int draws = static_cast<int>(rng() % 6);
            for (int d = 0; d < draws; ++d) distinct.insert(static_cast<SubsetMask>(rng()) & full_mask(n));
            const SetFamily gens(n, std::vector<SubsetMask>(distinct.begin(), distinct.end()));
            const SetFamily closed = union_closure(gens);
            CHECK(classify_family(closed).union_closed);
            for (SubsetMask g : gens.members()) CHECK(closed.contains(g));
            CHECK(union_closure(closed).members() == closed.members());
            CHECK(closed.members() == oracle::closure_by_iteration(gens).members());
        }
    }
}

TEST_CASE("frequency vector and ordering") {
    const SetFamily f(3, {0b000u, 0b001u, 0b010u, 0b011u, 0b111u});
    const FrequencyVector freq = frequency_vector(f);
    CHECK(freq.total == 5);
    CHECK(freq.counts == std::vector<std::int64_t>{3, 3, 1});
    CHECK(frequency_ordering(f) == std::vector<int>{1, 2, 3});  // tie at the top: smaller first

    const SetFamily g(3, {0b010u, 0b110u, 0b100u, 0b011u});  // counts 1, 3, 2
    CHECK(frequency_vector(g).counts == std::vector<std::int64_t>{1, 3, 2});
    CHECK(frequency_ordering(g) == std::vector<int>{2, 3, 1});

    CHECK(frequency_vector(fam(2, {0b00u})).counts == std::vector<std::int64_t>{0, 0});
    CHECK(frequency_vector(fam(2, {0b00u})).total == 1);

    const FrequencyVector cube = frequency_vector(power_set(3));
    CHECK(cube.total == 8);
    CHECK(cube.counts == std::vector<std::int64_t>{4, 4, 4});
}

TEST_CASE("separation quotient") {
    SUBCASE("inseparable pair collapses") {
        const SeparationQuotient q = separation_quotient(fam(3, {0b000u, 0b011u, 0b111u}));
        CHECK(q.family.ground_size() == 2);
        CHECK(q.family.members() == std::vector<SubsetMask>{0b00u, 0b01u, 0b11u});
        CHECK(q.element_class == std::vector<int>{1, 1, 2});
    }
    SUBCASE("separating families map to themselves") {
        const SetFamily f(3, {0b000u, 0b001u, 0b011u, 0b111u});
        const SeparationQuotient q = separation_quotient(f);
        CHECK(q.family.members() == f.members());
        CHECK(q.element_class == std::vector<int>{1, 2, 3});
    }
    SUBCASE("frequency is preserved classwise") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            std::set<SubsetMask> distinct;
            for (int d = 0; d < 5; ++d) distinct.insert(static_cast<SubsetMask>(rng()) & full_mask(n));
            const SetFamily f(n, std::vector<SubsetMask>(distinct.begin(), distinct.end()));
            const SeparationQuotient q = separation_quotient(f);
            CHECK(q.family.size() == f.size());
            CHECK(classify_family(q.family).separating);
            const FrequencyVector before = frequency_vector(f);
            const FrequencyVector after = frequency_vector(q.family);
            for (int i = 1; i <= n; ++i)
                CHECK(before.counts[static_cast<std::size_t>(i - 1)] ==
                      after.counts[static_cast<std::size_t>(q.element_class[static_cast<std::size_t>(i - 1)] - 1)]);
        }
    }
}

TEST_CASE("derived family above an element") {
    SUBCASE("chain") {
        const SetFamily d = derived_family_above(fam(2, {0b00u, 0b01u, 0b11u}), 1);
        CHECK(d.ground_size() == 1);
        CHECK(d.members() == std::vector<SubsetMask>{0b0u, 0b1u});
    }
    SUBCASE("square above 2") {
        const SetFamily d = derived_family_above(power_set(2), 2);
        CHECK(d.ground_size() == 1);
        CHECK(d.members() == std::vector<SubsetMask>{0b0u, 0b1u});
    }
    SUBCASE("full set only") {
        const SetFamily d = derived_family_above(fam(4, {0b1111u}), 3);
        CHECK(d.ground_size() == 3);
        CHECK(d.members() == std::vector<SubsetMask>{0b111u});
    }
    SUBCASE("union closed in, union closed out") {
        for (const SetFamily& f : oracle::union_closed_families(3, false, true))
            for (int x = 1; x <= 3; ++x) {
                const FrequencyVector freq = frequency_vector(f);
                if (freq.counts[static_cast<std::size_t>(x - 1)] == 0) continue;
                const SetFamily d = derived_family_above(f, x);
                CHECK(classify_family(d).union_closed);
                CHECK(d.size() == freq.counts[static_cast<std::size_t>(x - 1)]);
            }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(derived_family_above(fam(1, {0b1u}), 1), std::invalid_argument);
        CHECK_THROWS_AS(derived_family_above(power_set(2), 3), std::invalid_argument);
        CHECK_THROWS_AS(derived_family_above(power_set(2), 0), std::invalid_argument);
    }
}

TEST_CASE("complement dual") {
    const SetFamily chain(2, {0b00u, 0b01u, 0b11u});
    const SetFamily dual = complement_dual(chain);
    CHECK(dual.members() == std::vector<SubsetMask>{0b00u, 0b10u, 0b11u});
    CHECK(classify_family(dual).intersection_closed);

    SUBCASE("involution swapping closure kinds, on every family over n <= 3") {
        for (int n = 1; n <= 3; ++n)
            oracle::for_each_family(n, [&](const SetFamily& f) {
                const SetFamily d = complement_dual(f);
                CHECK(complement_dual(d).members() == f.members());
                const FamilyFlags before = classify_family(f);
                const FamilyFlags after = classify_family(d);
                CHECK(before.union_closed == after.intersection_closed);
                CHECK(before.intersection_closed == after.union_closed);
            });
    }
    SUBCASE("frequency duality: x frequent in F iff x rare in the dual") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            std::set<SubsetMask> distinct;
            for (int d = 0; d < 8; ++d) distinct.insert(static_cast<SubsetMask>(rng()) & full_mask(n));
            const SetFamily f(n, std::vector<SubsetMask>(distinct.begin(), distinct.end()));
            const FrequencyVector fv = frequency_vector(f);
            const FrequencyVector dv = frequency_vector(complement_dual(f));
            for (int i = 0; i < n; ++i) {
                CHECK(fv.counts[static_cast<std::size_t>(i)] + dv.counts[static_cast<std::size_t>(i)] == fv.total);
                CHECK((2 * fv.counts[static_cast<std::size_t>(i)] >= fv.total) ==
                      (2 * dv.counts[static_cast<std::size_t>(i)] <= dv.total));
            }
        }
    }
}

TEST_CASE("simply rooted families are exactly the complements of union-closed ones") {
    CHECK(is_simply_rooted(fam(3, {})));
    CHECK(is_simply_rooted(fam(3, {0b001u})));
    CHECK(is_simply_rooted(fam(3, {0b000u, 0b001u})));  // {} needs no root
    CHECK(!is_simply_rooted(fam(2, {0b11u})));          // neither [{1},{1,2}] nor [{2},{1,2}] inside

    for (int n = 1; n <= 4; ++n) {
        oracle::for_each_family(n, [&](const SetFamily& f) {
            CHECK(classify_family(f).union_closed == is_simply_rooted(complement_family(f)));
        });
    }
}

TEST_CASE("power set, adjoining the empty set, formatting") {
    CHECK(power_set(2).members() == std::vector<SubsetMask>{0b00u, 0b01u, 0b10u, 0b11u});
    CHECK(power_set(4).size() == 16);

    const SetFamily f(2, {0b01u, 0b11u});
    CHECK(family_with_empty(f).members() == std::vector<SubsetMask>{0b00u, 0b01u, 0b11u});
    CHECK(family_with_empty(family_with_empty(f)).size() == 3);

    CHECK(format_family(fam(2, {0b00u, 0b01u, 0b11u})) == "{{}, {1}, {1,2}}");
    CHECK(format_family(fam(2, {})) == "{}");
}
