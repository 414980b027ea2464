#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "test_support.hpp"
#include "ucs/family.hpp"
#include "ucs/interior.hpp"

using namespace ucs;

namespace {

SetFamily fam(int n, std::vector<SubsetMask> members) { return SetFamily(n, std::move(members)); }

}  // namespace

TEST_CASE("interior operator on a chain") {
    const SetFamily f = fam(2, {0b00u, 0b01u, 0b11u});
    const InteriorTable t = interior_operator(f);
    CHECK(t.map == std::vector<SubsetMask>{0b00u, 0b01u, 0b00u, 0b11u});

    const InteriorCheck check = verify_interior_operator(t);
    CHECK(check.valid);
    CHECK(check.fixed_points.members() == f.members());
}

TEST_CASE("interior operator requires {} and union closure") {
    CHECK_THROWS_AS(interior_operator(fam(2, {0b01u, 0b11u})), std::invalid_argument);
    CHECK_THROWS_AS(interior_operator(fam(2, {0b00u, 0b01u, 0b10u})), std::invalid_argument);
}

TEST_CASE("identity and constant tables") {
    const InteriorTable identity = interior_operator(power_set(3));
    for (std::size_t x = 0; x < identity.map.size(); ++x)
        CHECK(identity.map[x] == static_cast<SubsetMask>(x));
    CHECK(verify_interior_operator(identity).fixed_points.size() == 8);

    const InteriorTable floor = interior_operator(fam(3, {0b000u, 0b111u}));
    for (std::size_t x = 0; x + 1 < floor.map.size(); ++x) CHECK(floor.map[x] == 0u);
    CHECK(floor.map.back() == 0b111u);
}

TEST_CASE("broken tables are rejected for the right axiom") {
    // tau({1}) = {2} escapes its argument
    CHECK(!verify_interior_operator(InteriorTable{2, {0b00u, 0b10u, 0b00u, 0b11u}}).valid);
    // monotone fails on the covering pair {1} < {1,2}
    CHECK(!verify_interior_operator(InteriorTable{2, {0b00u, 0b01u, 0b00u, 0b00u}}).valid);
    // idempotence fails: tau({1,2}) = {1} but tau({1}) = {}
    CHECK(!verify_interior_operator(InteriorTable{2, {0b00u, 0b00u, 0b00u, 0b01u}}).valid);

    CHECK_THROWS_AS(verify_interior_operator(InteriorTable{2, {0b00u, 0b01u}}),
                    std::invalid_argument);  // wrong table size
    CHECK_THROWS_AS(verify_interior_operator(InteriorTable{1, {0b00u, 0b10u}}),
                    std::invalid_argument);  // entry outside P(1)
}

TEST_CASE("round trip over every union-closed family with {} on n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const SetFamily& f : oracle::union_closed_families(n, true, false)) {
            const InteriorTable t = interior_operator(f);
            const InteriorCheck check = verify_interior_operator(t);
            CHECK(check.valid);
            CHECK(check.fixed_points.members() == f.members());
            // every value is the largest member below the argument
            for (std::size_t x = 0; x < t.map.size(); ++x) {
                CHECK(subset_of(t.map[x], static_cast<SubsetMask>(x)));
                CHECK(f.contains(t.map[x]));
                for (SubsetMask m : f.members())
                    if (subset_of(m, static_cast<SubsetMask>(x))) CHECK(subset_of(m, t.map[x]));
            }
        }
}

TEST_CASE("congruence partition of a chain") {
    const CongruencePartition p = congruence_partition(interior_operator(fam(2, {0b00u, 0b01u, 0b11u})));
    CHECK(p.class_count() == 3);
    CHECK(p.class_min == std::vector<SubsetMask>{0b00u, 0b01u, 0b11u});
    CHECK(p.class_members[0] == std::vector<SubsetMask>{0b00u, 0b10u});
    CHECK(p.class_members[1] == std::vector<SubsetMask>{0b01u});
    CHECK(p.class_members[2] == std::vector<SubsetMask>{0b11u});
    CHECK(p.class_of[0b10u] == 0);
    CHECK(verify_congruence(p, true));
}

TEST_CASE("congruence partition extremes") {
    const CongruencePartition fine = congruence_partition(interior_operator(power_set(3)));
    CHECK(fine.class_count() == 8);
    for (const auto& members : fine.class_members) CHECK(members.size() == 1);

    const CongruencePartition coarse =
        congruence_partition(interior_operator(fam(3, {0b000u, 0b111u})));
    CHECK(coarse.class_count() == 2);
    CHECK(coarse.class_members[0].size() == 7);
    CHECK(coarse.class_members[1].size() == 1);
    CHECK(verify_congruence(coarse, true));
}

TEST_CASE("hand-built partitions") {
    SUBCASE("a genuine congruence passes") {
        const CongruencePartition p = CongruencePartition::from_classes(
            2, {{0b00u, 0b10u}, {0b01u}, {0b11u}});
        CHECK(verify_congruence(p, true));
    }
    SUBCASE("pairing {} with {1,2} against {{1}} and {{2}} fails") {
        const CongruencePartition p = CongruencePartition::from_classes(
            2, {{0b00u, 0b11u}, {0b01u, 0b10u}});
        CHECK(!verify_congruence(p, true));
    }
    SUBCASE("interval-closed but intersection-incompatible classes fail") {
        // {{1},{2},{1,2}} in one class: meet {} lands in the other class.
        const CongruencePartition p = CongruencePartition::from_classes(
            2, {{0b00u}, {0b01u, 0b10u, 0b11u}});
        CHECK(!verify_congruence(p, true));
    }
    SUBCASE("from_classes validation") {
        CHECK_THROWS_AS(CongruencePartition::from_classes(2, {{0b00u, 0b01u}}),
                        std::invalid_argument);  // does not cover
        CHECK_THROWS_AS(CongruencePartition::from_classes(
                            2, {{0b00u, 0b01u}, {0b01u, 0b10u, 0b11u}}),
                        std::invalid_argument);  // overlap
        CHECK_THROWS_AS(CongruencePartition::from_classes(
                            2, {{}, {0b00u, 0b01u, 0b10u, 0b11u}}),
                        std::invalid_argument);  // empty class
    }
    SUBCASE("exhaustive verification refuses large ground sets") {
        const CongruencePartition p =
            congruence_partition(interior_operator(fam(7, {0b0u, full_mask(7)})));
        CHECK_THROWS_AS(verify_congruence(p, true), std::invalid_argument);
        CHECK(verify_congruence(p, false, 1));
    }
}

TEST_CASE("congruences verify exhaustively for every generating family on n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const SetFamily& f : oracle::union_closed_families(n, true, false)) {
            const CongruencePartition p = congruence_partition(interior_operator(f));
            CHECK(p.class_count() == f.size());
            std::int64_t covered = 0;
            for (const auto& members : p.class_members)
                covered += static_cast<std::int64_t>(members.size());
            CHECK(covered == (std::int64_t{1} << n));
            CHECK(verify_congruence(p, true));
            CHECK(verify_congruence(p, false, 20240817));
        }
}

TEST_CASE("order embeddings between congruence classes") {
    const SetFamily f = fam(2, {0b00u, 0b01u, 0b11u});
    const CongruencePartition p = congruence_partition(interior_operator(f));

    SUBCASE("collapsing {1} onto {}") {
        const OrderEmbedding emb = congruence_embedding(p, 0b00u, 0b01u);
        CHECK(emb.pairs == std::vector<std::pair<SubsetMask, SubsetMask>>{{0b01u, 0b00u}});
    }
    SUBCASE("identity embedding") {
        const OrderEmbedding emb = congruence_embedding(p, 0b00u, 0b00u);
        CHECK(emb.pairs == std::vector<std::pair<SubsetMask, SubsetMask>>{{0b00u, 0b00u},
                                                                          {0b10u, 0b10u}});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(congruence_embedding(p, 0b01u, 0b00u), std::invalid_argument);  // not nested
        CHECK_THROWS_AS(congruence_embedding(p, 0b10u, 0b11u), std::invalid_argument);  // {2} not fixed
    }
}

TEST_CASE("embeddings are injective and order preserving for every nested pair, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const SetFamily& f : oracle::union_closed_families(n, true, false)) {
            const CongruencePartition p = congruence_partition(interior_operator(f));
            for (SubsetMask big : f.members())
                for (SubsetMask small : f.members()) {
                    if (!subset_of(small, big)) continue;
                    const OrderEmbedding emb = congruence_embedding(p, small, big);
                    CHECK(emb.pairs.size() ==
                          p.class_members[static_cast<std::size_t>(p.class_of[big])].size());
                    std::set<SubsetMask> images;
                    for (auto [x, image] : emb.pairs) {
                        CHECK(image == (x & ~(big & ~small)));
                        CHECK(p.class_min[static_cast<std::size_t>(p.class_of[image])] == small);
                        images.insert(image);
                    }
                    CHECK(images.size() == emb.pairs.size());  // injective
                    for (auto [x, ix] : emb.pairs)
                        for (auto [y, iy] : emb.pairs)
                            CHECK(subset_of(x, y) == subset_of(ix, iy));
                    // the source class never outnumbers the target class
                    CHECK(emb.pairs.size() <=
                          p.class_members[static_cast<std::size_t>(p.class_of[small])].size());
                }
        }
}

TEST_CASE("class-size ordering") {
    SUBCASE("chain over two elements") {
        const SetFamily f = fam(2, {0b00u, 0b01u, 0b11u});
        const OrderedFamily ord = class_size_ordering(f, congruence_partition(interior_operator(f)));
        CHECK(ord.labels == std::vector<SubsetMask>{0b11u, 0b01u, 0b00u});
        CHECK(ord.class_sizes == std::vector<std::int64_t>{1, 1, 2});
    }
    SUBCASE("two-member family") {
        const SetFamily f = fam(3, {0b000u, 0b111u});
        const OrderedFamily ord = class_size_ordering(f, congruence_partition(interior_operator(f)));
        CHECK(ord.labels == std::vector<SubsetMask>{0b111u, 0b000u});
        CHECK(ord.class_sizes == std::vector<std::int64_t>{1, 7});
    }
    SUBCASE("a maximal chain comes out in reverse inclusion order") {
        const SetFamily f = fam(3, {0b000u, 0b001u, 0b011u, 0b111u});
        const OrderedFamily ord = class_size_ordering(f, congruence_partition(interior_operator(f)));
        CHECK(ord.labels == std::vector<SubsetMask>{0b111u, 0b011u, 0b001u, 0b000u});
        CHECK(ord.class_sizes == std::vector<std::int64_t>{1, 1, 2, 4});
    }
    SUBCASE("trivial families are rejected") {
        const SetFamily f = fam(2, {0b00u, 0b01u});
        CHECK_THROWS_AS(class_size_ordering(f, congruence_partition(interior_operator(f))),
                        std::invalid_argument);
    }
    SUBCASE("mismatched partition is rejected") {
        const SetFamily f = fam(2, {0b00u, 0b01u, 0b11u});
        const CongruencePartition other = congruence_partition(interior_operator(power_set(2)));
        CHECK_THROWS_AS(class_size_ordering(f, other), std::invalid_argument);
    }
}

TEST_CASE("ordering invariants hold for every nontrivial family with {} on n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const SetFamily& f : oracle::union_closed_families(n, true, true)) {
            const CongruencePartition p = congruence_partition(interior_operator(f));
            const OrderedFamily ord = class_size_ordering(f, p);
            REQUIRE(ord.labels.size() == static_cast<std::size_t>(f.size()));
            CHECK(ord.labels.front() == full_mask(n));  // F_1 is the full set
            CHECK(std::is_sorted(ord.class_sizes.begin(), ord.class_sizes.end()));
            for (std::size_t i = 0; i < ord.labels.size(); ++i)
                CHECK(ord.class_sizes[i] == static_cast<std::int64_t>(
                    p.class_members[static_cast<std::size_t>(p.class_of[ord.labels[i]])].size()));
            // no label may precede a label of one of its strict supersets
            std::vector<std::size_t> pos(std::size_t{1} << n, 0);
            for (std::size_t i = 0; i < ord.labels.size(); ++i) pos[ord.labels[i]] = i;
            for (SubsetMask x : f.members())
                for (SubsetMask s = (x + 1) | x; s <= full_mask(n); s = (s + 1) | x)
                    if (f.contains(s)) CHECK(pos[s] < pos[x]);
        }
}
