#pragma once

// Union-closed families containing {} are cryptomorphic to interior
// operators on P(n): tau(X) = union of the members inside X. The fixed
// points recover the family, the fibers of tau form a congruence partition
// compatible with intersection, and nested fixed points embed each other's
// congruence classes. This header covers that whole translation layer.

#include <cstdint>
#include <utility>
#include <vector>

#include "ucs/family.hpp"

namespace ucs {

struct InteriorTable {
    int n = 1;
    std::vector<SubsetMask> map;  // size 2^n; map[X] = largest member inside X
};

// Requires a union-closed family containing {}; throws otherwise.
InteriorTable interior_operator(const SetFamily& family);

struct InteriorCheck {
    bool valid = false;      // exclusivity, monotonicity, idempotence
    SetFamily fixed_points;  // {X : map[X] == X}; the generating family when valid
};

// Monotonicity is checked on covering pairs X < X + {i}, which suffices.
InteriorCheck verify_interior_operator(const InteriorTable& table);

struct CongruencePartition {
    int n = 1;
    std::vector<std::int32_t> class_of;              // size 2^n
    std::vector<SubsetMask> class_min;               // per class; ids sorted by this mask
    std::vector<std::vector<SubsetMask>> class_members;

    int class_count() const { return static_cast<int>(class_min.size()); }

    // For hand-built partitions in tests: validates that `classes` cover
    // P(n) without overlap, then records each class with its intersection
    // as the nominal minimum (which verify_congruence re-examines).
    static CongruencePartition from_classes(int n, std::vector<std::vector<SubsetMask>> classes);
};

CongruencePartition congruence_partition(const InteriorTable& table);

// True iff p is a genuine congruence partition: every class is an
// intersection-closed interval sweep [min, Y] around its minimum, the
// minima form a union-closed family containing {} whose interior operator
// reproduces p, and A ~ B implies (A & C) ~ (B & C). The last axiom is
// checked on consecutive same-class pairs (transitivity covers the rest),
// against every C when exhaustive and against seeded samples otherwise.
// Exhaustive mode is limited to n <= 6.
bool verify_congruence(const CongruencePartition& p, bool exhaustive,
                       std::uint64_t seed = 0, int samples = 1024);

struct OrderEmbedding {
    SubsetMask source_fixed = 0;  // F
    SubsetMask target_fixed = 0;  // E, with E a subset of F
    // (X, X \ (F\E)) for X in the class of F, sorted by X. Injective and
    // order preserving into the class of E.
    std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
};

OrderEmbedding congruence_embedding(const CongruencePartition& p,
                                    SubsetMask target_e, SubsetMask source_f);

struct OrderedFamily {
    std::vector<SubsetMask> labels;         // F_1 .. F_m
    std::vector<std::int64_t> class_sizes;  // congruence class size of F_i, nondecreasing
};

// Label the members so class sizes never decrease and supersets never come
// after subsets. Greedy rule: among the unlabeled members of minimal class
// size, take an inclusion-maximal one, smallest mask first.
OrderedFamily class_size_ordering(const SetFamily& family, const CongruencePartition& p);

}  // namespace ucs
