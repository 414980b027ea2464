#pragma once

// Up-set machinery: carving an up-set out of the congruence classes so that
// it captures a 1/t fraction of the family, counting unions of intervals
// [A_i, [n]] exactly, and bounding how many pairwise-disjoint sets an up-set
// of at most half the cube can hold.

#include <cstdint>
#include <vector>

#include "ucs/family.hpp"
#include "ucs/interior.hpp"

namespace ucs {

struct PrefixBound {
    double lhs = 0.0;  // theta * (sum of all values)
    double rhs = 0.0;  // sum of the floor(theta*m) smallest values
    bool holds = false;
};

// For nondecreasing nonnegative values: a theta fraction of the total
// weight always covers the floor(theta*m) lightest entries.
PrefixBound weighted_prefix_inequality(const std::vector<double>& values, double theta);

struct HalvingUpsetCertificate {
    int t = 2;
    SetFamily upset;                      // union of the first ceil(m/t) classes
    std::int64_t family_size = 0;         // #F with {} adjoined
    std::int64_t size_bound = 0;          // ceil(2^n / t)
    std::int64_t intersection_count = 0;  // #(F intersect U)
    bool is_upset = false;
    bool size_ok = false;          // #U <= size_bound
    bool intersection_ok = false;  // t * intersection_count >= family_size
    bool claims_ok() const { return is_upset && size_ok && intersection_ok; }
};

// Shared scaffolding when several t values are certified for one family.
struct UpsetContext {
    SetFamily working;  // family with {} adjoined
    InteriorTable table;
    CongruencePartition partition;
    OrderedFamily ordering;
};

// Requires a union-closed nontrivial family; {} is adjoined if absent and
// the certificate counts against that working family.
UpsetContext make_upset_context(const SetFamily& family);
HalvingUpsetCertificate halving_certificate(const UpsetContext& ctx, int t);
HalvingUpsetCertificate construct_halving_upset(const SetFamily& family, int t);

// #{X : some A_i <= X} for pairwise-disjoint nonempty A_i, by direct
// enumeration, cross-checked against the inclusion-exclusion closed form
// 2^n * (1 - prod(1 - 2^-|A_i|)).
std::int64_t union_of_intervals_cardinality(const std::vector<SubsetMask>& sets, int n);

// Smallest integer t with t >= (1+1/e) * n / log2(n); any t sets of an
// up-set within half the cube then contain two that intersect. A relative
// guard band of 2^-40 absorbs float noise at the integer boundary.
int packing_threshold(int n);

struct PackingReport {
    std::int64_t max_disjoint = 0;
    int threshold = 0;
    bool size_precondition_ok = false;  // #U <= 2^(n-1), the theorem's hypothesis
    bool holds = false;                 // max_disjoint < threshold
};

// Exact maximum pairwise-disjoint subcollection of an up-set, by branch and
// bound over the inclusion-minimal members (any packing shrinks onto them).
// U must be an up-set without {}; n >= 2. The half-cube cap is recorded,
// not enforced, so over-full up-sets can still be measured.
PackingReport max_disjoint_packing(const SetFamily& upset);

}  // namespace ucs
