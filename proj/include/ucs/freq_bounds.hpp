#pragma once

// Frequency lower bounds for nontrivial union-closed families. The central
// fact: if x lies in a member A, then x lies in at least #F/(2^(|A|-1)+1)
// members, because X -> X + A maps the x-free members onto [A, [n]] with
// fibers of size exactly 2^(|A|-1). Ranking elements by frequency gives a
// per-rank version, with the extremal construction P(k-1) + {[n]} showing
// the plus-one denominators are the best possible.

#include <cstdint>
#include <vector>

#include "ucs/family.hpp"
#include "ucs/rational.hpp"

namespace ucs {

struct HalfFrequencyVerdict {
    int witness_element = 0;  // most frequent element (smallest on ties)
    std::int64_t max_count = 0;
    std::int64_t total = 0;
    bool holds = false;  // 2 * max_count >= total
};

// The union-closed sets conjecture for one family, decided exactly.
HalfFrequencyVerdict half_frequency_verdict(const SetFamily& family);

struct WitnessBoundCertificate {
    int element = 0;        // x
    SubsetMask witness = 0; // smallest member containing x, by (cardinality, mask)
    std::int64_t count = 0; // frequency of x
    Rational bound;         // #F / (2^(|witness|-1) + 1)
    bool holds = false;     // count >= bound, exactly; false would be a bug
};

// Requires x in some member; the minimum-cardinality witness is chosen.
WitnessBoundCertificate witness_frequency_bound(const SetFamily& family, int element);

struct FrequencyProfileRow {
    int rank = 0;      // k, 1-based
    int element = 0;   // k-th most frequent element
    std::int64_t count = 0;
    bool geometric_ok = false;   // count * 2^k >= #F  (conditional bound)
    bool plus_one_ok = false;    // count * (2^(k-1)+1) >= #F
    bool plus_one_equality = false;
};

struct FrequencyProfile {
    std::int64_t total = 0;
    std::vector<FrequencyProfileRow> rows;  // ranks 1..n
    // The plus-one bound is a theorem at the two bottom ranks.
    bool last_rank_ok = false;         // k = n
    bool second_last_rank_ok = false;  // k = n-1 (true when n == 1)
};

FrequencyProfile frequency_profile(const SetFamily& family);

// P(k-1) adjoined with [n]: 2^(k-1)+1 members, and the k-th most frequent
// element achieves the plus-one bound with equality. Requires 1 <= k <= n.
SetFamily extremal_family(int n, int k);

}  // namespace ucs
