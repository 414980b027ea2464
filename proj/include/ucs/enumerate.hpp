#pragma once

// Exhaustive and randomized populations of union-closed families, plus the
// sweep driver that runs selected checkers over a population. Violations of
// proven statements abort the sweep as implementation bugs; violations of
// conjectured statements are collected as findings.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ucs/family.hpp"

namespace ucs {

// Visit every union-closed family over [n] matching the flags, each exactly
// once, in a fixed order. Membership of each mask is decided in decreasing
// mask order, so a union of two members is always already decided and the
// closure constraint prunes at insertion time. The visitor returns false to
// stop early. Returns the number of families visited. Hard wall at n <= 5.
std::int64_t enumerate_union_closed(int n, bool require_empty, bool nontrivial_only,
                                    const std::function<bool(const SetFamily&)>& visit);

// Union closure of `generator_count` masks drawn from a seeded mt19937_64,
// together with [n]. Deterministic for a fixed seed.
SetFamily random_union_closed(int n, int generator_count, std::uint64_t seed);

// Random up-set with at most size_cap members (1 <= size_cap <= 2^(n-1)):
// starts from {[n]} and repeatedly up-closes random nonempty masks,
// rejecting any draw that would overflow the cap. Never contains {}.
SetFamily random_upset(int n, std::int64_t size_cap, std::uint64_t seed);

enum class SweepCheck : unsigned {
    conjecture = 1u << 0,     // half-frequency conjecture          (finding)
    frequencies = 1u << 1,    // per-rank plus-one/geometric bounds (finding)
    witness = 1u << 2,        // witness bound for every element    (proven)
    ranks = 1u << 3,          // plus-one bound at ranks n, n-1     (proven)
    interior = 1u << 4,       // cryptomorphism round trip           (proven)
    upset = 1u << 5,          // fractional up-set certificate       (proven)
    packing = 1u << 6,        // disjoint packing below threshold    (proven)
    intersecting = 1u << 7,   // half-size intersecting subfamily    (finding)
};
inline constexpr unsigned kAllSweepChecks = (1u << 8) - 1;

struct Population {
    enum class Kind { exhaustive, random } kind = Kind::exhaustive;
    int n = 3;
    bool require_empty = false;
    std::int64_t count = 0;         // random only
    std::uint64_t seed = 0;         // random only
    int generator_count = 0;        // random only; 0 means n
    std::string describe() const;
};

struct CheckTally {
    std::string name;
    std::int64_t families_checked = 0;
    std::int64_t violations = 0;  // findings (conjectured statements only)
    std::int64_t equalities = 0;  // tight cases of the plus-one bound
    std::int64_t skipped = 0;     // e.g. clique search beyond 64 members
};

struct SweepReport {
    int n = 0;
    std::string population;
    unsigned checks = 0;
    int upset_t = 2;
    std::vector<CheckTally> tallies;
    std::vector<SetFamily> counterexamples;           // conjecture findings
    std::vector<std::string> counterexample_notes;
    std::vector<SetFamily> equality_examples;         // tight plus-one cases (capped)
    std::vector<int> equality_ranks;
    bool equality_examples_truncated = false;
    bool bug_detected = false;    // a proven statement failed; aborts the sweep
    std::string bug_diagnostics;
    double wall_seconds = 0.0;

    bool findings() const { return !counterexamples.empty(); }
};

struct SweepOptions {
    Population population;
    unsigned checks = kAllSweepChecks;
    int upset_t = 2;
};

// Exhaustive populations are nontrivial union-closed families over [n]
// (n <= 5; n <= 4 when the intersecting check is enabled, since that one
// runs a clique search per family).
SweepReport sweep(const SweepOptions& options);

const char* sweep_check_name(SweepCheck check);

}  // namespace ucs
