#pragma once

// Text file format for set families plus the JSON report layer used by the
// command line tools.
//
// Family files: optional first significant line "n <int>" fixing the ground
// size, then one member per line as whitespace-separated 1-based elements,
// with the single token "-" standing for the empty set. "#" starts a
// comment, blank lines are skipped, LF and CRLF both work. Without a header
// the ground size is the largest element seen. Errors carry line numbers.

#include <string>

#include "json.hpp"

#include "ucs/enumerate.hpp"
#include "ucs/family.hpp"
#include "ucs/freq_bounds.hpp"
#include "ucs/graph.hpp"
#include "ucs/interior.hpp"
#include "ucs/upset.hpp"

namespace ucs {

SetFamily parse_family_text(const std::string& text, const std::string& source = "<input>");
SetFamily load_family(const std::string& path);

std::string family_to_text(const SetFamily& family);  // header + one member per line
void save_family(const SetFamily& family, const std::string& path);

// Inequality statements quoted next to every boolean verdict in a report,
// so a verdict is never a bare flag.
namespace statements {
inline constexpr const char* half_frequency =
    "2 * freq(x) >= #F for the most frequent element x";
inline constexpr const char* witness_bound =
    "freq(x) * (2^(|A|-1) + 1) >= #F for the smallest member A containing x";
inline constexpr const char* doubling_rank =
    "freq_k * 2^k >= #F at every rank k (conditional on the half-frequency conjecture)";
inline constexpr const char* plus_one_rank =
    "freq_k * (2^(k-1) + 1) >= #F at every rank k";
inline constexpr const char* rank_bounds =
    "freq_k * 2^k >= #F and freq_k * (2^(k-1) + 1) >= #F at every rank k";
inline constexpr const char* bottom_ranks =
    "freq_k * (2^(k-1) + 1) >= #F at ranks k = n and k = n-1";
inline constexpr const char* interior_round_trip =
    "the fixed points of the interior operator recover the family and its "
    "fibers form a congruence compatible with intersection";
inline constexpr const char* ordering_invariants =
    "class sizes are nondecreasing and no label precedes a label of one of its supersets";
inline constexpr const char* upset_claims =
    "U is an up-set, #U <= ceil(2^n / t), and t * #(F cap U) >= #F";
inline constexpr const char* packing_threshold =
    "an up-set within half the cube has fewer than ceil((1 + 1/e) * n / log2(n)) "
    "pairwise disjoint members";
inline constexpr const char* interval_union_count =
    "#union of [A_i, [n]] = 2^n * (1 - prod(1 - 2^-|A_i|)) for disjoint A_i";
inline constexpr const char* turan_min_edges =
    "alpha(G) < t implies #E >= v^2 / (2(t-1)) - v/2";
inline constexpr const char* turan_max_edges =
    "omega(G) < t implies #E <= (1 - 1/(t-1)) * v^2 / 2";
inline constexpr const char* coloring_bound =
    "the majority edge color is an element of every member touched by such an edge";
inline constexpr const char* intersecting_bound =
    "max freq >= 1/2 + sqrt(1/4 + (m^2 - m)/n) for an intersecting family";
inline constexpr const char* intersecting_half =
    "2 * #(maximum intersecting subfamily) >= #F";
inline constexpr const char* large_family_guarantee =
    "max freq >= sqrt(log2(n)) / (3n) * m once m * log2(n) >= 7n";
}  // namespace statements

// Builders for the structured report. nlohmann::json orders object keys,
// so identical inputs produce byte-identical dumps; timing is the caller's
// business and stays out of these.
nlohmann::json mask_to_json(SubsetMask mask);
nlohmann::json family_to_json(const SetFamily& family);
nlohmann::json flags_to_json(const FamilyFlags& flags);
nlohmann::json rational_to_json(const Rational& value);
nlohmann::json verdict_json(bool holds, const char* statement);

nlohmann::json half_frequency_to_json(const HalfFrequencyVerdict& verdict);
nlohmann::json witness_to_json(const WitnessBoundCertificate& certificate);
nlohmann::json profile_to_json(const FrequencyProfile& profile);
nlohmann::json partition_to_json(const CongruencePartition& partition, bool include_members);
nlohmann::json ordering_to_json(const OrderedFamily& ordering);
nlohmann::json halving_to_json(const HalvingUpsetCertificate& certificate, bool include_upset);
nlohmann::json packing_to_json(const PackingReport& report);
nlohmann::json turan_bounds_to_json(std::int64_t vertices, std::int64_t t, const TuranBounds& bounds);
nlohmann::json turan_sweep_to_json(const TuranSweepResult& result);
nlohmann::json coloring_to_json(const ColoringCertificate& certificate);
nlohmann::json intersecting_bounds_to_json(const IntersectingBounds& bounds);
nlohmann::json guarantee_to_json(const FrequencyGuarantee& guarantee);
nlohmann::json sweep_to_json(const SweepReport& report);

const char* sweep_check_statement(SweepCheck check);

void write_report(const nlohmann::json& report, const std::string& path);

}  // namespace ucs
