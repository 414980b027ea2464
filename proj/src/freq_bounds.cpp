#include "ucs/freq_bounds.hpp"

#include <bit>
#include <stdexcept>

namespace ucs {

HalfFrequencyVerdict half_frequency_verdict(const SetFamily& family) {
    const FrequencyVector fv = frequency_vector(family);
    HalfFrequencyVerdict v;
    v.total = fv.total;
    for (int i = 0; i < family.ground_size(); ++i)
        if (fv.counts[i] > v.max_count) { v.max_count = fv.counts[i]; v.witness_element = i + 1; }
    v.holds = 2 * v.max_count >= v.total;
    return v;
}

WitnessBoundCertificate witness_frequency_bound(const SetFamily& family, int element) {
    const int n = family.ground_size();
    if (element < 1 || element > n)
        throw std::invalid_argument("element " + std::to_string(element) + " outside ground set");
    const SubsetMask bit = SubsetMask{1} << (element - 1);

    WitnessBoundCertificate cert;
    cert.element = element;
    int best_size = n + 1;
    for (SubsetMask m : family.members()) {
        if (!(m & bit)) continue;
        ++cert.count;
        const int s = set_size(m);
        if (s < best_size) { best_size = s; cert.witness = m; }  // ascending scan: smallest mask wins ties
    }
    if (cert.count == 0)
        throw std::invalid_argument("no member contains element " + std::to_string(element));

    cert.bound = Rational::of(family.size(), (std::int64_t{1} << (best_size - 1)) + 1);
    cert.holds = Rational::of(cert.count) >= cert.bound;
    return cert;
}

FrequencyProfile frequency_profile(const SetFamily& family) {
    const int n = family.ground_size();
    const FrequencyVector fv = frequency_vector(family);
    const std::vector<int> order = frequency_ordering(family);

    FrequencyProfile profile;
    profile.total = fv.total;
    for (int k = 1; k <= n; ++k) {
        FrequencyProfileRow row;
        row.rank = k;
        row.element = order[k - 1];
        row.count = fv.counts[row.element - 1];
        const std::int64_t geometric = row.count << k;                       // count * 2^k
        const std::int64_t plus_one = (row.count << (k - 1)) + row.count;    // count * (2^(k-1)+1)
        row.geometric_ok = geometric >= profile.total;
        row.plus_one_ok = plus_one >= profile.total;
        row.plus_one_equality = plus_one == profile.total;
        profile.rows.push_back(row);
    }
    profile.last_rank_ok = profile.rows.back().plus_one_ok;
    profile.second_last_rank_ok = n >= 2 ? profile.rows[n - 2].plus_one_ok : true;
    return profile;
}

SetFamily extremal_family(int n, int k) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
    if (k < 1 || k > n) throw std::invalid_argument("extremal index must lie in 1..n");
    std::vector<SubsetMask> members(std::size_t{1} << (k - 1));
    for (std::size_t m = 0; m < members.size(); ++m) members[m] = static_cast<SubsetMask>(m);
    members.push_back(full_mask(n));  // strictly above all of P(k-1) since k <= n
    return SetFamily::from_sorted_unique(n, std::move(members));
}

}  // namespace ucs
