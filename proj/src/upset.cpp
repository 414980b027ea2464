#include "ucs/upset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ucs {

PrefixBound weighted_prefix_inequality(const std::vector<double>& values, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("theta must lie in [0,1]");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0.0) throw std::invalid_argument("values must be nonnegative");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("values must be nondecreasing");
    }
    const std::size_t m = values.size();
    std::size_t take = static_cast<std::size_t>(std::floor(theta * static_cast<double>(m)));
    if (take > m) take = m;

    PrefixBound pb;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        total += values[i];
        if (i + 1 == take) pb.rhs = total;
    }
    pb.lhs = theta * total;
    pb.holds = pb.lhs >= pb.rhs;
    return pb;
}

UpsetContext make_upset_context(const SetFamily& family) {
    if (family.union_of_members() != full_mask(family.ground_size()))
        throw std::invalid_argument("up-set construction needs a nontrivial family");
    UpsetContext ctx;
    ctx.working = family_with_empty(family);
    ctx.table = interior_operator(ctx.working);  // throws unless union closed
    ctx.partition = congruence_partition(ctx.table);
    ctx.ordering = class_size_ordering(ctx.working, ctx.partition);
    return ctx;
}

HalvingUpsetCertificate halving_certificate(const UpsetContext& ctx, int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    const int n = ctx.working.ground_size();
    const std::int64_t m = ctx.working.size();
    const std::int64_t take = (m + t - 1) / t;

    HalvingUpsetCertificate cert;
    cert.t = t;
    cert.family_size = m;
    cert.size_bound = ((std::int64_t{1} << n) + t - 1) / t;

    std::vector<SubsetMask> members;
    for (std::int64_t i = 0; i < take; ++i) {
        const auto& cls = ctx.partition.class_members[ctx.partition.class_of[ctx.ordering.labels[i]]];
        members.insert(members.end(), cls.begin(), cls.end());
    }
    std::sort(members.begin(), members.end());
    cert.upset = SetFamily::from_sorted_unique(n, std::move(members));

    cert.is_upset = is_up_set(cert.upset);
    cert.size_ok = cert.upset.size() <= cert.size_bound;
    for (SubsetMask f : ctx.working.members())
        if (cert.upset.contains(f)) ++cert.intersection_count;
    cert.intersection_ok = static_cast<std::int64_t>(t) * cert.intersection_count >= m;
    return cert;
}

HalvingUpsetCertificate construct_halving_upset(const SetFamily& family, int t) {
    return halving_certificate(make_upset_context(family), t);
}

std::int64_t union_of_intervals_cardinality(const std::vector<SubsetMask>& sets, int n) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
    SubsetMask used = 0;
    int total_bits = 0;
    for (SubsetMask a : sets) {
        if (a == 0) throw std::invalid_argument("interval bottoms must be nonempty");
        if (a > full_mask(n)) throw std::invalid_argument("set outside the ground set");
        if (a & used) throw std::invalid_argument("interval bottoms must be pairwise disjoint");
        used |= a;
        total_bits += set_size(a);
    }

    std::int64_t direct = 0;
    const std::int64_t cube = std::int64_t{1} << n;
    for (std::int64_t x = 0; x < cube; ++x) {
        for (SubsetMask a : sets)
            if (subset_of(a, static_cast<SubsetMask>(x))) { ++direct; break; }
    }

    // 2^n - 2^(n - sum|A_i|) * prod(2^|A_i| - 1)
    std::int64_t missing = std::int64_t{1} << (n - total_bits);
    for (SubsetMask a : sets) missing *= (std::int64_t{1} << set_size(a)) - 1;
    const std::int64_t closed_form = cube - missing;
    if (closed_form != direct)
        throw std::logic_error("interval union count disagrees with the closed form");
    return direct;
}

int packing_threshold(int n) {
    if (n < 2) throw std::invalid_argument("threshold needs n >= 2");
    const double r = (1.0 + std::exp(-1.0)) * static_cast<double>(n) / std::log2(static_cast<double>(n));
    const double nearest = std::round(r);
    if (std::abs(r - nearest) <= std::ldexp(r, -40)) return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(r));
}

namespace {

struct PackingSearch {
    const std::vector<SubsetMask>& sets;  // inclusion-minimal members, sorted by size
    std::vector<int> suffix_sizes;        // |sets[i]| for the fractional bound
    std::int64_t best = 0;

    explicit PackingSearch(const std::vector<SubsetMask>& s) : sets(s) {
        suffix_sizes.resize(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) suffix_sizes[i] = set_size(sets[i]);
    }

    // Upper bound: chosen so far plus as many of the smallest remaining
    // sets as fit in the untouched elements, disjointness ignored.
    std::int64_t fractional_bound(std::size_t from, int free_elems, std::int64_t chosen) const {
        std::int64_t extra = 0;
        for (std::size_t i = from; i < sets.size() && free_elems > 0; ++i) {
            if (suffix_sizes[i] > free_elems) break;  // sizes ascend
            free_elems -= suffix_sizes[i];
            ++extra;
        }
        return chosen + extra;
    }

    void dfs(std::size_t idx, SubsetMask used, int free_elems, std::int64_t chosen) {
        if (chosen > best) best = chosen;
        if (idx >= sets.size()) return;
        if (fractional_bound(idx, free_elems, chosen) <= best) return;
        for (std::size_t i = idx; i < sets.size(); ++i) {
            if (sets[i] & used) continue;
            if (suffix_sizes[i] > free_elems) break;
            dfs(i + 1, used | sets[i], free_elems - suffix_sizes[i], chosen + 1);
            if (fractional_bound(i + 1, free_elems, chosen) <= best) return;
        }
    }
};

}  // namespace

PackingReport max_disjoint_packing(const SetFamily& upset) {
    const int n = upset.ground_size();
    if (n < 2) throw std::invalid_argument("packing needs n >= 2");
    if (!upset.members().empty() && upset.members().front() == 0)
        throw std::invalid_argument("an up-set containing {} is all of P(n)");
    if (!is_up_set(upset)) throw std::invalid_argument("not an up-set");

    // Any pairwise-disjoint subcollection shrinks, member by member, onto
    // inclusion-minimal members, so only those enter the search.
    std::vector<SubsetMask> minimal;
    {
        std::vector<SubsetMask> by_card(upset.members());
        std::stable_sort(by_card.begin(), by_card.end(), [](SubsetMask a, SubsetMask b) {
            return set_size(a) < set_size(b);
        });
        for (SubsetMask m : by_card) {
            bool dominated = false;
            for (SubsetMask keep : minimal)
                if (subset_of(keep, m)) { dominated = true; break; }
            if (!dominated) minimal.push_back(m);
        }
    }

    PackingReport report;
    report.threshold = packing_threshold(n);
    report.size_precondition_ok = upset.size() <= (std::int64_t{1} << (n - 1));

    PackingSearch search(minimal);
    // Greedy first-fit seeds the bound before the exact search.
    SubsetMask used = 0;
    for (SubsetMask m : minimal)
        if (!(m & used)) { used |= m; ++search.best; }
    const std::int64_t greedy = search.best;
    search.dfs(0, 0, n, 0);
    report.max_disjoint = std::max(search.best, greedy);
    report.holds = report.max_disjoint < report.threshold;
    return report;
}

}  // namespace ucs
