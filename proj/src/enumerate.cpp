#include "ucs/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ucs/freq_bounds.hpp"
#include "ucs/graph.hpp"
#include "ucs/interior.hpp"
#include "ucs/upset.hpp"

namespace ucs {

namespace {

struct Enumerator {
    int n;
    bool require_empty;
    bool nontrivial_only;
    const std::function<bool(const SetFamily&)>& visit;
    MaskSet chosen_set;
    std::vector<SubsetMask> chosen;  // decreasing
    std::int64_t emitted = 0;
    bool stopped = false;

    Enumerator(int n_, bool re, bool nt, const std::function<bool(const SetFamily&)>& v)
        : n(n_), require_empty(re), nontrivial_only(nt), visit(v), chosen_set(n_) {}

    bool can_take(SubsetMask m) const {
        // Unions with already-chosen masks are numerically larger, hence
        // already decided; they must all be in.
        for (SubsetMask u : chosen)
            if (!chosen_set.contains(m | u)) return false;
        return true;
    }

    void emit() {
        std::vector<SubsetMask> members(chosen.rbegin(), chosen.rend());
        ++emitted;
        if (!visit(SetFamily::from_sorted_unique(n, std::move(members)))) stopped = true;
    }

    void decide(std::int64_t mask) {
        if (stopped) return;
        if (mask < 0) { emit(); return; }
        const SubsetMask m = static_cast<SubsetMask>(mask);
        const bool forced_in = (nontrivial_only && m == full_mask(n)) || (require_empty && m == 0);
        if (can_take(m)) {
            chosen_set.insert(m);
            chosen.push_back(m);
            decide(mask - 1);
            chosen.pop_back();
            chosen_set.erase(m);
        } else if (forced_in) {
            return;  // the only branch that could satisfy the flag is blocked
        }
        if (stopped || forced_in) return;
        decide(mask - 1);
    }
};

}  // namespace

std::int64_t enumerate_union_closed(int n, bool require_empty, bool nontrivial_only,
                                    const std::function<bool(const SetFamily&)>& visit) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("exhaustive enumeration is limited to n <= 5");
    Enumerator e(n, require_empty, nontrivial_only, visit);
    e.decide(static_cast<std::int64_t>(full_mask(n)));
    return e.emitted;
}

SetFamily random_union_closed(int n, int generator_count, std::uint64_t seed) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
    if (generator_count < 0) throw std::invalid_argument("negative generator count");
    std::mt19937_64 rng(seed);
    std::vector<SubsetMask> gens;
    gens.reserve(generator_count + 1);
    for (int i = 0; i < generator_count; ++i)
        gens.push_back(static_cast<SubsetMask>(rng()) & full_mask(n));
    gens.push_back(full_mask(n));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return union_closure(SetFamily::from_sorted_unique(n, std::move(gens)));
}

SetFamily random_upset(int n, std::int64_t size_cap, std::uint64_t seed) {
    if (n < 2 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
    if (size_cap < 1 || size_cap > (std::int64_t{1} << (n - 1)))
        throw std::invalid_argument("size cap must lie in 1..2^(n-1)");

    std::mt19937_64 rng(seed);
    const SubsetMask full = full_mask(n);
    MaskSet present(n);
    present.insert(full);
    std::int64_t count = 1;

    const int draws = 4 * n + 32;
    for (int attempt = 0; attempt < draws; ++attempt) {
        const SubsetMask m = static_cast<SubsetMask>(rng()) & full;
        if (m == 0) continue;  // up-closing {} would swallow P(n)
        // Dry pass: how many supersets of m are new?
        std::int64_t fresh = 0;
        for (SubsetMask s = m;; s = (s + 1) | m) {
            if (!present.contains(s)) ++fresh;
            if (s == full) break;
        }
        if (count + fresh > size_cap) continue;  // rejected, try another draw
        for (SubsetMask s = m;; s = (s + 1) | m) {
            present.insert(s);
            if (s == full) break;
        }
        count += fresh;
    }

    std::vector<SubsetMask> members;
    members.reserve(count);
    for (std::int64_t x = 0; x <= full; ++x)
        if (present.contains(static_cast<SubsetMask>(x))) members.push_back(static_cast<SubsetMask>(x));
    return SetFamily::from_sorted_unique(n, std::move(members));
}

std::string Population::describe() const {
    std::ostringstream os;
    if (kind == Kind::exhaustive) {
        os << "exhaustive(n=" << n << ", nontrivial union-closed"
           << (require_empty ? ", with {}" : ", with and without {}") << ")";
    } else {
        os << "random(n=" << n << ", count=" << count << ", seed=" << seed
           << ", generators=" << (generator_count > 0 ? generator_count : n) << ")";
    }
    return os.str();
}

const char* sweep_check_name(SweepCheck check) {
    switch (check) {
        case SweepCheck::conjecture: return "half-frequency";
        case SweepCheck::frequencies: return "rank-frequency";
        case SweepCheck::witness: return "witness-bound";
        case SweepCheck::ranks: return "bottom-ranks";
        case SweepCheck::interior: return "interior-round-trip";
        case SweepCheck::upset: return "fractional-upset";
        case SweepCheck::packing: return "disjoint-packing";
        case SweepCheck::intersecting: return "intersecting-subfamily";
    }
    return "?";
}

namespace {

constexpr std::size_t kEqualityExampleCap = 4096;

struct SweepState {
    const SweepOptions& opt;
    SweepReport report;
    std::vector<CheckTally*> tally_of;  // indexed by bit position

    explicit SweepState(const SweepOptions& o) : opt(o) {
        report.n = o.population.n;
        report.population = o.population.describe();
        report.checks = o.checks;
        report.upset_t = o.upset_t;
        tally_of.assign(8, nullptr);
        for (unsigned bit = 0; bit < 8; ++bit)
            if (o.checks & (1u << bit)) {
                report.tallies.push_back(CheckTally{sweep_check_name(static_cast<SweepCheck>(1u << bit)),
                                                    0, 0, 0, 0});
            }
        std::size_t at = 0;
        for (unsigned bit = 0; bit < 8; ++bit)
            if (o.checks & (1u << bit)) tally_of[bit] = &report.tallies[at++];
    }

    CheckTally* tally(SweepCheck c) {
        unsigned bits = static_cast<unsigned>(c);
        unsigned bit = 0;
        while (bits >>= 1) ++bit;
        return tally_of[bit];
    }

    void bug(const SweepCheck check, const SetFamily& family, const std::string& what) {
        report.bug_detected = true;
        std::ostringstream os;
        os << sweep_check_name(check) << " failed on " << format_family(family) << ": " << what;
        report.bug_diagnostics = os.str();
    }

    void finding(const SweepCheck check, const SetFamily& family, const std::string& what) {
        ++tally(check)->violations;
        report.counterexamples.push_back(family);
        report.counterexample_notes.push_back(std::string(sweep_check_name(check)) + ": " + what);
    }

    // Returns false once the sweep should stop (bug found).
    bool run_family(const SetFamily& family) {
        const unsigned checks = opt.checks;
        if (checks & static_cast<unsigned>(SweepCheck::conjecture)) {
            auto* t = tally(SweepCheck::conjecture);
            ++t->families_checked;
            const HalfFrequencyVerdict v = half_frequency_verdict(family);
            if (!v.holds)
                finding(SweepCheck::conjecture, family,
                        "max frequency " + std::to_string(v.max_count) + " of " +
                            std::to_string(v.total));
            if (2 * v.max_count == v.total) ++t->equalities;
        }
        if (checks & (static_cast<unsigned>(SweepCheck::frequencies) |
                      static_cast<unsigned>(SweepCheck::ranks))) {
            const FrequencyProfile profile = frequency_profile(family);
            if (checks & static_cast<unsigned>(SweepCheck::frequencies)) {
                auto* t = tally(SweepCheck::frequencies);
                ++t->families_checked;
                for (const FrequencyProfileRow& row : profile.rows) {
                    if (!row.plus_one_ok || !row.geometric_ok)
                        finding(SweepCheck::frequencies, family,
                                "rank " + std::to_string(row.rank) + " misses the bound");
                    if (row.plus_one_equality) {
                        ++t->equalities;
                        if (report.equality_examples.size() < kEqualityExampleCap) {
                            report.equality_examples.push_back(family);
                            report.equality_ranks.push_back(row.rank);
                        } else {
                            report.equality_examples_truncated = true;
                        }
                    }
                }
            }
            if (checks & static_cast<unsigned>(SweepCheck::ranks)) {
                auto* t = tally(SweepCheck::ranks);
                ++t->families_checked;
                if (!profile.last_rank_ok || !profile.second_last_rank_ok) {
                    bug(SweepCheck::ranks, family, "bottom-rank bound failed");
                    return false;
                }
            }
        }
        if (checks & static_cast<unsigned>(SweepCheck::witness)) {
            auto* t = tally(SweepCheck::witness);
            ++t->families_checked;
            const SubsetMask support = family.union_of_members();
            for (int x = 1; x <= family.ground_size(); ++x) {
                if (!(support & (SubsetMask{1} << (x - 1)))) continue;
                const WitnessBoundCertificate cert = witness_frequency_bound(family, x);
                if (!cert.holds) {
                    bug(SweepCheck::witness, family,
                        "element " + std::to_string(x) + " below " + cert.bound.str());
                    return false;
                }
            }
        }
        if (checks & (static_cast<unsigned>(SweepCheck::interior) |
                      static_cast<unsigned>(SweepCheck::upset) |
                      static_cast<unsigned>(SweepCheck::packing))) {
            UpsetContext ctx;
            try {
                ctx = make_upset_context(family);
            } catch (const std::invalid_argument& err) {
                bug(SweepCheck::interior, family, err.what());
                return false;
            }
            if (checks & static_cast<unsigned>(SweepCheck::interior)) {
                auto* t = tally(SweepCheck::interior);
                ++t->families_checked;
                const InteriorCheck check = verify_interior_operator(ctx.table);
                const bool congruent =
                    verify_congruence(ctx.partition, family.ground_size() <= 6, opt.population.seed);
                bool ordered = !ctx.ordering.labels.empty() && ctx.ordering.class_sizes[0] == 1;
                for (std::size_t i = 0; i + 1 < ctx.ordering.class_sizes.size() && ordered; ++i)
                    if (ctx.ordering.class_sizes[i] > ctx.ordering.class_sizes[i + 1]) ordered = false;
                // Supersets must precede subsets: scan each member's strict
                // supersets instead of all label pairs.
                const SubsetMask full = full_mask(family.ground_size());
                std::vector<std::int32_t> pos(std::size_t{1} << family.ground_size(), -1);
                for (std::size_t i = 0; i < ctx.ordering.labels.size(); ++i)
                    pos[ctx.ordering.labels[i]] = static_cast<std::int32_t>(i);
                for (SubsetMask x : ctx.ordering.labels) {
                    if (!ordered) break;
                    for (SubsetMask s = (x + 1) | x; s <= full; s = (s + 1) | x)
                        if (pos[s] >= 0 && pos[s] > pos[x]) { ordered = false; break; }
                }
                if (!check.valid || check.fixed_points != ctx.working || !congruent || !ordered) {
                    bug(SweepCheck::interior, family, "round trip or ordering invariant failed");
                    return false;
                }
            }
            if (checks & static_cast<unsigned>(SweepCheck::upset)) {
                auto* t = tally(SweepCheck::upset);
                ++t->families_checked;
                const HalvingUpsetCertificate cert = halving_certificate(ctx, opt.upset_t);
                if (!cert.claims_ok()) {
                    bug(SweepCheck::upset, family, "certificate claims failed at t=" +
                                                       std::to_string(opt.upset_t));
                    return false;
                }
            }
            if (checks & static_cast<unsigned>(SweepCheck::packing)) {
                auto* t = tally(SweepCheck::packing);
                if (family.ground_size() < 2) {
                    ++t->skipped;  // the packing threshold needs n >= 2
                } else {
                    ++t->families_checked;
                    const HalvingUpsetCertificate half = halving_certificate(ctx, 2);
                    try {
                        const PackingReport packing = max_disjoint_packing(half.upset);
                        if (!packing.holds) {
                            bug(SweepCheck::packing, family,
                                "packing " + std::to_string(packing.max_disjoint) +
                                    " reaches threshold " + std::to_string(packing.threshold));
                            return false;
                        }
                    } catch (const std::invalid_argument& err) {
                        bug(SweepCheck::packing, family, err.what());
                        return false;
                    }
                }
            }
        }
        if (checks & static_cast<unsigned>(SweepCheck::intersecting)) {
            auto* t = tally(SweepCheck::intersecting);
            if (family.size() > 64) {
                ++t->skipped;
            } else {
                ++t->families_checked;
                const IntersectingSubfamily sub = max_intersecting_subfamily(family);
                if (!sub.at_least_half)
                    finding(SweepCheck::intersecting, family,
                            "largest intersecting subfamily has " +
                                std::to_string(sub.subfamily.size()) + " members");
                if (sub.subfamily.size() >= 1) {
                    const ColoringCertificate cert =
                        frequency_via_coloring(sub.subfamily, ColoringMode::intersecting);
                    if (!cert.intersecting_bound_ok) {
                        bug(SweepCheck::intersecting, family, "coloring bound failed on the clique");
                        return false;
                    }
                }
            }
        }
        return !report.bug_detected;
    }
};

}  // namespace

SweepReport sweep(const SweepOptions& options) {
    const Population& pop = options.population;
    const bool wants_clique = options.checks & static_cast<unsigned>(SweepCheck::intersecting);
    if (pop.kind == Population::Kind::exhaustive) {
        if (pop.n > 5) throw std::invalid_argument("exhaustive sweeps are limited to n <= 5");
        if (wants_clique && pop.n > 4)
            throw std::invalid_argument("the intersecting check limits exhaustive sweeps to n <= 4");
    }
    if (options.upset_t < 1) throw std::invalid_argument("t must be positive");

    SweepState state(options);
    const auto started = std::chrono::steady_clock::now();
    if (pop.kind == Population::Kind::exhaustive) {
        enumerate_union_closed(pop.n, pop.require_empty, /*nontrivial_only=*/true,
                               [&](const SetFamily& family) { return state.run_family(family); });
    } else {
        const int gens = pop.generator_count > 0 ? pop.generator_count : pop.n;
        for (std::int64_t i = 0; i < pop.count; ++i) {
            const SetFamily family = random_union_closed(pop.n, gens, pop.seed + static_cast<std::uint64_t>(i));
            if (!state.run_family(family)) break;
        }
    }
    state.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return state.report;
}

}  // namespace ucs
