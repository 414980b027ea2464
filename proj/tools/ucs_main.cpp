// Command line workbench for union-closed families of finite sets. One
// subcommand per construction; human tables go to standard output and the
// structured report behind --json. Exit codes: 0 pass, 1 usage or input
// problem, 2 a proven statement failed (a bug somewhere), 3 a conjectured
// statement failed (a finding worth keeping).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ucs/enumerate.hpp"
#include "ucs/family.hpp"
#include "ucs/freq_bounds.hpp"
#include "ucs/graph.hpp"
#include "ucs/interior.hpp"
#include "ucs/io.hpp"
#include "ucs/upset.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kBug = 2;
constexpr int kFinding = 3;

// Input trouble found after argument parsing (unreadable file, family fails
// a subcommand's precondition); mapped to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

ucs::SetFamily load_input(const std::string& path) {
    try {
        return ucs::load_family(path);
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void describe_input(nlohmann::json& doc, const std::string& path, const ucs::SetFamily& family) {
    nlohmann::json inputs = {{"file", path},
                             {"n", family.ground_size()},
                             {"size", family.size()}};
    if (family.size() <= 1024) inputs["family"] = ucs::family_to_json(family);
    doc["inputs"] = std::move(inputs);
}

void print_family_lines(const ucs::SetFamily& family, std::int64_t limit) {
    const auto& ms = family.members();
    for (std::int64_t i = 0; i < family.size() && i < limit; ++i)
        std::cout << "  " << ucs::format_mask(ms[i]) << "\n";
    if (family.size() > limit)
        std::cout << "  ... (" << family.size() - limit << " more)\n";
}

// ---------------------------------------------------------------- check --

int run_check(const std::string& path, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    describe_input(doc, path, family);
    doc["results"] = {{"flags", ucs::flags_to_json(flags)}};

    std::cout << "family over [" << family.ground_size() << "] with " << family.size()
              << " member(s)\n"
              << "  union closed        " << yes_no(flags.union_closed) << "\n"
              << "  intersection closed " << yes_no(flags.intersection_closed) << "\n"
              << "  up-set              " << yes_no(flags.up_set) << "\n"
              << "  nontrivial          " << yes_no(flags.nontrivial) << "\n"
              << "  separating          " << yes_no(flags.separating) << "\n"
              << "  contains {}         " << yes_no(flags.contains_empty) << "\n"
              << "  contains [n]        " << yes_no(flags.contains_full) << "\n";
    return kPass;
}

// ----------------------------------------------------------------- freq --

int run_freq(const std::string& path, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    require(flags.union_closed, "the frequency bounds need a union-closed family");
    require(flags.nontrivial, "the frequency bounds need a nontrivial family (union = [n])");
    describe_input(doc, path, family);

    const ucs::FrequencyProfile profile = ucs::frequency_profile(family);
    const ucs::HalfFrequencyVerdict half = ucs::half_frequency_verdict(family);
    const ucs::FrequencyGuarantee guarantee =
        ucs::frequency_guarantee(family.ground_size(), family.size());
    const double slack = 1e-9 * std::max(1.0, std::abs(guarantee.bound));
    const bool guarantee_ok =
        !guarantee.applicable || static_cast<double>(half.max_count) >= guarantee.bound - slack;

    std::cout << "#F = " << profile.total << ", n = " << family.ground_size() << "\n"
              << "rank element  freq  *2^k>=#F  *(2^(k-1)+1)>=#F  equality\n";
    for (const auto& row : profile.rows) {
        std::cout << std::setw(4) << row.rank << std::setw(8) << row.element << std::setw(6)
                  << row.count << std::setw(10) << yes_no(row.geometric_ok) << std::setw(18)
                  << yes_no(row.plus_one_ok) << std::setw(10) << yes_no(row.plus_one_equality)
                  << "\n";
    }
    std::cout << "half frequency: " << (half.holds ? "holds" : "FAILS") << " (element "
              << half.witness_element << " in " << half.max_count << " of " << half.total
              << ")\n"
              << "bottom two ranks: " << (profile.last_rank_ok && profile.second_last_rank_ok
                                              ? "ok"
                                              : "VIOLATED (bug)")
              << "\n";
    if (guarantee.applicable)
        std::cout << "large-family guarantee: max freq " << half.max_count << " vs bound "
                  << guarantee.bound << (guarantee_ok ? " (ok)" : " (VIOLATED, bug)") << "\n";
    else
        std::cout << "large-family guarantee: not applicable (needs m * log2(n) >= 7n)\n";

    nlohmann::json guarantee_doc = ucs::guarantee_to_json(guarantee);
    guarantee_doc["max_count"] = half.max_count;
    guarantee_doc["holds"] = guarantee_ok;
    doc["results"] = {{"profile", ucs::profile_to_json(profile)},
                      {"half_frequency", ucs::half_frequency_to_json(half)},
                      {"guarantee", std::move(guarantee_doc)}};

    if (!profile.last_rank_ok || !profile.second_last_rank_ok) return kBug;
    if (guarantee.applicable && !guarantee_ok) return kBug;
    bool all_rows = half.holds;
    for (const auto& row : profile.rows)
        all_rows = all_rows && row.geometric_ok && row.plus_one_ok;
    return all_rows ? kPass : kFinding;
}

// ---------------------------------------------------------------- bound --

int run_bound(const std::string& path, int element, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    require(flags.union_closed, "the witness bound needs a union-closed family");
    require(flags.nontrivial, "the witness bound needs a nontrivial family (union = [n])");
    describe_input(doc, path, family);

    std::vector<int> elements;
    if (element > 0) {
        require(element <= family.ground_size(),
                "element " + std::to_string(element) + " outside [1, " +
                    std::to_string(family.ground_size()) + "]");
        elements.push_back(element);
    } else {
        for (int x = 1; x <= family.ground_size(); ++x) elements.push_back(x);
    }

    std::cout << "element  witness set        freq  bound\n";
    nlohmann::json certificates = nlohmann::json::array();
    bool all_hold = true;
    for (const int x : elements) {
        const ucs::WitnessBoundCertificate cert = ucs::witness_frequency_bound(family, x);
        all_hold = all_hold && cert.holds;
        certificates.push_back(ucs::witness_to_json(cert));
        std::cout << std::setw(7) << x << "  " << std::setw(16) << std::left
                  << ucs::format_mask(cert.witness) << std::right << std::setw(6) << cert.count
                  << "  >= " << cert.bound.str() << (cert.holds ? "" : "  VIOLATED (bug)")
                  << "\n";
    }
    doc["results"] = {{"certificates", std::move(certificates)}};
    return all_hold ? kPass : kBug;
}

// ------------------------------------------------------------ partition --

int run_partition(const std::string& path, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    require(flags.union_closed, "the congruence partition needs a union-closed family");
    describe_input(doc, path, family);

    const ucs::SetFamily working = ucs::family_with_empty(family);
    const ucs::InteriorTable table = ucs::interior_operator(working);
    const ucs::CongruencePartition partition = ucs::congruence_partition(table);
    const bool exhaustive = working.ground_size() <= 6;
    const bool valid = ucs::verify_congruence(partition, exhaustive, /*seed=*/0, /*samples=*/2048);

    std::cout << partition.class_count() << " congruence class(es) over P("
              << partition.n << ")";
    if (!flags.contains_empty) std::cout << " after adjoining {}";
    std::cout << "\n";
    const int shown = std::min(partition.class_count(), 64);
    for (int c = 0; c < shown; ++c)
        std::cout << "  min " << ucs::format_mask(partition.class_min[c]) << "  size "
                  << partition.class_members[c].size() << "\n";
    if (shown < partition.class_count())
        std::cout << "  ... (" << partition.class_count() - shown << " more)\n";
    std::cout << "congruence axioms (" << (exhaustive ? "exhaustive" : "sampled")
              << "): " << (valid ? "ok" : "VIOLATED (bug)") << "\n";

    doc["results"] = {
        {"empty_set_adjoined", !flags.contains_empty},
        {"partition", ucs::partition_to_json(partition, partition.n <= 10)},
        {"verdict", ucs::verdict_json(valid, ucs::statements::interior_round_trip)},
        {"verified_exhaustively", exhaustive}};
    return valid ? kPass : kBug;
}

// ---------------------------------------------------------------- order --

bool ordering_invariants_hold(const ucs::OrderedFamily& ordering, int n) {
    for (std::size_t i = 1; i < ordering.class_sizes.size(); ++i)
        if (ordering.class_sizes[i] < ordering.class_sizes[i - 1]) return false;
    std::vector<std::int64_t> pos(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < ordering.labels.size(); ++i) pos[ordering.labels[i]] = i;
    const ucs::SubsetMask full = ucs::full_mask(n);
    for (const ucs::SubsetMask x : ordering.labels) {
        // Strict supersets of x are exactly the masks (s+1)|x above x.
        for (ucs::SubsetMask s = (x + 1) | x; s <= full; s = (s + 1) | x)
            if (pos[s] >= 0 && pos[s] > pos[x]) return false;
    }
    return true;
}

int run_order(const std::string& path, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    require(flags.union_closed, "the class-size ordering needs a union-closed family");
    require(flags.nontrivial, "the class-size ordering needs a nontrivial family (union = [n])");
    describe_input(doc, path, family);

    const ucs::SetFamily working = ucs::family_with_empty(family);
    const ucs::InteriorTable table = ucs::interior_operator(working);
    const ucs::CongruencePartition partition = ucs::congruence_partition(table);
    const ucs::OrderedFamily ordering = ucs::class_size_ordering(working, partition);
    const bool ok = ordering_invariants_hold(ordering, working.ground_size());

    std::cout << "label  set               class size\n";
    const std::size_t shown = std::min<std::size_t>(ordering.labels.size(), 128);
    for (std::size_t i = 0; i < shown; ++i)
        std::cout << std::setw(5) << i + 1 << "  " << std::setw(16) << std::left
                  << ucs::format_mask(ordering.labels[i]) << std::right << std::setw(10)
                  << ordering.class_sizes[i] << "\n";
    if (shown < ordering.labels.size())
        std::cout << "  ... (" << ordering.labels.size() - shown << " more)\n";
    std::cout << "ordering invariants: " << (ok ? "ok" : "VIOLATED (bug)") << "\n";

    doc["results"] = {
        {"empty_set_adjoined", !flags.contains_empty},
        {"ordering", ucs::ordering_to_json(ordering)},
        {"verdict", ucs::verdict_json(ok, ucs::statements::ordering_invariants)}};
    return ok ? kPass : kBug;
}

// ---------------------------------------------------------------- upset --

int run_upset(const std::string& path, int t, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    require(flags.union_closed, "the halving up-set needs a union-closed family");
    require(flags.nontrivial, "the halving up-set needs a nontrivial family (union = [n])");
    describe_input(doc, path, family);

    const ucs::HalvingUpsetCertificate cert = ucs::construct_halving_upset(family, t);
    std::cout << "t = " << cert.t << ": #U = " << cert.upset.size() << " (bound "
              << cert.size_bound << "), #(F cap U) = " << cert.intersection_count << ", #F = "
              << cert.family_size << "\n"
              << "  up-set: " << yes_no(cert.is_upset) << ", size bound: " << yes_no(cert.size_ok)
              << ", t * #(F cap U) >= #F: " << yes_no(cert.intersection_ok) << "\n";
    if (family.ground_size() <= 5) print_family_lines(cert.upset, 64);
    if (!cert.claims_ok()) std::cout << "certificate VIOLATED (bug)\n";

    doc["results"] = {{"halving", ucs::halving_to_json(cert, family.ground_size() <= 10)}};
    return cert.claims_ok() ? kPass : kBug;
}

// -------------------------------------------------------------- packing --

int run_packing(const std::string& path, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    describe_input(doc, path, family);
    const ucs::PackingReport report = ucs::max_disjoint_packing(family);

    std::cout << "max pairwise disjoint members: " << report.max_disjoint << "\n"
              << "threshold ceil((1 + 1/e) * n / log2(n)): " << report.threshold << "\n"
              << "within half the cube: " << yes_no(report.size_precondition_ok) << "\n";
    if (report.size_precondition_ok)
        std::cout << "bound " << (report.holds ? "holds" : "VIOLATED (bug)") << "\n";
    else
        std::cout << "bound not claimed (up-set exceeds half the cube); packing "
                  << (report.holds ? "stays below the threshold anyway" : "reaches the threshold")
                  << "\n";

    doc["results"] = {{"packing", ucs::packing_to_json(report)}};
    return report.size_precondition_ok && !report.holds ? kBug : kPass;
}

// ---------------------------------------------------------------- turan --

int run_turan(std::int64_t vertices, std::int64_t t, int exhaustive_vertices, int threads,
              nlohmann::json& doc) {
    if (exhaustive_vertices > 0) {
        const ucs::TuranSweepResult result =
            ucs::turan_exhaustive_check(exhaustive_vertices, threads);
        std::cout << "checked " << result.graphs_checked << " labeled graph(s) on up to "
                  << exhaustive_vertices << " vertices: "
                  << (result.ok ? "minimum-edge bound holds everywhere"
                                : "bound VIOLATED (bug): " + result.diagnostics)
                  << "\n";
        doc["results"] = {{"exhaustive", ucs::turan_sweep_to_json(result)}};
        return result.ok ? kPass : kBug;
    }
    require(vertices > 0, "pass --vertices V --t T for the bound table, or --exhaustive V");
    require(t >= 2, "--t must be at least 2");
    const ucs::TuranBounds bounds = ucs::turan_bounds(vertices, t);
    std::cout << "v = " << vertices << ", t = " << t << "\n"
              << "  omega < t  =>  #E <= " << bounds.max_edges.str() << " (= "
              << bounds.max_edges.value() << ")\n"
              << "  alpha < t  =>  #E >= " << bounds.min_edges.str() << " (= "
              << bounds.min_edges.value() << ")\n";
    doc["results"] = {{"bounds", ucs::turan_bounds_to_json(vertices, t, bounds)}};
    return kPass;
}

// --------------------------------------------------------- intersecting --

int run_intersecting(const std::string& path, nlohmann::json& doc) {
    const ucs::SetFamily family = load_input(path);
    require(family.size() > 0, "the intersecting bounds need a nonempty family");
    const ucs::FamilyFlags flags = ucs::classify_family(family);
    describe_input(doc, path, family);
    nlohmann::json results;

    if (ucs::is_intersecting(family)) {
        const ucs::ColoringCertificate cert =
            ucs::frequency_via_coloring(family, ucs::ColoringMode::intersecting);
        const ucs::IntersectingBounds bounds =
            ucs::intersecting_frequency_bound(family.size(), family.ground_size());
        std::cout << "the family is intersecting\n"
                  << "  guaranteed max frequency bound: " << bounds.exact_bound << "\n"
                  << "  coloring lower bound: element " << cert.bound_witness << " in at least "
                  << cert.frequency_lower_bound << " member(s)\n"
                  << "  bound " << (cert.intersecting_bound_ok ? "met" : "VIOLATED (bug)")
                  << "\n";
        results["coloring"] = ucs::coloring_to_json(cert);
        results["bounds"] = ucs::intersecting_bounds_to_json(bounds);
        doc["results"] = std::move(results);
        return cert.intersecting_bound_ok ? kPass : kBug;
    }

    const ucs::IntersectingSubfamily sub = ucs::max_intersecting_subfamily(family);
    const bool conjecture_applies = flags.union_closed && flags.nontrivial;
    std::cout << "maximum intersecting subfamily: " << sub.subfamily.size() << " of "
              << family.size() << " member(s)\n";
    print_family_lines(sub.subfamily, 64);
    std::cout << "at least half: " << yes_no(sub.at_least_half) << "\n";
    if (conjecture_applies && !sub.at_least_half) {
        std::cout << "counterexample candidate for the half-size intersecting subfamily "
                     "question; full family:\n";
        print_family_lines(family, family.size());
    }

    results["intersecting_subfamily"] = {
        {"size", sub.subfamily.size()},
        {"subfamily", ucs::family_to_json(sub.subfamily)},
        {"conjecture_applies", conjecture_applies},
        {"verdict", ucs::verdict_json(sub.at_least_half, ucs::statements::intersecting_half)}};
    doc["results"] = std::move(results);
    return conjecture_applies && !sub.at_least_half ? kFinding : kPass;
}

// ------------------------------------------------------------------ gen --

int run_gen(const std::vector<int>& extremal, bool fano, const std::string& out_path,
            nlohmann::json& doc) {
    require(fano != !extremal.empty(), "pass exactly one of --extremal N K or --fano");
    ucs::SetFamily family;
    if (fano) {
        family = ucs::fano_plane();
    } else {
        try {
            family = ucs::extremal_family(extremal[0], extremal[1]);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    }
    if (out_path.empty())
        std::cout << ucs::family_to_text(family);
    else
        ucs::save_family(family, out_path);
    doc["results"] = {{"family", ucs::family_to_json(family)}};
    return kPass;
}

// ---------------------------------------------------------------- sweep --

unsigned parse_checks(const std::string& list) {
    if (list.empty() || list == "all") return ucs::kAllSweepChecks;
    unsigned checks = 0;
    std::stringstream stream(list);
    std::string item;
    while (std::getline(stream, item, ',')) {
        bool known = false;
        for (unsigned bit = 0; bit < 8; ++bit) {
            const auto check = static_cast<ucs::SweepCheck>(1u << bit);
            if (item == ucs::sweep_check_name(check)) {
                checks |= 1u << bit;
                known = true;
                break;
            }
        }
        if (!known) {
            std::string names = "all";
            for (unsigned bit = 0; bit < 8; ++bit) {
                names += ", ";
                names += ucs::sweep_check_name(static_cast<ucs::SweepCheck>(1u << bit));
            }
            throw ValidationError("unknown check '" + item + "'; valid names: " + names);
        }
    }
    require(checks != 0, "--checks selected nothing");
    return checks;
}

int run_sweep(const ucs::SweepOptions& options, nlohmann::json& doc) {
    ucs::SweepReport report;
    try {
        report = ucs::sweep(options);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }

    std::cout << "population: " << report.population << "\n"
              << "check                     families  violations  equalities  skipped\n";
    for (const auto& tally : report.tallies) {
        std::cout << "  " << std::setw(24) << std::left << tally.name << std::right
                  << std::setw(8) << tally.families_checked << std::setw(12) << tally.violations
                  << std::setw(12) << tally.equalities << std::setw(9) << tally.skipped << "\n";
    }
    if (report.bug_detected)
        std::cout << "BUG: " << report.bug_diagnostics << "\n";
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i)
        std::cout << "finding: " << report.counterexample_notes[i] << "  "
                  << ucs::format_family(report.counterexamples[i]) << "\n";
    if (!report.bug_detected && report.counterexamples.empty())
        std::cout << "no violations\n";

    doc["results"] = {{"sweep", ucs::sweep_to_json(report)}};
    doc["timing"] = {{"wall_seconds", report.wall_seconds}};
    if (report.bug_detected) return kBug;
    return report.findings() ? kFinding : kPass;
}

}  // namespace

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();

    CLI::App app{"workbench for union-closed families of finite sets"};
    app.require_subcommand(1);
    std::string json_path;
    app.add_option("--json", json_path, "write the structured report to this file");

    std::string check_file;
    CLI::App* cmd_check = app.add_subcommand("check", "classify a family file");
    cmd_check->add_option("file", check_file, "family file")->required();

    std::string freq_file;
    CLI::App* cmd_freq = app.add_subcommand("freq", "per-rank frequency profile and bounds");
    cmd_freq->add_option("file", freq_file, "family file")->required();

    std::string bound_file;
    int bound_element = 0;
    CLI::App* cmd_bound = app.add_subcommand("bound", "witness frequency bound certificates");
    cmd_bound->add_option("file", bound_file, "family file")->required();
    cmd_bound->add_option("--element", bound_element, "restrict to one element");

    std::string partition_file;
    CLI::App* cmd_partition =
        app.add_subcommand("partition", "congruence partition of the interior operator");
    cmd_partition->add_option("file", partition_file, "family file")->required();

    std::string order_file;
    CLI::App* cmd_order = app.add_subcommand("order", "label members by congruence class size");
    cmd_order->add_option("file", order_file, "family file")->required();

    std::string upset_file;
    int upset_t = 2;
    CLI::App* cmd_upset =
        app.add_subcommand("upset", "up-set capturing a 1/t fraction of the family");
    cmd_upset->add_option("file", upset_file, "family file")->required();
    cmd_upset->add_option("--t", upset_t, "denominator t")->check(CLI::Range(1, 1 << 20));

    std::string packing_file;
    CLI::App* cmd_packing =
        app.add_subcommand("packing", "maximum pairwise-disjoint members of an up-set");
    cmd_packing->add_option("file", packing_file, "up-set family file")->required();

    std::int64_t turan_vertices = 0;
    std::int64_t turan_t = 0;
    int turan_exhaustive = 0;
    int turan_threads = std::max(1u, std::thread::hardware_concurrency());
    CLI::App* cmd_turan = app.add_subcommand("turan", "edge-count bounds from alpha and omega");
    cmd_turan->add_option("--vertices", turan_vertices, "vertex count for the bound table");
    cmd_turan->add_option("--t", turan_t, "clique / independence threshold");
    cmd_turan->add_option("--exhaustive", turan_exhaustive,
                          "verify the bound on every labeled graph with up to V vertices")
        ->check(CLI::Range(1, 7));
    cmd_turan->add_option("--threads", turan_threads, "shard count for --exhaustive")
        ->check(CLI::Range(1, 256));

    std::string intersecting_file;
    CLI::App* cmd_intersecting = app.add_subcommand(
        "intersecting", "intersecting frequency bound or maximum intersecting subfamily");
    cmd_intersecting->add_option("file", intersecting_file, "family file")->required();

    std::vector<int> gen_extremal;
    bool gen_fano = false;
    std::string gen_out;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a named family");
    cmd_gen->add_option("--extremal", gen_extremal,
                        "P(k-1) adjoined with [n]; arguments N K")
        ->expected(2);
    cmd_gen->add_flag("--fano", gen_fano, "lines of the projective plane of order 2");
    cmd_gen->add_option("--out", gen_out, "write the family here instead of stdout");

    int sweep_n = 3;
    bool sweep_exhaustive = false;
    std::int64_t sweep_random = 0;
    std::uint64_t sweep_seed = 0;
    int sweep_generators = 0;
    bool sweep_require_empty = false;
    std::string sweep_checks = "all";
    int sweep_t = 2;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "run the checkers over a population");
    cmd_sweep->add_option("--n", sweep_n, "ground set size")
        ->required()
        ->check(CLI::Range(1, ucs::kMaxGroundSize));
    cmd_sweep->add_flag("--exhaustive", sweep_exhaustive,
                        "every nontrivial union-closed family over [n]");
    CLI::Option* random_opt =
        cmd_sweep->add_option("--random", sweep_random, "this many seeded random families");
    CLI::Option* seed_opt = cmd_sweep->add_option("--seed", sweep_seed, "base seed");
    cmd_sweep->add_option("--generators", sweep_generators,
                          "random generators per family (default: n)");
    cmd_sweep->add_flag("--require-empty", sweep_require_empty,
                        "exhaustive population keeps only families containing {}");
    cmd_sweep->add_option("--checks", sweep_checks, "comma-separated check names, or 'all'");
    cmd_sweep->add_option("--t", sweep_t, "denominator for the up-set check")
        ->check(CLI::Range(1, 1 << 20));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    nlohmann::json doc;
    int code = kUsage;
    try {
        if (*cmd_check) {
            doc["command"] = "check";
            code = run_check(check_file, doc);
        } else if (*cmd_freq) {
            doc["command"] = "freq";
            code = run_freq(freq_file, doc);
        } else if (*cmd_bound) {
            doc["command"] = "bound";
            code = run_bound(bound_file, bound_element, doc);
        } else if (*cmd_partition) {
            doc["command"] = "partition";
            code = run_partition(partition_file, doc);
        } else if (*cmd_order) {
            doc["command"] = "order";
            code = run_order(order_file, doc);
        } else if (*cmd_upset) {
            doc["command"] = "upset";
            code = run_upset(upset_file, upset_t, doc);
        } else if (*cmd_packing) {
            doc["command"] = "packing";
            try {
                code = run_packing(packing_file, doc);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(e.what());
            }
        } else if (*cmd_turan) {
            doc["command"] = "turan";
            code = run_turan(turan_vertices, turan_t, turan_exhaustive, turan_threads, doc);
        } else if (*cmd_intersecting) {
            doc["command"] = "intersecting";
            try {
                code = run_intersecting(intersecting_file, doc);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(e.what());
            }
        } else if (*cmd_gen) {
            doc["command"] = "gen";
            code = run_gen(gen_extremal, gen_fano, gen_out, doc);
        } else if (*cmd_sweep) {
            doc["command"] = "sweep";
            require(sweep_exhaustive != (random_opt->count() > 0),
                    "pass exactly one of --exhaustive or --random COUNT");
            ucs::SweepOptions options;
            options.population.n = sweep_n;
            options.population.require_empty = sweep_require_empty;
            if (sweep_exhaustive) {
                options.population.kind = ucs::Population::Kind::exhaustive;
            } else {
                require(sweep_random > 0, "--random needs a positive count");
                require(seed_opt->count() > 0, "--random needs an explicit --seed");
                options.population.kind = ucs::Population::Kind::random;
                options.population.count = sweep_random;
                options.population.seed = sweep_seed;
                options.population.generator_count = sweep_generators;
            }
            options.checks = parse_checks(sweep_checks);
            options.upset_t = sweep_t;
            doc["inputs"] = {{"population", options.population.describe()},
                             {"checks", sweep_checks},
                             {"t", sweep_t}};
            code = run_sweep(options, doc);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency check failed: " << e.what() << "\n";
        return kBug;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (!json_path.empty()) {
        if (!doc.contains("timing")) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            doc["timing"] = {{"wall_seconds", elapsed.count()}};
        }
        try {
            ucs::write_report(doc, json_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        }
    }
    return code;
}
