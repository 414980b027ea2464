#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ucs/io.hpp"

using namespace ucs;

namespace {

std::string error_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parsing family files") {
    SUBCASE("header, empty-set marker, comments, CRLF") {
        const SetFamily f = parse_family_text("n 3\r\n# lines of the chain\r\n-\r\n1 2 # inline\r\n1 2 3\r\n");
        CHECK(f.ground_size() == 3);
        CHECK(f.members() == std::vector<SubsetMask>{0b000u, 0b011u, 0b111u});
    }
    SUBCASE("without a header the largest element fixes the ground size") {
        const SetFamily f = parse_family_text("1\n1 2\n");
        CHECK(f.ground_size() == 2);
        CHECK(f.members() == std::vector<SubsetMask>{0b01u, 0b11u});
    }
    SUBCASE("header alone gives the empty family") {
        const SetFamily f = parse_family_text("n 4\n");
        CHECK(f.ground_size() == 4);
        CHECK(f.size() == 0);
    }
    SUBCASE("elements may arrive out of order inside a line") {
        const SetFamily f = parse_family_text("3 1\n");
        CHECK(f.members() == std::vector<SubsetMask>{0b101u});
    }
    SUBCASE("no trailing newline") {
        const SetFamily f = parse_family_text("n 2\n1 2");
        CHECK(f.members() == std::vector<SubsetMask>{0b11u});
    }
}

TEST_CASE("parse errors carry the source and the line number") {
    CHECK(mentions(error_of([] { parse_family_text("n 3\n4\n", "bad.txt"); }),
                   "bad.txt:2"));
    CHECK(mentions(error_of([] { parse_family_text("n 3\n4\n"); }), "outside [1, 3]"));
    CHECK(mentions(error_of([] { parse_family_text("1\nn 3\n"); }),
                   "'n' header must precede every set line"));
    CHECK(mentions(error_of([] { parse_family_text("n 2\nn 3\n"); }), "second 'n' header"));
    CHECK(mentions(error_of([] { parse_family_text("n 2 3\n"); }), "exactly 'n <int>'"));
    CHECK(mentions(error_of([] { parse_family_text("n 21\n"); }), "exceeds the maximum"));
    CHECK(mentions(error_of([] { parse_family_text("n 0\n"); }), "positive integer"));
    CHECK(mentions(error_of([] { parse_family_text("1 x\n"); }), "got 'x'"));
    CHECK(mentions(error_of([] { parse_family_text("2 2\n"); }), "listed twice in one set"));
    CHECK(mentions(error_of([] { parse_family_text("1 2\n# gap\n2 1\n"); }),
                   "duplicate of the set on line 1"));
    CHECK(mentions(error_of([] { parse_family_text(""); }), "cannot determine the ground size"));
    CHECK(mentions(error_of([] { parse_family_text("-\n"); }),
                   "only empty sets and no 'n' header"));
    CHECK(mentions(error_of([] { parse_family_text("\xEF\xBB\xBF" "n 2\n1\n"); }),
                   "byte order mark"));
    CHECK(mentions(error_of([] { parse_family_text("25\n"); }),
                   "exceeds the maximum ground size"));
}

TEST_CASE("writing family files") {
    const SetFamily f(3, {0b000u, 0b001u, 0b010u, 0b011u, 0b111u});
    CHECK(family_to_text(f) == "n 3\n-\n1\n2\n1 2\n1 2 3\n");
    CHECK(family_to_text(SetFamily(2, {})) == "n 2\n");

    SUBCASE("round trip on random families") {
        std::mt19937_64 rng(2718);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 12);
            std::set<SubsetMask> draws;
            const int count = static_cast<int>(rng() % 10);
            for (int d = 0; d < count; ++d)
                draws.insert(static_cast<SubsetMask>(rng()) & full_mask(n));
            const SetFamily original(n, std::vector<SubsetMask>(draws.begin(), draws.end()));
            const SetFamily reparsed = parse_family_text(family_to_text(original));
            CHECK(reparsed.ground_size() == original.ground_size());
            CHECK(reparsed.members() == original.members());
        }
    }
    SUBCASE("save and load through a file") {
        const std::string path = "io_round_trip.txt";
        save_family(f, path);
        const SetFamily loaded = load_family(path);
        CHECK(loaded.members() == f.members());
        CHECK(loaded.ground_size() == 3);
        std::remove(path.c_str());
    }
    SUBCASE("missing files are reported by name") {
        CHECK(mentions(error_of([] { load_family("no_such_family.txt"); }),
                       "no_such_family.txt"));
    }
}

TEST_CASE("json builders") {
    SUBCASE("masks and families") {
        CHECK(mask_to_json(0b101u) == nlohmann::json::array({1, 3}));
        CHECK(mask_to_json(0) == nlohmann::json::array());
        const nlohmann::json fam = family_to_json(SetFamily(2, {0b00u, 0b11u}));
        CHECK(fam["n"] == 2);
        CHECK(fam["size"] == 2);
        CHECK(fam["sets"] == nlohmann::json::array({nlohmann::json::array(), {1, 2}}));
    }
    SUBCASE("flags") {
        const nlohmann::json flags = flags_to_json(classify_family(SetFamily(2, {0b00u, 0b01u, 0b11u})));
        CHECK(flags["union_closed"] == true);
        CHECK(flags["nontrivial"] == true);
        CHECK(flags["up_set"] == false);
        CHECK(flags.size() == 7);
    }
    SUBCASE("rationals keep the exact string next to the float") {
        const nlohmann::json r = rational_to_json(Rational::of(4, 3));
        CHECK(r["exact"] == "4/3");
        CHECK(r["value"].get<double>() == doctest::Approx(4.0 / 3.0));
    }
    SUBCASE("every verdict carries its statement") {
        const nlohmann::json v = verdict_json(true, statements::half_frequency);
        CHECK(v["holds"] == true);
        CHECK(v["statement"] == statements::half_frequency);

        const SetFamily f(3, {0b000u, 0b001u, 0b010u, 0b011u, 0b111u});
        CHECK(half_frequency_to_json(half_frequency_verdict(f))["verdict"]["statement"] ==
              statements::half_frequency);
        CHECK(witness_to_json(witness_frequency_bound(f, 3))["verdict"]["statement"] ==
              statements::witness_bound);
        const nlohmann::json prof = profile_to_json(frequency_profile(f));
        CHECK(prof["verdicts"]["doubling_all_ranks"]["statement"] == statements::doubling_rank);
        CHECK(prof["verdicts"]["plus_one_all_ranks"]["statement"] == statements::plus_one_rank);
        CHECK(prof["verdicts"]["bottom_ranks"]["statement"] == statements::bottom_ranks);
        CHECK(prof["rows"].size() == 3);
        CHECK(prof["rows"][2]["plus_one_equality"] == true);
    }
    SUBCASE("partitions with and without member lists") {
        const SetFamily f(2, {0b00u, 0b01u, 0b11u});
        const CongruencePartition p = congruence_partition(interior_operator(f));
        const nlohmann::json with = partition_to_json(p, true);
        const nlohmann::json without = partition_to_json(p, false);
        CHECK(with["class_count"] == 3);
        CHECK(with["classes"][0].contains("members"));
        CHECK(!without["classes"][0].contains("members"));
        CHECK(with["classes"][0]["size"] == 2);

        const nlohmann::json ord = ordering_to_json(class_size_ordering(f, p));
        CHECK(ord["labels"].size() == 3);
        CHECK(ord["labels"][0] == nlohmann::json::array({1, 2}));
        CHECK(ord["class_sizes"] == nlohmann::json::array({1, 1, 2}));
    }
    SUBCASE("halving certificates with and without the up-set body") {
        const HalvingUpsetCertificate cert =
            construct_halving_upset(SetFamily(2, {0b00u, 0b01u, 0b11u}), 2);
        const nlohmann::json with = halving_to_json(cert, true);
        CHECK(with["upset"]["size"] == 2);
        CHECK(with["verdicts"]["intersection"]["holds"] == true);
        CHECK(!halving_to_json(cert, false).contains("upset"));
    }
    SUBCASE("packing, turan, coloring, guarantees") {
        const PackingReport packing =
            max_disjoint_packing(SetFamily(2, {0b01u, 0b10u, 0b11u}));
        const nlohmann::json p = packing_to_json(packing);
        CHECK(p["max_disjoint"] == 2);
        CHECK(p["size_precondition_ok"]["holds"] == false);
        CHECK(p["verdict"]["holds"] == true);
        CHECK(p["verdict"]["statement"] == statements::packing_threshold);

        const nlohmann::json t = turan_bounds_to_json(4, 2, turan_bounds(4, 2));
        CHECK(t["min_edges"]["bound"]["exact"] == "6");
        CHECK(t["min_edges"]["statement"] == statements::turan_min_edges);

        const nlohmann::json sweep_doc = turan_sweep_to_json(turan_exhaustive_check(3, 1));
        CHECK(sweep_doc["graphs_checked"] == 11);
        CHECK(sweep_doc["verdict"]["holds"] == true);

        const nlohmann::json coloring =
            coloring_to_json(frequency_via_coloring(fano_plane(), ColoringMode::intersecting));
        CHECK(coloring["majority_color"] == 1);
        CHECK(coloring["intersecting"]["verdict"]["holds"] == true);
        CHECK(!coloring_to_json(frequency_via_coloring(fano_plane(), ColoringMode::general))
                   .contains("intersecting"));

        CHECK(intersecting_bounds_to_json(intersecting_frequency_bound(7, 7))["exact_bound"]
                  .get<double>() == doctest::Approx(3.0));
        CHECK(guarantee_to_json(frequency_guarantee(16, 28))["applicable"] == true);
    }
}

TEST_CASE("sweep reports serialize deterministically and without timing") {
    SweepOptions options;
    options.population.n = 3;
    const SweepReport first = sweep(options);
    const SweepReport second = sweep(options);

    const nlohmann::json a = sweep_to_json(first);
    const nlohmann::json b = sweep_to_json(second);
    CHECK(a.dump(2) == b.dump(2));  // byte identical; the clock stays outside
    CHECK(!a.contains("wall_seconds"));
    CHECK(!a.contains("timing"));

    CHECK(a["checks"].size() == 8);
    CHECK(a["tallies"].size() == 8);
    CHECK(a["statements"].size() == 8);
    CHECK(a["statements"]["disjoint-packing"] == statements::packing_threshold);
    CHECK(a["statements"]["half-frequency"] == statements::half_frequency);
    CHECK(a["bug_detected"] == false);
    CHECK(a["counterexamples"] == nlohmann::json::array());

    SUBCASE("reports land on disk with a trailing newline") {
        const std::string path = "sweep_report_test.json";
        write_report(a, path);
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        CHECK(text == a.dump(2) + "\n");
        CHECK(nlohmann::json::parse(text) == a);
        std::remove(path.c_str());
    }
}
