#include "ucs/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucs {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& message) {
    std::ostringstream out;
    out << source;
    if (line > 0) out << ":" << line;
    out << ": " << message;
    throw std::runtime_error(out.str());
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

int parse_positive_int(const std::string& token, const std::string& source, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
        parse_fail(source, line, "expected a positive integer, got '" + token + "'");
    return value;
}

}  // namespace

SetFamily parse_family_text(const std::string& text, const std::string& source) {
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0)
        parse_fail(source, 1, "UTF-8 byte order mark is not accepted; save as plain ASCII");

    std::vector<SubsetMask> members;
    std::map<SubsetMask, int> first_seen;  // mask -> line number, for duplicate messages
    bool have_header = false;
    int header_n = 0;
    bool before_first_set = true;
    int max_element = 0;

    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line_number;

        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);

        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "n") {
            if (!before_first_set)
                parse_fail(source, line_number, "'n' header must precede every set line");
            if (have_header) parse_fail(source, line_number, "second 'n' header");
            if (tokens.size() != 2)
                parse_fail(source, line_number, "header must be exactly 'n <int>'");
            header_n = parse_positive_int(tokens[1], source, line_number);
            if (header_n > kMaxGroundSize)
                parse_fail(source, line_number,
                           "ground size " + std::to_string(header_n) + " exceeds the maximum " +
                               std::to_string(kMaxGroundSize));
            have_header = true;
            continue;
        }

        before_first_set = false;
        SubsetMask mask = 0;
        if (tokens.size() != 1 || tokens[0] != "-") {
            for (const std::string& token : tokens) {
                const int element = parse_positive_int(token, source, line_number);
                if (element > kMaxGroundSize)
                    parse_fail(source, line_number,
                               "element " + std::to_string(element) + " exceeds the maximum ground size " +
                                   std::to_string(kMaxGroundSize));
                if (have_header && element > header_n)
                    parse_fail(source, line_number,
                               "element " + std::to_string(element) + " outside [1, " +
                                   std::to_string(header_n) + "]");
                const SubsetMask bit = SubsetMask{1} << (element - 1);
                if (mask & bit)
                    parse_fail(source, line_number,
                               "element " + std::to_string(element) + " listed twice in one set");
                mask |= bit;
                if (element > max_element) max_element = element;
            }
        }

        if (const auto it = first_seen.find(mask); it != first_seen.end())
            parse_fail(source, line_number,
                       "duplicate of the set on line " + std::to_string(it->second));
        first_seen.emplace(mask, line_number);
        members.push_back(mask);
    }

    if (!have_header && max_element == 0)
        parse_fail(source, 0, members.empty()
                                  ? "no sets and no 'n' header; cannot determine the ground size"
                                  : "only empty sets and no 'n' header; cannot determine the ground size");
    const int n = have_header ? header_n : max_element;
    return SetFamily(n, std::move(members));
}

SetFamily load_family(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_family_text(buffer.str(), path);
}

std::string family_to_text(const SetFamily& family) {
    std::ostringstream out;
    out << "n " << family.ground_size() << "\n";
    for (const SubsetMask member : family.members()) {
        if (member == 0) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int element = 1; element <= family.ground_size(); ++element) {
            if (!(member >> (element - 1) & 1u)) continue;
            if (!first) out << ' ';
            out << element;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

void save_family(const SetFamily& family, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << family_to_text(family);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

nlohmann::json mask_to_json(SubsetMask mask) {
    nlohmann::json elements = nlohmann::json::array();
    for (int element = 1; element <= kMaxGroundSize; ++element)
        if (mask >> (element - 1) & 1u) elements.push_back(element);
    return elements;
}

nlohmann::json family_to_json(const SetFamily& family) {
    nlohmann::json sets = nlohmann::json::array();
    for (const SubsetMask member : family.members()) sets.push_back(mask_to_json(member));
    return {{"n", family.ground_size()}, {"size", family.size()}, {"sets", std::move(sets)}};
}

nlohmann::json flags_to_json(const FamilyFlags& flags) {
    return {{"union_closed", flags.union_closed},
            {"intersection_closed", flags.intersection_closed},
            {"up_set", flags.up_set},
            {"nontrivial", flags.nontrivial},
            {"separating", flags.separating},
            {"contains_empty", flags.contains_empty},
            {"contains_full", flags.contains_full}};
}

nlohmann::json rational_to_json(const Rational& value) {
    return {{"exact", value.str()}, {"value", value.value()}};
}

nlohmann::json verdict_json(bool holds, const char* statement) {
    return {{"holds", holds}, {"statement", statement}};
}

nlohmann::json half_frequency_to_json(const HalfFrequencyVerdict& verdict) {
    return {{"witness_element", verdict.witness_element},
            {"count", verdict.max_count},
            {"total", verdict.total},
            {"verdict", verdict_json(verdict.holds, statements::half_frequency)}};
}

nlohmann::json witness_to_json(const WitnessBoundCertificate& certificate) {
    return {{"element", certificate.element},
            {"witness", mask_to_json(certificate.witness)},
            {"count", certificate.count},
            {"bound", rational_to_json(certificate.bound)},
            {"verdict", verdict_json(certificate.holds, statements::witness_bound)}};
}

nlohmann::json profile_to_json(const FrequencyProfile& profile) {
    nlohmann::json rows = nlohmann::json::array();
    bool doubling_all = true;
    bool plus_one_all = true;
    for (const FrequencyProfileRow& row : profile.rows) {
        doubling_all = doubling_all && row.geometric_ok;
        plus_one_all = plus_one_all && row.plus_one_ok;
        rows.push_back({{"rank", row.rank},
                        {"element", row.element},
                        {"count", row.count},
                        {"doubling_ok", row.geometric_ok},
                        {"plus_one_ok", row.plus_one_ok},
                        {"plus_one_equality", row.plus_one_equality}});
    }
    return {{"total", profile.total},
            {"rows", std::move(rows)},
            {"verdicts",
             {{"doubling_all_ranks", verdict_json(doubling_all, statements::doubling_rank)},
              {"plus_one_all_ranks", verdict_json(plus_one_all, statements::plus_one_rank)},
              {"bottom_ranks",
               verdict_json(profile.last_rank_ok && profile.second_last_rank_ok,
                            statements::bottom_ranks)}}}};
}

nlohmann::json partition_to_json(const CongruencePartition& partition, bool include_members) {
    nlohmann::json classes = nlohmann::json::array();
    for (int c = 0; c < partition.class_count(); ++c) {
        nlohmann::json entry = {{"min", mask_to_json(partition.class_min[c])},
                                {"size", partition.class_members[c].size()}};
        if (include_members) {
            nlohmann::json members = nlohmann::json::array();
            for (const SubsetMask member : partition.class_members[c])
                members.push_back(mask_to_json(member));
            entry["members"] = std::move(members);
        }
        classes.push_back(std::move(entry));
    }
    return {{"n", partition.n},
            {"class_count", partition.class_count()},
            {"classes", std::move(classes)}};
}

nlohmann::json ordering_to_json(const OrderedFamily& ordering) {
    nlohmann::json labels = nlohmann::json::array();
    for (const SubsetMask label : ordering.labels) labels.push_back(mask_to_json(label));
    return {{"labels", std::move(labels)}, {"class_sizes", ordering.class_sizes}};
}

nlohmann::json halving_to_json(const HalvingUpsetCertificate& certificate, bool include_upset) {
    nlohmann::json doc = {
        {"t", certificate.t},
        {"family_size", certificate.family_size},
        {"upset_size", certificate.upset.size()},
        {"size_bound", certificate.size_bound},
        {"intersection_count", certificate.intersection_count},
        {"verdicts",
         {{"is_upset", verdict_json(certificate.is_upset, "U is an up-set")},
          {"size", verdict_json(certificate.size_ok, "#U <= ceil(2^n / t)")},
          {"intersection",
           verdict_json(certificate.intersection_ok, "t * #(F cap U) >= #F")}}}};
    if (include_upset) doc["upset"] = family_to_json(certificate.upset);
    return doc;
}

nlohmann::json packing_to_json(const PackingReport& report) {
    return {{"max_disjoint", report.max_disjoint},
            {"threshold", report.threshold},
            {"size_precondition_ok",
             verdict_json(report.size_precondition_ok, "#U <= 2^(n-1)")},
            {"verdict", verdict_json(report.holds, statements::packing_threshold)}};
}

nlohmann::json turan_bounds_to_json(std::int64_t vertices, std::int64_t t,
                                    const TuranBounds& bounds) {
    return {{"vertices", vertices},
            {"t", t},
            {"max_edges",
             {{"bound", rational_to_json(bounds.max_edges)},
              {"statement", statements::turan_max_edges}}},
            {"min_edges",
             {{"bound", rational_to_json(bounds.min_edges)},
              {"statement", statements::turan_min_edges}}}};
}

nlohmann::json turan_sweep_to_json(const TuranSweepResult& result) {
    return {{"graphs_checked", result.graphs_checked},
            {"diagnostics", result.diagnostics},
            {"verdict", verdict_json(result.ok, statements::turan_min_edges)}};
}

nlohmann::json coloring_to_json(const ColoringCertificate& certificate) {
    nlohmann::json doc = {
        {"edge_count", certificate.graph.edges.size()},
        {"majority_color", certificate.majority_color},
        {"majority_edge_count", certificate.majority_edge_count},
        {"colored_vertices", certificate.colored_vertices},
        {"bound_witness", certificate.bound_witness},
        {"frequency_lower_bound", certificate.frequency_lower_bound},
        {"statement", statements::coloring_bound}};
    if (certificate.intersecting_mode) {
        doc["intersecting"] = {
            {"bound", certificate.intersecting_bound},
            {"verdict",
             verdict_json(certificate.intersecting_bound_ok, statements::intersecting_bound)}};
    }
    return doc;
}

nlohmann::json intersecting_bounds_to_json(const IntersectingBounds& bounds) {
    return {{"exact_bound", bounds.exact_bound},
            {"simplified_bound", bounds.simplified_bound},
            {"statement", statements::intersecting_bound}};
}

nlohmann::json guarantee_to_json(const FrequencyGuarantee& guarantee) {
    return {{"applicable", guarantee.applicable},
            {"bound", guarantee.bound},
            {"statement", statements::large_family_guarantee}};
}

const char* sweep_check_statement(SweepCheck check) {
    switch (check) {
        case SweepCheck::conjecture: return statements::half_frequency;
        case SweepCheck::frequencies: return statements::rank_bounds;
        case SweepCheck::witness: return statements::witness_bound;
        case SweepCheck::ranks: return statements::bottom_ranks;
        case SweepCheck::interior: return statements::interior_round_trip;
        case SweepCheck::upset: return statements::upset_claims;
        case SweepCheck::packing: return statements::packing_threshold;
        case SweepCheck::intersecting: return statements::intersecting_half;
    }
    return "";
}

nlohmann::json sweep_to_json(const SweepReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (unsigned bit = 0; bit < 8; ++bit)
        if (report.checks & (1u << bit))
            checks.push_back(sweep_check_name(static_cast<SweepCheck>(1u << bit)));

    nlohmann::json tallies = nlohmann::json::array();
    for (const CheckTally& tally : report.tallies) {
        tallies.push_back({{"name", tally.name},
                           {"families_checked", tally.families_checked},
                           {"violations", tally.violations},
                           {"equalities", tally.equalities},
                           {"skipped", tally.skipped}});
    }

    nlohmann::json counterexamples = nlohmann::json::array();
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
        counterexamples.push_back({{"family", family_to_json(report.counterexamples[i])},
                                   {"note", report.counterexample_notes[i]}});
    }

    nlohmann::json equalities = nlohmann::json::array();
    for (std::size_t i = 0; i < report.equality_examples.size(); ++i) {
        equalities.push_back({{"family", family_to_json(report.equality_examples[i])},
                              {"rank", report.equality_ranks[i]}});
    }

    nlohmann::json tally_statements = nlohmann::json::object();
    for (unsigned bit = 0; bit < 8; ++bit) {
        const auto check = static_cast<SweepCheck>(1u << bit);
        tally_statements[sweep_check_name(check)] = sweep_check_statement(check);
    }

    return {{"n", report.n},
            {"population", report.population},
            {"checks", std::move(checks)},
            {"t", report.upset_t},
            {"tallies", std::move(tallies)},
            {"statements", std::move(tally_statements)},
            {"counterexamples", std::move(counterexamples)},
            {"equality_examples", std::move(equalities)},
            {"equality_examples_truncated", report.equality_examples_truncated},
            {"bug_detected", report.bug_detected},
            {"bug_diagnostics", report.bug_diagnostics}};
}

void write_report(const nlohmann::json& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << report.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace ucs
