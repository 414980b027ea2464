#pragma once

// Intersection graphs of set families and the Turan-style counting that
// turns "many sets, few disjoint pairs" into frequency lower bounds: color
// each edge by a common element, take the majority color, and read off how
// many members must share it.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucs/family.hpp"
#include "ucs/rational.hpp"

namespace ucs {

struct FamilyGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i < j, member indices
};

// Vertices are the members in ascending order; edges join members with
// nonempty intersection.
FamilyGraph intersection_graph(const SetFamily& family);

struct GraphInvariants {
    int alpha = 0;  // independence number
    int omega = 0;  // clique number
};

// Exact branch and bound with a greedy coloring bound; refuses graphs with
// more than 64 vertices rather than approximating.
GraphInvariants graph_invariants(const FamilyGraph& graph);

struct TuranBounds {
    Rational max_edges;  // #E <= (1 - 1/(t-1)) v^2 / 2 when omega < t
    Rational min_edges;  // #E >= v^2/(2(t-1)) - v/2 when alpha < t
};

TuranBounds turan_bounds(std::int64_t vertices, std::int64_t t);  // t >= 2

struct TuranSweepResult {
    bool ok = false;
    std::int64_t graphs_checked = 0;
    std::string diagnostics;  // first offending graph, when any
};

// Checks the min-edge bound against alpha on every labeled graph with at
// most max_vertices vertices (<= 7), for every t in 2..v. Sharded across
// threads with a deterministic merge.
TuranSweepResult turan_exhaustive_check(int max_vertices, int threads = 1);

enum class ColoringMode { general, intersecting };

struct ColoringCertificate {
    FamilyGraph graph;
    std::vector<int> edge_colors;           // smallest common element per edge
    int majority_color = 0;                 // 0 when there are no edges
    std::int64_t majority_edge_count = 0;
    std::int64_t colored_vertices = 0;      // members touching a majority edge
    int bound_witness = 0;                  // element the bound applies to
    std::int64_t frequency_lower_bound = 0; // colored_vertices, or 1 as fallback
    bool intersecting_mode = false;
    double intersecting_bound = 0.0;        // 1/2 + sqrt(1/4 + (m^2-m)/n)
    bool intersecting_bound_ok = true;      // lower bound reaches it (1e-9 relative)
};

// Every edge color lies in both endpoints, so the witness element really
// occurs in at least frequency_lower_bound members. Intersecting mode
// additionally checks the closed-form bound and requires an intersecting
// family.
ColoringCertificate frequency_via_coloring(const SetFamily& family, ColoringMode mode);

struct IntersectingBounds {
    double exact_bound = 0.0;       // 1/2 + sqrt(1/4 + (m^2-m)/n)
    double simplified_bound = 0.0;  // sqrt((m-1)/(m*n)) * m
};

// Max frequency guaranteed inside an intersecting family of m sets over
// [n]; exact_bound >= simplified_bound always, equality only degenerately.
IntersectingBounds intersecting_frequency_bound(std::int64_t m, std::int64_t n);

struct FrequencyGuarantee {
    bool applicable = false;  // m >= 7n/log2(n)
    double bound = 0.0;       // sqrt(log2 n)/(3n) * m
};

// Frequency guarantee for large union-closed families via the up-set,
// packing and coloring chain.
FrequencyGuarantee frequency_guarantee(int n, std::int64_t m);

struct IntersectingSubfamily {
    SetFamily subfamily;
    bool at_least_half = false;  // 2 * #subfamily >= #family
};

// Maximum intersecting subfamily = maximum clique in the intersection
// graph ({} never qualifies). Exact for families of at most 64 members.
IntersectingSubfamily max_intersecting_subfamily(const SetFamily& family);

// The seven lines of the projective plane of order 2, over [7]. The
// intersecting frequency bound is met with equality here.
SetFamily fano_plane();

}  // namespace ucs
