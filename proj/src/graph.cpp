#include "ucs/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ucs {

FamilyGraph intersection_graph(const SetFamily& family) {
    FamilyGraph g;
    g.vertex_count = static_cast<int>(family.size());
    const auto& ms = family.members();
    for (int i = 0; i < g.vertex_count; ++i)
        for (int j = i + 1; j < g.vertex_count; ++j)
            if (ms[i] & ms[j]) g.edges.emplace_back(i, j);
    return g;
}

namespace {

std::vector<std::uint64_t> adjacency_rows(const FamilyGraph& graph) {
    std::vector<std::uint64_t> adj(graph.vertex_count, 0);
    for (auto [i, j] : graph.edges) {
        if (i < 0 || j < 0 || i >= graph.vertex_count || j >= graph.vertex_count || i == j)
            throw std::invalid_argument("bad edge");
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
    return adj;
}

// Tomita-style maximum clique: greedy coloring gives both the bound and the
// branching order. Deterministic; returns the first best clique found.
struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best_mask = 0;
    int best_size = 0;

    void expand(std::uint64_t r_mask, int r_size, std::uint64_t cand) {
        if (cand == 0) {
            if (r_size > best_size) { best_size = r_size; best_mask = r_mask; }
            return;
        }
        std::array<int, 64> verts{}, color{};
        int cnt = 0, classes = 0;
        std::uint64_t uncolored = cand;
        while (uncolored) {
            ++classes;
            std::uint64_t avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                verts[cnt] = v;
                color[cnt] = classes;
                ++cnt;
                const std::uint64_t bit = std::uint64_t{1} << v;
                uncolored &= ~bit;
                avail &= ~bit & ~adj[v];  // keep the class independent
            }
        }
        std::uint64_t pool = cand;
        for (int i = cnt - 1; i >= 0; --i) {
            if (r_size + color[i] <= best_size) return;
            const std::uint64_t bit = std::uint64_t{1} << verts[i];
            expand(r_mask | bit, r_size + 1, pool & adj[verts[i]]);
            pool &= ~bit;
        }
    }
};

std::uint64_t max_clique_mask(const std::vector<std::uint64_t>& adj) {
    CliqueSearch search{adj};
    const int v = static_cast<int>(adj.size());
    search.expand(0, 0, v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1);
    return search.best_mask;
}

}  // namespace

GraphInvariants graph_invariants(const FamilyGraph& graph) {
    if (graph.vertex_count < 0 || graph.vertex_count > 64)
        throw std::invalid_argument("exact alpha/omega handles at most 64 vertices");
    if (graph.vertex_count == 0) return GraphInvariants{0, 0};

    const std::vector<std::uint64_t> adj = adjacency_rows(graph);
    const std::uint64_t all = graph.vertex_count == 64 ? ~std::uint64_t{0}
                                                       : (std::uint64_t{1} << graph.vertex_count) - 1;
    std::vector<std::uint64_t> comp(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i)
        comp[i] = all & ~adj[i] & ~(std::uint64_t{1} << i);

    const std::uint64_t clique = max_clique_mask(adj);
    const std::uint64_t indep = max_clique_mask(comp);

    // Paranoia on the witnesses: the clique is pairwise adjacent, the
    // independent set pairwise nonadjacent.
    for (std::uint64_t rest = clique; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((clique & ~(std::uint64_t{1} << v)) & ~adj[v])
            throw std::logic_error("clique witness broken");
    }
    for (std::uint64_t rest = indep; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (indep & adj[v]) throw std::logic_error("independent-set witness broken");
    }
    return GraphInvariants{std::popcount(indep), std::popcount(clique)};
}

TuranBounds turan_bounds(std::int64_t vertices, std::int64_t t) {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
    if (t < 2) throw std::invalid_argument("Turan bounds need t >= 2");
    return TuranBounds{
        Rational::of(vertices * vertices * (t - 2), 2 * (t - 1)),
        Rational::of(vertices * vertices - vertices * (t - 1), 2 * (t - 1)),
    };
}

namespace {

// Max independent set over all 2^v subsets: standard lowest-vertex DP.
int alpha_small(const std::array<std::uint32_t, 7>& adj, int v, std::vector<std::int8_t>& mis) {
    const std::uint32_t all = (std::uint32_t{1} << v) - 1;
    mis[0] = 0;
    for (std::uint32_t s = 1; s <= all; ++s) {
        const int low = std::countr_zero(s);
        const std::int8_t skip = mis[s & (s - 1)];
        const std::int8_t take =
            static_cast<std::int8_t>(1 + mis[s & ~(adj[low] | (std::uint32_t{1} << low))]);
        mis[s] = std::max(skip, take);
    }
    return mis[all];
}

struct TuranShard {
    std::int64_t checked = 0;
    std::int64_t bad_graph = -1;
    int bad_v = 0, bad_t = 0;
};

void turan_shard(int v, std::uint32_t begin, std::uint32_t end, TuranShard* out) {
    const int pairs = v * (v - 1) / 2;
    (void)pairs;
    std::vector<std::int8_t> mis(std::size_t{1} << v);
    for (std::uint32_t code = begin; code < end; ++code) {
        std::array<std::uint32_t, 7> adj{};
        int bit = 0;
        std::int64_t edges = 0;
        for (int j = 1; j < v; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (code & (std::uint32_t{1} << bit)) {
                    adj[i] |= std::uint32_t{1} << j;
                    adj[j] |= std::uint32_t{1} << i;
                    ++edges;
                }
        const int alpha = alpha_small(adj, v, mis);
        for (int t = alpha + 1; t <= v; ++t) {
            // edges >= v^2/(2(t-1)) - v/2, cross-multiplied
            if (2 * (t - 1) * edges < static_cast<std::int64_t>(v) * v - static_cast<std::int64_t>(v) * (t - 1)) {
                if (out->bad_graph < 0) { out->bad_graph = code; out->bad_v = v; out->bad_t = t; }
            }
        }
        ++out->checked;
    }
}

}  // namespace

TuranSweepResult turan_exhaustive_check(int max_vertices, int threads) {
    if (max_vertices < 1 || max_vertices > 7)
        throw std::invalid_argument("exhaustive graph sweep covers 1..7 vertices");
    if (threads < 1) threads = 1;

    TuranSweepResult result;
    result.ok = true;
    for (int v = 1; v <= max_vertices; ++v) {
        const int pairs = v * (v - 1) / 2;
        const std::uint32_t total = std::uint32_t{1} << pairs;
        const int workers = std::min<std::uint32_t>(threads, total);
        std::vector<TuranShard> shards(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            const std::uint32_t begin = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(total) * w / workers);
            const std::uint32_t end = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(total) * (w + 1) / workers);
            pool.emplace_back(turan_shard, v, begin, end, &shards[w]);
        }
        for (auto& th : pool) th.join();
        for (const auto& shard : shards) {
            result.graphs_checked += shard.checked;
            if (shard.bad_graph >= 0 && result.ok) {
                result.ok = false;
                std::ostringstream os;
                os << "edge code " << shard.bad_graph << " on " << shard.bad_v
                   << " vertices misses the t=" << shard.bad_t << " bound";
                result.diagnostics = os.str();
            }
        }
    }
    return result;
}

ColoringCertificate frequency_via_coloring(const SetFamily& family, ColoringMode mode) {
    ColoringCertificate cert;
    cert.intersecting_mode = mode == ColoringMode::intersecting;
    if (cert.intersecting_mode && !is_intersecting(family))
        throw std::invalid_argument("intersecting mode needs an intersecting family");

    cert.graph = intersection_graph(family);
    const auto& ms = family.members();
    std::vector<std::int64_t> color_count(family.ground_size() + 1, 0);
    for (auto [i, j] : cert.graph.edges) {
        const int c = std::countr_zero(ms[i] & ms[j]) + 1;  // smallest common element
        cert.edge_colors.push_back(c);
        ++color_count[c];
    }
    for (int c = 1; c <= family.ground_size(); ++c)
        if (color_count[c] > cert.majority_edge_count) {
            cert.majority_edge_count = color_count[c];
            cert.majority_color = c;
        }

    if (cert.majority_color != 0) {
        std::vector<char> touched(ms.size(), 0);
        for (std::size_t e = 0; e < cert.graph.edges.size(); ++e)
            if (cert.edge_colors[e] == cert.majority_color) {
                touched[cert.graph.edges[e].first] = 1;
                touched[cert.graph.edges[e].second] = 1;
            }
        for (char t : touched) cert.colored_vertices += t;
        cert.bound_witness = cert.majority_color;
        cert.frequency_lower_bound = cert.colored_vertices;
    } else {
        // No edges. Any element of any nonempty member still occurs once.
        SubsetMask support = family.union_of_members();
        if (support != 0) {
            cert.bound_witness = std::countr_zero(support) + 1;
            cert.frequency_lower_bound = 1;
        }
    }

    if (cert.intersecting_mode) {
        const IntersectingBounds b =
            intersecting_frequency_bound(family.size(), family.ground_size());
        cert.intersecting_bound = b.exact_bound;
        cert.intersecting_bound_ok =
            static_cast<double>(cert.frequency_lower_bound) >=
            b.exact_bound - 1e-9 * std::abs(b.exact_bound);
    }
    return cert;
}

IntersectingBounds intersecting_frequency_bound(std::int64_t m, std::int64_t n) {
    if (m < 1) throw std::invalid_argument("need at least one member");
    if (n < 1) throw std::invalid_argument("bad ground size");
    IntersectingBounds b;
    const double ratio = static_cast<double>(m * m - m) / static_cast<double>(n);
    b.exact_bound = 0.5 + std::sqrt(0.25 + ratio);
    b.simplified_bound =
        std::sqrt(static_cast<double>(m - 1) / static_cast<double>(m * n)) * static_cast<double>(m);
    return b;
}

FrequencyGuarantee frequency_guarantee(int n, std::int64_t m) {
    if (n < 2) throw std::invalid_argument("guarantee needs n >= 2");
    if (m < 1) throw std::invalid_argument("need at least one member");
    FrequencyGuarantee g;
    const double log2n = std::log2(static_cast<double>(n));
    g.applicable = static_cast<double>(m) * log2n >= 7.0 * static_cast<double>(n);
    g.bound = std::sqrt(log2n) / (3.0 * static_cast<double>(n)) * static_cast<double>(m);
    return g;
}

IntersectingSubfamily max_intersecting_subfamily(const SetFamily& family) {
    if (family.size() > 64)
        throw std::invalid_argument("exact clique search handles at most 64 members");
    const auto& ms = family.members();
    const int v = static_cast<int>(ms.size());
    std::vector<std::uint64_t> adj(v, 0);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (ms[i] & ms[j]) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    // {} has empty intersection with everything, itself included; it is an
    // isolated vertex and can simply be dropped from the candidate pool.
    std::uint64_t pool = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
    if (v > 0 && ms[0] == 0) pool &= ~std::uint64_t{1};

    CliqueSearch search{adj};
    search.expand(0, 0, pool);

    IntersectingSubfamily out;
    std::vector<SubsetMask> picked;
    for (std::uint64_t rest = search.best_mask; rest;) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        picked.push_back(ms[i]);
    }
    out.subfamily = SetFamily::from_sorted_unique(family.ground_size(), std::move(picked));
    out.at_least_half = 2 * out.subfamily.size() >= family.size();
    return out;
}

SetFamily fano_plane() {
    const auto line = [](int a, int b, int c) {
        return static_cast<SubsetMask>((1u << (a - 1)) | (1u << (b - 1)) | (1u << (c - 1)));
    };
    std::vector<SubsetMask> lines = {line(1, 2, 3), line(1, 4, 5), line(1, 6, 7), line(2, 4, 6),
                                     line(2, 5, 7), line(3, 4, 7), line(3, 5, 6)};
    return SetFamily(7, std::move(lines));
}

}  // namespace ucs
