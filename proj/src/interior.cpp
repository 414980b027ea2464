#include "ucs/interior.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <random>
#include <stdexcept>

namespace ucs {

namespace {

// sigma(X) = union of all members inside X, via the subset recursion
// sigma(X) = X when X is a member, else the union of sigma(X \ {i}).
std::vector<SubsetMask> member_union_table(const SetFamily& family) {
    const int n = family.ground_size();
    MaskSet present(n);
    for (SubsetMask m : family.members()) present.insert(m);

    std::vector<SubsetMask> sigma(std::size_t{1} << n, 0);
    for (std::size_t x = 1; x < sigma.size(); ++x) {
        const SubsetMask mask = static_cast<SubsetMask>(x);
        if (present.contains(mask)) {
            sigma[x] = mask;
            continue;
        }
        SubsetMask acc = 0;
        for (SubsetMask rest = mask; rest != 0;) {
            const SubsetMask bit = rest & (~rest + 1);
            acc |= sigma[x ^ bit];
            rest ^= bit;
        }
        sigma[x] = acc;
    }
    return sigma;
}

}  // namespace

InteriorTable interior_operator(const SetFamily& family) {
    if (family.members().empty() || family.members().front() != 0)
        throw std::invalid_argument("interior operator needs {} as a member");

    const int n = family.ground_size();
    std::vector<SubsetMask> sigma = member_union_table(family);

    // sigma lands inside the family exactly when the family is union closed.
    MaskSet present(n);
    for (SubsetMask m : family.members()) present.insert(m);
    for (SubsetMask v : sigma)
        if (!present.contains(v))
            throw std::invalid_argument("interior operator needs a union-closed family");

    return InteriorTable{n, std::move(sigma)};
}

InteriorCheck verify_interior_operator(const InteriorTable& table) {
    const int n = table.n;
    if (n < 1 || n > kMaxGroundSize || table.map.size() != (std::size_t{1} << n))
        throw std::invalid_argument("interior table must cover P(n)");
    const std::size_t size = table.map.size();
    for (SubsetMask v : table.map)
        if (v >= size) throw std::invalid_argument("interior table entry outside P(n)");

    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x)
        if (table.map[x] & ~static_cast<SubsetMask>(x)) ok = false;  // exclusivity
    for (std::size_t x = 0; x < size && ok; ++x)
        for (int i = 0; i < n && ok; ++i) {
            const SubsetMask bit = SubsetMask{1} << i;
            if (!(x & bit) && (table.map[x] & ~table.map[x | bit])) ok = false;  // monotone
        }
    for (std::size_t x = 0; x < size && ok; ++x)
        if (table.map[table.map[x]] != table.map[x]) ok = false;  // idempotent

    std::vector<SubsetMask> fixed;
    for (std::size_t x = 0; x < size; ++x)
        if (table.map[x] == static_cast<SubsetMask>(x)) fixed.push_back(static_cast<SubsetMask>(x));
    return InteriorCheck{ok, SetFamily::from_sorted_unique(n, std::move(fixed))};
}

CongruencePartition CongruencePartition::from_classes(int n,
                                                      std::vector<std::vector<SubsetMask>> classes) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
    CongruencePartition p;
    p.n = n;
    p.class_of.assign(std::size_t{1} << n, -1);
    p.class_members = std::move(classes);
    std::sort(p.class_members.begin(), p.class_members.end(),
              [](const auto& a, const auto& b) {
                  const SubsetMask ma = a.empty() ? 0 : *std::min_element(a.begin(), a.end());
                  const SubsetMask mb = b.empty() ? 0 : *std::min_element(b.begin(), b.end());
                  return ma < mb;
              });
    for (std::size_t c = 0; c < p.class_members.size(); ++c) {
        auto& members = p.class_members[c];
        if (members.empty()) throw std::invalid_argument("empty congruence class");
        std::sort(members.begin(), members.end());
        SubsetMask meet = full_mask(n);
        for (SubsetMask m : members) {
            if (m >= (SubsetMask{1} << n)) throw std::invalid_argument("class member outside P(n)");
            if (p.class_of[m] != -1) throw std::invalid_argument("classes overlap");
            p.class_of[m] = static_cast<std::int32_t>(c);
            meet &= m;
        }
        p.class_min.push_back(meet);
    }
    for (std::int32_t c : p.class_of)
        if (c == -1) throw std::invalid_argument("classes do not cover P(n)");
    return p;
}

CongruencePartition congruence_partition(const InteriorTable& table) {
    const InteriorCheck check = verify_interior_operator(table);
    if (!check.valid) throw std::invalid_argument("not an interior table");

    CongruencePartition p;
    p.n = table.n;
    const std::size_t size = table.map.size();
    // Class ids follow the ascending order of the fixed points.
    std::vector<std::int32_t> id_of(size, -1);
    for (SubsetMask f : check.fixed_points.members()) {
        id_of[f] = static_cast<std::int32_t>(p.class_min.size());
        p.class_min.push_back(f);
    }
    p.class_of.assign(size, -1);
    p.class_members.resize(p.class_min.size());
    for (std::size_t x = 0; x < size; ++x) {
        const std::int32_t c = id_of[table.map[x]];
        p.class_of[x] = c;
        p.class_members[c].push_back(static_cast<SubsetMask>(x));
    }
    return p;
}

bool verify_congruence(const CongruencePartition& p, bool exhaustive,
                       std::uint64_t seed, int samples) {
    const int n = p.n;
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
    if (exhaustive && n > 6)
        throw std::invalid_argument("exhaustive congruence check is limited to n <= 6");
    const std::size_t size = std::size_t{1} << n;
    if (p.class_of.size() != size) return false;
    if (p.class_min.size() != p.class_members.size()) return false;

    // Structural: class_of and class_members describe the same partition.
    std::vector<std::int64_t> seen(p.class_members.size(), 0);
    for (std::size_t c = 0; c < p.class_members.size(); ++c) {
        if (p.class_members[c].empty()) return false;
        for (SubsetMask m : p.class_members[c]) {
            if (m >= size || p.class_of[m] != static_cast<std::int32_t>(c)) return false;
            ++seen[c];
        }
    }
    std::int64_t covered = 0;
    for (std::int64_t s : seen) covered += s;
    if (covered != static_cast<std::int64_t>(size)) return false;

    // Each class meets in its own minimum, and sweeping [min, Y] for every
    // member Y stays inside the class. That makes classes intersection
    // closed and interval closed in one stroke.
    for (std::size_t c = 0; c < p.class_members.size(); ++c) {
        SubsetMask meet = full_mask(n);
        for (SubsetMask m : p.class_members[c]) meet &= m;
        if (meet != p.class_min[c]) return false;
        if (p.class_of[meet] != static_cast<std::int32_t>(c)) return false;
        if (exhaustive) {
            for (SubsetMask y : p.class_members[c]) {
                const SubsetMask span = y ^ meet;
                for (SubsetMask sub = span;; sub = (sub - 1) & span) {
                    if (p.class_of[meet | sub] != static_cast<std::int32_t>(c)) return false;
                    if (sub == 0) break;
                }
            }
        }
    }

    // The minima must reproduce the partition as an interior operator.
    {
        std::vector<SubsetMask> minima = p.class_min;
        std::sort(minima.begin(), minima.end());
        if (std::adjacent_find(minima.begin(), minima.end()) != minima.end()) return false;
        if (minima.empty() || minima.front() != 0) return false;
        try {
            const InteriorTable t = interior_operator(SetFamily::from_sorted_unique(n, minima));
            for (std::size_t x = 0; x < size; ++x)
                if (t.map[x] != p.class_min[p.class_of[x]]) return false;
        } catch (const std::invalid_argument&) {
            return false;  // minima not union closed
        }
    }

    // Compatibility with intersection: A ~ B forces (A&C) ~ (B&C).
    // Consecutive pairs suffice because the relation is transitive in A,B.
    if (exhaustive) {
        for (const auto& members : p.class_members)
            for (std::size_t i = 0; i + 1 < members.size(); ++i) {
                const SubsetMask a = members[i], b = members[i + 1];
                for (std::size_t c = 0; c < size; ++c)
                    if (p.class_of[a & c] != p.class_of[b & c]) return false;
            }
    } else {
        std::mt19937_64 rng(seed);
        const SubsetMask full = full_mask(n);
        for (int s = 0; s < samples; ++s) {
            const SubsetMask c = static_cast<SubsetMask>(rng()) & full;
            for (const auto& members : p.class_members)
                for (std::size_t i = 0; i + 1 < members.size(); ++i)
                    if (p.class_of[members[i] & c] != p.class_of[members[i + 1] & c]) return false;
        }
        // Sampled stand-in for the interval sweep: random member, random
        // point of [min, Y].
        for (std::size_t cls = 0; cls < p.class_members.size(); ++cls) {
            const auto& members = p.class_members[cls];
            for (int s = 0; s < samples / 8 + 1; ++s) {
                const SubsetMask y = members[rng() % members.size()];
                const SubsetMask span = y ^ p.class_min[cls];
                const SubsetMask z = p.class_min[cls] | (static_cast<SubsetMask>(rng()) & span);
                if (p.class_of[z] != static_cast<std::int32_t>(cls)) return false;
            }
        }
    }
    return true;
}

OrderEmbedding congruence_embedding(const CongruencePartition& p,
                                    SubsetMask target_e, SubsetMask source_f) {
    if (!subset_of(target_e, source_f))
        throw std::invalid_argument("embedding needs nested fixed points E <= F");
    const auto find_class = [&](SubsetMask fixed) {
        for (std::size_t c = 0; c < p.class_min.size(); ++c)
            if (p.class_min[c] == fixed) return static_cast<std::int32_t>(c);
        throw std::invalid_argument(format_mask(fixed) + " is not a class minimum");
    };
    const std::int32_t cf = find_class(source_f);
    const std::int32_t ce = find_class(target_e);

    OrderEmbedding emb;
    emb.source_fixed = source_f;
    emb.target_fixed = target_e;
    const SubsetMask drop = source_f & ~target_e;
    for (SubsetMask x : p.class_members[cf]) {
        const SubsetMask image = x & ~drop;
        if (p.class_of[image] != ce)
            throw std::invalid_argument("partition is not a congruence partition: image escapes");
        emb.pairs.emplace_back(x, image);
    }
    return emb;
}

OrderedFamily class_size_ordering(const SetFamily& family, const CongruencePartition& p) {
    const int n = family.ground_size();
    if (p.n != n || static_cast<std::int64_t>(p.class_min.size()) != family.size())
        throw std::invalid_argument("partition does not match the family");
    for (SubsetMask m : family.members())
        if (p.class_of[m] < 0 || p.class_min[p.class_of[m]] != m)
            throw std::invalid_argument("partition does not match the family");
    if (family.members().empty() || family.members().front() != 0 ||
        family.members().back() != full_mask(n))
        throw std::invalid_argument("ordering needs a nontrivial family containing {}");

    // Bucket members by class size; within one bucket run Kahn's algorithm
    // on the superset relation with a min-mask heap, so each pick is the
    // smallest inclusion-maximal candidate.
    std::vector<std::size_t> by_size(family.members().size());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    auto size_of = [&](std::size_t idx) {
        return static_cast<std::int64_t>(p.class_members[p.class_of[family.members()[idx]]].size());
    };
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        if (size_of(a) != size_of(b)) return size_of(a) < size_of(b);
        return family.members()[a] < family.members()[b];
    });

    OrderedFamily out;
    std::vector<std::int32_t> slot(std::size_t{1} << n, -1);  // position within current bucket
    std::size_t lo = 0;
    while (lo < by_size.size()) {
        std::size_t hi = lo;
        while (hi < by_size.size() && size_of(by_size[hi]) == size_of(by_size[lo])) ++hi;

        std::vector<SubsetMask> bucket;
        bucket.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) bucket.push_back(family.members()[by_size[i]]);
        for (std::size_t i = 0; i < bucket.size(); ++i) slot[bucket[i]] = static_cast<std::int32_t>(i);

        std::vector<std::int32_t> supersets(bucket.size(), 0);
        for (SubsetMask u : bucket) {
            if (u == 0) continue;
            // u is a strict superset of each of its proper submasks in the bucket.
            for (SubsetMask sub = (u - 1) & u;; sub = (sub - 1) & u) {
                if (slot[sub] >= 0) ++supersets[slot[sub]];
                if (sub == 0) break;
            }
        }
        std::priority_queue<SubsetMask, std::vector<SubsetMask>, std::greater<>> ready;
        for (std::size_t i = 0; i < bucket.size(); ++i)
            if (supersets[i] == 0) ready.push(bucket[i]);
        while (!ready.empty()) {
            const SubsetMask u = ready.top();
            ready.pop();
            out.labels.push_back(u);
            out.class_sizes.push_back(static_cast<std::int64_t>(
                p.class_members[p.class_of[u]].size()));
            if (u != 0)
                for (SubsetMask sub = (u - 1) & u;; sub = (sub - 1) & u) {
                    if (slot[sub] >= 0 && --supersets[slot[sub]] == 0) ready.push(sub);
                    if (sub == 0) break;
                }
        }

        for (SubsetMask m : bucket) slot[m] = -1;
        lo = hi;
    }
    return out;
}

}  // namespace ucs
