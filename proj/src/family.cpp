#include "ucs/family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ucs {

int set_size(SubsetMask m) { return std::popcount(m); }

std::string format_mask(SubsetMask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; (m >> i) != 0; ++i) {
        if (m & (SubsetMask{1} << i)) {
            if (!first) out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

SetFamily::SetFamily(int n, std::vector<SubsetMask> members)
    : n_(n), members_(std::move(members)) {
    if (n_ < 1 || n_ > kMaxGroundSize)
        throw std::invalid_argument("ground size must lie in 1.." +
                                    std::to_string(kMaxGroundSize) + ", got " + std::to_string(n_));
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] > full_mask(n_))
            throw std::invalid_argument("member " + format_mask(members_[i]) +
                                        " does not fit in a ground set of size " + std::to_string(n_));
        if (i > 0 && members_[i] == members_[i - 1])
            throw std::invalid_argument("duplicate member " + format_mask(members_[i]));
    }
}

SetFamily SetFamily::from_sorted_unique(int n, std::vector<SubsetMask> members) {
    SetFamily f;
    f.n_ = n;
    f.members_ = std::move(members);
    return f;
}

bool SetFamily::contains(SubsetMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

SubsetMask SetFamily::union_of_members() const {
    SubsetMask u = 0;
    for (SubsetMask m : members_) u |= m;
    return u;
}

FamilyFlags classify_family(const SetFamily& family) {
    const int n = family.ground_size();
    const auto& ms = family.members();
    MaskSet present(n);
    for (SubsetMask m : ms) present.insert(m);

    FamilyFlags flags;
    flags.contains_empty = !ms.empty() && ms.front() == 0;
    flags.contains_full = !ms.empty() && ms.back() == full_mask(n);
    flags.nontrivial = family.union_of_members() == full_mask(n);

    flags.union_closed = true;
    flags.intersection_closed = true;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (flags.union_closed && !present.contains(ms[i] | ms[j])) flags.union_closed = false;
            if (flags.intersection_closed && !present.contains(ms[i] & ms[j]))
                flags.intersection_closed = false;
        }
        if (!flags.union_closed && !flags.intersection_closed) break;
    }

    flags.up_set = is_up_set(family);

    flags.separating = true;
    for (int x = 0; x < n && flags.separating; ++x) {
        for (int y = x + 1; y < n && flags.separating; ++y) {
            bool identical = true;
            for (SubsetMask m : ms) {
                if (((m >> x) ^ (m >> y)) & 1u) { identical = false; break; }
            }
            if (identical) flags.separating = false;
        }
    }
    return flags;
}

bool is_up_set(const SetFamily& family) {
    const int n = family.ground_size();
    MaskSet present(n);
    for (SubsetMask m : family.members()) present.insert(m);
    for (SubsetMask m : family.members())
        for (int i = 0; i < n; ++i) {
            const SubsetMask bit = SubsetMask{1} << i;
            if (!(m & bit) && !present.contains(m | bit)) return false;
        }
    return true;
}

bool is_intersecting(const SetFamily& family) {
    const auto& ms = family.members();
    if (!ms.empty() && ms.front() == 0) return false;  // {} meets nothing, itself included
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if ((ms[i] & ms[j]) == 0) return false;
    return true;
}

SetFamily union_closure(const SetFamily& generators) {
    const int n = generators.ground_size();
    MaskSet present(n);
    std::vector<SubsetMask> closure;
    closure.reserve(generators.members().size());
    // Invariant: after each generator, `closure` holds every union of a
    // nonempty subcollection of the generators seen so far.
    for (SubsetMask g : generators.members()) {
        const std::size_t known = closure.size();
        if (!present.contains(g)) { present.insert(g); closure.push_back(g); }
        for (std::size_t i = 0; i < known; ++i) {
            const SubsetMask u = closure[i] | g;
            if (!present.contains(u)) { present.insert(u); closure.push_back(u); }
        }
    }
    std::sort(closure.begin(), closure.end());
    return SetFamily::from_sorted_unique(n, std::move(closure));
}

FrequencyVector frequency_vector(const SetFamily& family) {
    FrequencyVector fv;
    fv.counts.assign(family.ground_size(), 0);
    fv.total = family.size();
    for (SubsetMask m : family.members())
        for (int i = 0; i < family.ground_size(); ++i)
            if (m & (SubsetMask{1} << i)) ++fv.counts[i];
    return fv;
}

std::vector<int> frequency_ordering(const SetFamily& family) {
    const FrequencyVector fv = frequency_vector(family);
    std::vector<int> order(family.ground_size());
    for (int i = 0; i < family.ground_size(); ++i) order[i] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (fv.counts[a - 1] != fv.counts[b - 1]) return fv.counts[a - 1] > fv.counts[b - 1];
        return a < b;
    });
    return order;
}

SeparationQuotient separation_quotient(const SetFamily& family) {
    const int n = family.ground_size();
    const auto& ms = family.members();

    auto same_column = [&](int x, int y) {
        for (SubsetMask m : ms)
            if (((m >> x) ^ (m >> y)) & 1u) return false;
        return true;
    };

    SeparationQuotient q;
    q.element_class.assign(n, 0);
    std::vector<int> reps;  // 0-based representative (smallest element) per class
    for (int x = 0; x < n; ++x) {
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (same_column(x, reps[c])) { q.element_class[x] = static_cast<int>(c) + 1; break; }
        if (q.element_class[x] == 0) {
            reps.push_back(x);
            q.element_class[x] = static_cast<int>(reps.size());
        }
    }

    const int nq = static_cast<int>(reps.size());
    std::vector<SubsetMask> mapped;
    mapped.reserve(ms.size());
    for (SubsetMask m : ms) {
        SubsetMask out = 0;
        for (int c = 0; c < nq; ++c)
            if (m & (SubsetMask{1} << reps[c])) out |= SubsetMask{1} << c;
        mapped.push_back(out);
    }
    // Inseparable elements co-occur, so the map is injective on members; it
    // need not preserve the numeric order, hence the validating constructor.
    q.family = SetFamily(nq, std::move(mapped));
    return q;
}

SetFamily derived_family_above(const SetFamily& family, int element) {
    const int n = family.ground_size();
    if (element < 1 || element > n)
        throw std::invalid_argument("element " + std::to_string(element) + " outside ground set");
    if (n < 2)
        throw std::invalid_argument("deriving above the only element would leave an empty ground set");
    const SubsetMask bit = SubsetMask{1} << (element - 1);
    const SubsetMask low = bit - 1;
    std::vector<SubsetMask> out;
    for (SubsetMask m : family.members())
        if (m & bit) out.push_back((m & low) | ((m >> element) << (element - 1)));
    // Dropping a shared bit preserves the relative order of the survivors.
    return SetFamily::from_sorted_unique(n - 1, std::move(out));
}

SetFamily complement_dual(const SetFamily& family) {
    const SubsetMask full = full_mask(family.ground_size());
    std::vector<SubsetMask> out(family.members().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[out.size() - 1 - i] = full ^ family.members()[i];
    return SetFamily::from_sorted_unique(family.ground_size(), std::move(out));
}

bool is_simply_rooted(const SetFamily& family) {
    MaskSet present(family.ground_size());
    for (SubsetMask m : family.members()) present.insert(m);
    for (SubsetMask g : family.members()) {
        if (g == 0) continue;
        bool rooted = false;
        for (int x = 0; (g >> x) != 0 && !rooted; ++x) {
            const SubsetMask xbit = SubsetMask{1} << x;
            if (!(g & xbit)) continue;
            const SubsetMask rest = g ^ xbit;
            bool all_present = true;
            for (SubsetMask sub = rest;; sub = (sub - 1) & rest) {
                if (!present.contains(sub | xbit)) { all_present = false; break; }
                if (sub == 0) break;
            }
            rooted = all_present;
        }
        if (!rooted) return false;
    }
    return true;
}

SetFamily power_set(int n) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("power_set: bad ground size");
    std::vector<SubsetMask> all(std::size_t{1} << n);
    for (std::size_t m = 0; m < all.size(); ++m) all[m] = static_cast<SubsetMask>(m);
    return SetFamily::from_sorted_unique(n, std::move(all));
}

SetFamily family_with_empty(const SetFamily& family) {
    if (!family.members().empty() && family.members().front() == 0) return family;
    std::vector<SubsetMask> ms;
    ms.reserve(family.members().size() + 1);
    ms.push_back(0);
    ms.insert(ms.end(), family.members().begin(), family.members().end());
    return SetFamily::from_sorted_unique(family.ground_size(), std::move(ms));
}

std::string format_family(const SetFamily& family) {
    std::string out = "{";
    for (std::size_t i = 0; i < family.members().size(); ++i) {
        if (i) out += ", ";
        out += format_mask(family.members()[i]);
    }
    return out + "}";
}

}  // namespace ucs
