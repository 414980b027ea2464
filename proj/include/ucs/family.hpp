#pragma once

// Families of subsets of a small ground set [n] = {1,..,n}. A subset is an
// n-bit mask with element i sitting at bit i-1; a family is a strictly
// increasing list of such masks. Everything downstream (interior operators,
// congruence partitions, up-set constructions) builds on these two types.

#include <cstdint>
#include <string>
#include <vector>

namespace ucs {

using SubsetMask = std::uint32_t;

// Interior tables and enumeration bitmaps have 2^n entries, so the ground
// set is capped where that stays comfortably in memory.
inline constexpr int kMaxGroundSize = 20;

constexpr SubsetMask full_mask(int n) { return (SubsetMask{1} << n) - 1u; }
constexpr bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0u; }

int set_size(SubsetMask m);             // number of elements
std::string format_mask(SubsetMask m);  // "{1,3}", "{}" for the empty set

class SetFamily {
public:
    SetFamily() = default;

    // Sorts the member list; rejects duplicates, members outside P([n]),
    // and ground sizes outside 1..kMaxGroundSize.
    SetFamily(int n, std::vector<SubsetMask> members);

    // Trusted path for callers that already hold a strictly increasing list.
    static SetFamily from_sorted_unique(int n, std::vector<SubsetMask> members);

    int ground_size() const { return n_; }
    std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
    const std::vector<SubsetMask>& members() const { return members_; }
    bool contains(SubsetMask m) const;  // binary search
    SubsetMask union_of_members() const;

    bool operator==(const SetFamily&) const = default;

private:
    int n_ = 1;
    std::vector<SubsetMask> members_;
};

// Membership bitmap over all 2^n masks; the O(1) lookup behind closures,
// interior tables and the enumerators.
class MaskSet {
public:
    explicit MaskSet(int n) : bits_(std::size_t{1} << n, 0) {}
    void insert(SubsetMask m) { bits_[m] = 1; }
    void erase(SubsetMask m) { bits_[m] = 0; }
    bool contains(SubsetMask m) const { return bits_[m] != 0; }

private:
    std::vector<std::uint8_t> bits_;
};

struct FamilyFlags {
    bool union_closed = false;
    bool intersection_closed = false;
    bool up_set = false;
    bool nontrivial = false;  // union of members equals [n]
    bool separating = false;  // distinct elements lie in distinct member sets
    bool contains_empty = false;
    bool contains_full = false;
};

struct FrequencyVector {
    std::vector<std::int64_t> counts;  // counts[i] = #{F in family : i+1 in F}
    std::int64_t total = 0;            // family size
};

struct SeparationQuotient {
    SetFamily family;                // over one element per inseparability class
    std::vector<int> element_class;  // element_class[i] = 1-based class of element i+1
};

FamilyFlags classify_family(const SetFamily& family);
bool is_up_set(const SetFamily& family);
// Pairwise intersections nonempty; a family containing {} is never intersecting.
bool is_intersecting(const SetFamily& family);

// Smallest union-closed superfamily: all unions of nonempty subcollections.
SetFamily union_closure(const SetFamily& generators);

FrequencyVector frequency_vector(const SetFamily& family);

// Elements of [n] sorted by descending frequency, ties broken by the
// smaller element. Result[k-1] is the k-th most frequent element.
std::vector<int> frequency_ordering(const SetFamily& family);

// Collapse inseparable elements (identical membership columns) to one
// element each; classes are numbered by their smallest original element.
SeparationQuotient separation_quotient(const SetFamily& family);

// {F \ {x} : x in F in family}, re-indexed onto a ground set of size n-1
// by deleting x's bit position. Requires n >= 2 and x in [n].
SetFamily derived_family_above(const SetFamily& family, int element);

// Member-wise complement; swaps union-closed with intersection-closed.
SetFamily complement_dual(const SetFamily& family);

// Every nonempty member g has a root x in g with the whole interval
// [{x}, g] contained in the family. Complements of union-closed families
// inside P(n) are exactly the simply rooted ones.
bool is_simply_rooted(const SetFamily& family);

SetFamily power_set(int n);
SetFamily family_with_empty(const SetFamily& family);  // adjoin {} if absent

std::string format_family(const SetFamily& family);  // "{{}, {1}, {1,2}}"

}  // namespace ucs
