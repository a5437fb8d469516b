#ifndef MONOHIER_PARTITIONS_HPP
#define MONOHIER_PARTITIONS_HPP

#include "monohier/arith.hpp"
#include "monohier/level.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace monohier::partitions {

/// Ordered (colored) partition of {1..n}: the position of a block in the
/// tuple is its color. Elements are 1-based; each block is kept sorted.
/// Crossing partitions are representable; operations that need a
/// non-crossing diagram (depth, inner counts) reject them.
struct OrderedPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    OrderedPartition() = default;
    OrderedPartition(int ground_size, std::vector<std::vector<int>> colored_blocks);

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const OrderedPartition&) const = default;
};

/// Unordered non-crossing pair partition of {1..2k}, blocks sorted by
/// their smaller element.
struct PairPartition {
    int n = 0;
    std::vector<std::pair<int, int>> blocks;

    PairPartition() = default;
    PairPartition(int ground_size, std::vector<std::pair<int, int>> pair_blocks);

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const PairPartition&) const = default;
};

/// Characteristic function of the half-open interval (lower, upper],
/// 0 <= lower < upper.
struct IntervalIndicator {
    Rational lower, upper;

    IntervalIndicator(Rational s, Rational t);
    Rational length() const { return upper - lower; }

    bool operator==(const IntervalIndicator&) const = default;
    bool disjoint_from(const IntervalIndicator& o) const {
        return upper <= o.lower || o.upper <= lower;
    }
    /// Strict partial order: this < o iff the whole support lies below.
    bool strictly_below(const IntervalIndicator& o) const { return upper <= o.lower; }
    bool at_most(const IntervalIndicator& o) const { return *this == o || strictly_below(o); }
    std::string str() const { return format_rational(lower) + ":" + format_rational(upper); }
};

/// Tuple of interval indicators whose supports are pairwise identical or
/// disjoint, with the derived grouping of equal-support positions.
class SupportProfile {
public:
    struct Group {
        IntervalIndicator support;
        std::vector<int> positions;  // 0-based positions carrying this support
    };

    explicit SupportProfile(std::vector<IntervalIndicator> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    const IntervalIndicator& at(int i) const { return parts_.at(i); }
    const std::vector<IntervalIndicator>& parts() const { return parts_; }
    /// Equal-support groups in increasing support order.
    const std::vector<Group>& groups() const { return groups_; }

    bool operator==(const SupportProfile& o) const { return parts_ == o.parts_; }

private:
    std::vector<IntervalIndicator> parts_;
    std::vector<Group> groups_;
};

/// Classification data of an ordered partition: crossing flag, pair flag,
/// the block nesting relation and (for non-crossing diagrams) block depths.
struct PartitionClass {
    bool noncrossing = false;
    bool pair = false;
    /// nested[j][i] is true iff block i lies strictly inside a gap of
    /// block j (block j outer, block i inner).
    std::vector<std::vector<bool>> nested;
    /// depth[i] = 1 + number of blocks outer to block i; empty when crossing.
    std::vector<int> depth;
};

bool is_noncrossing(const OrderedPartition& p);
PartitionClass classify(const OrderedPartition& p);

/// Depth of the block with 0-based index `block`; requires non-crossing.
int depth(const OrderedPartition& p, int block);

/// Membership test for colored non-crossing partitions whose coloring is
/// monotone starting from depth m: whenever block j is outer to block i
/// and depth(j) >= m, then j < i. At level infinity only non-crossing is
/// required.
bool is_monotone_from(const OrderedPartition& p, Level m);

/// Enumerates every admissible colored non-crossing partition of {1..n}
/// (pair partitions only when pairs_only) exactly once, in a deterministic
/// order: unordered diagrams are generated recursively by the block of the
/// smallest element (block elements chosen in ascending order, gap
/// sub-partitions varying rightmost-fastest), and for each diagram the
/// admissible colorings are emitted in lexicographic order of the color
/// vector indexed by blocks sorted by smallest element.
void enumerate_ordered_noncrossing(int n, Level m, bool pairs_only,
                                   const std::function<void(const OrderedPartition&)>& fn);
std::vector<OrderedPartition> enumerate_ordered_noncrossing(int n, Level m, bool pairs_only);

/// Visits every unordered non-crossing partition of {1..n} once (blocks
/// sorted by smallest element).
void enumerate_noncrossing_unordered(int n, bool pairs_only,
                                     const std::function<void(const std::vector<std::vector<int>>&)>& fn);

/// Number of admissible colorings of an unordered non-crossing diagram at
/// level m: exact linear-extension count of the active nesting forest
/// (p! divided by the subtree sizes of depth->=m blocks).
BigInt admissible_coloring_count(const std::vector<std::vector<int>>& blocks, Level m);

/// |{colored non-crossing pair partitions of {1..2k} monotone from depth m}|.
/// Level 1 gives (2k-1)!!, level infinity k!*Catalan(k); finite m >= 2 uses
/// the recurrence obtained by splitting on the pair containing element 1.
BigInt count_pair_partitions(int k, Level m);

/// |{colored non-crossing partitions of {1..n} with q blocks, monotone from
/// depth m}|. Finite m >= 2 uses the multinomial color-splitting recurrence
/// over the block of element 1; m = 1 aggregates exact coloring counts over
/// all unordered diagrams; infinity gives q!*Narayana(n,q).
BigInt count_partitions_by_blocks(int n, int q, Level m);

/// Ordered partition associated with an index tuple: block j collects the
/// positions carrying the j-th smallest value.
OrderedPartition partition_from_tuple(const std::vector<int>& indices);

/// Canonical index tuple of an ordered partition: position s gets the color
/// of its block. Inverse to partition_from_tuple.
std::vector<int> canonical_tuple(const OrderedPartition& p);

/// Compatibility of an ordered partition with a tuple of interval
/// indicators: positions in one block carry equal supports, and blocks with
/// smaller color carry supports that are equal or entirely below.
bool is_compatible(const OrderedPartition& p, const SupportProfile& profile);

/// Number of blocks inner to block `block` of pi carrying the same support.
/// At level m, blocks of depth < m report 0. Throws if paired positions of
/// pi carry different supports.
int inner_count(const PairPartition& pi, const SupportProfile& profile, int block,
                Level m = Level::finite(1));

/// Number of monotone colorings of pi compatible with the profile, by
/// direct enumeration of block orderings.
BigInt coloring_count(const PairPartition& pi, const SupportProfile& profile);

/// Same count with the monotone constraint active only from depth m.
BigInt coloring_count_at(const PairPartition& pi, const SupportProfile& profile, Level m);

/// Depths of the blocks of an unordered non-crossing pair partition.
std::vector<int> pair_block_depths(const PairPartition& pi);

/// JSON round-trip: {"n": int, "blocks": [[int,...],...]} with 1-based
/// elements in color order.
std::string to_json(const OrderedPartition& p);
OrderedPartition partition_from_json(const std::string& text);

} // namespace monohier::partitions

#endif
