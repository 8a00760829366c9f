#ifndef BISIMLAB_PARTITION_HPP
#define BISIMLAB_PARTITION_HPP

#include <span>
#include <vector>

namespace bisimlab {

/// A partition of the states 0..n-1 into non-empty blocks with dense ids
/// 0..block_count()-1.  Blocks are stored both as a state->block map and as
/// a grouped member list, kept consistent at all times.
class Partition {
public:
    /// Builds a partition from a state->block map.  Block ids must be dense:
    /// every id in 0..max occurs at least once.
    static Partition from_block_of(std::vector<int> block_of);

    /// Builds a partition from explicit blocks; block i gets id i.  The blocks
    /// must cover every state exactly once and be non-empty.
    static Partition from_blocks(int state_count, const std::vector<std::vector<int>>& blocks);

    /// The one-block partition of 0..n-1.
    static Partition unit(int state_count);

    /// The all-singletons partition of 0..n-1.
    static Partition singletons(int state_count);

    int state_count() const { return static_cast<int>(block_of_.size()); }
    int block_count() const { return static_cast<int>(block_begin_.size()) - 1; }
    int block_of(int state) const;
    int block_size(int block) const;

    /// Members of a block, ascending.
    std::span<const int> members(int block) const;

    /// State->block map with ids renumbered in order of first occurrence when
    /// scanning states 0,1,...  Two partitions have the same blocks iff their
    /// canonical keys are equal.
    std::vector<int> canonical_key() const;

    /// Structural equality: same blocks, ignoring block ids.
    bool same_blocks(const Partition& other) const;

    /// Exact equality including block ids.
    bool operator==(const Partition& other) const { return block_of_ == other.block_of_; }

    const std::vector<int>& block_of_map() const { return block_of_; }

private:
    Partition() = default;
    void rebuild_members();

    std::vector<int> block_of_;
    std::vector<int> member_order_; // states grouped by block, ascending within a block
    std::vector<int> block_begin_;  // offsets into member_order_, size block_count+1
};

} // namespace bisimlab

#endif
