#include "bisimlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bisimlab/errors.hpp"

namespace bisimlab {

Partition Partition::from_block_of(std::vector<int> block_of) {
    if (block_of.empty())
        throw InputError("partition must cover at least one state");
    int max_id = -1;
    for (int b : block_of) {
        if (b < 0)
            throw InputError("negative block id in partition");
        max_id = std::max(max_id, b);
    }
    std::vector<char> seen(static_cast<size_t>(max_id) + 1, 0);
    for (int b : block_of)
        seen[b] = 1;
    for (int b = 0; b <= max_id; ++b)
        if (!seen[b])
            throw InputError("block ids are not dense: id " + std::to_string(b) + " is unused");
    Partition p;
    p.block_of_ = std::move(block_of);
    p.rebuild_members();
    return p;
}

Partition Partition::from_blocks(int state_count, const std::vector<std::vector<int>>& blocks) {
    if (state_count <= 0)
        throw InputError("partition must cover at least one state");
    std::vector<int> block_of(state_count, -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw InputError("empty block " + std::to_string(b));
        for (int s : blocks[b]) {
            if (s < 0 || s >= state_count)
                throw InputError("state " + std::to_string(s) + " out of range");
            if (block_of[s] != -1)
                throw InputError("state " + std::to_string(s) + " listed in two blocks");
            block_of[s] = static_cast<int>(b);
        }
    }
    for (int s = 0; s < state_count; ++s)
        if (block_of[s] == -1)
            throw InputError("state " + std::to_string(s) + " not covered by any block");
    Partition p;
    p.block_of_ = std::move(block_of);
    p.rebuild_members();
    return p;
}

Partition Partition::unit(int state_count) {
    if (state_count <= 0)
        throw InputError("partition must cover at least one state");
    Partition p;
    p.block_of_.assign(state_count, 0);
    p.rebuild_members();
    return p;
}

Partition Partition::singletons(int state_count) {
    if (state_count <= 0)
        throw InputError("partition must cover at least one state");
    Partition p;
    p.block_of_.resize(state_count);
    std::iota(p.block_of_.begin(), p.block_of_.end(), 0);
    p.rebuild_members();
    return p;
}

int Partition::block_of(int state) const {
    if (state < 0 || state >= state_count())
        throw InputError("state " + std::to_string(state) + " out of range");
    return block_of_[state];
}

int Partition::block_size(int block) const {
    if (block < 0 || block >= block_count())
        throw InputError("block " + std::to_string(block) + " out of range");
    return block_begin_[block + 1] - block_begin_[block];
}

std::span<const int> Partition::members(int block) const {
    if (block < 0 || block >= block_count())
        throw InputError("block " + std::to_string(block) + " out of range");
    return {member_order_.data() + block_begin_[block],
            static_cast<size_t>(block_begin_[block + 1] - block_begin_[block])};
}

void Partition::rebuild_members() {
    int n = state_count();
    int b = *std::max_element(block_of_.begin(), block_of_.end()) + 1;
    std::vector<int> count(b, 0);
    for (int s = 0; s < n; ++s)
        ++count[block_of_[s]];
    block_begin_.assign(b + 1, 0);
    for (int i = 0; i < b; ++i)
        block_begin_[i + 1] = block_begin_[i] + count[i];
    member_order_.resize(n);
    std::vector<int> cursor(block_begin_.begin(), block_begin_.end() - 1);
    for (int s = 0; s < n; ++s)
        member_order_[cursor[block_of_[s]]++] = s;
}

std::vector<int> Partition::canonical_key() const {
    std::vector<int> rename(block_count(), -1);
    std::vector<int> key(state_count());
    int next = 0;
    for (int s = 0; s < state_count(); ++s) {
        int b = block_of_[s];
        if (rename[b] == -1)
            rename[b] = next++;
        key[s] = rename[b];
    }
    return key;
}

bool Partition::same_blocks(const Partition& other) const {
    if (state_count() != other.state_count() || block_count() != other.block_count())
        return false;
    return canonical_key() == other.canonical_key();
}

} // namespace bisimlab
