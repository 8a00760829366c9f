#include "bisimlab/partition_ops.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "bisimlab/errors.hpp"

namespace bisimlab {

bool is_refinement(const Partition& fine, const Partition& coarse) {
    if (fine.state_count() != coarse.state_count())
        throw InputError("partitions cover different state counts");
    std::vector<int> image(fine.block_count(), -1);
    for (int s = 0; s < fine.state_count(); ++s) {
        int fb = fine.block_of(s);
        int cb = coarse.block_of(s);
        if (image[fb] == -1)
            image[fb] = cb;
        else if (image[fb] != cb)
            return false;
    }
    return true;
}

Partition common_refinement(const Partition& a, const Partition& b) {
    if (a.state_count() != b.state_count())
        throw InputError("partitions cover different state counts");
    int n = a.state_count();
    // Number the (a-block, b-block) pairs by first occurrence in state order.
    std::unordered_map<long long, int> cells;
    std::vector<int> block_of(n);
    for (int s = 0; s < n; ++s) {
        long long packed = static_cast<long long>(a.block_of(s)) * b.block_count() + b.block_of(s);
        auto [it, fresh] = cells.try_emplace(packed, static_cast<int>(cells.size()));
        (void)fresh;
        block_of[s] = it->second;
    }
    return Partition::from_block_of(std::move(block_of));
}

long long refinement_cost(const Partition& from, const Partition& to) {
    if (!is_refinement(to, from))
        throw InputError("cost requested for a step that is not a refinement");
    // Per block of `from`: |B| minus the size of its largest sub-block in `to`.
    std::vector<int> largest(from.block_count(), 0);
    std::vector<int> sub_size(to.block_count(), 0);
    for (int s = 0; s < to.state_count(); ++s)
        ++sub_size[to.block_of(s)];
    for (int tb = 0; tb < to.block_count(); ++tb) {
        int fb = from.block_of(to.members(tb).front());
        largest[fb] = std::max(largest[fb], sub_size[tb]);
    }
    long long cost = 0;
    for (int fb = 0; fb < from.block_count(); ++fb)
        cost += from.block_size(fb) - largest[fb];
    return cost;
}

bool is_stable_under(const Lts& lts, const Partition& pi, std::span<const int> splitter) {
    if (pi.state_count() != lts.state_count())
        throw InputError("partition does not cover the LTS");
    std::vector<char> in_splitter(lts.state_count(), 0);
    for (int s : splitter) {
        if (s < 0 || s >= lts.state_count())
            throw InputError("splitter state " + std::to_string(s) + " out of range");
        in_splitter[s] = 1;
    }
    for (int a = 0; a < lts.action_count(); ++a) {
        for (int blk = 0; blk < pi.block_count(); ++blk) {
            auto mem = pi.members(blk);
            int reaching = 0;
            for (int s : mem) {
                for (int t : lts.successors(s, a)) {
                    if (in_splitter[t]) {
                        ++reaching;
                        break;
                    }
                }
            }
            if (reaching != 0 && reaching != static_cast<int>(mem.size()))
                return false;
        }
    }
    return true;
}

bool is_stable(const Lts& lts, const Partition& pi) {
    for (int blk = 0; blk < pi.block_count(); ++blk)
        if (!is_stable_under(lts, pi, pi.members(blk)))
            return false;
    return true;
}

namespace {

// One-sided witness: s has a transition whose target block (under pi) is
// missed by all of t's same-action transitions.
bool witness_from(const Lts& lts, const Partition& pi, int s, int t) {
    for (int a = 0; a < lts.action_count(); ++a) {
        for (int s2 : lts.successors(s, a)) {
            int target_block = pi.block_of(s2);
            bool matched = false;
            for (int t2 : lts.successors(t, a)) {
                if (pi.block_of(t2) == target_block) {
                    matched = true;
                    break;
                }
            }
            if (!matched)
                return true;
        }
    }
    return false;
}

} // namespace

bool has_split_witness(const Lts& lts, const Partition& pi, int s, int t) {
    return witness_from(lts, pi, s, t) || witness_from(lts, pi, t, s);
}

bool is_valid_refinement(const Lts& lts, const Partition& from, const Partition& to) {
    if (from.state_count() != lts.state_count() || to.state_count() != lts.state_count())
        throw InputError("partition does not cover the LTS");
    if (!is_refinement(to, from))
        return false;
    if (to.block_count() == from.block_count())
        return false; // not strict
    // Every pair split apart by the step needs a one-step witness.
    for (int blk = 0; blk < from.block_count(); ++blk) {
        auto mem = from.members(blk);
        bool split = false;
        for (int s : mem)
            if (to.block_of(s) != to.block_of(mem.front())) {
                split = true;
                break;
            }
        if (!split)
            continue;
        for (size_t i = 0; i < mem.size(); ++i) {
            for (size_t j = i + 1; j < mem.size(); ++j) {
                int s = mem[i];
                int t = mem[j];
                if (to.block_of(s) == to.block_of(t))
                    continue;
                if (!has_split_witness(lts, from, s, t))
                    return false;
            }
        }
    }
    return true;
}

} // namespace bisimlab
