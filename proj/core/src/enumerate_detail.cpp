#include "enumerate_detail.hpp"

#include <algorithm>
#include <numeric>

#include "bisimlab/errors.hpp"
#include "bisimlab/partition_ops.hpp"

namespace bisimlab::detail {

namespace {

constexpr long long kCandidateCap = 1LL << 21;

// Bell numbers up to 12 components per block.
constexpr long long kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};

// Set partitions of {0..c-1} as restricted growth strings, in lexicographic
// RGS order (the all-zeros string, i.e. "no split", comes first).
std::vector<std::vector<int>> set_partitions(int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(c, 0);
    while (true) {
        out.push_back(a);
        int i = c - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
            if (a[i] < cap) {
                ++a[i];
                std::fill(a.begin() + i + 1, a.end(), 0);
                break;
            }
        }
        if (i == 0)
            break;
    }
    return out;
}

} // namespace

std::vector<Partition> enumerate_refinements(const Lts& lts, const Partition& pi,
                                             long long max_results) {
    if (pi.state_count() != lts.state_count())
        throw InputError("partition does not cover the LTS");

    // Per block: witness-components (states lacking a mutual witness must
    // stay together), then every set partition of those components.
    struct BlockOptions {
        std::vector<std::vector<int>> comps;          // each sorted ascending
        std::vector<std::vector<int>> rgs;            // set partitions of comps
    };
    std::vector<BlockOptions> blocks(pi.block_count());
    long long candidates = 1;
    for (int blk = 0; blk < pi.block_count(); ++blk) {
        auto mem = pi.members(blk);
        int sz = static_cast<int>(mem.size());
        std::vector<int> parent(sz);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j)
                if (!has_split_witness(lts, pi, mem[i], mem[j]))
                    parent[find(i)] = find(j);
        std::vector<int> comp_id(sz);
        std::vector<std::vector<int>> comps;
        std::vector<int> seen(sz, -1);
        for (int i = 0; i < sz; ++i) {
            int r = find(i);
            if (seen[r] == -1) {
                seen[r] = static_cast<int>(comps.size());
                comps.emplace_back();
            }
            comp_id[i] = seen[r];
            comps[seen[r]].push_back(mem[i]);
        }
        int c = static_cast<int>(comps.size());
        if (c > 12)
            throw BoundError("refinement enumeration over " + std::to_string(c) +
                             " separable groups in one block is out of reach");
        if (max_results == 0) {
            candidates *= kBell[c];
            if (candidates > kCandidateCap)
                throw BoundError("refinement enumeration would exceed " +
                                 std::to_string(kCandidateCap) + " candidates");
        }
        blocks[blk].comps = std::move(comps);
        blocks[blk].rgs = set_partitions(c);
    }

    std::vector<Partition> out;
    std::vector<size_t> pick(blocks.size(), 0);
    while (true) {
        bool all_unit = true;
        for (size_t b = 0; b < blocks.size(); ++b)
            if (pick[b] != 0) {
                all_unit = false;
                break;
            }
        if (!all_unit) {
            // Materialize: cells per block, ordered by smallest member.
            std::vector<std::vector<int>> cells;
            for (size_t b = 0; b < blocks.size(); ++b) {
                const auto& rgs = blocks[b].rgs[pick[b]];
                int ncells = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
                size_t base = cells.size();
                cells.resize(base + ncells);
                for (size_t c = 0; c < rgs.size(); ++c) {
                    const auto& comp = blocks[b].comps[c];
                    auto& cell = cells[base + rgs[c]];
                    cell.insert(cell.end(), comp.begin(), comp.end());
                }
                for (size_t i = base; i < cells.size(); ++i)
                    std::sort(cells[i].begin(), cells[i].end());
                std::sort(cells.begin() + base, cells.end(),
                          [](const auto& x, const auto& y) { return x.front() < y.front(); });
            }
            out.push_back(Partition::from_blocks(pi.state_count(), cells));
            if (max_results > 0 && static_cast<long long>(out.size()) >= max_results)
                return out;
        }
        // Odometer over per-block option indices, last block fastest.
        size_t b = blocks.size();
        bool advanced = false;
        while (b > 0) {
            --b;
            if (++pick[b] < blocks[b].rgs.size()) {
                advanced = true;
                break;
            }
            pick[b] = 0;
        }
        if (!advanced)
            return out;
    }
}

} // namespace bisimlab::detail
