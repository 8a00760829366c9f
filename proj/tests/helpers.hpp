#ifndef BISIMLAB_TEST_HELPERS_HPP
#define BISIMLAB_TEST_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"

namespace testutil {

using bisimlab::Lts;
using bisimlab::Partition;
using bisimlab::Transition;

inline std::vector<std::string> action_names(int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i)
        out.push_back("a" + std::to_string(i));
    return out;
}

// Arbitrary labels to a partition: renumber densely, first occurrence first.
inline Partition partition_from_labels(const std::vector<int>& labels) {
    std::map<int, int> remap;
    std::vector<int> block_of(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = remap.try_emplace(labels[i], static_cast<int>(remap.size()));
        (void)fresh;
        block_of[i] = it->second;
    }
    return Partition::from_block_of(std::move(block_of));
}

inline Partition random_partition(std::mt19937& rng, int n, int max_blocks) {
    std::uniform_int_distribution<int> blocks(1, max_blocks);
    std::uniform_int_distribution<int> label(0, blocks(rng) - 1);
    std::vector<int> raw(n);
    for (int& x : raw)
        x = label(rng);
    return partition_from_labels(raw);
}

inline Lts random_lts(std::mt19937& rng, int max_states, int max_actions, int max_blocks) {
    std::uniform_int_distribution<int> nd(2, max_states);
    std::uniform_int_distribution<int> kd(1, max_actions);
    int n = nd(rng), k = kd(rng);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> target(0, n - 1);
    std::vector<Transition> ts;
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < k; ++a) {
            int d = deg(rng);
            for (int i = 0; i < d; ++i)
                ts.push_back({s, a, target(rng)});
        }
    return Lts(n, action_names(k), ts, random_partition(rng, n, max_blocks));
}

// Total function per action, so deterministic() holds.
inline Lts random_det_lts(std::mt19937& rng, int max_states, int actions, int max_blocks) {
    std::uniform_int_distribution<int> nd(2, max_states);
    int n = nd(rng);
    std::uniform_int_distribution<int> target(0, n - 1);
    std::vector<Transition> ts;
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < actions; ++a)
            ts.push_back({s, a, target(rng)});
    return Lts(n, action_names(actions), ts, random_partition(rng, n, max_blocks));
}

// Independent bisimilarity computation: iterate signature coloring to a
// fixpoint. Deliberately shares no code with the library's pair-marking.
inline Partition signature_fixpoint(const Lts& lts) {
    int n = lts.state_count();
    std::vector<int> color(n);
    for (int s = 0; s < n; ++s)
        color[s] = lts.initial_partition().block_of(s);
    while (true) {
        size_t before = std::set<int>(color.begin(), color.end()).size();
        std::map<std::tuple<int, std::vector<std::vector<int>>>, int> fresh;
        std::vector<int> next(n);
        for (int s = 0; s < n; ++s) {
            std::vector<std::vector<int>> sig(lts.action_count());
            for (int a = 0; a < lts.action_count(); ++a) {
                std::set<int> seen;
                for (int t : lts.successors(s, a))
                    seen.insert(color[t]);
                sig[a].assign(seen.begin(), seen.end());
            }
            auto key = std::make_tuple(color[s], std::move(sig));
            auto [it, added] = fresh.try_emplace(std::move(key), static_cast<int>(fresh.size()));
            (void)added;
            next[s] = it->second;
        }
        // each round refines the coloring, so an unchanged count is a fixpoint
        color = next;
        if (fresh.size() == before)
            break;
    }
    return partition_from_labels(color);
}

// Validity straight from the definitions, as a cross-check.
inline bool naive_refines(const Partition& fine, const Partition& coarse) {
    if (fine.state_count() != coarse.state_count())
        return false;
    for (int s = 0; s < fine.state_count(); ++s)
        for (int t = s + 1; t < fine.state_count(); ++t)
            if (fine.block_of(s) == fine.block_of(t) &&
                coarse.block_of(s) != coarse.block_of(t))
                return false;
    return true;
}

inline bool naive_witness_dir(const Lts& lts, const Partition& pi, int s, int t) {
    for (int a = 0; a < lts.action_count(); ++a)
        for (int sp : lts.successors(s, a)) {
            bool all_different = true;
            for (int tp : lts.successors(t, a))
                if (pi.block_of(tp) == pi.block_of(sp)) {
                    all_different = false;
                    break;
                }
            if (all_different)
                return true;
        }
    return false;
}

inline bool naive_witness(const Lts& lts, const Partition& pi, int s, int t) {
    return naive_witness_dir(lts, pi, s, t) || naive_witness_dir(lts, pi, t, s);
}

inline bool naive_is_valid(const Lts& lts, const Partition& from, const Partition& to) {
    if (!naive_refines(to, from) || to.same_blocks(from))
        return false;
    for (int s = 0; s < from.state_count(); ++s)
        for (int t = s + 1; t < from.state_count(); ++t)
            if (from.block_of(s) == from.block_of(t) && to.block_of(s) != to.block_of(t) &&
                !naive_witness(lts, from, s, t))
                return false;
    return true;
}

// All set partitions of {0..n-1} as restricted growth strings.
inline void all_set_partitions(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            f(rgs);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (n > 0)
        rec(1, 0);
    else
        f(rgs);
}

} // namespace testutil

#endif
