#include "bisimlab/oracle.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "bisimlab/errors.hpp"
#include "bisimlab/partition_ops.hpp"
#include "enumerate_detail.hpp"

namespace bisimlab {

namespace {

// True iff every transition of s can be matched by t into a related target.
bool matches(const Lts& lts, const std::vector<char>& rel, int n, int s, int t) {
    for (int a = 0; a < lts.action_count(); ++a) {
        for (int s2 : lts.successors(s, a)) {
            bool found = false;
            for (int t2 : lts.successors(t, a)) {
                if (rel[static_cast<size_t>(s2) * n + t2]) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return false;
        }
    }
    return true;
}

} // namespace

Partition bisimilarity_oracle(const Lts& lts) {
    int n = lts.state_count();
    const Partition& pi0 = lts.initial_partition();
    std::vector<char> rel(static_cast<size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            rel[static_cast<size_t>(s) * n + t] = (pi0.block_of(s) == pi0.block_of(t));

    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < n; ++s) {
            for (int t = s + 1; t < n; ++t) {
                if (!rel[static_cast<size_t>(s) * n + t])
                    continue;
                if (!matches(lts, rel, n, s, t) || !matches(lts, rel, n, t, s)) {
                    rel[static_cast<size_t>(s) * n + t] = 0;
                    rel[static_cast<size_t>(t) * n + s] = 0;
                    changed = true;
                }
            }
        }
    }

    // The fixpoint is an equivalence; classes get ids by first occurrence.
    std::vector<int> block_of(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (block_of[s] != -1)
            continue;
        block_of[s] = next;
        for (int t = s + 1; t < n; ++t)
            if (rel[static_cast<size_t>(s) * n + t])
                block_of[t] = next;
        ++next;
    }
    return Partition::from_block_of(std::move(block_of));
}

int brute_force_state_bound() {
    const char* env = std::getenv("BISIMLAB_MAX_BRUTE");
    if (env == nullptr)
        return 10;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0 || v > 1000000)
        throw InputError("BISIMLAB_MAX_BRUTE must be a positive integer");
    return static_cast<int>(v);
}

namespace {

long long solve_min_cost(const Lts& lts, const Partition& pi,
                         std::map<std::vector<int>, long long>& memo) {
    std::vector<int> key = pi.canonical_key();
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    long long best;
    if (is_stable(lts, pi)) {
        best = 0;
    } else {
        best = std::numeric_limits<long long>::max();
        for (const Partition& next : detail::enumerate_refinements(lts, pi, 0)) {
            long long step = refinement_cost(pi, next);
            best = std::min(best, step + solve_min_cost(lts, next, memo));
        }
    }
    memo.emplace(std::move(key), best);
    return best;
}

} // namespace

long long min_sequence_cost(const Lts& lts, int state_bound) {
    int bound = state_bound > 0 ? state_bound : brute_force_state_bound();
    if (lts.state_count() > bound)
        throw BoundError("exhaustive search refused: " + std::to_string(lts.state_count()) +
                         " states exceed the bound of " + std::to_string(bound));
    std::map<std::vector<int>, long long> memo;
    return solve_min_cost(lts, lts.initial_partition(), memo);
}

} // namespace bisimlab
