#ifndef BISIMLAB_LTS_HPP
#define BISIMLAB_LTS_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "bisimlab/partition.hpp"

namespace bisimlab {

struct Transition {
    int src;
    int action;
    int dst;
    auto operator<=>(const Transition&) const = default;
};

/// A finite labelled transition system over dense state ids 0..n-1 with an
/// initial partition of its states.  Duplicate transitions collapse to one.
/// The system counts as deterministic when the transition relation is a total
/// function: exactly one successor per (state, action) pair.
class Lts {
public:
    Lts(int state_count,
        std::vector<std::string> actions,
        const std::vector<Transition>& transitions,
        Partition initial_partition,
        std::vector<std::string> state_names = {});

    int state_count() const { return state_count_; }
    int action_count() const { return static_cast<int>(actions_.size()); }
    long long transition_count() const { return transition_count_; }
    const std::vector<std::string>& actions() const { return actions_; }
    const Partition& initial_partition() const { return initial_partition_; }
    bool deterministic() const { return deterministic_; }

    /// Successor states of `state` under `action`, ascending, deduplicated.
    std::span<const int> successors(int state, int action) const;

    /// Optional display names; empty, or one entry per state.
    const std::vector<std::string>& state_names() const { return state_names_; }

    /// All transitions sorted by (src, action, dst).
    std::vector<Transition> transitions() const;

    /// Equality of states, actions, transitions and initial-partition blocks;
    /// display names are ignored.
    bool structurally_equal(const Lts& other) const;

private:
    int state_count_;
    std::vector<std::string> actions_;
    std::vector<std::vector<std::vector<int>>> succ_; // [action][state] -> targets
    long long transition_count_;
    Partition initial_partition_;
    bool deterministic_;
    std::vector<std::string> state_names_;
};

} // namespace bisimlab

#endif
