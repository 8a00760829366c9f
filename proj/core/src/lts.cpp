#include "bisimlab/lts.hpp"

#include <algorithm>

#include "bisimlab/errors.hpp"

namespace bisimlab {

Lts::Lts(int state_count,
         std::vector<std::string> actions,
         const std::vector<Transition>& transitions,
         Partition initial_partition,
         std::vector<std::string> state_names)
    : state_count_(state_count),
      actions_(std::move(actions)),
      transition_count_(0),
      initial_partition_(std::move(initial_partition)),
      deterministic_(true),
      state_names_(std::move(state_names)) {
    if (state_count_ <= 0)
        throw InputError("state count must be positive");
    for (size_t i = 0; i < actions_.size(); ++i) {
        if (actions_[i].empty())
            throw InputError("empty action name");
        for (size_t j = 0; j < i; ++j)
            if (actions_[j] == actions_[i])
                throw InputError("duplicate action name '" + actions_[i] + "'");
    }
    if (initial_partition_.state_count() != state_count_)
        throw InputError("initial partition covers " +
                         std::to_string(initial_partition_.state_count()) + " states, LTS has " +
                         std::to_string(state_count_));
    if (!state_names_.empty() && static_cast<int>(state_names_.size()) != state_count_)
        throw InputError("state name table must be empty or have one entry per state");

    succ_.assign(actions_.size(), std::vector<std::vector<int>>(state_count_));
    for (const Transition& t : transitions) {
        if (t.src < 0 || t.src >= state_count_ || t.dst < 0 || t.dst >= state_count_)
            throw InputError("transition endpoint out of range");
        if (t.action < 0 || t.action >= action_count())
            throw InputError("transition action out of range");
        succ_[t.action][t.src].push_back(t.dst);
    }
    for (auto& per_state : succ_) {
        for (auto& targets : per_state) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            transition_count_ += static_cast<long long>(targets.size());
            if (targets.size() != 1)
                deterministic_ = false;
        }
    }
    if (actions_.empty())
        deterministic_ = true;
}

std::span<const int> Lts::successors(int state, int action) const {
    if (state < 0 || state >= state_count_)
        throw InputError("state " + std::to_string(state) + " out of range");
    if (action < 0 || action >= action_count())
        throw InputError("action " + std::to_string(action) + " out of range");
    const auto& v = succ_[action][state];
    return {v.data(), v.size()};
}

std::vector<Transition> Lts::transitions() const {
    std::vector<Transition> out;
    out.reserve(static_cast<size_t>(transition_count_));
    for (int s = 0; s < state_count_; ++s)
        for (int a = 0; a < action_count(); ++a)
            for (int t : succ_[a][s])
                out.push_back({s, a, t});
    return out;
}

bool Lts::structurally_equal(const Lts& other) const {
    return state_count_ == other.state_count_ && actions_ == other.actions_ &&
           succ_ == other.succ_ && initial_partition_ == other.initial_partition_;
}

} // namespace bisimlab
