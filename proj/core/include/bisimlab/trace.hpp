#ifndef BISIMLAB_TRACE_HPP
#define BISIMLAB_TRACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bisimlab/partition.hpp"

namespace bisimlab {

/// The splitter a single-splitter step refined by: a block of the previous
/// partition together with the action it was applied under.
struct SplitterRef {
    int block;
    int action;
};

/// A refinement sequence pi_0, ..., pi_t with its per-step moved-state costs.
struct RefinementTrace {
    std::vector<Partition> partitions;
    std::vector<long long> step_costs;
    long long total_cost = 0;

    /// Which splitter each step used; empty for engines that split on full
    /// signatures, one entry per step otherwise.
    std::vector<std::optional<SplitterRef>> step_splitters;

    int steps() const { return static_cast<int>(partitions.size()) - 1; }
    const Partition& final_partition() const { return partitions.back(); }
    const Partition& start_partition() const { return partitions.front(); }
};

/// Builds a trace from a partition sequence, recomputing every step cost.
/// Throws InputError unless each partition refines the one before it.
RefinementTrace trace_from_partitions(std::vector<Partition> partitions);

struct TraceFailure {
    int step;     // index of the step (from partitions[step] to partitions[step+1])
    int state_a;  // offending pair, or -1 when not pair-specific
    int state_b;
    std::string reason;
};

struct TraceVerification {
    bool ok = true;
    std::vector<TraceFailure> failures;

    explicit operator bool() const { return ok; }
    std::string summary() const;
};

} // namespace bisimlab

#endif
