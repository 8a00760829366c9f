#ifndef BISIMLAB_PARALLEL_HPP
#define BISIMLAB_PARALLEL_HPP

#include <optional>
#include <vector>

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"
#include "bisimlab/trace.hpp"

namespace bisimlab {

/// One synchronous round of the simulated parallel refiner: every state
/// recomputes its (action, reached blocks) signature against pi and each
/// block splits into its signature classes. This is the finest valid
/// refinement of pi. Returns nullopt when pi is already stable.
std::optional<Partition> parallel_round(const Lts& lts, const Partition& pi);

/// Iterates parallel_round from the initial partition until stable; steps()
/// is the round count.
RefinementTrace run_parallel_rounds(const Lts& lts);

/// Same, from a caller-supplied partition.
RefinementTrace run_parallel_rounds_from(const Lts& lts, Partition start);

/// Every valid refinement of pi: strictly finer partitions where each newly
/// separated pair has a one-step distinguishing witness. States whose
/// signatures agree are never separated, so the enumeration runs over set
/// partitions of the signature classes inside each block. max_results == 0
/// returns all of them; a positive value stops after that many. Throws
/// BoundError when the combinatorial guards trip.
std::vector<Partition> enumerate_valid_refinements(const Lts& lts, const Partition& pi,
                                                   long long max_results = 0);

/// Distance table of a synchronous pointer-jumping run on a deterministic
/// one-action system whose every cycle is a self-loop. distances[r][s] is
/// state s's known distance to its terminal after r rounds; a round counts
/// only if some pointer actually moved, so distances.size() == rounds + 1.
struct PointerJumpTrace {
    std::vector<std::vector<int>> distances;
    int rounds = 0;
};

PointerJumpTrace pointer_jump_distances(const Lts& lts);

} // namespace bisimlab

#endif
