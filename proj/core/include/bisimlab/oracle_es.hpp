#ifndef BISIMLAB_ORACLE_ES_HPP
#define BISIMLAB_ORACLE_ES_HPP

#include <vector>

#include "bisimlab/engine.hpp"
#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"
#include "bisimlab/trace.hpp"

namespace bisimlab {

/// Partition that jump-starts refinement: behavioural classes of the states
/// living on closed strongly connected sets, with every other state kept in a
/// group per original block. Always refines the system's initial partition.
Partition end_structure_partition(const Lts& lts);

/// Runs refinement from end_structure_partition(lts). partitions.front() is
/// that seeded partition; the seeding itself contributes no cost.
RefinementTrace run_with_oracle(const Lts& lts, Strategy strategy);

/// Restriction of a partition over the 2^k-state binary move family to the
/// quarter of states whose ids start with bits 11, renumbered to 2^(k-2)
/// states by dropping those two bits. Needs k >= 3.
Partition project_prefix11(const Partition& pi, int k);

/// Restriction of a partition over the layered family to the stake states of
/// one level (1-based), renumbered to the 2^k sigma values of that level.
Partition project_level(const Partition& pi, int k, int level);

/// Removes each partition grouping states exactly like its predecessor.
std::vector<Partition> dedup_consecutive(const std::vector<Partition>& seq);

} // namespace bisimlab

#endif
