#ifndef BISIMLAB_PARTITION_OPS_HPP
#define BISIMLAB_PARTITION_OPS_HPP

#include <span>

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"

namespace bisimlab {

/// True iff every block of `fine` is contained in a single block of `coarse`.
/// Reflexive: a partition refines itself.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// Coarsest partition refining both arguments: blocks are the non-empty
/// pairwise intersections.  Ids are assigned by first occurrence in state
/// order.
Partition common_refinement(const Partition& a, const Partition& b);

/// Cost of refining `from` into `to`: for every block of `from`, the states
/// not kept in its largest sub-block count as moved.  Requires `to` to refine
/// `from`.
long long refinement_cost(const Partition& from, const Partition& to);

/// True iff every block of pi either fully reaches or fully misses the
/// splitter set under every action.  A state reaches the splitter under an
/// action when at least one of its successors lies in the splitter.
bool is_stable_under(const Lts& lts, const Partition& pi, std::span<const int> splitter);

/// True iff pi is stable under each of its own blocks.
bool is_stable(const Lts& lts, const Partition& pi);

/// True iff states s and t (in the same block of pi) admit a one-step
/// separation witness: one of them has a transition whose target's pi-block
/// is missed by every same-action transition of the other.
bool has_split_witness(const Lts& lts, const Partition& pi, int s, int t);

/// True iff `to` strictly refines `from` and every pair of states separated
/// by the step has a one-step witness against `from`.  Checked literally,
/// pair by pair.
bool is_valid_refinement(const Lts& lts, const Partition& from, const Partition& to);

} // namespace bisimlab

#endif
