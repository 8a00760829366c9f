#ifndef BISIMLAB_ORACLE_HPP
#define BISIMLAB_ORACLE_HPP

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"

namespace bisimlab {

/// Coarsest bisimulation equivalence that respects the initial partition,
/// computed as a pairwise-relation fixpoint: start from "same initial block",
/// repeatedly drop pairs where one state has a transition the other cannot
/// match into a still-related target, until nothing changes.  Deliberately
/// independent of the partition-refinement machinery so it can serve as an
/// oracle for it.  Quadratic in states; meant for moderate sizes.
Partition bisimilarity_oracle(const Lts& lts);

/// Minimum total moved-state cost over all valid refinement sequences from
/// the initial partition to stability, by exhaustive depth-first search with
/// memoization on the partition reached.  Refuses systems with more than
/// `state_bound` states; 0 means "use BISIMLAB_MAX_BRUTE from the
/// environment, else 10".
long long min_sequence_cost(const Lts& lts, int state_bound = 0);

/// The brute-force state bound currently in effect (environment override or
/// the built-in default of 10).
int brute_force_state_bound();

} // namespace bisimlab

#endif
