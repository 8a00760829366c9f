#ifndef BISIMLAB_ENUMERATE_DETAIL_HPP
#define BISIMLAB_ENUMERATE_DETAIL_HPP

#include <vector>

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"

namespace bisimlab::detail {

// All valid refinements of pi, i.e. all strict refinements whose separated
// pairs each have a one-step witness.  States without a mutual witness are
// forced into the same cell, so candidates are exactly the products of set
// partitions of each block's witness-components.  max_results > 0 truncates
// the enumeration; max_results == 0 returns everything but refuses blow-ups
// past an internal candidate cap.
std::vector<Partition> enumerate_refinements(const Lts& lts, const Partition& pi,
                                             long long max_results);

} // namespace bisimlab::detail

#endif
