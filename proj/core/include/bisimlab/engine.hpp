#ifndef BISIMLAB_ENGINE_HPP
#define BISIMLAB_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bisimlab/lts.hpp"
#include "bisimlab/partition.hpp"
#include "bisimlab/trace.hpp"

namespace bisimlab {

/// How a refinement step picks its work.
///
/// SingleSplitter scans (block, action, splitter block) triples in canonical
/// order (lowest block id, then lowest action index, then lowest splitter
/// id), takes the first unstable triple's (action, splitter) and splits every
/// block unstable under it by splitter reachability.  FullSignature replaces
/// every block by its sub-blocks of equal one-step signature (per action, the
/// set of blocks reached).
enum class Strategy {
    SingleSplitter,
    FullSignature,
};

std::string strategy_name(Strategy s);

/// One refinement step; std::nullopt when pi is already stable.  When `used`
/// is non-null it receives the splitter a single-splitter step chose.
/// Block ids stay dense: the largest sub-block of a split (ties: smallest
/// minimum state) keeps the old id, new sub-blocks get fresh ids at the end.
std::optional<Partition> refine_step(const Lts& lts, const Partition& pi, Strategy strategy,
                                     std::optional<SplitterRef>* used = nullptr);

/// Runs refine_step from the initial partition to stability.  Every step is
/// re-checked as a valid refinement; a violation aborts (engine defect).
RefinementTrace run_to_stable(const Lts& lts, Strategy strategy);

/// Same, but starting from an arbitrary partition of the LTS's states.
RefinementTrace run_to_stable_from(const Lts& lts, Partition start, Strategy strategy);

struct BoundCheck {
    std::string name;
    long long theoretical;
    long long measured;
    bool pass;
};

struct CostReport {
    int n = 0;
    long long m = 0;
    int steps = 0;
    long long total_cost = 0;
    int final_blocks = 0;
    std::vector<BoundCheck> bound_checks;
};

/// What produced the trace, for the bound checks attached to a report:
/// a plain run from the LTS's own initial partition, or a run whose start
/// was coarsened through the end-structure oracle.
enum class RunKind {
    Plain,
    OracleUpdated,
};

/// Summarizes a trace and, for recognized generated families, attaches the
/// family's cost/step bounds.
CostReport trace_costs(const Lts& lts, const RefinementTrace& trace,
                       RunKind kind = RunKind::Plain);

/// Checks that consecutive partitions are valid refinements and the last one
/// is stable.  All failures are reported with step index, offending pair and
/// reason.
TraceVerification verify_trace(const Lts& lts, const RefinementTrace& trace);

} // namespace bisimlab

#endif
