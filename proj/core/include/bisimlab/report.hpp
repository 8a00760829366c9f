#ifndef BISIMLAB_REPORT_HPP
#define BISIMLAB_REPORT_HPP

#include <string>

#include "bisimlab/engine.hpp"
#include "bisimlab/lts.hpp"
#include "bisimlab/parallel.hpp"
#include "bisimlab/roberts.hpp"
#include "bisimlab/trace.hpp"

namespace bisimlab {

/// Structured run report: family metadata, sizes, per-step costs and
/// splitters, bound checks, verification verdict. Everything is an exact
/// integer and keys are emitted sorted, so identical runs give byte-identical
/// text.
std::string run_report(const Lts& lts, const RefinementTrace& trace, Strategy strategy,
                       RunKind kind, const TraceVerification& verification);

/// One CSV row per step: step index, splitter block (empty when the step used
/// full signatures), cost.
std::string cost_csv(const RefinementTrace& trace);

/// Class table for a deterministic one-action system: per state its prefix
/// and rotation rendered with the block alphabet, plus the resulting blocks.
std::string roberts_report(const Lts& lts, const RobertsResult& result);

/// Rounds and per-round block counts of the synchronous simulation.
std::string parallel_report(const Lts& lts, const RefinementTrace& trace);

/// Distance table of a pointer-jumping run.
std::string jump_report(const Lts& lts, const PointerJumpTrace& trace);

/// Letter for block id b of a state grouping: A and N for the first two (the
/// accepting/non-accepting convention), then the remaining alphabet.
char block_symbol(int b);

} // namespace bisimlab

#endif
