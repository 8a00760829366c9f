#include "bisimlab/trace.hpp"

#include <utility>

#include "bisimlab/errors.hpp"
#include "bisimlab/partition_ops.hpp"

namespace bisimlab {

RefinementTrace trace_from_partitions(std::vector<Partition> partitions) {
    if (partitions.empty())
        throw InputError("a trace needs at least one partition");
    RefinementTrace trace;
    trace.partitions = std::move(partitions);
    for (size_t i = 0; i + 1 < trace.partitions.size(); ++i) {
        long long c = refinement_cost(trace.partitions[i], trace.partitions[i + 1]);
        trace.step_costs.push_back(c);
        trace.total_cost += c;
    }
    return trace;
}

std::string TraceVerification::summary() const {
    if (ok)
        return "trace verified";
    std::string out = std::to_string(failures.size()) + " failure(s):";
    for (const TraceFailure& f : failures) {
        out += "\n  step " + std::to_string(f.step);
        if (f.state_a >= 0)
            out += " pair (" + std::to_string(f.state_a) + "," + std::to_string(f.state_b) + ")";
        out += ": " + f.reason;
    }
    return out;
}

} // namespace bisimlab
