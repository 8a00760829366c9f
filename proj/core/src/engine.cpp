#include "bisimlab/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "bisimlab/errors.hpp"
#include "bisimlab/families.hpp"
#include "bisimlab/partition_ops.hpp"

namespace bisimlab {

std::string strategy_name(Strategy s) {
    return s == Strategy::SingleSplitter ? "single-splitter" : "full-signature";
}

namespace {

// Rebuilds a partition after splitting.  subs[b] is either empty (block b
// untouched) or the sub-blocks covering block b.  The largest sub-block
// (ties: smallest minimum state) keeps b's id; the others get fresh ids,
// assigned per block in order of their smallest state.
Partition apply_splits(const Partition& pi,
                       std::vector<std::vector<std::vector<int>>>& subs) {
    std::vector<int> block_of = pi.block_of_map();
    int next_id = pi.block_count();
    for (int b = 0; b < pi.block_count(); ++b) {
        auto& pieces = subs[b];
        if (pieces.empty() || pieces.size() == 1)
            continue;
        std::sort(pieces.begin(), pieces.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        size_t keep = 0;
        for (size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i].size() > pieces[keep].size())
                keep = i;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i == keep)
                continue;
            for (int s : pieces[i])
                block_of[s] = next_id;
            ++next_id;
        }
    }
    return Partition::from_block_of(std::move(block_of));
}

std::optional<Partition> step_single_splitter(const Lts& lts, const Partition& pi,
                                              std::optional<SplitterRef>* used) {
    int blocks = pi.block_count();
    std::vector<int> count(blocks, 0);
    std::vector<int> touched;
    std::vector<int> reached_buf;

    int found_action = -1;
    int found_splitter = -1;
    for (int v = 0; v < blocks && found_action == -1; ++v) {
        auto mem = pi.members(v);
        for (int a = 0; a < lts.action_count() && found_action == -1; ++a) {
            touched.clear();
            for (int s : mem) {
                reached_buf.clear();
                for (int t : lts.successors(s, a))
                    reached_buf.push_back(pi.block_of(t));
                std::sort(reached_buf.begin(), reached_buf.end());
                reached_buf.erase(std::unique(reached_buf.begin(), reached_buf.end()),
                                  reached_buf.end());
                for (int bb : reached_buf) {
                    if (count[bb]++ == 0)
                        touched.push_back(bb);
                }
            }
            int best = -1;
            for (int bb : touched)
                if (count[bb] < static_cast<int>(mem.size()) && (best == -1 || bb < best))
                    best = bb;
            for (int bb : touched)
                count[bb] = 0;
            if (best != -1) {
                found_action = a;
                found_splitter = best;
            }
        }
    }
    if (found_action == -1)
        return std::nullopt;

    // Split every block unstable under the chosen splitter by reachability.
    std::vector<char> reaches(lts.state_count(), 0);
    for (int s = 0; s < lts.state_count(); ++s)
        for (int t : lts.successors(s, found_action))
            if (pi.block_of(t) == found_splitter) {
                reaches[s] = 1;
                break;
            }
    std::vector<std::vector<std::vector<int>>> subs(blocks);
    for (int b = 0; b < blocks; ++b) {
        auto mem = pi.members(b);
        std::vector<int> in, out;
        for (int s : mem)
            (reaches[s] ? in : out).push_back(s);
        if (!in.empty() && !out.empty()) {
            subs[b].push_back(std::move(out));
            subs[b].push_back(std::move(in));
        }
    }
    if (used != nullptr)
        *used = SplitterRef{found_splitter, found_action};
    return apply_splits(pi, subs);
}

std::optional<Partition> step_full_signature(const Lts& lts, const Partition& pi) {
    int n = lts.state_count();
    // Per state: for every action, the sorted set of blocks reached.
    std::vector<std::vector<std::vector<int>>> sig(n);
    for (int s = 0; s < n; ++s) {
        sig[s].resize(lts.action_count());
        for (int a = 0; a < lts.action_count(); ++a) {
            auto& row = sig[s][a];
            for (int t : lts.successors(s, a))
                row.push_back(pi.block_of(t));
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }
    bool any_split = false;
    std::vector<std::vector<std::vector<int>>> subs(pi.block_count());
    for (int b = 0; b < pi.block_count(); ++b) {
        auto mem = pi.members(b);
        std::vector<int> order(mem.begin(), mem.end());
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return sig[x] < sig[y]; });
        std::vector<std::vector<int>> pieces;
        for (int s : order) {
            if (pieces.empty() || sig[pieces.back().front()] != sig[s])
                pieces.emplace_back();
            pieces.back().push_back(s);
        }
        if (pieces.size() > 1) {
            any_split = true;
            subs[b] = std::move(pieces);
        }
    }
    if (!any_split)
        return std::nullopt;
    return apply_splits(pi, subs);
}

} // namespace

std::optional<Partition> refine_step(const Lts& lts, const Partition& pi, Strategy strategy,
                                     std::optional<SplitterRef>* used) {
    if (pi.state_count() != lts.state_count())
        throw InputError("partition does not cover the LTS");
    if (used != nullptr)
        used->reset();
    if (strategy == Strategy::SingleSplitter)
        return step_single_splitter(lts, pi, used);
    return step_full_signature(lts, pi);
}

RefinementTrace run_to_stable(const Lts& lts, Strategy strategy) {
    return run_to_stable_from(lts, lts.initial_partition(), strategy);
}

RefinementTrace run_to_stable_from(const Lts& lts, Partition start, Strategy strategy) {
    RefinementTrace trace;
    trace.partitions.push_back(std::move(start));
    while (true) {
        std::optional<SplitterRef> used;
        std::optional<Partition> next = refine_step(lts, trace.partitions.back(), strategy, &used);
        if (!next.has_value())
            break;
        const Partition& prev = trace.partitions.back();
        if (!is_valid_refinement(lts, prev, *next))
            throw std::logic_error("refinement engine produced an invalid step");
        long long cost = refinement_cost(prev, *next);
        trace.step_costs.push_back(cost);
        trace.total_cost += cost;
        trace.step_splitters.push_back(used);
        trace.partitions.push_back(std::move(*next));
    }
    return trace;
}

namespace {

void append_family_bounds(const Lts& lts, RunKind kind, int steps, long long total,
                          std::vector<BoundCheck>& out) {
    std::optional<FamilyId> fam = identify_family(lts);
    if (!fam.has_value())
        return;
    if (fam->name == "bisplitter") {
        long long k = fam->param;
        if (kind == RunKind::Plain) {
            long long exact = (k - 1) * (1LL << (k - 1));
            out.push_back({"bisplitter_exact_cost", exact, total, total == exact});
        } else {
            long long lower = k >= 3 ? (k - 3) * (1LL << (k - 3)) : 0;
            out.push_back({"oracle_run_cost_lower_bound", lower, total, total >= lower});
        }
    } else if (fam->name == "layered" && fam->param >= 3 && kind == RunKind::Plain) {
        long long k = fam->param;
        long long lower = (1LL << k) * (k - 1) * (1LL << (k - 1));
        out.push_back({"layered_cost_lower_bound", lower, total, total >= lower});
        int height = gadget_height(fam->param);
        long long nn = (1LL << k) * ((1LL << k) + (1LL << (height + 1)) - 1);
        out.push_back({"layered_state_count", nn, lts.state_count(), lts.state_count() == nn});
        out.push_back({"layered_transition_count", 2 * nn, lts.transition_count(),
                       lts.transition_count() == 2 * nn});
    } else if (fam->name == "seqsplit") {
        long long n = fam->param;
        out.push_back({"seqsplit_steps", n - 2, steps, steps == n - 2});
        out.push_back({"seqsplit_partition_count", n - 1, steps + 1, steps + 1 == n - 1});
    }
}

} // namespace

CostReport trace_costs(const Lts& lts, const RefinementTrace& trace, RunKind kind) {
    if (trace.partitions.empty())
        throw InputError("trace has no partitions");
    for (const Partition& p : trace.partitions)
        if (p.state_count() != lts.state_count())
            throw InputError("trace partition does not cover the LTS");
    CostReport report;
    report.n = lts.state_count();
    report.m = lts.transition_count();
    report.steps = trace.steps();
    for (int i = 0; i < trace.steps(); ++i)
        report.total_cost += refinement_cost(trace.partitions[i], trace.partitions[i + 1]);
    report.final_blocks = trace.final_partition().block_count();
    append_family_bounds(lts, kind, report.steps, report.total_cost, report.bound_checks);
    return report;
}

namespace {

void check_step(const Lts& lts, const Partition& from, const Partition& to, int idx,
                std::vector<TraceFailure>& failures) {
    if (!is_refinement(to, from)) {
        failures.push_back({idx, -1, -1, "step is not a refinement"});
        return;
    }
    if (to.block_count() == from.block_count()) {
        failures.push_back({idx, -1, -1, "step is not strict (no block was split)"});
        return;
    }
    for (int blk = 0; blk < from.block_count(); ++blk) {
        auto mem = from.members(blk);
        bool split = false;
        for (int s : mem)
            if (to.block_of(s) != to.block_of(mem.front())) {
                split = true;
                break;
            }
        if (!split)
            continue;
        for (size_t i = 0; i < mem.size(); ++i) {
            for (size_t j = i + 1; j < mem.size(); ++j) {
                int s = mem[i];
                int t = mem[j];
                if (to.block_of(s) == to.block_of(t))
                    continue;
                if (!has_split_witness(lts, from, s, t))
                    failures.push_back(
                        {idx, s, t, "separated pair has no one-step witness"});
            }
        }
    }
}

} // namespace

TraceVerification verify_trace(const Lts& lts, const RefinementTrace& trace) {
    TraceVerification result;
    if (trace.partitions.empty()) {
        result.failures.push_back({-1, -1, -1, "trace has no partitions"});
        result.ok = false;
        return result;
    }
    for (const Partition& p : trace.partitions)
        if (p.state_count() != lts.state_count())
            throw InputError("trace partition does not cover the LTS");
    for (int i = 0; i + 1 < static_cast<int>(trace.partitions.size()); ++i)
        check_step(lts, trace.partitions[i], trace.partitions[i + 1], i, result.failures);
    if (!trace.step_costs.empty()) {
        if (static_cast<int>(trace.step_costs.size()) != trace.steps()) {
            result.failures.push_back({-1, -1, -1, "recorded cost list does not match step count"});
        } else {
            for (int i = 0; i < trace.steps(); ++i) {
                if (!is_refinement(trace.partitions[i + 1], trace.partitions[i]))
                    continue; // already reported above
                long long actual =
                    refinement_cost(trace.partitions[i], trace.partitions[i + 1]);
                if (actual != trace.step_costs[i])
                    result.failures.push_back(
                        {i, -1, -1,
                         "recorded cost " + std::to_string(trace.step_costs[i]) +
                             " differs from actual " + std::to_string(actual)});
            }
        }
    }
    if (!is_stable(lts, trace.final_partition()))
        result.failures.push_back(
            {trace.steps(), -1, -1, "final partition is not stable"});
    result.ok = result.failures.empty();
    return result;
}

} // namespace bisimlab
