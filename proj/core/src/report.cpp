#include "bisimlab/report.hpp"

#include <sstream>
#include <string_view>

#include "bisimlab/families.hpp"
#include "json.hpp"

namespace bisimlab {

namespace {

using nlohmann::json;

std::string render_word(std::span<const int> word) {
    std::string out;
    out.reserve(word.size());
    for (int b : word)
        out.push_back(block_symbol(b));
    return out;
}

json family_json(const Lts& lts) {
    std::optional<FamilyId> id = identify_family(lts);
    if (!id)
        return nullptr;
    return json{{"name", id->name}, {"param", id->param}};
}

} // namespace

char block_symbol(int b) {
    constexpr std::string_view alphabet = "ANBCDEFGHIJKLMOPQRSTUVWXYZ";
    if (b < 0 || b >= static_cast<int>(alphabet.size()))
        return '?';
    return alphabet[static_cast<size_t>(b)];
}

std::string run_report(const Lts& lts, const RefinementTrace& trace, Strategy strategy,
                       RunKind kind, const TraceVerification& verification) {
    CostReport costs = trace_costs(lts, trace, kind);
    json doc;
    doc["n"] = costs.n;
    doc["m"] = costs.m;
    doc["family"] = family_json(lts);
    doc["strategy"] = strategy_name(strategy);
    doc["run"] = kind == RunKind::Plain ? "plain" : "oracle";
    doc["steps"] = costs.steps;
    doc["total_cost"] = costs.total_cost;
    doc["final_blocks"] = costs.final_blocks;
    doc["step_costs"] = trace.step_costs;
    json splitters = json::array();
    for (const std::optional<SplitterRef>& s : trace.step_splitters) {
        if (s)
            splitters.push_back(json{{"block", s->block}, {"action", s->action}});
        else
            splitters.push_back(nullptr);
    }
    doc["step_splitters"] = std::move(splitters);
    json checks = json::array();
    for (const BoundCheck& c : costs.bound_checks)
        checks.push_back(json{{"name", c.name},
                              {"theoretical", c.theoretical},
                              {"measured", c.measured},
                              {"pass", c.pass}});
    doc["bound_checks"] = std::move(checks);
    doc["verified"] = verification.ok;
    return doc.dump(2) + "\n";
}

std::string cost_csv(const RefinementTrace& trace) {
    std::ostringstream out;
    out << "step,splitter_block,cost\n";
    for (int i = 0; i < trace.steps(); ++i) {
        out << i << ',';
        if (i < static_cast<int>(trace.step_splitters.size()) && trace.step_splitters[i])
            out << trace.step_splitters[i]->block;
        out << ',' << trace.step_costs[i] << "\n";
    }
    return out.str();
}

std::string roberts_report(const Lts& lts, const RobertsResult& result) {
    json doc;
    doc["n"] = lts.state_count();
    doc["block_count"] = result.partition.block_count();
    doc["symbol_comparisons"] = result.symbol_comparisons;
    json table = json::array();
    for (int s = 0; s < lts.state_count(); ++s) {
        const ClassKey& key = result.keys[s];
        std::string prefix = render_word(key.prefix);
        std::string rotation = render_word(key.rotation);
        json row;
        row["state"] = s;
        row["name"] = lts.state_names().empty() ? std::to_string(s) : lts.state_names()[s];
        row["prefix"] = prefix;
        row["rotation"] = rotation;
        row["key"] = prefix + rotation;
        row["block"] = result.partition.block_of(s);
        table.push_back(std::move(row));
    }
    doc["table"] = std::move(table);
    json blocks = json::array();
    for (int b = 0; b < result.partition.block_count(); ++b) {
        std::span<const int> members = result.partition.members(b);
        blocks.push_back(std::vector<int>(members.begin(), members.end()));
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump(2) + "\n";
}

std::string parallel_report(const Lts& lts, const RefinementTrace& trace) {
    json doc;
    doc["n"] = lts.state_count();
    doc["rounds"] = trace.steps();
    json counts = json::array();
    for (const Partition& p : trace.partitions)
        counts.push_back(p.block_count());
    doc["block_counts"] = std::move(counts);
    doc["final_blocks"] = trace.final_partition().block_count();
    return doc.dump(2) + "\n";
}

std::string jump_report(const Lts& lts, const PointerJumpTrace& trace) {
    json doc;
    doc["n"] = lts.state_count();
    doc["rounds"] = trace.rounds;
    doc["distances"] = trace.distances;
    return doc.dump(2) + "\n";
}

} // namespace bisimlab
