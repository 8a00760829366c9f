#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bisimlab/engine.hpp"
#include "bisimlab/errors.hpp"
#include "bisimlab/families.hpp"
#include "bisimlab/ltsp.hpp"
#include "bisimlab/oracle_es.hpp"
#include "bisimlab/parallel.hpp"
#include "bisimlab/report.hpp"
#include "bisimlab/roberts.hpp"

namespace {

using namespace bisimlab;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out)
        throw InputError("cannot write " + path);
}

Lts make_family(const std::string& family, int k, long long n, bool k_set, bool n_set) {
    auto need_k = [&] {
        if (!k_set)
            throw InputError("--k is required for family '" + family + "'");
    };
    if (family == "bisplitter") {
        need_k();
        return bisplitter(k);
    }
    if (family == "layered") {
        need_k();
        return layered_bisplitter(k);
    }
    if (family == "fanin") {
        need_k();
        return fanin_splitter(k);
    }
    if (family == "seqsplit") {
        if (!n_set)
            throw InputError("--n is required for family 'seqsplit'");
        if (n > 1'000'000)
            throw InputError("n must be <= 1000000");
        return sequential_splitter(static_cast<int>(n));
    }
    return roberts_example();
}

int cmd_run(const std::string& in, const std::string& strategy_arg, const std::string& oracle,
            const std::string& report_path, const std::string& csv_path) {
    Lts lts = load_ltsp_file(in);
    Strategy strategy =
        strategy_arg == "signature" ? Strategy::FullSignature : Strategy::SingleSplitter;
    RunKind kind = oracle.empty() ? RunKind::Plain : RunKind::OracleUpdated;
    RefinementTrace trace =
        kind == RunKind::Plain ? run_to_stable(lts, strategy) : run_with_oracle(lts, strategy);
    TraceVerification verification = verify_trace(lts, trace);
    CostReport costs = trace_costs(lts, trace, kind);

    std::cout << "n " << costs.n << "\n";
    std::cout << "m " << costs.m << "\n";
    std::cout << "strategy " << strategy_name(strategy) << "\n";
    std::cout << "run " << (kind == RunKind::Plain ? "plain" : "oracle") << "\n";
    std::cout << "steps " << costs.steps << "\n";
    std::cout << "total_cost " << costs.total_cost << "\n";
    std::cout << "final_blocks " << costs.final_blocks << "\n";
    bool bounds_ok = true;
    for (const BoundCheck& c : costs.bound_checks) {
        bounds_ok = bounds_ok && c.pass;
        std::cout << "bound " << c.name << " theoretical " << c.theoretical << " measured "
                  << c.measured << (c.pass ? " pass" : " FAIL") << "\n";
    }
    std::cout << "verified " << (verification.ok ? "yes" : "NO") << "\n";
    if (!verification.ok)
        std::cerr << verification.summary() << "\n";

    if (!report_path.empty())
        write_file(report_path, run_report(lts, trace, strategy, kind, verification));
    if (!csv_path.empty())
        write_file(csv_path, cost_csv(trace));
    return verification.ok && bounds_ok ? 0 : 1;
}

int cmd_roberts(const std::string& in, const std::string& report_path) {
    Lts lts = load_ltsp_file(in);
    // The file format has no display names; recover them for recognized
    // generated instances so the class table reads like the generator's.
    if (std::optional<FamilyId> id = identify_family(lts))
        lts = make_family(id->name, id->param, id->param, true, true);
    RobertsResult result = roberts_partition(lts);
    for (int s = 0; s < lts.state_count(); ++s) {
        std::string name =
            lts.state_names().empty() ? std::to_string(s) : lts.state_names()[s];
        std::string prefix, rotation;
        for (int b : result.keys[s].prefix)
            prefix.push_back(block_symbol(b));
        for (int b : result.keys[s].rotation)
            rotation.push_back(block_symbol(b));
        std::cout << name << " " << (prefix.empty() ? "-" : prefix) << " " << rotation << " "
                  << prefix + rotation << " block " << result.partition.block_of(s) << "\n";
    }
    std::cout << "blocks " << result.partition.block_count() << "\n";
    std::cout << "symbol_comparisons " << result.symbol_comparisons << "\n";
    if (!report_path.empty())
        write_file(report_path, roberts_report(lts, result));
    return 0;
}

int cmd_parallel(const std::string& in, const std::string& report_path, bool jump) {
    Lts lts = load_ltsp_file(in);
    if (jump) {
        PointerJumpTrace trace = pointer_jump_distances(lts);
        std::cout << "rounds " << trace.rounds << "\n";
        for (const std::vector<int>& row : trace.distances) {
            std::cout << "dist";
            for (int d : row)
                std::cout << ' ' << d;
            std::cout << "\n";
        }
        if (!report_path.empty())
            write_file(report_path, jump_report(lts, trace));
        return 0;
    }
    RefinementTrace trace = run_parallel_rounds(lts);
    TraceVerification verification = verify_trace(lts, trace);
    std::cout << "rounds " << trace.steps() << "\n";
    std::cout << "block_counts";
    for (const Partition& p : trace.partitions)
        std::cout << ' ' << p.block_count();
    std::cout << "\n";
    std::cout << "final_blocks " << trace.final_partition().block_count() << "\n";
    std::cout << "verified " << (verification.ok ? "yes" : "NO") << "\n";
    if (!verification.ok)
        std::cerr << verification.summary() << "\n";
    if (!report_path.empty())
        write_file(report_path, parallel_report(lts, trace));
    return verification.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bisimlab: an instrumented laboratory for partition refinement"};
    app.require_subcommand(1);

    std::string family, out_path;
    int k = 0;
    long long n = 0;
    CLI::App* gen = app.add_subcommand("gen", "generate a family instance as an LTSP file");
    gen->add_option("family", family, "one of: bisplitter, layered, seqsplit, fanin, roberts-example")
        ->required()
        ->check(CLI::IsMember({"bisplitter", "layered", "seqsplit", "fanin", "roberts-example"}));
    CLI::Option* k_opt = gen->add_option("--k", k, "size parameter k");
    CLI::Option* n_opt = gen->add_option("--n", n, "size parameter n (seqsplit)");
    gen->add_option("--out", out_path, "output LTSP path")->required();

    std::string run_in, strategy_arg = "single", oracle, report_path, csv_path;
    CLI::App* run = app.add_subcommand("run", "refine an LTSP file to stability");
    run->add_option("input", run_in, "LTSP file")->required();
    run->add_option("--strategy", strategy_arg, "single (one splitter per step) or signature")
        ->check(CLI::IsMember({"single", "signature"}));
    run->add_option("--oracle", oracle, "es: seed the run with the end-structure partition")
        ->check(CLI::IsMember({"es"}));
    run->add_option("--report", report_path, "write a structured report here");
    run->add_option("--csv", csv_path, "write per-step costs here");

    std::string rob_in, rob_report;
    CLI::App* roberts = app.add_subcommand(
        "roberts", "classify a deterministic one-action system by cycle words");
    roberts->add_option("input", rob_in, "LTSP file")->required();
    roberts->add_option("--report", rob_report, "write the class table here");

    std::string par_in, par_report;
    bool jump = false;
    CLI::App* parallel =
        app.add_subcommand("parallel", "synchronous-round simulation of the refinement");
    parallel->add_option("input", par_in, "LTSP file")->required();
    parallel->add_option("--report", par_report, "write the round report here");
    parallel->add_flag("--jump", jump, "run pointer jumping and print the distance table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Lts lts = make_family(family, k, n, k_opt->count() > 0, n_opt->count() > 0);
            save_ltsp_file(lts, out_path);
            std::cout << "wrote " << out_path << " (" << lts.state_count() << " states, "
                      << lts.transition_count() << " transitions)\n";
            return 0;
        }
        if (*run)
            return cmd_run(run_in, strategy_arg, oracle, report_path, csv_path);
        if (*roberts)
            return cmd_roberts(rob_in, rob_report);
        if (*parallel)
            return cmd_parallel(par_in, par_report, jump);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
