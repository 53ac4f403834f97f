// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decapsp/oracle.hpp"
#include "decapsp/runner.hpp"
#include "decapsp/workload.hpp"

using namespace decapsp;

namespace {

void add_run_flags(CLI::App* cmd, RunConfig& cfg, std::string& graph, std::string& updates, std::string& report) {
    cmd->add_option("--algo", cfg.algo, "mult | mixed | unweighted-mult | additive | static-2")
        ->required()
        ->check(CLI::IsMember(algorithm_tags()));
    cmd->add_option("--graph", graph, "graph file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--updates", updates, "update file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--p", cfg.p, "pivot sampling probability (default depends on the algorithm)");
    cmd->add_option("--tau", cfg.tau, "heavy threshold (mixed)");
    cmd->add_option("--eps", cfg.eps, "approximation slack")->capture_default_str();
    cmd->add_option("--k", cfg.k, "hierarchy levels (additive)");
    cmd->add_option("--d", cfg.d, "distance bound (additive)");
    cmd->add_option("--c", cfg.c, "hierarchy sampling constant (additive)")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "algorithm seed")->capture_default_str();
    cmd->add_option("--report", report, "write the JSON report here instead of stdout");
}

void emit(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
}

struct Inputs {
    DynamicGraph graph;
    std::vector<StreamItem> stream;
};

Inputs load_inputs(const std::string& graph, const std::string& updates) {
    Inputs in{load_graph_file(graph), load_stream_file(updates)};
    fit_weight_bound(in.graph, in.stream);
    return in;
}

std::vector<NodeId> parse_sizes(const std::string& text) {
    std::vector<NodeId> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(static_cast<NodeId>(std::stoi(part)));
        } catch (const std::exception&) {
            throw ConfigError("bad size list '" + text + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decremental approximate all-pairs shortest paths"};
    app.require_subcommand(1);

    WorkloadConfig gen;
    std::string gen_graph = "graph.txt";
    std::string gen_updates = "updates.txt";
    auto* generate = app.add_subcommand("generate", "write a random graph and a deletion stream");
    generate->add_option("--n", gen.n, "node count")->required();
    generate->add_option("--density", gen.density, "edge probability")->required();
    generate->add_option("--W", gen.max_weight, "maximum edge weight")->capture_default_str();
    generate->add_option("--deletion-fraction", gen.deletion_fraction, "share of edges deleted")->capture_default_str();
    generate->add_option("--seed", gen.seed, "workload seed")->capture_default_str();
    generate->add_option("--checkpoint-every", gen.checkpoint_every, "query line after this many deletions")
        ->capture_default_str();
    generate->add_option("--graph-out", gen_graph, "graph file")->capture_default_str();
    generate->add_option("--updates-out", gen_updates, "update file")->capture_default_str();

    RunConfig run_cfg;
    std::string run_graph;
    std::string run_updates;
    std::string run_report;
    auto* run = app.add_subcommand("run", "replay updates and answer the query lines");
    add_run_flags(run, run_cfg, run_graph, run_updates, run_report);

    RunConfig ver_cfg;
    std::string ver_graph;
    std::string ver_updates;
    std::string ver_report;
    auto* verify = app.add_subcommand("verify", "check every pair against an exact oracle");
    add_run_flags(verify, ver_cfg, ver_graph, ver_updates, ver_report);
    verify->add_flag("--dense", ver_cfg.dense, "check after every update, not only at query lines");

    RunConfig bench_cfg;
    std::string sizes = "32,64,128";
    double bench_density = 0.25;
    Weight bench_w = 1;
    std::uint64_t bench_workload_seed = 1;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "run a size ladder and check operation-count bounds");
    bench->add_option("--algo", bench_cfg.algo, "algorithm")->required()->check(CLI::IsMember(algorithm_tags()));
    bench->add_option("--sizes", sizes, "comma-separated node counts")->capture_default_str();
    bench->add_option("--density", bench_density, "edge probability")->capture_default_str();
    bench->add_option("--W", bench_w, "maximum edge weight")->capture_default_str();
    bench->add_option("--workload-seed", bench_workload_seed, "workload seed")->capture_default_str();
    bench->add_option("--p", bench_cfg.p, "pivot sampling probability");
    bench->add_option("--tau", bench_cfg.tau, "heavy threshold (mixed)");
    bench->add_option("--eps", bench_cfg.eps, "approximation slack")->capture_default_str();
    bench->add_option("--k", bench_cfg.k, "hierarchy levels (additive)");
    bench->add_option("--d", bench_cfg.d, "distance bound (additive)");
    bench->add_option("--c", bench_cfg.c, "hierarchy sampling constant")->capture_default_str();
    bench->add_option("--seed", bench_cfg.seed, "algorithm seed")->capture_default_str();
    bench->add_option("--out", bench_out, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            const Workload w = generate_workload(gen);
            write_file(gen_graph, serialize_graph(w.graph));
            write_file(gen_updates, serialize_stream(w.stream));
            return 0;
        }
        if (run->parsed()) {
            validate(run_cfg);
            const Inputs in = load_inputs(run_graph, run_updates);
            const RunResult r = run_stream(run_cfg, in.graph, in.stream);
            nlohmann::json j = to_json(r);
            j["schema_version"] = 1;
            j["config"] = to_json(run_cfg);
            j["graph"] = {{"n", in.graph.node_count()}, {"m", in.graph.edge_count()}, {"W", in.graph.weight_bound()}};
            emit(j, run_report);
            return 0;
        }
        if (verify->parsed()) {
            validate(ver_cfg);
            const Inputs in = load_inputs(ver_graph, ver_updates);
            auto algo = make_algorithm(ver_cfg, in.graph);
            const BoundSpec bound = bound_for(ver_cfg);
            SweepOptions opts;
            opts.dense = ver_cfg.dense;
            const StretchReport rep = sweep(*algo, in.stream, bound, opts);
            nlohmann::json j = to_json(rep);
            j["schema_version"] = 1;
            j["config"] = to_json(ver_cfg);
            j["bound"] = to_json(bound);
            j["counters"] = to_json(algo->counters());
            emit(j, ver_report);
            if (!rep.pass()) {
                std::cerr << "verify: " << rep.total_violations << " violation(s)\n";
                return 1;
            }
            return 0;
        }
        if (bench->parsed()) {
            validate(bench_cfg);
            std::ostringstream csv;
            csv << bench_csv_header() << '\n';
            bool ok = true;
            for (const NodeId n : parse_sizes(sizes)) {
                RunConfig cfg = bench_cfg;
                if (cfg.algo == "mixed" && cfg.tau < 1) {
                    throw ConfigError("mixed requires --tau >= 1");
                }
                const BenchRow row = bench_one(cfg, n, bench_density, bench_w, bench_workload_seed);
                csv << bench_csv_row(row) << '\n';
                if (!row.within_bounds) {
                    std::cerr << "bench: counter bound exceeded at n=" << n << '\n';
                    ok = false;
                }
            }
            if (bench_out.empty()) {
                std::cout << csv.str();
            } else {
                write_file(bench_out, csv.str());
            }
            return ok ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
