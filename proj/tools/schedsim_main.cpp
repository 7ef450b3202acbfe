#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schedsim/engine.hpp"
#include "schedsim/experiments.hpp"
#include "schedsim/metrics.hpp"
#include "schedsim/workload.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

schedsim::Time parse_positive_time(const std::string& text, const std::string& flag) {
    auto t = schedsim::Time::parse(text);
    if (!t || t->is_zero())
        throw CLI::ValidationError(flag, "'" + text + "' is not a positive time");
    return *t;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

struct GenerateArgs {
    schedsim::GeneratorConfig cfg;
    std::string out;
};

int run_generate(const GenerateArgs& args) {
    const auto samples = schedsim::generate_samples(args.cfg);
    schedsim::write_workloads(samples, args.out);
    std::cout << "wrote " << samples.size() << " workloads to " << args.out << "\n";
    return kExitOk;
}

struct SimulateArgs {
    std::string policy;
    std::string quantum;
    std::string median_floor = "25";
    bool quantum_given = false;
    bool floor_given = false;
    std::string input;
    std::size_t sample = 0;
    bool trace = false;
    std::string cs_convention = "slice-boundary";
};

int run_simulate(const SimulateArgs& args) {
    const auto kind = schedsim::parse_policy_name(args.policy);
    if (!kind) return usage_error("unknown policy '" + args.policy + "'");
    if (*kind == schedsim::PolicyKind::FixedRR && !args.quantum_given)
        return usage_error("policy 'rr' requires --quantum");
    if (*kind != schedsim::PolicyKind::FixedRR && args.quantum_given)
        return usage_error("--quantum only applies to policy 'rr'");
    if (*kind != schedsim::PolicyKind::MedianRR && args.floor_given)
        return usage_error("--median-floor only applies to policy 'median-rr'");

    schedsim::PolicyDescriptor policy;
    switch (*kind) {
    case schedsim::PolicyKind::FixedRR:
        policy = schedsim::PolicyDescriptor::fixed_rr(
            parse_positive_time(args.quantum, "--quantum"));
        break;
    case schedsim::PolicyKind::MedianRR:
        policy = schedsim::PolicyDescriptor::median_rr(
            parse_positive_time(args.median_floor, "--median-floor"));
        break;
    default:
        policy.kind = *kind;
        break;
    }

    const auto workloads = schedsim::read_workloads(args.input);
    if (args.sample >= workloads.size())
        throw schedsim::ValidationError("sample index " + std::to_string(args.sample) +
                                        " out of range (file has " +
                                        std::to_string(workloads.size()) + " workloads)");
    const schedsim::Workload& w = workloads[args.sample];

    const schedsim::Trace trace = schedsim::simulate(w, policy);
    const schedsim::RunMetrics metrics = schedsim::compute_metrics(trace);
    const auto convention = schedsim::parse_cs_convention(args.cs_convention);

    std::cout << "workload: " << w.name << "\n";
    std::cout << "policy: " << policy.label() << "\n";

    if (args.trace) {
        std::cout << "trace:\n";
        for (const schedsim::Slice& s : trace.slices)
            std::cout << s.pid << " " << s.start << " " << s.end << " "
                      << schedsim::to_string(s.reason) << "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"pid", "arrival", "burst", "completion", "turnaround", "waiting", "response"});
    for (std::size_t i = 0; i < w.processes.size(); ++i) {
        const auto& p = w.processes[i];
        const auto& m = metrics.per_process[i];
        rows.push_back({p.id, p.arrival.str(), p.burst.str(), m.completion.str(),
                        m.turnaround.str(), m.waiting.str(), m.response.str()});
    }
    print_table(rows);

    std::cout << "avg_turnaround: " << metrics.avg_turnaround << "\n";
    std::cout << "avg_waiting: " << metrics.avg_waiting << "\n";
    std::cout << "context_switches: " << metrics.switches(*convention) << " ("
              << schedsim::to_string(*convention) << ")\n";
    std::cout << "rounds:";
    for (std::size_t k : metrics.rounds) std::cout << " " << k;
    std::cout << "\n";
    std::cout << "q_t: " << metrics.q_t << "\n";
    return kExitOk;
}

struct CompareArgs {
    std::string input;
    std::vector<std::string> quanta;
    std::vector<std::string> policies;
    std::string out_dir;
    std::string format = "csv";
    bool literal = false;
};

int run_compare(const CompareArgs& args) {
    std::vector<schedsim::Time> quanta;
    quanta.reserve(args.quanta.size());
    for (const std::string& q : args.quanta)
        quanta.push_back(parse_positive_time(q, "--quanta"));

    std::vector<schedsim::PolicyDescriptor> extras;
    for (const std::string& name : args.policies) {
        const auto kind = schedsim::parse_policy_name(name);
        if (!kind) return usage_error("unknown policy '" + name + "'");
        if (*kind == schedsim::PolicyKind::An || *kind == schedsim::PolicyKind::FixedRR)
            return usage_error("'" + name + "' is always included; --policies takes extras only");
        schedsim::PolicyDescriptor d;
        d.kind = *kind;
        extras.push_back(d);
    }

    const auto samples = schedsim::read_workloads(args.input);
    const auto report = schedsim::run_comparison(samples, quanta, extras);
    const auto [series_path, summary_path] =
        schedsim::write_report_files(report, args.format, args.out_dir, args.literal);
    std::cout << "wrote " << series_path.string() << "\n";
    std::cout << "wrote " << summary_path.string() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic CPU scheduling simulator and comparison harness"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Generate a seeded random workload file");
    generate->add_option("--samples", gen.cfg.n_samples, "Number of workloads")->required();
    generate->add_option("--procs", gen.cfg.n_procs, "Processes per workload")->capture_default_str();
    generate->add_option("--at-min", gen.cfg.at_min, "Minimum arrival (ms)")->capture_default_str();
    generate->add_option("--at-max", gen.cfg.at_max, "Maximum arrival (ms)")->capture_default_str();
    generate->add_option("--bt-min", gen.cfg.bt_min, "Minimum burst (ms)")->capture_default_str();
    generate->add_option("--bt-max", gen.cfg.bt_max, "Maximum burst (ms)")->capture_default_str();
    generate->add_option("--seed", gen.cfg.seed, "PRNG seed")->required();
    generate->add_option("--out", gen.out, "Output workload file")->required();

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "Simulate one workload and print metrics");
    simulate->add_option("--policy", sim.policy, "an, rr, median-rr, fcfs, sjf, srtf")->required();
    simulate->add_option("--quantum", sim.quantum, "Fixed quantum for rr (ms, exact)");
    simulate->add_option("--median-floor", sim.median_floor, "Quantum floor for median-rr (ms)");
    simulate->add_option("--input", sim.input, "Workload file")->required();
    simulate->add_option("--sample", sim.sample, "Workload index within the file")->capture_default_str();
    simulate->add_flag("--trace", sim.trace, "Print the slice list");
    simulate->add_option("--cs-convention", sim.cs_convention, "Context switch convention")
        ->capture_default_str()
        ->check(CLI::IsMember({"slice-boundary", "process-change"}));

    CompareArgs cmp;
    CLI::App* compare = app.add_subcommand("compare", "Run the AN vs fixed-RR comparison study");
    compare->add_option("--input", cmp.input, "Workload file")->required();
    compare->add_option("--quanta", cmp.quanta, "Fixed quanta to sweep (comma separated)")
        ->required()
        ->delimiter(',');
    compare->add_option("--policies", cmp.policies, "Extra policies: median-rr, fcfs, sjf, srtf")
        ->delimiter(',');
    compare->add_option("--out-dir", cmp.out_dir, "Directory for series/summary files")->required();
    compare->add_option("--format", cmp.format, "csv or tsv")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "tsv"}));
    compare->add_flag("--literal-improvement", cmp.literal,
                      "Append mean_diff_tat/mean_diff_wt columns to the summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        sim.quantum_given = simulate->count("--quantum") > 0;
        sim.floor_given = simulate->count("--median-floor") > 0;
        if (simulate->parsed()) return run_simulate(sim);
        if (compare->parsed()) return run_compare(cmp);
        return usage_error("no subcommand given");
    } catch (const CLI::ValidationError& e) {
        return usage_error(e.what());
    } catch (const schedsim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const schedsim::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const schedsim::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
