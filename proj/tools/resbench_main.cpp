#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "resbench/experiments.hpp"

using nlohmann::json;
namespace rb = resbench;

namespace {

unsigned resolve_jobs(unsigned jobs_flag) {
    if (jobs_flag > 0) return jobs_flag;
    if (const char* env = std::getenv("RESERVOIR_BENCH_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

struct RunFlags {
    std::string model = "asn";
    std::size_t n = 30;
    double b = 0.05;
    std::string input = "clean";
    double A = 1.0, B = 2.0, C = 0.0, f1 = 0.10, f2 = 0.02;
    std::string mode = "offline";
    double leaking_rate = 0.3;
    double rho_target = 1.0;
    double w_in_scale = 1.0;
    double ridge_lambda = 1e-8;
    std::uint64_t seed = 42;
    std::size_t topology = 0;
    std::size_t run = 0;
    std::string trace_path;
};

int cmd_run(const RunFlags& flags) {
    rb::experiments::SweepConfig config;
    config.models = {rb::reservoir::neuron_kind_from_name(flags.model)};
    config.sizes = {flags.n};
    config.noise_levels = {flags.b};
    rb::experiments::InputEntry input;
    input.spec.kind = rb::signals::kind_from_name(flags.input);
    input.spec.A = flags.A;
    input.spec.B = flags.B;
    input.spec.C = flags.C;
    input.spec.f1 = flags.f1;
    input.spec.f2 = flags.f2;
    input.id = flags.input;
    config.inputs = {input};
    config.plan.mode = rb::readout::mode_from_name(flags.mode);
    config.plan.ridge_lambda = flags.ridge_lambda;
    config.leaking_rate = flags.leaking_rate;
    config.rho_target = flags.rho_target;
    config.w_in_scale = flags.w_in_scale;
    config.base_seed = flags.seed;
    config.validate();

    const auto cells = rb::experiments::enumerate_cells(config);
    const auto weights = rb::experiments::cell_topology(config, cells[0], flags.topology);
    const auto outcome =
        rb::experiments::execute_run(config, cells[0], flags.topology, flags.run, weights);

    json out;
    out["model"] = outcome.row.model;
    out["N"] = outcome.row.n;
    out["b"] = outcome.row.b;
    out["input_id"] = outcome.row.input_id;
    out["mode"] = flags.mode;
    out["seed"] = flags.seed;
    out["topology"] = outcome.row.topology;
    out["run"] = outcome.row.run;
    out["status"] = outcome.row.status;
    out["blowup"] = outcome.row.blowup();
    if (outcome.row.nmse) out["nmse"] = *outcome.row.nmse;
    if (outcome.row.blowup_step) out["blowup_step"] = *outcome.row.blowup_step;
    if (outcome.row.wout_db) out["wout_db"] = *outcome.row.wout_db;
    std::cout << out.dump() << std::endl;

    if (!flags.trace_path.empty()) {
        std::ofstream trace(flags.trace_path, std::ios::binary);
        if (!trace) {
            std::cerr << "cannot open trace file: " << flags.trace_path << '\n';
            return 2;
        }
        trace << "step,target,predicted\n";
        const auto& r = outcome.result;
        for (std::size_t i = 0; i < r.predicted.size(); ++i)
            trace << i << ',' << r.target[i] << ',' << r.predicted[i] << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Echo-state-network neuron-model benchmarking toolkit"};
    app.require_subcommand(1);
    unsigned jobs_flag = 0;
    app.add_option("--jobs", jobs_flag,
                   "worker threads (default: RESERVOIR_BENCH_JOBS or hardware)");

    // gen-signal
    auto* gen = app.add_subcommand("gen-signal", "emit a waveform as CSV (t,u)");
    std::string gen_kind = "clean";
    std::size_t gen_length = 1000;
    double gA = 1.0, gB = 2.0, gC = 0.0, gf1 = 0.10, gf2 = 0.02, gdt = 1.0;
    int gharm = 15;
    std::uint64_t gen_seed = 42;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "clean|distorted|harmonic|sawtooth|square");
    gen->add_option("--length", gen_length, "number of samples");
    gen->add_option("--A", gA, "amplitude A");
    gen->add_option("--B", gB, "amplitude B");
    gen->add_option("--C", gC, "noise weight C");
    gen->add_option("--f1", gf1, "frequency f1 in Hz");
    gen->add_option("--f2", gf2, "frequency f2 in Hz");
    gen->add_option("--dt", gdt, "seconds per step");
    gen->add_option("--harmonics", gharm, "odd harmonic count (harmonic kind)");
    gen->add_option("--seed", gen_seed, "noise seed");
    gen->add_option("--output", gen_out, "output file (default stdout)");

    // run
    auto* run = app.add_subcommand("run", "single train+test cycle, JSON to stdout");
    RunFlags rf;
    run->add_option("--model", rf.model, "an|asn|bn|bsn");
    run->add_option("--n", rf.n, "reservoir size");
    run->add_option("--b", rf.b, "noise scaling (fraction)");
    run->add_option("--input", rf.input, "clean|distorted|harmonic|sawtooth|square");
    run->add_option("--A", rf.A, "amplitude A");
    run->add_option("--B", rf.B, "amplitude B");
    run->add_option("--C", rf.C, "noise weight C");
    run->add_option("--f1", rf.f1, "frequency f1 in Hz");
    run->add_option("--f2", rf.f2, "frequency f2 in Hz");
    run->add_option("--mode", rf.mode, "offline|online");
    run->add_option("--a", rf.leaking_rate, "leaking rate");
    run->add_option("--rho", rf.rho_target, "spectral radius target");
    run->add_option("--w-in-scale", rf.w_in_scale, "input weight scale");
    run->add_option("--lambda", rf.ridge_lambda, "ridge regularization");
    run->add_option("--seed", rf.seed, "base seed");
    run->add_option("--topology", rf.topology, "topology index");
    run->add_option("--run", rf.run, "run index");
    run->add_option("--trace", rf.trace_path, "write full trace CSV here");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a config-driven sweep grid");
    std::string sweep_config_path;
    std::optional<std::uint64_t> sweep_seed;
    std::string sweep_output;
    sweep->add_option("config", sweep_config_path, "JSON config path")->required();
    sweep->add_option("--seed", sweep_seed, "override base_seed");
    sweep->add_option("--output", sweep_output, "override output_path");

    // mc
    auto* mc = app.add_subcommand("mc", "run the memory-capacity suite");
    std::string mc_config_path;
    std::optional<std::uint64_t> mc_seed;
    std::string mc_output;
    mc->add_option("config", mc_config_path, "JSON config path")->required();
    mc->add_option("--seed", mc_seed, "override base_seed");
    mc->add_option("--output", mc_output, "override output_path");

    // report
    auto* rep = app.add_subcommand("report", "summaries and plot data from a sweep CSV");
    std::string rep_records, rep_outdir = "report";
    rep->add_option("records", rep_records, "sweep CSV path")->required();
    rep->add_option("--out-dir", rep_outdir, "output directory");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();  // allow --jobs after the subcommand name

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            rb::signals::SignalSpec spec;
            spec.kind = rb::signals::kind_from_name(gen_kind);
            spec.A = gA;
            spec.B = gB;
            spec.C = gC;
            spec.f1 = gf1;
            spec.f2 = gf2;
            spec.dt = gdt;
            spec.harmonic_count = gharm;
            auto stream = rb::rng::derive_stream(gen_seed, 0, 0);
            const auto series = rb::signals::generate(spec, gen_length, &stream);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!gen_out.empty()) {
                file.open(gen_out, std::ios::binary);
                if (!file) throw std::runtime_error("cannot open " + gen_out);
                out = &file;
            }
            *out << "t,u\n";
            for (std::size_t i = 0; i < series.size(); ++i)
                *out << static_cast<double>(i) * series.dt << ',' << series[i] << '\n';
            return 0;
        }
        if (run->parsed()) return cmd_run(rf);
        if (sweep->parsed() || mc->parsed()) {
            const bool is_mc = mc->parsed();
            auto config = rb::experiments::load_config(is_mc ? mc_config_path
                                                             : sweep_config_path);
            const auto& seed_override = is_mc ? mc_seed : sweep_seed;
            const auto& out_override = is_mc ? mc_output : sweep_output;
            if (seed_override) config.base_seed = *seed_override;
            if (!out_override.empty()) config.output_path = out_override;
            const unsigned jobs = resolve_jobs(jobs_flag);
            const auto record = is_mc ? rb::experiments::run_mc_suite(config, jobs)
                                      : rb::experiments::run_sweep(config, jobs);
            std::cerr << "wrote " << record.rows.size() << " rows to "
                      << config.output_path << '\n';
            return 0;
        }
        if (rep->parsed()) {
            rb::experiments::report(rep_records, rep_outdir);
            std::cerr << "report written to " << rep_outdir << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        const std::string what = e.what();
        const bool io = what.find("cannot open") != std::string::npos ||
                        what.find("not writable") != std::string::npos ||
                        what.find("write failed") != std::string::npos;
        std::cerr << (io ? "i/o error: " : "error: ") << what << '\n';
        return io ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
