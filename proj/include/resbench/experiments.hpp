#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resbench/metrics.hpp"
#include "resbench/readout.hpp"

namespace resbench::experiments {

struct InputEntry {
    std::string id;  // unique label used in rows and summaries
    signals::SignalSpec spec;
};

struct SweepConfig {
    std::vector<reservoir::NeuronKind> models;
    std::vector<std::size_t> sizes;
    std::vector<double> noise_levels;
    std::vector<InputEntry> inputs;
    std::size_t topologies = 5;
    std::size_t runs_per_topology = 50;
    readout::TrainingPlan plan;
    double leaking_rate = 0.3;
    double rho_target = 1.0;
    double w_in_scale = 1.0;
    metrics::MCPlan mc_plan;
    int mc_k_max = 50;
    std::uint64_t base_seed = 42;
    std::string output_path = "sweep.csv";
    metrics::NmseConvention nmse_convention = metrics::NmseConvention::Paper;

    void validate() const;
};

// JSON config document (schema_version 1).
SweepConfig load_config(const std::string& path);
SweepConfig config_from_json_text(const std::string& text);

struct SweepRow {
    std::string model;
    std::size_t n = 0;
    double b = 0.0;
    std::string input_id;
    std::size_t topology = 0;
    std::size_t run = 0;
    std::string status;  // ok | blowup | failed
    std::optional<double> nmse;
    std::optional<long> blowup_step;
    std::optional<double> wout_db;
    std::optional<double> mc_total;

    bool blowup() const { return status == "blowup"; }
};

struct SweepRecord {
    std::vector<SweepRow> rows;
};

// Identifies one grid cell; runs within a cell share nothing but the
// topology matrices for their topology index.
struct CellSpec {
    reservoir::NeuronKind kind;
    std::size_t n = 0;
    double b = 0.0;
    InputEntry input;
    std::size_t index = 0;  // canonical cell index within the sweep
};

// One prediction run of a sweep cell; exposed for the CLI `run` command and
// the acceptance suite.
struct RunOutcome {
    SweepRow row;
    readout::RunResult result;
};
RunOutcome execute_run(const SweepConfig& config, const CellSpec& cell,
                       std::size_t topology, std::size_t run,
                       const reservoir::WeightSet& weights);
reservoir::WeightSet cell_topology(const SweepConfig& config,
                                   const CellSpec& cell, std::size_t topology);
std::vector<CellSpec> enumerate_cells(const SweepConfig& config);

// Execute the full grid. Rows come back in canonical order regardless of
// worker count. Completed cells are checkpointed next to output_path and
// skipped on rerun.
SweepRecord run_sweep(const SweepConfig& config, unsigned jobs = 1);

// Memory-capacity suite: teacher-forced drive, per-delay readouts, one
// mc_total per run.
SweepRecord run_mc_suite(const SweepConfig& config, unsigned jobs = 1);

void write_csv(const SweepRecord& record, const std::string& path);
SweepRecord read_csv(const std::string& path);
void write_summary_json(const SweepRecord& record, const std::string& path);

// Render summary tables and plot-data files (CSV/JSON) from a sweep CSV.
void report(const std::string& records_path, const std::string& out_dir);

}  // namespace resbench::experiments
