#include "resbench/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace resbench::experiments {

namespace {

constexpr std::uint64_t kTopologyTag = 0x746f706fULL;
constexpr std::uint64_t kSignalTag = 0x7369676eULL;
constexpr std::uint64_t kNoiseTag = 0x6e6f6973ULL;

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
    double v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number: " + s);
    return v;
}

}  // namespace

void SweepConfig::validate() const {
    if (models.empty() || sizes.empty() || noise_levels.empty() || inputs.empty())
        throw std::invalid_argument("SweepConfig: models/sizes/noise_levels/inputs must be non-empty");
    if (topologies < 1 || runs_per_topology < 1)
        throw std::invalid_argument("SweepConfig: topologies and runs_per_topology must be >= 1");
    plan.validate();
    if (!(leaking_rate > 0.0 && leaking_rate <= 1.0))
        throw std::invalid_argument("SweepConfig: need 0 < leaking_rate <= 1");
    if (!(rho_target > 0.0))
        throw std::invalid_argument("SweepConfig: rho_target must be > 0");
    for (double b : noise_levels)
        if (b < 0.0)
            throw std::invalid_argument("SweepConfig: noise levels must be >= 0");
    const bool any_nonzero_b =
        std::any_of(noise_levels.begin(), noise_levels.end(), [](double b) { return b != 0.0; });
    for (auto kind : models)
        if (!reservoir::is_stochastic(kind) && any_nonzero_b)
            throw std::invalid_argument(
                "SweepConfig: deterministic models (an/bn) only run at b = 0; "
                "sweep them in a separate config");
    for (const auto& in : inputs) {
        if (in.id.empty() || in.id.find(',') != std::string::npos ||
            in.id.find('|') != std::string::npos)
            throw std::invalid_argument("SweepConfig: input id must be non-empty, without ',' or '|'");
    }
    if (output_path.empty())
        throw std::invalid_argument("SweepConfig: output_path must be set");
}

SweepConfig config_from_json_text(const std::string& text) {
    json doc = json::parse(text);
    if (doc.value("schema_version", 1) != 1)
        throw std::invalid_argument("config: unsupported schema_version");

    SweepConfig cfg;
    for (const auto& m : doc.at("models"))
        cfg.models.push_back(reservoir::neuron_kind_from_name(m.get<std::string>()));
    for (const auto& s : doc.at("sizes")) cfg.sizes.push_back(s.get<std::size_t>());
    cfg.noise_levels = doc.at("noise_levels").get<std::vector<double>>();
    for (const auto& in : doc.at("inputs")) {
        InputEntry entry;
        entry.spec.kind = signals::kind_from_name(in.at("kind").get<std::string>());
        entry.spec.A = in.value("A", entry.spec.A);
        entry.spec.B = in.value("B", entry.spec.B);
        entry.spec.C = in.value("C", entry.spec.C);
        entry.spec.f1 = in.value("f1", entry.spec.f1);
        entry.spec.f2 = in.value("f2", entry.spec.f2);
        entry.spec.harmonic_count = in.value("harmonics", entry.spec.harmonic_count);
        entry.spec.dt = in.value("dt", entry.spec.dt);
        entry.id = in.value("id", signals::kind_name(entry.spec.kind));
        cfg.inputs.push_back(std::move(entry));
    }
    cfg.topologies = doc.value("topologies", cfg.topologies);
    cfg.runs_per_topology = doc.value("runs_per_topology", cfg.runs_per_topology);
    if (doc.contains("plan")) {
        const auto& p = doc["plan"];
        cfg.plan.washout_steps = p.value("washout", cfg.plan.washout_steps);
        cfg.plan.train_steps = p.value("train", cfg.plan.train_steps);
        cfg.plan.test_steps = p.value("test", cfg.plan.test_steps);
        if (p.contains("mode"))
            cfg.plan.mode = readout::mode_from_name(p["mode"].get<std::string>());
        cfg.plan.online_segments = p.value("online_segments", cfg.plan.online_segments);
        cfg.plan.blend_old = p.value("blend_old", cfg.plan.blend_old);
        cfg.plan.blend_new = p.value("blend_new", cfg.plan.blend_new);
        cfg.plan.ridge_lambda = p.value("ridge_lambda", cfg.plan.ridge_lambda);
        cfg.plan.blowup_factor = p.value("blowup_factor", cfg.plan.blowup_factor);
    }
    if (doc.contains("reservoir")) {
        const auto& r = doc["reservoir"];
        cfg.leaking_rate = r.value("a", cfg.leaking_rate);
        cfg.rho_target = r.value("rho_target", cfg.rho_target);
        cfg.w_in_scale = r.value("w_in_scale", cfg.w_in_scale);
    }
    if (doc.contains("mc")) {
        const auto& m = doc["mc"];
        cfg.mc_plan.washout_steps = m.value("washout", cfg.mc_plan.washout_steps);
        cfg.mc_plan.train_steps = m.value("train", cfg.mc_plan.train_steps);
        cfg.mc_plan.eval_steps = m.value("eval", cfg.mc_plan.eval_steps);
        cfg.mc_plan.ridge_lambda = m.value("ridge_lambda", cfg.mc_plan.ridge_lambda);
        cfg.mc_k_max = m.value("k_max", cfg.mc_k_max);
    }
    cfg.base_seed = doc.value("base_seed", cfg.base_seed);
    cfg.output_path = doc.value("output_path", cfg.output_path);
    if (doc.contains("nmse_convention")) {
        const auto conv = doc["nmse_convention"].get<std::string>();
        if (conv == "paper")
            cfg.nmse_convention = metrics::NmseConvention::Paper;
        else if (conv == "squared_range")
            cfg.nmse_convention = metrics::NmseConvention::SquaredRange;
        else
            throw std::invalid_argument("config: nmse_convention must be paper or squared_range");
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

std::vector<CellSpec> enumerate_cells(const SweepConfig& config) {
    std::vector<CellSpec> cells;
    std::size_t index = 0;
    for (auto kind : config.models)
        for (auto n : config.sizes)
            for (double b : config.noise_levels)
                for (const auto& input : config.inputs)
                    cells.push_back(CellSpec{kind, n, b, input, index++});
    return cells;
}

reservoir::WeightSet cell_topology(const SweepConfig& config,
                                   const CellSpec& cell, std::size_t topology) {
    // Topologies are keyed by (base_seed, N, topology index) so every model
    // and noise level is evaluated on the same five reservoirs of a given
    // size, mirroring the shared-topology protocol.
    reservoir::ReservoirConfig rc;
    rc.n = cell.n;
    rc.a = config.leaking_rate;
    rc.model = {cell.kind, reservoir::is_stochastic(cell.kind) ? cell.b : 0.0};
    rc.rho_target = config.rho_target;
    rc.w_in_scale = config.w_in_scale;
    rc.topology_seed =
        rng::mix_key(rng::mix_key(config.base_seed ^ kTopologyTag, cell.n), topology);
    return reservoir::build_topology(rc);
}

namespace {

reservoir::ReservoirConfig cell_reservoir_config(const SweepConfig& config,
                                                 const CellSpec& cell,
                                                 std::size_t topology) {
    reservoir::ReservoirConfig rc;
    rc.n = cell.n;
    rc.a = config.leaking_rate;
    rc.model = {cell.kind, reservoir::is_stochastic(cell.kind) ? cell.b : 0.0};
    rc.rho_target = config.rho_target;
    rc.w_in_scale = config.w_in_scale;
    rc.topology_seed =
        rng::mix_key(rng::mix_key(config.base_seed ^ kTopologyTag, cell.n), topology);
    return rc;
}

SweepRow base_row(const CellSpec& cell, std::size_t topology, std::size_t run) {
    SweepRow row;
    row.model = reservoir::kind_name(cell.kind);
    row.n = cell.n;
    row.b = cell.b;
    row.input_id = cell.input.id;
    row.topology = topology;
    row.run = run;
    return row;
}

}  // namespace

RunOutcome execute_run(const SweepConfig& config, const CellSpec& cell,
                       std::size_t topology, std::size_t run,
                       const reservoir::WeightSet& weights) {
    RunOutcome outcome;
    outcome.row = base_row(cell, topology, run);

    const auto rc = cell_reservoir_config(config, cell, topology);
    auto signal_stream = rng::derive_stream(
        rng::mix_key(config.base_seed ^ kSignalTag, cell.index), topology, run);
    auto noise_stream = rng::derive_stream(
        rng::mix_key(config.base_seed ^ kNoiseTag, cell.index), topology, run);

    try {
        const std::size_t train_span = config.plan.washout_steps + config.plan.train_steps;
        const auto train_signal =
            signals::generate(cell.input.spec, train_span, &signal_stream, 0);
        // Test span continues the generator's time index and noise stream.
        const auto test_signal = signals::generate(cell.input.spec, config.plan.test_steps,
                                                   &signal_stream, train_span);

        const auto trained = readout::train_offline(weights, rc, config.plan,
                                                    train_signal, noise_stream);
        outcome.result = config.plan.mode == readout::TrainMode::Online
                             ? readout::train_online(trained, rc, config.plan,
                                                     test_signal, noise_stream)
                             : readout::predict_free_run(trained, rc, config.plan,
                                                         test_signal, noise_stream);

        if (!outcome.result.blowup &&
            config.nmse_convention != metrics::NmseConvention::Paper) {
            outcome.result.nmse = metrics::nmse(outcome.result.target,
                                                outcome.result.predicted,
                                                config.nmse_convention);
        }
        outcome.row.status = outcome.result.blowup ? "blowup" : "ok";
        outcome.row.nmse = outcome.result.nmse;
        outcome.row.blowup_step = outcome.result.blowup_step;
        try {
            outcome.row.wout_db = metrics::dynamic_range(outcome.result.w_out).db;
        } catch (const degenerate_matrix_error&) {
            // all-zero readout; leave wout_db absent
        }
    } catch (const std::exception&) {
        outcome.row.status = "failed";
    }
    return outcome;
}

namespace {

SweepRow execute_mc_run(const SweepConfig& config, const CellSpec& cell,
                        std::size_t topology, std::size_t run,
                        const reservoir::WeightSet& weights) {
    SweepRow row = base_row(cell, topology, run);
    const auto rc = cell_reservoir_config(config, cell, topology);
    auto signal_stream = rng::derive_stream(
        rng::mix_key(config.base_seed ^ kSignalTag, cell.index), topology, run);
    auto noise_stream = rng::derive_stream(
        rng::mix_key(config.base_seed ^ kNoiseTag, cell.index), topology, run);
    try {
        const std::size_t total = config.mc_plan.washout_steps +
                                  config.mc_plan.train_steps + config.mc_plan.eval_steps;
        const auto input = signals::generate(cell.input.spec, total, &signal_stream, 0);
        const auto mc = metrics::memory_capacity(rc, weights, input, config.mc_k_max,
                                                 noise_stream, config.mc_plan);
        row.status = "ok";
        row.mc_total = mc.total;
    } catch (const std::exception&) {
        row.status = "failed";
    }
    return row;
}

bool row_less(const SweepRow& lhs, const SweepRow& rhs) {
    auto key = [](const SweepRow& r) {
        return std::tie(r.model, r.n, r.b, r.input_id, r.topology, r.run);
    };
    return key(lhs) < key(rhs);
}

template <typename RunFn>
std::vector<SweepRow> run_cell(const SweepConfig& config, const CellSpec& cell,
                               unsigned jobs, RunFn&& run_fn) {
    // Topology matrices are shared by all runs within a topology index.
    std::vector<reservoir::WeightSet> topologies;
    topologies.reserve(config.topologies);
    for (std::size_t j = 0; j < config.topologies; ++j)
        topologies.push_back(cell_topology(config, cell, j));

    const std::size_t total = config.topologies * config.runs_per_topology;
    std::vector<SweepRow> rows(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            const std::size_t topo = task / config.runs_per_topology;
            const std::size_t run = task % config.runs_per_topology;
            rows[task] = run_fn(cell, topo, run, topologies[topo]);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

fs::path checkpoint_dir(const SweepConfig& config) {
    return fs::path(config.output_path + ".cells");
}

fs::path checkpoint_path(const SweepConfig& config, const CellSpec& cell) {
    return checkpoint_dir(config) / ("cell_" + std::to_string(cell.index) + ".csv");
}

void ensure_writable_output(const SweepConfig& config) {
    const fs::path out(config.output_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    std::ofstream probe(config.output_path, std::ios::app);
    if (!probe)
        throw std::runtime_error("run_sweep: output path not writable: " + config.output_path);
}

template <typename RunFn>
SweepRecord run_grid(const SweepConfig& config, unsigned jobs, RunFn&& run_fn) {
    config.validate();
    ensure_writable_output(config);
    fs::create_directories(checkpoint_dir(config));

    SweepRecord record;
    for (const auto& cell : enumerate_cells(config)) {
        const fs::path ckpt = checkpoint_path(config, cell);
        std::vector<SweepRow> rows;
        if (fs::exists(ckpt)) {
            rows = read_csv(ckpt.string()).rows;
        } else {
            rows = run_cell(config, cell, jobs, run_fn);
            const fs::path tmp = ckpt.string() + ".tmp";
            write_csv(SweepRecord{rows}, tmp.string());
            fs::rename(tmp, ckpt);
        }
        record.rows.insert(record.rows.end(), rows.begin(), rows.end());
    }
    std::sort(record.rows.begin(), record.rows.end(), row_less);
    write_csv(record, config.output_path);
    write_summary_json(record, config.output_path + ".summary.json");
    return record;
}

}  // namespace

SweepRecord run_sweep(const SweepConfig& config, unsigned jobs) {
    return run_grid(config, jobs,
                    [&config](const CellSpec& cell, std::size_t topo, std::size_t run,
                              const reservoir::WeightSet& weights) {
                        return execute_run(config, cell, topo, run, weights).row;
                    });
}

SweepRecord run_mc_suite(const SweepConfig& config, unsigned jobs) {
    return run_grid(config, jobs,
                    [&config](const CellSpec& cell, std::size_t topo, std::size_t run,
                              const reservoir::WeightSet& weights) {
                        return execute_mc_run(config, cell, topo, run, weights);
                    });
}

namespace {

const char* kCsvHeader =
    "model,N,b,input_id,topology,run,status,nmse,blowup,blowup_step,wout_db,mc_total";

std::string row_to_csv(const SweepRow& r) {
    std::ostringstream line;
    line << r.model << ',' << r.n << ',' << format_double(r.b) << ',' << r.input_id
         << ',' << r.topology << ',' << r.run << ',' << r.status << ',';
    if (r.nmse) line << format_double(*r.nmse);
    line << ',' << (r.blowup() ? 1 : 0) << ',';
    if (r.blowup_step) line << *r.blowup_step;
    line << ',';
    if (r.wout_db) line << format_double(*r.wout_db);
    line << ',';
    if (r.mc_total) line << format_double(*r.mc_total);
    return line.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

void write_csv(const SweepRecord& record, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << kCsvHeader << '\n';
    for (const auto& row : record.rows) out << row_to_csv(row) << '\n';
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

SweepRecord read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("read_csv: bad or missing header in " + path);

    SweepRecord record;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 12)
            throw std::runtime_error("read_csv: malformed row " + std::to_string(lineno) +
                                     " in " + path);
        try {
            SweepRow row;
            row.model = f[0];
            row.n = static_cast<std::size_t>(std::stoull(f[1]));
            row.b = parse_double(f[2]);
            row.input_id = f[3];
            row.topology = static_cast<std::size_t>(std::stoull(f[4]));
            row.run = static_cast<std::size_t>(std::stoull(f[5]));
            row.status = f[6];
            if (!f[7].empty()) row.nmse = parse_double(f[7]);
            if (!f[9].empty()) row.blowup_step = std::stol(f[9]);
            if (!f[10].empty()) row.wout_db = parse_double(f[10]);
            if (!f[11].empty()) row.mc_total = parse_double(f[11]);
            record.rows.push_back(std::move(row));
        } catch (const std::exception&) {
            throw std::runtime_error("read_csv: malformed row " + std::to_string(lineno) +
                                     " in " + path);
        }
    }
    return record;
}

namespace {

struct CellKey {
    std::string model;
    std::size_t n;
    double b;
    std::string input_id;
    bool operator<(const CellKey& o) const {
        return std::tie(model, n, b, input_id) < std::tie(o.model, o.n, o.b, o.input_id);
    }
    std::string label() const {
        return model + "|" + std::to_string(n) + "|" + format_double(b) + "|" + input_id;
    }
};

std::map<CellKey, std::vector<const SweepRow*>> group_cells(const SweepRecord& record) {
    std::map<CellKey, std::vector<const SweepRow*>> cells;
    for (const auto& row : record.rows)
        cells[CellKey{row.model, row.n, row.b, row.input_id}].push_back(&row);
    return cells;
}

json cell_summary(const std::vector<const SweepRow*>& rows) {
    std::vector<std::optional<double>> nmses;
    std::vector<double> dbs, mcs;
    std::size_t blowups = 0, failed = 0;
    for (const auto* r : rows) {
        if (r->status == "failed") {
            ++failed;
            continue;
        }
        nmses.push_back(r->nmse);
        if (r->blowup()) ++blowups;
        if (r->wout_db && !r->blowup()) dbs.push_back(*r->wout_db);
        if (r->mc_total) mcs.push_back(*r->mc_total);
    }
    json out;
    out["count_total"] = rows.size();
    out["count_failed"] = failed;
    out["count_blowup"] = blowups;
    if (!nmses.empty()) {
        const auto stats = metrics::aggregate_values(nmses);
        out["count_valid"] = stats.count_valid;
        out["valid_fraction"] =
            static_cast<double>(stats.count_valid) / static_cast<double>(rows.size());
        if (stats.mean) {
            out["nmse_mean"] = *stats.mean;
            out["nmse_std"] = *stats.stddev;
        }
    } else {
        out["count_valid"] = 0;
    }
    out["blowup_rate"] =
        rows.empty() ? 0.0 : static_cast<double>(blowups) / static_cast<double>(rows.size());
    if (!dbs.empty()) {
        std::sort(dbs.begin(), dbs.end());
        out["wout_db_median"] = dbs[dbs.size() / 2];
    }
    if (!mcs.empty()) {
        double mean = 0.0;
        for (double v : mcs) mean += v;
        out["mc_mean"] = mean / static_cast<double>(mcs.size());
    }
    return out;
}

}  // namespace

void write_summary_json(const SweepRecord& record, const std::string& path) {
    json doc;
    doc["schema_version"] = 1;
    json cells = json::object();
    for (const auto& [key, rows] : group_cells(record))
        cells[key.label()] = cell_summary(rows);
    doc["cells"] = cells;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_summary_json: cannot open " + path);
    out << doc.dump(2) << '\n';
}

void report(const std::string& records_path, const std::string& out_dir) {
    const SweepRecord record = read_csv(records_path);
    if (record.rows.empty())
        throw std::runtime_error("report: no rows in " + records_path);
    fs::create_directories(out_dir);
    const auto cells = group_cells(record);

    {
        std::ofstream out(fs::path(out_dir) / "summary.csv", std::ios::binary);
        out << "model,N,b,input_id,count_total,count_valid,valid_fraction,"
               "nmse_mean,nmse_std,blowup_percent,wout_db_median,mc_mean\n";
        for (const auto& [key, rows] : cells) {
            const json s = cell_summary(rows);
            out << key.model << ',' << key.n << ',' << format_double(key.b) << ','
                << key.input_id << ',' << s["count_total"].get<std::size_t>() << ','
                << s["count_valid"].get<std::size_t>() << ',';
            if (s.contains("valid_fraction"))
                out << format_double(s["valid_fraction"].get<double>());
            out << ',';
            if (s.contains("nmse_mean")) out << format_double(s["nmse_mean"].get<double>());
            out << ',';
            if (s.contains("nmse_std")) out << format_double(s["nmse_std"].get<double>());
            out << ',' << format_double(100.0 * s["blowup_rate"].get<double>()) << ',';
            if (s.contains("wout_db_median"))
                out << format_double(s["wout_db_median"].get<double>());
            out << ',';
            if (s.contains("mc_mean")) out << format_double(s["mc_mean"].get<double>());
            out << '\n';
        }
    }

    {
        // NMSE frequency data per cell, one bin per line.
        std::ofstream out(fs::path(out_dir) / "nmse_histogram.csv", std::ios::binary);
        out << "model,N,b,input_id,bin_lo,bin_hi,count\n";
        for (const auto& [key, rows] : cells) {
            std::vector<std::optional<double>> nmses;
            for (const auto* r : rows) nmses.push_back(r->nmse);
            const auto stats = metrics::aggregate_values(nmses);
            for (std::size_t i = 0; i < stats.bin_counts.size(); ++i) {
                out << key.model << ',' << key.n << ',' << format_double(key.b) << ','
                    << key.input_id << ',' << format_double(stats.bin_edges[i]) << ','
                    << format_double(stats.bin_edges[i + 1]) << ',' << stats.bin_counts[i]
                    << '\n';
            }
        }
    }

    {
        std::ofstream out(fs::path(out_dir) / "blowup.csv", std::ios::binary);
        out << "model,N,b,input_id,blowup_percent\n";
        for (const auto& [key, rows] : cells) {
            std::size_t blowups = 0;
            for (const auto* r : rows)
                if (r->blowup()) ++blowups;
            out << key.model << ',' << key.n << ',' << format_double(key.b) << ','
                << key.input_id << ','
                << format_double(100.0 * static_cast<double>(blowups) /
                                 static_cast<double>(rows.size()))
                << '\n';
        }
    }

    {
        // Box-plot quartiles of the learned-weight dynamic range.
        std::ofstream out(fs::path(out_dir) / "dynamic_range.csv", std::ios::binary);
        out << "model,N,b,input_id,db_min,db_q1,db_median,db_q3,db_max\n";
        for (const auto& [key, rows] : cells) {
            std::vector<double> dbs;
            for (const auto* r : rows)
                if (r->wout_db && !r->blowup()) dbs.push_back(*r->wout_db);
            if (dbs.empty()) continue;
            std::sort(dbs.begin(), dbs.end());
            out << key.model << ',' << key.n << ',' << format_double(key.b) << ','
                << key.input_id << ',' << format_double(dbs.front()) << ','
                << format_double(dbs[dbs.size() / 4]) << ','
                << format_double(dbs[dbs.size() / 2]) << ','
                << format_double(dbs[(3 * dbs.size()) / 4]) << ','
                << format_double(dbs.back()) << '\n';
        }
    }
}

}  // namespace resbench::experiments
