// pybind11 surface over the C++ core. Thin on purpose: configs travel as
// JSON text (same schema as the CLI) and results come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resbench/experiments.hpp"
#include "resbench/metrics.hpp"

namespace py = pybind11;
using namespace resbench;

namespace {

py::dict row_to_dict(const experiments::SweepRow& row) {
    py::dict d;
    d["model"] = row.model;
    d["n"] = row.n;
    d["b"] = row.b;
    d["input_id"] = row.input_id;
    d["topology"] = row.topology;
    d["run"] = row.run;
    d["status"] = row.status;
    d["nmse"] = row.nmse ? py::object(py::float_(*row.nmse)) : py::none();
    d["blowup_step"] =
        row.blowup_step ? py::object(py::int_(*row.blowup_step)) : py::none();
    d["wout_db"] = row.wout_db ? py::object(py::float_(*row.wout_db)) : py::none();
    d["mc_total"] = row.mc_total ? py::object(py::float_(*row.mc_total)) : py::none();
    return d;
}

py::list record_to_list(const experiments::SweepRecord& record) {
    py::list out;
    for (const auto& row : record.rows) out.append(row_to_dict(row));
    return out;
}

signals::SignalSpec make_spec(const std::string& kind, double A, double B, double C,
                              double f1, double f2, int harmonics) {
    signals::SignalSpec spec;
    spec.kind = signals::kind_from_name(kind);
    spec.A = A;
    spec.B = B;
    spec.C = C;
    spec.f1 = f1;
    spec.f2 = f2;
    spec.harmonic_count = harmonics;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "reservoir benchmarking core";

    m.def(
        "generate_signal",
        [](const std::string& kind, std::size_t length, double A, double B, double C,
           double f1, double f2, int harmonics, std::uint64_t seed, std::size_t t0) {
            const auto spec = make_spec(kind, A, B, C, f1, f2, harmonics);
            rng::Stream noise(seed, 0);
            return signals::generate(spec, length, &noise, t0).values;
        },
        py::arg("kind"), py::arg("length"), py::arg("A") = 1.0, py::arg("B") = 2.0,
        py::arg("C") = 0.0, py::arg("f1") = 0.10, py::arg("f2") = 0.02,
        py::arg("harmonics") = 15, py::arg("seed") = 0, py::arg("t0") = 0,
        "Generate a benchmark input signal as a list of floats.");

    m.def(
        "nmse",
        [](const std::vector<double>& target, const std::vector<double>& predicted,
           const std::string& convention) {
            const auto conv = convention == "squared-range"
                                  ? metrics::NmseConvention::SquaredRange
                                  : metrics::NmseConvention::Paper;
            return metrics::nmse(target, predicted, conv);
        },
        py::arg("target"), py::arg("predicted"), py::arg("convention") = "paper");

    m.def(
        "dynamic_range_db",
        [](const std::vector<double>& weights) {
            linalg::Matrix w(1, weights.size());
            w.data = weights;
            return metrics::dynamic_range(w).db;
        },
        py::arg("weights"),
        "Dynamic range of a weight vector in dB: 10 log10(max|w| / min|w|>0).");

    m.def(
        "spectral_radius",
        [](const std::vector<std::vector<double>>& rows) {
            const std::size_t n = rows.size();
            linalg::Matrix mat(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (rows[i].size() != n)
                    throw std::invalid_argument("spectral_radius: matrix must be square");
                for (std::size_t j = 0; j < n; ++j) mat(i, j) = rows[i][j];
            }
            return linalg::spectral_radius(mat).value;
        },
        py::arg("matrix"));

    m.def(
        "run_trajectory",
        [](const std::string& model, std::size_t n, double a, double b, double rho,
           double w_in_scale, const std::vector<double>& input,
           std::uint64_t topology_seed, std::uint64_t run_seed) {
            reservoir::ReservoirConfig config;
            config.n = n;
            config.a = a;
            config.model.kind = reservoir::neuron_kind_from_name(model);
            config.model.b = b;
            config.rho_target = rho;
            config.w_in_scale = w_in_scale;
            config.topology_seed = topology_seed;
            config.run_seed = run_seed;
            config.validate();
            const auto weights = reservoir::build_topology(config);
            rng::Stream noise(run_seed, 0);
            signals::TimeSeries series;
            series.values = input;
            const auto traj = reservoir::run_sequence(reservoir::zero_state(n), series,
                                                      weights, config, noise);
            std::vector<std::vector<double>> out;
            out.reserve(traj.size());
            for (const auto& state : traj) out.push_back(state.x);
            return out;
        },
        py::arg("model"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("rho"),
        py::arg("w_in_scale"), py::arg("input"), py::arg("topology_seed") = 1,
        py::arg("run_seed") = 0,
        "Drive a freshly built reservoir with `input`; returns the state at "
        "each step as a list of lists.");

    py::class_<experiments::SweepConfig>(m, "SweepConfig")
        .def_readwrite("output_path", &experiments::SweepConfig::output_path);

    m.def("config_from_json", &experiments::config_from_json_text, py::arg("text"),
          "Parse a sweep config from JSON text (schema_version 1).");
    m.def("load_config", &experiments::load_config, py::arg("path"));

    m.def(
        "run_sweep",
        [](const experiments::SweepConfig& config, unsigned jobs) {
            experiments::SweepRecord record;
            {
                py::gil_scoped_release release;
                record = experiments::run_sweep(config, jobs);
            }
            return record_to_list(record);
        },
        py::arg("config"), py::arg("jobs") = 1,
        "Execute the full sweep grid; returns one dict per run.");

    m.def(
        "run_mc_suite",
        [](const experiments::SweepConfig& config, unsigned jobs) {
            experiments::SweepRecord record;
            {
                py::gil_scoped_release release;
                record = experiments::run_mc_suite(config, jobs);
            }
            return record_to_list(record);
        },
        py::arg("config"), py::arg("jobs") = 1);

    m.def("report", &experiments::report, py::arg("records_path"), py::arg("out_dir"),
          "Render summary tables and plot-data CSVs from a sweep CSV.");
}
