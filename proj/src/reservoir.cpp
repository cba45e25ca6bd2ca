#include "resbench/reservoir.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace resbench::reservoir {

std::string kind_name(NeuronKind kind) {
    switch (kind) {
        case NeuronKind::AN: return "an";
        case NeuronKind::ASN: return "asn";
        case NeuronKind::BN: return "bn";
        case NeuronKind::BSN: return "bsn";
    }
    throw std::logic_error("kind_name: unknown NeuronKind");
}

NeuronKind neuron_kind_from_name(const std::string& name) {
    if (name == "an") return NeuronKind::AN;
    if (name == "asn") return NeuronKind::ASN;
    if (name == "bn") return NeuronKind::BN;
    if (name == "bsn") return NeuronKind::BSN;
    throw std::invalid_argument("unknown neuron kind: " + name);
}

bool is_stochastic(NeuronKind kind) {
    return kind == NeuronKind::ASN || kind == NeuronKind::BSN;
}

bool is_binary(NeuronKind kind) {
    return kind == NeuronKind::BN || kind == NeuronKind::BSN;
}

void ReservoirConfig::validate() const {
    if (n < 1) throw std::invalid_argument("ReservoirConfig: n must be >= 1");
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("ReservoirConfig: need 0 < a <= 1");
    if (!(rho_target > 0.0))
        throw std::invalid_argument("ReservoirConfig: rho_target must be > 0");
    if (model.b < 0.0)
        throw std::invalid_argument("ReservoirConfig: noise scaling b must be >= 0");
    if (!is_stochastic(model.kind) && model.b != 0.0)
        throw std::invalid_argument("ReservoirConfig: deterministic models require b = 0");
}

ReservoirState zero_state(std::size_t n) {
    return ReservoirState{std::vector<double>(n, 0.0), 0};
}

namespace {
constexpr std::uint64_t kTopologyStreamTag = 0x70706f6cULL;

double sgn(double v) {
    if (v > 0.0) return 1.0;
    if (v < 0.0) return -1.0;
    return 0.0;
}
}  // namespace

WeightSet build_topology(const ReservoirConfig& config) {
    config.validate();
    const std::size_t n = config.n;

    for (std::uint64_t substream = 0; substream < 16; ++substream) {
        rng::Stream stream(config.topology_seed, kTopologyStreamTag + substream);
        WeightSet weights;
        weights.w_in = linalg::Matrix(n, 1);
        for (auto& v : weights.w_in.data)
            v = stream.next_uniform(-0.5, 0.5) * config.w_in_scale;
        linalg::Matrix ws(n, n);
        for (auto& v : ws.data) v = stream.next_uniform(-0.5, 0.5);
        try {
            weights.w_s = linalg::scale_to_radius(ws, config.rho_target);
        } catch (const degenerate_matrix_error&) {
            continue;  // next substream
        }
        return weights;
    }
    throw degenerate_matrix_error("build_topology: could not draw a non-degenerate W_s");
}

ReservoirState step(const ReservoirState& state, double u_next,
                    const WeightSet& weights, const ReservoirConfig& config,
                    rng::Stream& noise) {
    const std::size_t n = config.n;
    if (state.x.size() != n)
        throw std::invalid_argument("step: state dimension mismatch");
    if (!std::isfinite(u_next))
        throw numeric_overflow_error("step: non-finite input", state.t);

    const double a = config.a;
    const double b = config.model.b;
    const NeuronKind kind = config.model.kind;
    const bool noisy = is_stochastic(kind) && b > 0.0;

    ReservoirState next;
    next.x.resize(n);
    next.t = state.t + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = &weights.w_s.data[i * n];
        double z = weights.w_in(i, 0) * u_next;
        for (std::size_t j = 0; j < n; ++j) z += row[j] * state.x[j];

        double drive = a * std::tanh(z);
        if (noisy) drive += b * noise.next_uniform(-1.0, 1.0);
        if (is_binary(kind)) drive = sgn(drive);

        const double xi = (1.0 - a) * state.x[i] + drive;
        if (!std::isfinite(xi))
            throw numeric_overflow_error("step: non-finite state", next.t);
        next.x[i] = xi;
    }
    return next;
}

std::vector<ReservoirState> run_sequence(const ReservoirState& x0,
                                         const signals::TimeSeries& inputs,
                                         const WeightSet& weights,
                                         const ReservoirConfig& config,
                                         rng::Stream& noise) {
    if (inputs.values.empty())
        throw std::invalid_argument("run_sequence: inputs must be non-empty");
    std::vector<ReservoirState> trajectory;
    trajectory.reserve(inputs.values.size());
    const ReservoirState* current = &x0;
    for (double u : inputs.values) {
        trajectory.push_back(step(*current, u, weights, config, noise));
        current = &trajectory.back();
    }
    return trajectory;
}

namespace {

void write_matrix(std::ostream& out, const char* name, const linalg::Matrix& m) {
    char buf[32];
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            const auto r = std::to_chars(buf, buf + sizeof(buf), m(i, j));
            out << name << ',' << i << ',' << j << ','
                << std::string_view(buf, r.ptr - buf) << '\n';
        }
}

}  // namespace

void save_weights_csv(const WeightSet& weights, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "matrix,row,col,value\n";
    write_matrix(out, "w_in", weights.w_in);
    write_matrix(out, "w_s", weights.w_s);
    if (weights.w_out) write_matrix(out, "w_out", *weights.w_out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

WeightSet load_weights_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "matrix,row,col,value")
        throw std::runtime_error("weights csv: bad header in " + path);

    // Collect entries per matrix first; shapes come from the max indices.
    std::map<std::string, std::map<std::pair<std::size_t, std::size_t>, double>> cells;
    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string name, r, c, v;
        if (!std::getline(fields, name, ',') || !std::getline(fields, r, ',') ||
            !std::getline(fields, c, ',') || !std::getline(fields, v))
            throw std::runtime_error("weights csv: malformed row " + std::to_string(row_no));
        try {
            cells[name][{std::stoul(r), std::stoul(c)}] = std::stod(v);
        } catch (const std::exception&) {
            throw std::runtime_error("weights csv: malformed row " + std::to_string(row_no));
        }
    }

    auto build = [&](const std::string& name) {
        const auto& m = cells.at(name);
        std::size_t rows = 0, cols = 0;
        for (const auto& [rc, _] : m) {
            rows = std::max(rows, rc.first + 1);
            cols = std::max(cols, rc.second + 1);
        }
        linalg::Matrix out(rows, cols);
        for (const auto& [rc, value] : m) out(rc.first, rc.second) = value;
        return out;
    };
    if (!cells.count("w_in") || !cells.count("w_s"))
        throw std::runtime_error("weights csv: missing w_in or w_s in " + path);
    WeightSet weights;
    weights.w_in = build("w_in");
    weights.w_s = build("w_s");
    if (cells.count("w_out")) weights.w_out = build("w_out");
    return weights;
}

}  // namespace resbench::reservoir
