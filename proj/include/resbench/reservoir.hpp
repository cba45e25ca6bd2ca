#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resbench/linalg.hpp"
#include "resbench/rng.hpp"
#include "resbench/signals.hpp"

namespace resbench::reservoir {

enum class NeuronKind { AN, ASN, BN, BSN };

std::string kind_name(NeuronKind kind);
NeuronKind neuron_kind_from_name(const std::string& name);
bool is_stochastic(NeuronKind kind);
bool is_binary(NeuronKind kind);

struct NeuronModel {
    NeuronKind kind = NeuronKind::AN;
    double b = 0.0;  // noise scaling; must be 0 for AN and BN
};

struct ReservoirConfig {
    std::size_t n = 20;
    double a = 0.3;  // leaking rate, 0 < a <= 1
    NeuronModel model;
    double rho_target = 1.0;
    double w_in_scale = 1.0;
    std::uint64_t topology_seed = 0;
    std::uint64_t run_seed = 0;

    void validate() const;
};

struct WeightSet {
    linalg::Matrix w_in;   // N x 1
    linalg::Matrix w_s;    // N x N
    std::optional<linalg::Matrix> w_out;  // 1 x N once trained
};

struct ReservoirState {
    std::vector<double> x;
    long t = 0;
};

ReservoirState zero_state(std::size_t n);

// Draw W_in and W_s i.i.d. U[-0.5, 0.5) from a stream keyed by
// topology_seed, then rescale W_s to the target spectral radius. A
// degenerate draw (zero spectral radius) falls through to the next
// substream.
WeightSet build_topology(const ReservoirConfig& config);

// One update of the reservoir dynamics:
//   z  = W_in * u + W_s * x
//   AN:  x' = (1-a) x + a tanh(z)
//   ASN: x' = (1-a) x + a tanh(z) + b r
//   BN:  x' = (1-a) x + sgn(a tanh(z))
//   BSN: x' = (1-a) x + sgn(a tanh(z) + b r)
// with r drawn per neuron from U[-1, 1) and sgn(0) = 0. Throws
// numeric_overflow_error when any coordinate leaves the finite range.
ReservoirState step(const ReservoirState& state, double u_next,
                    const WeightSet& weights, const ReservoirConfig& config,
                    rng::Stream& noise);

std::vector<ReservoirState> run_sequence(const ReservoirState& x0,
                                         const signals::TimeSeries& inputs,
                                         const WeightSet& weights,
                                         const ReservoirConfig& config,
                                         rng::Stream& noise);

// Round-trippable weight dump (columns: matrix,row,col,value) so other
// implementations can be driven with identical matrices.
void save_weights_csv(const WeightSet& weights, const std::string& path);
WeightSet load_weights_csv(const std::string& path);

}  // namespace resbench::reservoir
