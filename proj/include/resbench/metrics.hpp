#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resbench/readout.hpp"

namespace resbench::metrics {

enum class NmseConvention {
    Paper,         // normalize by N_T * (max - min)
    SquaredRange,  // normalize by N_T * (max - min)^2
};

// Normalized mean squared error between target and prediction.
double nmse(const std::vector<double>& y_tar, const std::vector<double>& y_pre,
            NmseConvention convention = NmseConvention::Paper);

struct MCResult {
    std::vector<std::pair<int, double>> per_delay;  // (k, score in [0,1])
    double total = 0.0;
};

struct MCPlan {
    std::size_t washout_steps = 200;
    std::size_t train_steps = 2000;
    std::size_t eval_steps = 1000;
    double ridge_lambda = 1e-8;
};

// Linear memory capacity: drive the reservoir teacher-forced, fit one
// readout row per delay k on target u(t-k), and score each on a held-out
// span as the squared Pearson correlation, clamped to [0, 1]. A delay with
// zero variance on either side scores 0.
MCResult memory_capacity(const reservoir::ReservoirConfig& config,
                         const reservoir::WeightSet& weights,
                         const signals::TimeSeries& input, int k_max,
                         rng::Stream& noise, const MCPlan& plan = {});

struct DynamicRange {
    double ratio = 1.0;
    double db = 0.0;
};

// max|w| over the smallest |w| above the zero floor (1e-12), in dB as
// 10 log10(ratio). Throws degenerate_matrix_error when every entry is below
// the floor.
DynamicRange dynamic_range(const linalg::Matrix& w_out);

struct AggregateStats {
    std::optional<double> mean;
    std::optional<double> stddev;  // population
    std::size_t count_valid = 0;
    std::size_t count_total = 0;
    std::vector<double> bin_edges;
    std::vector<std::size_t> bin_counts;
};

AggregateStats aggregate(const std::vector<readout::RunResult>& results,
                         std::size_t bins = 50);
AggregateStats aggregate_values(const std::vector<std::optional<double>>& values,
                                std::size_t bins = 50);

}  // namespace resbench::metrics
