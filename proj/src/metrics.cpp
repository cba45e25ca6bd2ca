#include "resbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resbench::metrics {

double nmse(const std::vector<double>& y_tar, const std::vector<double>& y_pre,
            NmseConvention convention) {
    if (y_tar.size() != y_pre.size())
        throw std::invalid_argument("nmse: length mismatch");
    const std::size_t n = y_tar.size();
    if (n < 2) throw std::invalid_argument("nmse: need at least 2 samples");

    const auto [lo, hi] = std::minmax_element(y_tar.begin(), y_tar.end());
    const double range = *hi - *lo;
    if (!(range > 0.0))
        throw std::invalid_argument("nmse: constant target has zero range");

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = y_tar[i] - y_pre[i];
        err += d * d;
    }
    const double denom = convention == NmseConvention::Paper
                             ? static_cast<double>(n) * range
                             : static_cast<double>(n) * range * range;
    return err / denom;
}

namespace {

// Squared Pearson correlation; 0 when either side has no variance.
double squared_correlation(const std::vector<double>& a,
                           const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (!(va > 0.0) || !(vb > 0.0)) return 0.0;
    return std::clamp(cov * cov / (va * vb), 0.0, 1.0);
}

}  // namespace

MCResult memory_capacity(const reservoir::ReservoirConfig& config,
                         const reservoir::WeightSet& weights,
                         const signals::TimeSeries& input, int k_max,
                         rng::Stream& noise, const MCPlan& plan) {
    config.validate();
    if (k_max < 1) throw std::invalid_argument("memory_capacity: k_max must be >= 1");
    const std::size_t total = plan.washout_steps + plan.train_steps + plan.eval_steps;
    if (input.size() < total)
        throw std::invalid_argument("memory_capacity: input shorter than the drive plan");
    if (plan.washout_steps < static_cast<std::size_t>(k_max))
        throw std::invalid_argument("memory_capacity: washout must cover k_max");

    const std::size_t n = config.n;
    const std::size_t kk = static_cast<std::size_t>(k_max);

    // Teacher-forced drive; one state row per time index in the train and
    // eval spans.
    linalg::Matrix train_states(plan.train_steps, n);
    linalg::Matrix eval_states(plan.eval_steps, n);
    reservoir::ReservoirState state = reservoir::zero_state(n);
    for (std::size_t t = 0; t < total; ++t) {
        state = reservoir::step(state, input[t], weights, config, noise);
        if (t >= plan.washout_steps && t < plan.washout_steps + plan.train_steps) {
            const std::size_t row = t - plan.washout_steps;
            for (std::size_t i = 0; i < n; ++i) train_states(row, i) = state.x[i];
        } else if (t >= plan.washout_steps + plan.train_steps) {
            const std::size_t row = t - plan.washout_steps - plan.train_steps;
            for (std::size_t i = 0; i < n; ++i) eval_states(row, i) = state.x[i];
        }
    }

    // Delayed targets for all k at once; the gram matrix is shared across
    // delays, so one ridge solve handles the whole batch.
    linalg::Matrix delayed(plan.train_steps, kk);
    for (std::size_t row = 0; row < plan.train_steps; ++row) {
        const std::size_t t = plan.washout_steps + row;
        for (std::size_t k = 1; k <= kk; ++k)
            delayed(row, k - 1) = input[t - k];
    }
    const linalg::Matrix w = linalg::ridge_solve(train_states, delayed, plan.ridge_lambda);

    MCResult result;
    result.per_delay.reserve(kk);
    std::vector<double> y(plan.eval_steps), u(plan.eval_steps);
    for (std::size_t k = 1; k <= kk; ++k) {
        for (std::size_t row = 0; row < plan.eval_steps; ++row) {
            const std::size_t t = plan.washout_steps + plan.train_steps + row;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc += w(k - 1, i) * eval_states(row, i);
            y[row] = acc;
            u[row] = input[t - k];
        }
        const double score = squared_correlation(u, y);
        result.per_delay.emplace_back(static_cast<int>(k), score);
        result.total += score;
    }
    return result;
}

DynamicRange dynamic_range(const linalg::Matrix& w_out) {
    constexpr double kZeroFloor = 1e-12;
    double lo = 0.0, hi = 0.0;
    for (double v : w_out.data) {
        const double a = std::abs(v);
        if (a <= kZeroFloor) continue;
        if (lo == 0.0 || a < lo) lo = a;
        if (a > hi) hi = a;
    }
    if (lo == 0.0)
        throw degenerate_matrix_error("dynamic_range: all weights below zero floor");
    DynamicRange dr;
    dr.ratio = hi / lo;
    dr.db = 10.0 * std::log10(dr.ratio);
    return dr;
}

AggregateStats aggregate_values(const std::vector<std::optional<double>>& values,
                                std::size_t bins) {
    if (values.empty())
        throw std::invalid_argument("aggregate: empty input");
    if (bins < 1) throw std::invalid_argument("aggregate: need at least one bin");

    AggregateStats stats;
    stats.count_total = values.size();
    std::vector<double> valid;
    for (const auto& v : values)
        if (v.has_value()) valid.push_back(*v);
    stats.count_valid = valid.size();
    if (valid.empty()) return stats;

    double mean = 0.0;
    for (double v : valid) mean += v;
    mean /= static_cast<double>(valid.size());
    double var = 0.0;
    for (double v : valid) var += (v - mean) * (v - mean);
    var /= static_cast<double>(valid.size());
    stats.mean = mean;
    stats.stddev = std::sqrt(var);

    const auto [lo_it, hi_it] = std::minmax_element(valid.begin(), valid.end());
    double lo = *lo_it, hi = *hi_it;
    if (!(hi > lo)) hi = lo + 1.0;  // all values equal
    stats.bin_edges.resize(bins + 1);
    stats.bin_counts.assign(bins, 0);
    for (std::size_t i = 0; i <= bins; ++i)
        stats.bin_edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    for (double v : valid) {
        auto idx = static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(bins));
        if (idx >= bins) idx = bins - 1;
        ++stats.bin_counts[idx];
    }
    return stats;
}

AggregateStats aggregate(const std::vector<readout::RunResult>& results,
                         std::size_t bins) {
    std::vector<std::optional<double>> values;
    values.reserve(results.size());
    for (const auto& r : results) values.push_back(r.nmse);
    return aggregate_values(values, bins);
}

}  // namespace resbench::metrics
