#include "resbench/readout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "resbench/metrics.hpp"

namespace resbench::readout {

std::string mode_name(TrainMode mode) {
    return mode == TrainMode::Offline ? "offline" : "online";
}

TrainMode mode_from_name(const std::string& name) {
    if (name == "offline") return TrainMode::Offline;
    if (name == "online") return TrainMode::Online;
    throw std::invalid_argument("unknown training mode: " + name);
}

void TrainingPlan::validate() const {
    if (washout_steps < 1 || train_steps < 1 || test_steps < 1)
        throw std::invalid_argument("TrainingPlan: step counts must be >= 1");
    if (online_segments < 1)
        throw std::invalid_argument("TrainingPlan: online_segments must be >= 1");
    if (std::abs(blend_old + blend_new - 1.0) > 1e-12)
        throw std::invalid_argument("TrainingPlan: blend weights must sum to 1");
    if (ridge_lambda < 0.0)
        throw std::invalid_argument("TrainingPlan: ridge_lambda must be >= 0");
    if (!(blowup_factor > 0.0))
        throw std::invalid_argument("TrainingPlan: blowup_factor must be > 0");
}

namespace {

double readout_value(const linalg::Matrix& w_out,
                     const reservoir::ReservoirState& state) {
    double y = 0.0;
    for (std::size_t i = 0; i < state.x.size(); ++i) y += w_out(0, i) * state.x[i];
    return y;
}

double blowup_threshold(const TrainingPlan& plan,
                        const signals::TimeSeries& test_target) {
    double peak = 0.0;
    for (double v : test_target.values) peak = std::max(peak, std::abs(v));
    return plan.blowup_factor * std::max(peak, 1e-12);
}

}  // namespace

TrainedReadout train_offline(const reservoir::WeightSet& weights,
                             const reservoir::ReservoirConfig& config,
                             const TrainingPlan& plan,
                             const signals::TimeSeries& signal,
                             rng::Stream& noise) {
    plan.validate();
    config.validate();
    const std::size_t total = plan.washout_steps + plan.train_steps;
    if (signal.size() < total)
        throw std::invalid_argument("train_offline: signal shorter than washout + train");

    const std::size_t n = config.n;
    linalg::Matrix states(plan.train_steps, n);
    linalg::Matrix targets(plan.train_steps, 1);

    // Pair the state after consuming u[t] with the next sample u[t+1]; the
    // last pair's target is the final training sample, so nothing from the
    // test span leaks into the fit.
    reservoir::ReservoirState state = reservoir::zero_state(n);
    std::size_t row = 0;
    for (std::size_t t = 0; t < total; ++t) {
        state = reservoir::step(state, signal[t], weights, config, noise);
        if (t + 1 >= plan.washout_steps && t + 1 < total) {
            for (std::size_t i = 0; i < n; ++i) states(row, i) = state.x[i];
            targets(row, 0) = signal[t + 1];
            ++row;
        }
    }
    states.rows = row;
    states.data.resize(row * n);
    targets.rows = row;
    targets.data.resize(row);

    TrainedReadout trained;
    trained.weights = weights;
    trained.weights.w_out = linalg::ridge_solve(states, targets, plan.ridge_lambda);
    trained.state = std::move(state);
    return trained;
}

bool detect_blowup(double y_t, const reservoir::ReservoirState& state,
                   double threshold) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("detect_blowup: threshold must be > 0");
    if (!std::isfinite(y_t) || std::abs(y_t) > threshold) return true;
    for (double xi : state.x)
        if (!std::isfinite(xi)) return true;
    return false;
}

namespace {

// Shared generative loop. When `online` is set, per-segment refits are
// blended into the readout at each interior segment boundary.
RunResult generative_run(const TrainedReadout& trained,
                         const reservoir::ReservoirConfig& config,
                         const TrainingPlan& plan,
                         const signals::TimeSeries& test_target,
                         rng::Stream& noise, bool online) {
    plan.validate();
    config.validate();
    if (!trained.weights.w_out.has_value())
        throw std::invalid_argument("generative run requires a trained W_out");
    if (test_target.size() < plan.test_steps)
        throw std::invalid_argument("test_target shorter than plan.test_steps");

    const std::size_t n = config.n;
    const double threshold = blowup_threshold(plan, test_target);
    const std::size_t segment_len =
        online ? std::max<std::size_t>(1, plan.test_steps / plan.online_segments) : 0;

    linalg::Matrix w_out = *trained.weights.w_out;
    reservoir::ReservoirState state = trained.state;

    RunResult result;
    result.predicted.reserve(plan.test_steps);
    result.target.assign(test_target.values.begin(),
                         test_target.values.begin() + plan.test_steps);

    linalg::Matrix seg_states(segment_len, n);
    linalg::Matrix seg_targets(segment_len, 1);
    std::size_t seg_row = 0;
    std::size_t segments_done = 0;

    for (std::size_t i = 0; i < plan.test_steps; ++i) {
        const double y = readout_value(w_out, state);
        if (detect_blowup(y, state, threshold)) {
            result.blowup = true;
            result.blowup_step = static_cast<long>(i);
            break;
        }
        result.predicted.push_back(y);

        // The final segment absorbs any remainder and is never refit, so its
        // rows are not collected.
        if (online && segments_done + 1 < plan.online_segments) {
            for (std::size_t j = 0; j < n; ++j) seg_states(seg_row, j) = state.x[j];
            seg_targets(seg_row, 0) = test_target[i];
            ++seg_row;
            if (seg_row == segment_len) {
                ++segments_done;
                if (plan.blend_new != 0.0) {
                    try {
                        linalg::Matrix w_seg =
                            linalg::ridge_solve(seg_states, seg_targets, plan.ridge_lambda);
                        for (std::size_t j = 0; j < n; ++j)
                            w_out(0, j) = plan.blend_old * w_out(0, j) +
                                          plan.blend_new * w_seg(0, j);
                    } catch (const singular_system_error&) {
                        result.blowup = true;
                        result.blowup_step = static_cast<long>(i);
                        break;
                    }
                }
                seg_row = 0;
            }
        }

        try {
            state = reservoir::step(state, y, trained.weights, config, noise);
        } catch (const numeric_overflow_error& e) {
            result.blowup = true;
            result.blowup_step = e.step();
            break;
        }
    }

    result.w_out = std::move(w_out);
    if (!result.blowup)
        result.nmse = metrics::nmse(result.target, result.predicted);
    return result;
}

}  // namespace

RunResult predict_free_run(const TrainedReadout& trained,
                           const reservoir::ReservoirConfig& config,
                           const TrainingPlan& plan,
                           const signals::TimeSeries& test_target,
                           rng::Stream& noise) {
    return generative_run(trained, config, plan, test_target, noise, false);
}

RunResult train_online(const TrainedReadout& trained,
                       const reservoir::ReservoirConfig& config,
                       const TrainingPlan& plan,
                       const signals::TimeSeries& test_target,
                       rng::Stream& noise) {
    return generative_run(trained, config, plan, test_target, noise, true);
}

}  // namespace resbench::readout
