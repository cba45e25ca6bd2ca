#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resbench/reservoir.hpp"

namespace resbench::readout {

enum class TrainMode { Offline, Online };

std::string mode_name(TrainMode mode);
TrainMode mode_from_name(const std::string& name);

struct TrainingPlan {
    std::size_t washout_steps = 200;
    std::size_t train_steps = 2000;
    std::size_t test_steps = 2000;
    TrainMode mode = TrainMode::Offline;
    std::size_t online_segments = 40;
    double blend_old = 0.9;
    double blend_new = 0.1;
    double ridge_lambda = 1e-8;
    // Blowup threshold = blowup_factor * max |target| over the test span.
    double blowup_factor = 10.0;

    void validate() const;
};

struct RunResult {
    std::optional<double> nmse;
    bool blowup = false;
    std::optional<long> blowup_step;
    linalg::Matrix w_out;  // final readout (1 x N)
    std::vector<double> predicted;
    std::vector<double> target;
};

// Readout weights plus the reservoir state reached at the end of the
// teacher-forced training span, which is where generative testing resumes.
struct TrainedReadout {
    reservoir::WeightSet weights;
    reservoir::ReservoirState state;
};

// Drive the reservoir with the teacher signal, discard washout states, and
// fit W_out mapping state x[t] to u[t+1] by ridge regression. The signal
// must cover washout + train steps.
TrainedReadout train_offline(const reservoir::WeightSet& weights,
                             const reservoir::ReservoirConfig& config,
                             const TrainingPlan& plan,
                             const signals::TimeSeries& signal,
                             rng::Stream& noise);

bool detect_blowup(double y_t, const reservoir::ReservoirState& state,
                   double threshold);

// Free-running generative prediction: the reservoir input at each test step
// is its own previous output. Blowup is a recorded outcome, not an error.
RunResult predict_free_run(const TrainedReadout& trained,
                           const reservoir::ReservoirConfig& config,
                           const TrainingPlan& plan,
                           const signals::TimeSeries& test_target,
                           rng::Stream& noise);

// Generative prediction with periodic readout refits: the test span is cut
// into online_segments contiguous segments; after each segment except the
// last, a fresh per-segment fit is blended into W_out as
// blend_old * W_out + blend_new * W_seg.
RunResult train_online(const TrainedReadout& trained,
                       const reservoir::ReservoirConfig& config,
                       const TrainingPlan& plan,
                       const signals::TimeSeries& test_target,
                       rng::Stream& noise);

}  // namespace resbench::readout
