#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "resbench/rng.hpp"

namespace resbench::signals {

enum class SignalKind {
    CleanSinusoid,
    DistortedSinusoid,
    HarmonicSum,
    Sawtooth,
    Square,
};

std::string kind_name(SignalKind kind);
SignalKind kind_from_name(const std::string& name);

struct SignalSpec {
    SignalKind kind = SignalKind::CleanSinusoid;
    double A = 1.0;
    double B = 2.0;
    double C = 0.0;       // noise weight, 0 for clean
    double f1 = 0.10;     // Hz
    double f2 = 0.02;     // Hz
    int harmonic_count = 15;  // number of odd harmonics for HarmonicSum
    double dt = 1.0;      // seconds per step

    // Largest possible |u(t)| for this spec; used for blowup thresholds.
    double amplitude_bound() const;
};

struct TimeSeries {
    std::vector<double> values;
    double dt = 1.0;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

// Periodic ramp from -1 to 1 over each 2*pi of phase; sawtooth(0) = -1.
double sawtooth_wave(double phase);

// +1 for the first half-period, -1 for the second; square(0) = +1.
double square_wave(double phase);

// Evaluate the waveform at time index t (time = t * dt), noise excluded.
double evaluate_clean(const SignalSpec& spec, std::size_t t);

// Generate `length` samples starting at time index t0. The noise stream is
// consumed one draw per step whenever C != 0, so a series generated in one
// call equals the concatenation of chunked calls sharing the stream.
TimeSeries generate(const SignalSpec& spec, std::size_t length,
                    rng::Stream* noise = nullptr, std::size_t t0 = 0);

}  // namespace resbench::signals
