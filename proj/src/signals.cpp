#include "resbench/signals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace resbench::signals {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phase) {
    double p = std::fmod(phase, kTwoPi);
    if (p < 0.0) p += kTwoPi;
    return p;
}
}  // namespace

std::string kind_name(SignalKind kind) {
    switch (kind) {
        case SignalKind::CleanSinusoid: return "clean";
        case SignalKind::DistortedSinusoid: return "distorted";
        case SignalKind::HarmonicSum: return "harmonic";
        case SignalKind::Sawtooth: return "sawtooth";
        case SignalKind::Square: return "square";
    }
    throw std::logic_error("kind_name: unknown SignalKind");
}

SignalKind kind_from_name(const std::string& name) {
    if (name == "clean") return SignalKind::CleanSinusoid;
    if (name == "distorted") return SignalKind::DistortedSinusoid;
    if (name == "harmonic") return SignalKind::HarmonicSum;
    if (name == "sawtooth") return SignalKind::Sawtooth;
    if (name == "square") return SignalKind::Square;
    throw std::invalid_argument("unknown signal kind: " + name);
}

double SignalSpec::amplitude_bound() const {
    switch (kind) {
        case SignalKind::CleanSinusoid:
            return std::abs(A) + std::abs(B);
        case SignalKind::DistortedSinusoid:
            return std::abs(A) + std::abs(B) + C / 2.0;
        case SignalKind::HarmonicSum: {
            double s = 0.0;
            for (int i = 1; i <= harmonic_count; ++i) s += 1.0 / (2 * i - 1);
            return 4.0 / std::numbers::pi * s;
        }
        case SignalKind::Sawtooth:
        case SignalKind::Square:
            return std::abs(A) + std::abs(B);
    }
    throw std::logic_error("amplitude_bound: unknown SignalKind");
}

double sawtooth_wave(double phase) {
    return -1.0 + 2.0 * (wrap_phase(phase) / kTwoPi);
}

double square_wave(double phase) {
    return wrap_phase(phase) < std::numbers::pi ? 1.0 : -1.0;
}

double evaluate_clean(const SignalSpec& spec, std::size_t t) {
    const double time = static_cast<double>(t) * spec.dt;
    switch (spec.kind) {
        case SignalKind::CleanSinusoid:
        case SignalKind::DistortedSinusoid:
            return spec.A * std::cos(kTwoPi * spec.f1 * time) +
                   spec.B * std::sin(kTwoPi * spec.f2 * time);
        case SignalKind::HarmonicSum: {
            double s = 0.0;
            for (int i = 1; i <= spec.harmonic_count; ++i) {
                const int n = 2 * i - 1;
                s += std::sin(kTwoPi * n * spec.f1 * time) / n;
            }
            return 4.0 / std::numbers::pi * s;
        }
        case SignalKind::Sawtooth:
            return spec.A * sawtooth_wave(kTwoPi * spec.f1 * time) +
                   spec.B * sawtooth_wave(kTwoPi * spec.f2 * time);
        case SignalKind::Square:
            return spec.A * square_wave(kTwoPi * spec.f1 * time) +
                   spec.B * square_wave(kTwoPi * spec.f2 * time);
    }
    throw std::logic_error("evaluate_clean: unknown SignalKind");
}

namespace {
void validate(const SignalSpec& spec) {
    const bool finite = std::isfinite(spec.A) && std::isfinite(spec.B) &&
                        std::isfinite(spec.C) && std::isfinite(spec.f1) &&
                        std::isfinite(spec.f2) && std::isfinite(spec.dt);
    if (!finite)
        throw std::invalid_argument("SignalSpec: non-finite parameter");
    if (spec.f1 <= 0.0 || spec.f2 <= 0.0)
        throw std::invalid_argument("SignalSpec: frequencies must be positive");
    if (spec.dt <= 0.0)
        throw std::invalid_argument("SignalSpec: dt must be positive");
    if (spec.C < 0.0)
        throw std::invalid_argument("SignalSpec: noise weight C must be >= 0");
    if (spec.harmonic_count < 1)
        throw std::invalid_argument("SignalSpec: harmonic_count must be >= 1");
}
}  // namespace

TimeSeries generate(const SignalSpec& spec, std::size_t length,
                    rng::Stream* noise, std::size_t t0) {
    validate(spec);
    if (length < 1)
        throw std::invalid_argument("generate: length must be >= 1");
    const bool noisy = spec.kind == SignalKind::DistortedSinusoid && spec.C != 0.0;
    if (noisy && noise == nullptr)
        throw std::invalid_argument("generate: distorted signal with C != 0 needs a noise stream");

    TimeSeries series;
    series.dt = spec.dt;
    series.values.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        double u = evaluate_clean(spec, t0 + i);
        if (noisy) u += spec.C * (noise->next_unit() - 0.5);
        series.values[i] = u;
    }
    return series;
}

}  // namespace resbench::signals
