#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "resbench/reservoir.hpp"

using namespace resbench;
using reservoir::NeuronKind;
using reservoir::ReservoirConfig;

namespace {

ReservoirConfig make_config(NeuronKind kind, double b, std::uint64_t topo_seed) {
    ReservoirConfig config;
    config.n = 20;
    config.model.kind = kind;
    config.model.b = b;
    config.topology_seed = topo_seed;
    return config;
}

signals::TimeSeries clean_series(std::size_t length) {
    signals::SignalSpec spec;
    return signals::generate(spec, length);
}

}  // namespace

TEST_CASE("config validation rejects bad parameters") {
    ReservoirConfig config;
    config.n = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = ReservoirConfig{};
    config.a = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = ReservoirConfig{};
    config.model.kind = NeuronKind::AN;
    config.model.b = 0.05;  // deterministic kinds carry no noise term
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("build_topology is deterministic and hits the radius target") {
    const auto config = make_config(NeuronKind::AN, 0.0, 1);
    const auto w1 = reservoir::build_topology(config);
    const auto w2 = reservoir::build_topology(config);
    CHECK(linalg::frobenius_distance(w1.w_s, w2.w_s) == 0.0);
    CHECK(linalg::frobenius_distance(w1.w_in, w2.w_in) == 0.0);
    CHECK(linalg::spectral_radius(w1.w_s).value ==
          doctest::Approx(config.rho_target).epsilon(1e-6));
}

TEST_CASE("five topology seeds give five distinct matrices") {
    auto config = make_config(NeuronKind::AN, 0.0, 0);
    config.n = 50;
    std::vector<linalg::Matrix> ws;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        config.topology_seed = seed + 1;
        ws.push_back(reservoir::build_topology(config).w_s);
    }
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            REQUIRE(linalg::frobenius_distance(ws[i], ws[j]) > 0.0);
}

TEST_CASE("step hand evaluations on a 1-neuron reservoir") {
    ReservoirConfig config;
    config.n = 1;
    config.a = 0.5;
    reservoir::WeightSet weights;
    weights.w_in = linalg::Matrix(1, 1);
    weights.w_in(0, 0) = 1.0;
    weights.w_s = linalg::Matrix(1, 1);
    rng::Stream noise(0, 0);
    auto state = reservoir::zero_state(1);

    SUBCASE("AN fixed point at origin") {
        const auto next = reservoir::step(state, 0.0, weights, config, noise);
        CHECK(next.x[0] == 0.0);
    }
    SUBCASE("AN hand value") {
        const auto next = reservoir::step(state, 1.0, weights, config, noise);
        CHECK(next.x[0] == doctest::Approx(0.5 * std::tanh(1.0)).epsilon(1e-15));
    }
    SUBCASE("BN signum of the drive") {
        config.model.kind = NeuronKind::BN;
        const auto next = reservoir::step(state, 1.0, weights, config, noise);
        CHECK(next.x[0] == 1.0);
    }
}

TEST_CASE("ASN(b=0) is bitwise identical to AN; BSN(b=0) to BN") {
    const auto inputs = clean_series(300);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        for (auto [det, sto] : {std::pair{NeuronKind::AN, NeuronKind::ASN},
                                std::pair{NeuronKind::BN, NeuronKind::BSN}}) {
            const auto config_d = make_config(det, 0.0, seed);
            const auto config_s = make_config(sto, 0.0, seed);
            const auto weights = reservoir::build_topology(config_d);
            rng::Stream n1(seed, 9), n2(seed, 9);
            const auto t1 = reservoir::run_sequence(reservoir::zero_state(20), inputs,
                                                    weights, config_d, n1);
            const auto t2 = reservoir::run_sequence(reservoir::zero_state(20), inputs,
                                                    weights, config_s, n2);
            for (std::size_t t = 0; t < t1.size(); ++t)
                for (std::size_t i = 0; i < 20; ++i)
                    REQUIRE(t1[t].x[i] == t2[t].x[i]);
        }
    }
}

TEST_CASE("AN states stay inside max(|x0|, 1)") {
    const auto config = make_config(NeuronKind::AN, 0.0, 3);
    const auto weights = reservoir::build_topology(config);
    rng::Stream noise(3, 1);
    auto state = reservoir::zero_state(20);
    const auto inputs = clean_series(2000);
    for (std::size_t t = 0; t < inputs.size(); ++t) {
        state = reservoir::step(state, inputs[t], weights, config, noise);
        for (double x : state.x) REQUIRE(std::abs(x) <= 1.0);
    }
}

TEST_CASE("ASN states stay inside 1 + b/a") {
    auto config = make_config(NeuronKind::ASN, 0.1, 4);
    const auto weights = reservoir::build_topology(config);
    rng::Stream noise(4, 1);
    auto state = reservoir::zero_state(20);
    const double bound = 1.0 + config.model.b / config.a;
    const auto inputs = clean_series(2000);
    for (std::size_t t = 0; t < inputs.size(); ++t) {
        state = reservoir::step(state, inputs[t], weights, config, noise);
        for (double x : state.x) REQUIRE(std::abs(x) <= bound);
    }
}

TEST_CASE("binary increments are exactly -1, 0, or +1 on top of the decay") {
    for (auto kind : {NeuronKind::BN, NeuronKind::BSN}) {
        auto config = make_config(kind, kind == NeuronKind::BSN ? 0.05 : 0.0, 5);
        const auto weights = reservoir::build_topology(config);
        rng::Stream noise(5, 2);
        auto state = reservoir::zero_state(20);
        const auto inputs = clean_series(500);
        const double decay = 1.0 - config.a;
        for (std::size_t t = 0; t < inputs.size(); ++t) {
            const auto next = reservoir::step(state, inputs[t], weights, config, noise);
            for (std::size_t i = 0; i < 20; ++i) {
                const double base = decay * state.x[i];
                const bool member = next.x[i] == base - 1.0 || next.x[i] == base ||
                                    next.x[i] == base + 1.0;
                REQUIRE(member);
            }
            state = next;
        }
    }
}

TEST_CASE("echo-state forgetting: different initial states converge") {
    const auto inputs = clean_series(500);
    int shrunk = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto config = make_config(NeuronKind::AN, 0.0, seed);
        const auto weights = reservoir::build_topology(config);
        rng::Stream n1(seed, 0), n2(seed, 0);
        auto a = reservoir::zero_state(20);
        auto b = reservoir::zero_state(20);
        for (auto& x : b.x) x = 0.5;
        double initial = 0.0, final_dist = 0.0;
        for (std::size_t i = 0; i < 20; ++i) initial += (a.x[i] - b.x[i]) * (a.x[i] - b.x[i]);
        for (std::size_t t = 0; t < inputs.size(); ++t) {
            a = reservoir::step(a, inputs[t], weights, config, n1);
            b = reservoir::step(b, inputs[t], weights, config, n2);
        }
        for (std::size_t i = 0; i < 20; ++i)
            final_dist += (a.x[i] - b.x[i]) * (a.x[i] - b.x[i]);
        if (final_dist < initial) ++shrunk;
    }
    CHECK(shrunk > 10);  // median over seeds decreases
}

TEST_CASE("run_sequence equals repeated step application") {
    const auto config = make_config(NeuronKind::ASN, 0.05, 6);
    const auto weights = reservoir::build_topology(config);
    const auto inputs = clean_series(50);
    rng::Stream n1(6, 3), n2(6, 3);
    const auto traj = reservoir::run_sequence(reservoir::zero_state(20), inputs,
                                              weights, config, n1);
    auto state = reservoir::zero_state(20);
    for (std::size_t t = 0; t < inputs.size(); ++t) {
        state = reservoir::step(state, inputs[t], weights, config, n2);
        for (std::size_t i = 0; i < 20; ++i) REQUIRE(traj[t].x[i] == state.x[i]);
    }
}

TEST_CASE("constant input drives AN to a fixed point below radius 1") {
    auto config = make_config(NeuronKind::AN, 0.0, 7);
    config.rho_target = 0.8;
    const auto weights = reservoir::build_topology(config);
    rng::Stream noise(7, 0);
    signals::TimeSeries constant;
    constant.values.assign(3000, 0.7);
    const auto traj = reservoir::run_sequence(reservoir::zero_state(20), constant,
                                              weights, config, noise);
    double diff = 0.0;
    const auto& last = traj[traj.size() - 1].x;
    const auto& prev = traj[traj.size() - 2].x;
    for (std::size_t i = 0; i < 20; ++i) diff += std::abs(last[i] - prev[i]);
    CHECK(diff < 1e-10);
}

TEST_CASE("weights csv round-trips bit-exactly") {
    auto config = make_config(NeuronKind::AN, 0.0, 8);
    auto weights = reservoir::build_topology(config);
    weights.w_out = linalg::Matrix(1, 20);
    for (std::size_t j = 0; j < 20; ++j) (*weights.w_out)(0, j) = 0.1 * double(j) - 1.0;

    const auto path = (std::filesystem::temp_directory_path() / "resbench_w.csv").string();
    reservoir::save_weights_csv(weights, path);
    const auto loaded = reservoir::load_weights_csv(path);
    std::remove(path.c_str());

    REQUIRE(loaded.w_out.has_value());
    CHECK(linalg::frobenius_distance(weights.w_in, loaded.w_in) == 0.0);
    CHECK(linalg::frobenius_distance(weights.w_s, loaded.w_s) == 0.0);
    CHECK(linalg::frobenius_distance(*weights.w_out, *loaded.w_out) == 0.0);
}
