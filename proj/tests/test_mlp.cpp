// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <doctest.h>

#include "beamsynth/dataset.hpp"
#include "beamsynth/error.hpp"
#include "beamsynth/mlp.hpp"
#include "beamsynth/rng.hpp"
#include "beamsynth/synthesis.hpp"

using namespace beamsynth;

namespace {

TrainingSet random_batch(const Mlp& m, std::uint64_t seed, int count) {
  SeededRng rng(seed);
  TrainingSet set;
  for (int p = 0; p < count; ++p) {
    TrainingPattern pat;
    for (int j = 0; j < m.n_in; ++j) pat.input.push_back(rng.uniform(-1.0, 1.0));
    for (int k = 0; k < m.n_out; ++k) pat.target.push_back(rng.uniform(-0.9, 0.9));
    set.push_back(std::move(pat));
  }
  return set;
}

// Gradient of mse() by central finite differences, one parameter at a time.
double fd_gradient(Mlp m, std::vector<double> Mlp::* field, std::size_t idx,
                   const TrainingSet& batch, double h) {
  (m.*field)[idx] += h;
  const double up = mse(m, batch);
  (m.*field)[idx] -= 2.0 * h;
  const double dn = mse(m, batch);
  return (up - dn) / (2.0 * h);
}

double max_gradient_error(const Mlp& m, const TrainingSet& batch) {
  // backprop_step with eta = 1 exposes the analytic gradient as (old - new).
  const Mlp next = backprop_step(m, batch, 1.0);
  const double h = 1e-6;
  double worst = 0.0;
  auto check_block = [&](std::vector<double> Mlp::* field) {
    const auto& old_v = m.*field;
    const auto& new_v = next.*field;
    for (std::size_t i = 0; i < old_v.size(); ++i) {
      const double analytic = old_v[i] - new_v[i];
      const double numeric = fd_gradient(m, field, i, batch, h);
      const double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
      worst = std::max(worst, std::abs(analytic - numeric) / denom);
    }
  };
  check_block(&Mlp::hidden_w);
  check_block(&Mlp::hidden_b);
  check_block(&Mlp::output_w);
  check_block(&Mlp::output_b);
  return worst;
}

}  // namespace

TEST_CASE("forward: zero network maps everything to zero") {
  const Mlp m(18, 30, 16);
  const auto y = m.forward(std::vector<double>(18, 0.7));
  for (double v : y) CHECK(v == 0.0);
}

TEST_CASE("forward: small single-path weights behave linearly") {
  Mlp m(1, 1, 1);
  const double eps = 1e-3;
  m.hidden_w[0] = eps;
  m.output_w[0] = 1.0;
  const double x = 0.5;
  const double y = m.forward({x})[0];
  CHECK(std::abs(y - eps * x) < 1e-9);  // tanh deviates at third order
}

TEST_CASE("forward: deterministic for a fixed seed") {
  const Mlp a = Mlp::seeded(18, 30, 16, 123);
  const Mlp b = Mlp::seeded(18, 30, 16, 123);
  const std::vector<double> x(18, 0.25);
  const auto ya = a.forward(x);
  const auto yb = b.forward(x);
  for (std::size_t i = 0; i < ya.size(); ++i) CHECK(ya[i] == yb[i]);
}

TEST_CASE("forward: outputs stay strictly inside (-1, 1)") {
  const Mlp m = Mlp::seeded(18, 30, 16, 5);
  SeededRng rng(6);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(18);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    for (double v : m.forward(x)) CHECK(std::abs(v) < 1.0);
  }
}

TEST_CASE("forward: dimension mismatch") {
  const Mlp m(4, 3, 2);
  CHECK_THROWS_AS(m.forward(std::vector<double>(5, 0.0)), DimensionError);
}

TEST_CASE("mse: canonical values") {
  SUBCASE("targets equal outputs") {
    const Mlp m = Mlp::seeded(4, 3, 2, 99);
    TrainingSet set = random_batch(m, 1, 3);
    for (auto& p : set) p.target = m.forward(p.input);
    CHECK(mse(m, set) == 0.0);
  }
  SUBCASE("single unit residual gives one half") {
    const Mlp m(4, 3, 2);  // zero network, outputs are zero
    TrainingPattern p;
    p.input = {0.1, 0.2, 0.3, 0.4};
    p.target = {-1.0, 0.0};  // y - d = (1, 0)
    CHECK(mse(m, {p}) == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("random case matches direct recomputation") {
    const Mlp m = Mlp::seeded(4, 3, 2, 17);
    const TrainingSet set = random_batch(m, 18, 5);
    // Independent recomputation with explicit loops.
    double acc = 0.0;
    for (const auto& p : set) {
      std::vector<double> h(3), y(2);
      for (int i = 0; i < 3; ++i) {
        double z = m.hidden_b[static_cast<std::size_t>(i)];
        for (int j = 0; j < 4; ++j) {
          z += m.hidden_w[static_cast<std::size_t>(i * 4 + j)] * p.input[static_cast<std::size_t>(j)];
        }
        h[static_cast<std::size_t>(i)] = std::tanh(z);
      }
      for (int k = 0; k < 2; ++k) {
        double z = m.output_b[static_cast<std::size_t>(k)];
        for (int i = 0; i < 3; ++i) {
          z += m.output_w[static_cast<std::size_t>(k * 3 + i)] * h[static_cast<std::size_t>(i)];
        }
        y[static_cast<std::size_t>(k)] = std::tanh(z);
        const double e = y[static_cast<std::size_t>(k)] - p.target[static_cast<std::size_t>(k)];
        acc += e * e;
      }
    }
    CHECK(mse(m, set) == doctest::Approx(0.5 * acc / 5.0).epsilon(1e-14));
  }
  SUBCASE("empty set") {
    const Mlp m(4, 3, 2);
    CHECK_THROWS_AS(mse(m, {}), ArgumentError);
  }
}

TEST_CASE("backprop_step: zero learning rate leaves the network untouched") {
  const Mlp m = Mlp::seeded(4, 3, 2, 31);
  const TrainingSet set = random_batch(m, 32, 4);
  const Mlp next = backprop_step(m, set, 0.0);
  CHECK(next.hidden_w == m.hidden_w);
  CHECK(next.output_w == m.output_w);
  CHECK(next.hidden_b == m.hidden_b);
  CHECK(next.output_b == m.output_b);
}

TEST_CASE("backprop_step: analytic gradient matches central differences (4-3-2)") {
  const Mlp m = Mlp::seeded(4, 3, 2, 2718);
  const TrainingSet set = random_batch(m, 2719, 6);
  CHECK(max_gradient_error(m, set) < 1e-5);
}

TEST_CASE("backprop_step: one small step descends on a single pattern") {
  const Mlp m = Mlp::seeded(6, 4, 3, 55);
  const TrainingSet set = random_batch(m, 56, 1);
  const double before = mse(m, set);
  const double after = mse(backprop_step(m, set, 1e-4), set);
  CHECK(after < before);
}

TEST_CASE("train: infinite target returns immediately with the initial weights") {
  TrainingConfig cfg;
  cfg.target_mse = 1e300;
  const ArrayGeometry geom(16, 0.5);
  const auto ds = generate(geom, default_directions(), cfg);
  const Mlp init = Mlp::seeded(kInputDim, 30, kOutputDim, cfg.seed);
  const auto [model, trace] = train(init, ds, cfg);
  CHECK(trace.rows.empty());
  CHECK(model.hidden_w == init.hidden_w);
  CHECK(model.output_w == init.output_w);
}

TEST_CASE("train: trace is bitwise-reproducible for a fixed seed") {
  TrainingConfig cfg;
  cfg.max_epochs = 40;
  cfg.target_mse = 0.0;
  const ArrayGeometry geom(16, 0.5);
  const auto ds = generate(geom, default_directions(), cfg);
  const Mlp init = Mlp::seeded(kInputDim, 30, kOutputDim, cfg.seed);
  const auto [ma, ta] = train(init, ds, cfg);
  const auto [mb, tb] = train(init, ds, cfg);
  REQUIRE(ta.rows.size() == tb.rows.size());
  bool identical = true;
  for (std::size_t i = 0; i < ta.rows.size(); ++i) {
    identical = identical && ta.rows[i].train_mse == tb.rows[i].train_mse &&
                ta.rows[i].val_mse == tb.rows[i].val_mse;
  }
  CHECK(identical);
  CHECK(ma.hidden_w == mb.hidden_w);
}

TEST_CASE("train: loss does not increase over a short run") {
  TrainingConfig cfg;
  cfg.max_epochs = 500;
  cfg.target_mse = 0.0;
  const ArrayGeometry geom(16, 0.5);
  const auto ds = generate(geom, default_directions(), cfg);
  const Mlp init = Mlp::seeded(kInputDim, 30, kOutputDim, cfg.seed);
  const auto [model, trace] = train(init, ds, cfg);
  REQUIRE(!trace.rows.empty());
  CHECK(trace.rows.back().train_mse <= trace.rows.front().train_mse);
}

TEST_CASE("train: empty partition is a configuration error") {
  TrainingConfig cfg;
  const ArrayGeometry geom(16, 0.5);
  auto ds = generate(geom, default_directions(), cfg);
  for (auto& p : ds.pairs) {
    if (p.split == Split::kValidation) p.split = Split::kTrain;
  }
  const Mlp init = Mlp::seeded(kInputDim, 30, kOutputDim, cfg.seed);
  CHECK_THROWS_AS(train(init, ds, cfg), ArgumentError);
}

TEST_CASE("predict_phases: domain limits and amplitude pairing") {
  const Mlp m = Mlp::seeded(kInputDim, 30, kOutputDim, 1);
  CHECK_THROWS_AS(predict_phases(m, 30.0), DomainError);
  CHECK_THROWS_AS(predict_phases(m, 150.0), DomainError);

  // Whatever the (untrained) phases are, the amplitude profile comes from
  // the default Fourier synthesis.
  const Excitation exc = predict_phases(m, 90.0);
  const ArrayGeometry geom(16, 0.5);
  const auto expected = fourier_weights(geom, DesiredPattern(90.0)).amplitudes();
  const auto amps = exc.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    CHECK(amps[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }

  const Mlp wrong(kInputDim, 30, 8);
  CHECK_THROWS_AS(predict_phases(wrong, 90.0), DimensionError);
}
