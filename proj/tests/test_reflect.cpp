// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "irsmimo/reflect.hpp"
#include "irsmimo/rng.hpp"

using namespace irsmimo;

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> tdot(const Eigen::VectorXcd& a,
                          const Eigen::VectorXcd& b) {
  return (a.transpose() * b).value();
}

Eigen::VectorXcd random_cvec(Rng& rng, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = rng.complex_gaussian(1.0);
  }
  return v;
}

Eigen::MatrixXcd random_cmat(Rng& rng, int r, int c) {
  Eigen::MatrixXcd m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      m(i, j) = rng.complex_gaussian(1.0);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("wrap_phase canonical range") {
  CHECK(wrap_phase(0.0) == 0.0);
  CHECK(wrap_phase(-kPi / 3.0) == doctest::Approx(5.0 * kPi / 3.0));
  CHECK(wrap_phase(2.0 * kPi) == 0.0);
  CHECK(wrap_phase(7.0 * kPi) == doctest::Approx(kPi));
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double w = wrap_phase(rng.uniform(-50.0, 50.0));
    CHECK(w >= 0.0);
    CHECK(w < 2.0 * kPi);
  }
}

TEST_CASE("mrt_direct") {
  Eigen::VectorXcd f(2);
  f << std::complex<double>(1, 0), std::complex<double>(0, 0);
  const Beamformer w = mrt_direct(f);
  CHECK(std::abs(w.w[0] - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(w.w[1]) == 0.0);

  Eigen::VectorXcd fj(2);
  fj << std::complex<double>(0, 1), std::complex<double>(0, 0);
  const Beamformer wj = mrt_direct(fj);
  CHECK(std::abs(wj.w[0] - std::complex<double>(0, -1)) < 1e-15);
  CHECK(std::abs(tdot(fj, wj.w) - 1.0) < 1e-15);

  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXcd fr = random_cvec(rng, 8);
    const Beamformer wr = mrt_direct(fr);
    CHECK(std::abs(wr.w.norm() - 1.0) < 1e-12);
    CHECK(std::abs(std::imag(tdot(fr, wr.w))) < 1e-12);
    CHECK(std::real(tdot(fr, wr.w)) == doctest::Approx(fr.norm()));
  }

  CHECK_THROWS_AS(mrt_direct(Eigen::VectorXcd::Zero(3)),
                  DegenerateChannelError);
}

TEST_CASE("optimal_phases scalar example") {
  Eigen::VectorXcd g(1), f(1);
  g << std::polar(1.0, kPi / 3.0);
  f << std::complex<double>(1, 0);
  Eigen::MatrixXcd h(1, 1);
  h << std::complex<double>(1, 0);
  const Beamformer w{Eigen::VectorXcd::Ones(1)};
  const PhaseProfile theta = optimal_phases(g, h, w, f);
  CHECK(theta.phases[0] == doctest::Approx(5.0 * kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("optimal_phases aligned channels stay at zero") {
  Eigen::VectorXcd g(2), f(2);
  g << 2.0, 3.0;
  f << 1.0, 1.0;
  const Eigen::MatrixXcd h = Eigen::MatrixXcd::Ones(2, 2);
  const PhaseProfile theta = optimal_phases(g, h, mrt_direct(f), f);
  CHECK(theta.phases[0] == 0.0);
  CHECK(theta.phases[1] == 0.0);
}

TEST_CASE("optimal_phases zero cascade entries pinned to zero") {
  Eigen::VectorXcd g(2), f(2);
  g << std::complex<double>(0, 0), std::polar(1.0, 1.0);
  f << std::complex<double>(1, 1), std::complex<double>(0.5, 0);
  Rng rng(5);
  const Eigen::MatrixXcd h = random_cmat(rng, 2, 2);
  const PhaseProfile theta = optimal_phases(g, h, mrt_direct(f), f);
  CHECK(theta.phases[0] == 0.0);
}

TEST_CASE("triangle equality after every phase update") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform() * 8);
    const int nb = 1 + static_cast<int>(rng.uniform() * 4);
    const Eigen::VectorXcd g = random_cvec(rng, n);
    const Eigen::VectorXcd f = random_cvec(rng, nb);
    const Eigen::MatrixXcd h = random_cmat(rng, n, nb);
    Beamformer w = mrt_direct(f);
    for (int it = 0; it < 3; ++it) {
      const PhaseProfile theta = optimal_phases(g, h, w, f);
      const Eigen::VectorXcd cascade =
          h.transpose() * theta.coefficients().cwiseProduct(g);
      const double lhs =
          std::abs(tdot(cascade, w.w)) + std::abs(tdot(f, w.w));
      const double rhs = std::abs(tdot(cascade + f, w.w));
      CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
      w = mrt_combined(g, theta, h, f);
    }
  }
}

TEST_CASE("mrt_combined") {
  Rng rng(7);
  // no reflectors: reduces to direct MRT
  const Eigen::VectorXcd f = random_cvec(rng, 4);
  const Eigen::VectorXcd g0(0);
  const Eigen::MatrixXcd h0(0, 4);
  const PhaseProfile empty_theta{Eigen::VectorXd(0)};
  const Beamformer w0 = mrt_combined(g0, empty_theta, h0, f);
  CHECK((w0.w - mrt_direct(f).w).norm() == 0.0);

  for (int i = 0; i < 30; ++i) {
    const Eigen::VectorXcd g = random_cvec(rng, 6);
    const Eigen::VectorXcd fr = random_cvec(rng, 3);
    const Eigen::MatrixXcd h = random_cmat(rng, 6, 3);
    PhaseProfile theta;
    theta.phases = Eigen::VectorXd::Zero(6);
    for (int k = 0; k < 6; ++k) {
      theta.phases[k] = rng.uniform(0.0, 2.0 * kPi);
    }
    const Beamformer w = mrt_combined(g, theta, h, fr);
    CHECK(std::abs(w.w.norm() - 1.0) < 1e-12);
    const std::complex<double> rho = effective_gain(g, theta, h, fr, w);
    CHECK(std::abs(std::imag(rho)) < 1e-9 * std::abs(rho));
    CHECK(std::real(rho) == doctest::Approx(
              combined_channel(g, theta, h, fr).norm()).epsilon(1e-9));
  }

  // exact cancellation leaves nothing to match
  Eigen::VectorXcd g1(1), f1(1);
  g1 << 1.0;
  f1 << -1.0;
  Eigen::MatrixXcd h1(1, 1);
  h1 << 1.0;
  PhaseProfile zero{Eigen::VectorXd::Zero(1)};
  CHECK_THROWS_AS(mrt_combined(g1, zero, h1, f1), DegenerateChannelError);
}

TEST_CASE("alternating_optimize scalar system is exact") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXcd g(1), f(1);
    g << rng.complex_gaussian(1.0);
    f << rng.complex_gaussian(1.0);
    Eigen::MatrixXcd h(1, 1);
    h << rng.complex_gaussian(1.0);
    const JointSolution sol = alternating_optimize(g, h, f, 3);
    const double expected = std::abs(g[0]) * std::abs(h(0, 0)) + std::abs(f[0]);
    REQUIRE(sol.trace.objective.size() == 3);
    CHECK(sol.trace.objective.front() ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(sol.trace.objective.back() ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("alternating_optimize trace contract") {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const Eigen::VectorXcd g = random_cvec(rng, 8);
    const Eigen::VectorXcd f = random_cvec(rng, 4);
    const Eigen::MatrixXcd h = random_cmat(rng, 8, 4);
    const JointSolution sol = alternating_optimize(g, h, f, 3);
    REQUIRE(sol.trace.objective.size() == 3);
    CHECK(sol.trace.iterations_run == 3);
    for (std::size_t k = 1; k < sol.trace.objective.size(); ++k) {
      CHECK(sol.trace.objective[k] >=
            sol.trace.objective[k - 1] * (1.0 - 1e-12));
    }
    CHECK(sol.trace.objective.back() >= f.norm() * (1.0 - 1e-12));
    for (Eigen::Index n = 0; n < sol.theta.phases.size(); ++n) {
      CHECK(std::abs(std::abs(sol.theta.coefficients()[n]) - 1.0) < 1e-12);
    }
  }
  Eigen::VectorXcd g(1), f(1);
  g << 1.0;
  f << 1.0;
  Eigen::MatrixXcd h(1, 1);
  h << 1.0;
  CHECK_THROWS_AS(alternating_optimize(g, h, f, 0), std::invalid_argument);

  // early stop: the scalar system converges after the first pass
  const JointSolution sol = alternating_optimize(g, h, f, 10, 1e-6);
  CHECK(sol.trace.iterations_run == 2);
}

TEST_CASE("alternating_optimize dominates an exhaustive phase grid") {
  Rng rng(10);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXcd g = random_cvec(rng, 2);
    const Eigen::VectorXcd f = random_cvec(rng, 2);
    const Eigen::MatrixXcd h = random_cmat(rng, 2, 2);
    // brute force: 64 phase levels per reflector, matched beamformer per point
    double best = 0.0;
    for (int p1 = 0; p1 < 64; ++p1) {
      for (int p2 = 0; p2 < 64; ++p2) {
        const std::complex<double> q1 = std::polar(1.0, 2.0 * kPi * p1 / 64.0);
        const std::complex<double> q2 = std::polar(1.0, 2.0 * kPi * p2 / 64.0);
        const Eigen::VectorXcd c = g[0] * q1 * h.row(0).transpose() +
                                   g[1] * q2 * h.row(1).transpose() + f;
        best = std::max(best, c.norm());
      }
    }
    const JointSolution sol = alternating_optimize(g, h, f, 100, 1e-12);
    CHECK(sol.trace.objective.back() >= best * (1.0 - 1e-3));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("effective_gain") {
  Rng rng(11);
  const Eigen::VectorXcd f = random_cvec(rng, 3);
  const Eigen::VectorXcd g0(0);
  const Eigen::MatrixXcd h0(0, 3);
  const PhaseProfile empty_theta{Eigen::VectorXd(0)};
  const std::complex<double> rho0 =
      effective_gain(g0, empty_theta, h0, f, mrt_direct(f));
  CHECK(std::abs(rho0 - f.norm()) < 1e-12 * f.norm());

  // matches the elementwise expansion
  const Eigen::VectorXcd g = random_cvec(rng, 5);
  const Eigen::MatrixXcd h = random_cmat(rng, 5, 3);
  PhaseProfile theta;
  theta.phases = Eigen::VectorXd::Zero(5);
  for (int n = 0; n < 5; ++n) {
    theta.phases[n] = rng.uniform(0.0, 2.0 * kPi);
  }
  const Beamformer w = mrt_direct(f);
  std::complex<double> expansion = tdot(f, w.w);
  for (int n = 0; n < 5; ++n) {
    expansion += g[n] * std::polar(1.0, theta.phases[n]) *
                 tdot(h.row(n).transpose(), w.w);
  }
  const std::complex<double> rho = effective_gain(g, theta, h, f, w);
  CHECK(std::abs(rho - expansion) <= 1e-12 * std::abs(rho));
}

TEST_CASE("snr") {
  CHECK(snr({0.0, 0.0}, 5.0, 1.0) == 0.0);
  CHECK(snr({1.0, 0.0}, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  const double v = snr({1e-6, 0.0}, 20.0, 6.36e-13);
  CHECK(v == doctest::Approx(20.0 * 1e-12 / 6.36e-13).epsilon(1e-12));
  CHECK(std::abs(v - 31.45) < 0.01);
  CHECK_THROWS_AS(snr({1.0, 0.0}, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(snr({1.0, 0.0}, 1.0, -1.0), std::domain_error);
}
