#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fbms/quadrature.hpp"
#include "fbms/warp.hpp"

using namespace fbms;

namespace {
std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}
}  // namespace

TEST_CASE("preset warp values") {
  WarpProfile sph = make_preset(Preset::Sphere);
  CHECK(sph.h(M_PI / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sph.r_max == doctest::Approx(M_PI));

  WarpProfile euc = make_preset(Preset::Euclidean);
  CHECK(euc.h(3.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::isinf(euc.r_max));

  // Hand chain rule through h = s rho(s): h' = 1 + s rho'/rho = 1 - s^2/4.
  WarpProfile gau = make_preset(Preset::GaussianShrinker);
  double r2 = gau.chart->r_of_s(2.0);
  CHECK(gau.dh(r2) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(std::abs(gau.dh(r2)) < 1e-10);
  CHECK(gau.r_max == doctest::Approx(std::sqrt(2.0 * M_PI)));
}

TEST_CASE("from_conformal_factor: identity chart") {
  WarpProfile p = from_conformal_factor([](double) { return 1.0; }, [](double) { return 0.0; },
                                        64.0, [](double) { return 0.0; });
  for (double r : {0.1, 0.5, 3.0, 10.0}) {
    CHECK(p.h(r) == doctest::Approx(r).epsilon(1e-12));
    CHECK(p.dh(r) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("from_conformal_factor: rho = 1/(1+s^2/4) recovers sin r") {
  // Oracle: separation of variables gives s(r) = 2 tan(r/2), h = sin r.
  auto rho = [](double s) { return 1.0 / (1.0 + 0.25 * s * s); };
  auto rho_p = [](double s) {
    double u = 1.0 + 0.25 * s * s;
    return -0.5 * s / (u * u);
  };
  WarpProfile p = from_conformal_factor(rho, rho_p, 256.0, nullptr, 4096);
  for (double r : {0.2, 0.7, 1.2, 2.0, 2.8}) {
    CHECK(p.h(r) == doctest::Approx(std::sin(r)).epsilon(1e-9));
    CHECK(p.dh(r) == doctest::Approx(std::cos(r)).epsilon(1e-8));
  }
}

TEST_CASE("from_conformal_factor: gaussian r(1)") {
  // Oracle: independent high-order quadrature of int_0^1 e^{-t^2/8} dt.
  auto rho = [](double s) { return std::exp(-s * s / 8.0); };
  auto rho_p = [rho](double s) { return -0.25 * s * rho(s); };
  WarpProfile p = from_conformal_factor(rho, rho_p, 64.0, nullptr, 4096);
  double oracle = integrate_gl(rho, 0.0, 1.0, 40);
  CHECK(oracle == doctest::Approx(0.9599).epsilon(2e-4));
  CHECK(p.chart->r_of_s(1.0) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("from_conformal_factor rejects bad factors") {
  CHECK_THROWS_AS(from_conformal_factor([](double) { return 2.0; }, [](double) { return 0.0; }, 8.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_conformal_factor([](double s) { return 1.0 - s; },
                                        [](double) { return -1.0; }, 8.0),
                  std::domain_error);
}

TEST_CASE("admissibility reports") {
  auto grid = linspace(0.05, 3.0, 200);
  AdmissibilityReport sph = check_admissibility(make_preset(Preset::Sphere), grid);
  CHECK(sph.pass());
  CHECK(sph.min_K == doctest::Approx(1.0).epsilon(1e-12));

  AdmissibilityReport euc = check_admissibility(make_preset(Preset::Euclidean), grid);
  CHECK(euc.c1_pass());
  CHECK_FALSE(euc.curvature_positive);
  CHECK(euc.degenerate_c2);

  WarpProfile gau = make_preset(Preset::GaussianShrinker);
  std::vector<double> cgrid;
  for (double s : linspace(0.05, 2.0, 100)) cgrid.push_back(gau.chart->r_of_s(s));
  AdmissibilityReport g = check_admissibility(gau, cgrid);
  CHECK(g.pass());
  CHECK(g.min_K > 0.0);
}

TEST_CASE("curvature_K") {
  WarpProfile sph = make_preset(Preset::Sphere);
  CHECK(curvature_K(sph, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(curvature_K(make_preset(Preset::Euclidean), 1.0) == doctest::Approx(0.0));
  // r -> 0 limit matches the cubic coefficient of h = sin r.
  CHECK(curvature_K(sph, 0.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(curvature_K(sph, 1e-5) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(curvature_K(sph, 4.0), std::domain_error);

  // Gaussian: K = -h''/h with h'' = (-s/2)/rho < 0, so K > 0.
  WarpProfile gau = make_preset(Preset::GaussianShrinker);
  double r = gau.chart->r_of_s(1.5);
  double s = 1.5, rho = std::exp(-s * s / 8.0);
  double K_hand = (s / 2.0) / rho / (s * rho);
  CHECK(curvature_K(gau, r) == doctest::Approx(K_hand).epsilon(1e-9));
  CHECK(curvature_K(gau, 0.0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("C1 structure at the center") {
  for (Preset ps : {Preset::Sphere, Preset::GaussianShrinker}) {
    WarpProfile p = make_preset(ps);
    CHECK(std::abs(p.h(0.0)) < 1e-12);
    CHECK(p.dh(0.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(p.d2h(0.0)) < 1e-9);
  }
}

TEST_CASE("derivative evaluators agree with finite differences") {
  for (Preset ps : {Preset::Sphere, Preset::GaussianShrinker}) {
    WarpProfile p = make_preset(ps);
    for (double r : {0.3, 0.8, 1.4}) {
      double step = 1e-5 * (1.0 + r);
      double fd1 = (p.h(r + step) - p.h(r - step)) / (2.0 * step);
      double fd2 = (p.dh(r + step) - p.dh(r - step)) / (2.0 * step);
      CHECK(p.dh(r) == doctest::Approx(fd1).epsilon(1e-6));
      CHECK(p.d2h(r) == doctest::Approx(fd2).epsilon(1e-6));
    }
  }
}

TEST_CASE("warp/chart consistency h = s rho(s)") {
  for (Preset ps : {Preset::Euclidean, Preset::Sphere, Preset::GaussianShrinker}) {
    WarpProfile p = make_preset(ps);
    double hi = std::isfinite(p.r_max) ? 0.9 * p.r_max : 3.0;
    for (double r : linspace(1e-4, hi, 64)) {
      double s = p.chart->s_of_r(r);
      double h = p.h(r);
      CHECK(std::abs(h - s * p.chart->rho(s)) <= 1e-10 * (1.0 + h));
    }
  }
}

TEST_CASE("tabulated warp profile reproduces its generator") {
  auto rs = linspace(0.0, 3.0, 400);
  std::vector<double> hs(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) hs[i] = std::sin(rs[i]);
  WarpProfile p = from_warp_table(rs, hs);
  CHECK(p.source == ProfileSource::Tabulated);
  for (double r : {0.4, 1.1, 2.3}) {
    CHECK(p.h(r) == doctest::Approx(std::sin(r)).epsilon(1e-8));
    CHECK(p.dh(r) == doctest::Approx(std::cos(r)).epsilon(1e-6));
    CHECK(p.d2h(r) == doctest::Approx(-std::sin(r)).epsilon(1e-3));
  }
  auto grid = linspace(0.1, 2.9, 64);
  CHECK(check_admissibility(p, grid, 1e-5).pass());
}
