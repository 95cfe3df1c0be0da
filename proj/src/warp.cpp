#include "fbms/warp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fbms/interp.hpp"
#include "fbms/quadrature.hpp"

namespace fbms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSeriesSwitch = 1e-3;

// Safeguarded Newton for strictly increasing f on [lo, hi].
double invert_monotone(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double target, double lo,
                       double hi) {
  double flo = f(lo) - target, fhi = f(hi) - target;
  if (flo > 0 || fhi < 0) throw std::domain_error("invert_monotone: target outside bracket");
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double fx = f(x) - target;
    if (fx > 0)
      hi = x;
    else
      lo = x;
    double d = df(x);
    double step = d > 0 ? fx / d : 0.0;
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= 1e-16 * (1.0 + std::abs(x))) return xn;
    x = xn;
  }
  return x;
}

double fd_third_at_zero(const std::function<double(double)>& d2h, double scale) {
  // h'' is odd under (C1); the symmetric difference about 0 collapses to
  // h''(delta)/delta.
  double delta = 1e-4 * scale;
  return d2h(delta) / delta;
}

std::shared_ptr<const ChartData> euclid_chart() {
  auto cd = std::make_shared<ChartData>();
  cd->s_of_r = [](double r) { return r; };
  cd->r_of_s = [](double s) { return s; };
  cd->rho = [](double) { return 1.0; };
  cd->rho_prime = [](double) { return 0.0; };
  cd->rho_prime_over_s = [](double) { return 0.0; };
  cd->rho_second = [](double) { return 0.0; };
  cd->s_max = kInf;
  return cd;
}

std::shared_ptr<const ChartData> sphere_chart() {
  auto cd = std::make_shared<ChartData>();
  cd->s_of_r = [](double r) { return 2.0 * std::tan(0.5 * r); };
  cd->r_of_s = [](double s) { return 2.0 * std::atan(0.5 * s); };
  cd->rho = [](double s) { return 1.0 / (1.0 + 0.25 * s * s); };
  cd->rho_prime = [](double s) {
    double u = 1.0 + 0.25 * s * s;
    return -0.5 * s / (u * u);
  };
  cd->rho_prime_over_s = [](double s) {
    double u = 1.0 + 0.25 * s * s;
    return -0.5 / (u * u);
  };
  cd->rho_second = [](double s) {
    double u = 1.0 + 0.25 * s * s;
    return -0.5 / (u * u) + 0.5 * s * s / (u * u * u);
  };
  cd->s_max = kInf;
  return cd;
}

std::shared_ptr<const ChartData> gaussian_chart() {
  const double sqrt2pi = std::sqrt(2.0 * M_PI);
  const double inv2sqrt2 = 1.0 / (2.0 * std::sqrt(2.0));
  auto rho = [](double s) { return std::exp(-s * s / 8.0); };
  auto r_of_s = [=](double s) { return sqrt2pi * std::erf(s * inv2sqrt2); };
  auto cd = std::make_shared<ChartData>();
  cd->rho = rho;
  cd->rho_prime = [=](double s) { return -0.25 * s * rho(s); };
  cd->rho_prime_over_s = [=](double s) { return -0.25 * rho(s); };
  cd->rho_second = [=](double s) { return (s * s / 16.0 - 0.25) * rho(s); };
  cd->r_of_s = r_of_s;
  cd->s_of_r = [=](double r) {
    if (r < 0) throw std::domain_error("s_of_r: negative radius");
    if (r == 0) return 0.0;
    double hi = std::max(2.0 * r, 1.0);
    while (r_of_s(hi) <= r) {
      hi *= 2.0;
      if (hi > 64.0) throw std::domain_error("s_of_r: radius too close to the domain bound");
    }
    return invert_monotone(r_of_s, rho, r, 0.0, hi);
  };
  cd->s_max = kInf;
  return cd;
}

// Shared assembly for conformal descriptions: h and derivatives through
// the chart relations h = s*rho(s), dr/ds = rho.
WarpProfile profile_from_chart(std::shared_ptr<const ChartData> cd, double r_max,
                               ProfileSource source) {
  WarpProfile p;
  p.source = source;
  p.r_max = r_max;
  p.chart = cd;
  p.h = [cd](double r) {
    double s = cd->s_of_r(r);
    return s * cd->rho(s);
  };
  p.dh = [cd](double r) {
    double s = cd->s_of_r(r);
    return 1.0 + s * s * cd->rho_prime_over_s(s) / cd->rho(s);
  };
  auto rho2 = cd->rho_second;
  auto rho2_eval = [cd, rho2](double s) {
    if (rho2) return rho2(s);
    double delta = 1e-5;
    if (s >= delta) return (cd->rho_prime(s + delta) - cd->rho_prime(s - delta)) / (2.0 * delta);
    return (-3.0 * cd->rho_prime(s) + 4.0 * cd->rho_prime(s + delta) -
            cd->rho_prime(s + 2.0 * delta)) /
           (2.0 * delta);
  };
  p.d2h = [cd, rho2_eval](double r) {
    double s = cd->s_of_r(r);
    double rho = cd->rho(s);
    double lr = cd->rho_prime_over_s(s) * s / rho;  // rho'/rho
    // h'' = g'(s)/rho with g = 1 + s rho'/rho, so
    // g' = rho'/rho + s (rho''/rho - (rho'/rho)^2).
    double gprime = (s == 0.0 ? cd->rho_prime(0.0) / rho
                              : lr + s * (rho2_eval(s) / rho - lr * lr));
    return gprime / rho;
  };
  p.K0 = -fd_third_at_zero(p.d2h, std::min(1.0, (std::isfinite(r_max) ? r_max : 4.0) / 4.0));
  return p;
}

}  // namespace

Preset preset_from_name(const std::string& name) {
  if (name == "euclidean") return Preset::Euclidean;
  if (name == "sphere") return Preset::Sphere;
  if (name == "gaussian-shrinker") return Preset::GaussianShrinker;
  throw std::invalid_argument("unknown metric preset: " + name);
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::Euclidean: return "euclidean";
    case Preset::Sphere: return "sphere";
    case Preset::GaussianShrinker: return "gaussian-shrinker";
  }
  throw std::logic_error("preset_name");
}

WarpProfile make_preset(Preset name) {
  WarpProfile p;
  p.source = ProfileSource::ClosedFormPreset;
  p.preset = name;
  switch (name) {
    case Preset::Euclidean:
      p.h = [](double r) { return r; };
      p.dh = [](double) { return 1.0; };
      p.d2h = [](double) { return 0.0; };
      p.r_max = kInf;
      p.chart = euclid_chart();
      p.K0 = 0.0;
      break;
    case Preset::Sphere:
      p.h = [](double r) { return std::sin(r); };
      p.dh = [](double r) { return std::cos(r); };
      p.d2h = [](double r) { return -std::sin(r); };
      p.r_max = M_PI;
      p.chart = sphere_chart();
      p.K0 = 1.0;
      break;
    case Preset::GaussianShrinker: {
      auto cd = gaussian_chart();
      p = profile_from_chart(cd, std::sqrt(2.0 * M_PI), ProfileSource::ConformalDerived);
      p.preset = name;
      p.K0 = 0.5;
      break;
    }
  }
  return p;
}

WarpProfile from_conformal_factor(std::function<double(double)> rho,
                                  std::function<double(double)> rho_prime, double s_max,
                                  std::function<double(double)> rho_second, int resolution) {
  if (!(s_max > 0)) throw std::invalid_argument("from_conformal_factor: s_max must be positive");
  if (std::abs(rho(0.0) - 1.0) > 1e-8)
    throw std::invalid_argument("from_conformal_factor: rho(0) must equal 1");
  int n = std::max(resolution, 256);
  double s_hi = std::min(std::isfinite(s_max) ? s_max * (1.0 - 1e-9) : 32.0, 32.0);

  std::vector<double> s_nodes{0.0}, r_nodes{0.0};
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    double a = s_hi * (i - 1) / n, b = s_hi * i / n;
    double inc = integrate_gl(rho, a, b, 12);
    if (!(rho(b) > 0.0))
      throw std::domain_error("from_conformal_factor: rho must stay positive on its domain");
    // Stop where r(s) saturates (decaying factors): the inverse table
    // would otherwise collapse.
    if (i > 4 && inc < 1e-14 * (1.0 + acc)) break;
    acc += inc;
    s_nodes.push_back(b);
    r_nodes.push_back(acc);
  }
  s_hi = s_nodes.back();
  auto r_spline = std::make_shared<CubicSpline>(s_nodes, r_nodes);
  auto s_init = std::make_shared<MonotoneCubic>(r_nodes, s_nodes);
  double r_hi = r_nodes.back();

  auto cd = std::make_shared<ChartData>();
  cd->s_max = s_max;
  cd->rho = rho;
  cd->rho_prime = rho_prime;
  cd->rho_second = rho_second;
  cd->rho_prime_over_s = [rho_prime, rho_second](double s) {
    if (s > 1e-9) return rho_prime(s) / s;
    if (rho_second) return rho_second(0.0);
    double delta = 1e-6;
    return rho_prime(delta) / delta;
  };
  cd->r_of_s = [r_spline, s_hi](double s) {
    if (s < 0 || s > s_hi) throw std::domain_error("r_of_s: chart radius outside working domain");
    return (*r_spline)(s);
  };
  cd->s_of_r = [r_spline, s_init, rho, r_hi, s_hi](double r) {
    if (r < 0 || r >= r_hi) throw std::domain_error("s_of_r: radius outside working domain");
    if (r == 0) return 0.0;
    double s = std::clamp((*s_init)(r), 0.0, s_hi);
    for (int it = 0; it < 4; ++it) s = std::clamp(s - ((*r_spline)(s)-r) / rho(s), 0.0, s_hi);
    return s;
  };

  return profile_from_chart(cd, r_hi, ProfileSource::ConformalDerived);
}

WarpProfile from_warp_table(std::vector<double> r, std::vector<double> h) {
  auto spline = std::make_shared<CubicSpline>(std::move(r), std::move(h));
  WarpProfile p;
  p.source = ProfileSource::Tabulated;
  p.r_max = spline->x_back();
  p.h = [spline](double t) { return (*spline)(t); };
  p.dh = [spline](double t) { return spline->deriv(t); };
  p.d2h = [spline](double t) { return spline->deriv2(t); };
  p.K0 = -fd_third_at_zero(p.d2h, std::min(1.0, p.r_max / 4.0));
  return p;
}

WarpProfile from_conformal_table(std::vector<double> s, std::vector<double> rho, int resolution) {
  auto spline = std::make_shared<CubicSpline>(std::move(s), std::move(rho));
  double s_max = spline->x_back();
  return from_conformal_factor([spline](double t) { return (*spline)(t); },
                               [spline](double t) { return spline->deriv(t); }, s_max,
                               [spline](double t) { return spline->deriv2(t); }, resolution);
}

AdmissibilityReport check_admissibility(const WarpProfile& profile, std::span<const double> grid,
                                        double tol) {
  AdmissibilityReport rep;
  rep.h0_ok = std::abs(profile.h(0.0)) <= tol;
  rep.dh0_ok = std::abs(profile.dh(0.0) - 1.0) <= tol;
  rep.d2h0_ok = std::abs(profile.d2h(0.0)) <= tol;
  rep.min_K = kInf;
  rep.curvature_positive = true;
  double max_absK = 0.0;
  for (double r : grid) {
    if (!(r >= 0.0) || r >= profile.r_max)
      throw std::domain_error("check_admissibility: grid point outside [0, r_max)");
    double K = curvature_K(profile, r);
    rep.min_K = std::min(rep.min_K, K);
    max_absK = std::max(max_absK, std::abs(K));
    if (!(K > 0.0)) rep.curvature_positive = false;
  }
  rep.degenerate_c2 = !rep.curvature_positive && max_absK <= tol;
  return rep;
}

double curvature_K(const WarpProfile& profile, double r) {
  if (r < 0.0 || r >= profile.r_max) throw std::domain_error("curvature_K: radius out of domain");
  if (r < kSeriesSwitch * 1e-3) return profile.K0;
  return -profile.d2h(r) / profile.h(r);
}

}  // namespace fbms
