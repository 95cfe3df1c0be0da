#include "fbms/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fbms/interp.hpp"
#include "fbms/quadrature.hpp"

namespace fbms {

namespace {
constexpr double kSeriesSwitch = 1e-3;

double require_radius(const WarpProfile& p, double r, double working_hi) {
  if (!(r >= 0.0)) throw std::domain_error("radius must be nonnegative");
  if (r >= p.r_max || (working_hi > 0 && r > working_hi))
    throw std::domain_error("radius outside profile domain");
  return r;
}
}  // namespace

struct RadialTables {
  bool in_s = false;  // abscissa is the chart radius (conformal source)
  CubicSpline I;
  CubicSpline J;
  double t_hi = 0.0;     // table abscissa bound
  double r_hi = 0.0;     // geodesic working bound
};

RadialGeometry make_radial_geometry(const WarpProfile& profile, int resolution) {
  RadialGeometry geom;
  geom.profile = profile;
  if (profile.preset) return geom;  // closed forms

  int n = std::max(resolution, 512);
  auto tab = std::make_shared<RadialTables>();

  if (profile.source == ProfileSource::ConformalDerived) {
    // Work in the chart variable: I(s) = int t rho^2, and the geodesic
    // measure cancels in J: J(s) = 2 int_0^s I(t) g'(t) dt with g = h'.
    const auto& cd = *profile.chart;
    double s_hi = std::isfinite(cd.s_max) ? cd.s_max * (1.0 - 1e-9) : 32.0;
    tab->in_s = true;
    tab->t_hi = s_hi;
    tab->r_hi = profile.r_max;

    std::vector<double> t(n + 1), Iv(n + 1);
    double acc = 0.0;
    t[0] = 0.0;
    Iv[0] = 0.0;
    auto irho2 = [&](double u) { return u * cd.rho(u) * cd.rho(u); };
    for (int i = 1; i <= n; ++i) {
      double a = s_hi * (i - 1) / n, b = s_hi * i / n;
      acc += integrate_gl(irho2, a, b, 12);
      t[i] = b;
      Iv[i] = acc;
    }
    tab->I = CubicSpline(t, Iv);

    auto rho2_eval = [&cd](double u) {
      if (cd.rho_second) return cd.rho_second(u);
      double delta = 1e-5;
      if (u >= delta) return (cd.rho_prime(u + delta) - cd.rho_prime(u - delta)) / (2.0 * delta);
      return (-3.0 * cd.rho_prime(u) + 4.0 * cd.rho_prime(u + delta) -
              cd.rho_prime(u + 2.0 * delta)) /
             (2.0 * delta);
    };
    auto integrand = [&](double u) {
      double rho = cd.rho(u);
      double lr = cd.rho_prime_over_s(u) * u / rho;
      double gprime = (u == 0.0 ? 2.0 * rho2_eval(0.0) / rho : lr + u * (rho2_eval(u) / rho - lr * lr));
      return tab->I(u) * gprime;
    };
    std::vector<double> Jv(n + 1);
    acc = 0.0;
    Jv[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
      acc += integrate_gl(integrand, t[i - 1], t[i], 12);
      Jv[i] = 2.0 * acc;
    }
    tab->J = CubicSpline(t, Jv);
  } else {
    double r_hi = std::isfinite(profile.r_max) ? profile.r_max : 16.0;
    tab->in_s = false;
    tab->t_hi = r_hi;
    tab->r_hi = r_hi;

    std::vector<double> t(n + 1), Iv(n + 1);
    double acc = 0.0;
    t[0] = 0.0;
    Iv[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
      double a = r_hi * (i - 1) / n, b = r_hi * i / n;
      acc += integrate_gl(profile.h, a, b, 12);
      t[i] = b;
      Iv[i] = acc;
    }
    tab->I = CubicSpline(t, Iv);

    auto integrand = [&](double u) { return tab->I(u) * profile.d2h(u); };
    std::vector<double> Jv(n + 1);
    acc = 0.0;
    Jv[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
      acc += integrate_gl(integrand, t[i - 1], t[i], 12);
      Jv[i] = 2.0 * acc;
    }
    tab->J = CubicSpline(t, Jv);
  }
  geom.tables = tab;
  return geom;
}

double integral_I(const RadialGeometry& geom, double r) {
  const WarpProfile& p = geom.profile;
  require_radius(p, r, geom.tables ? geom.tables->r_hi : 0.0);
  if (p.preset) {
    switch (*p.preset) {
      case Preset::Euclidean: return 0.5 * r * r;
      case Preset::Sphere: {
        double sn = std::sin(0.5 * r);
        return 2.0 * sn * sn;  // 1 - cos r
      }
      case Preset::GaussianShrinker: {
        double s = p.chart->s_of_r(r);
        return -2.0 * std::expm1(-0.25 * s * s);
      }
    }
  }
  const auto& tab = *geom.tables;
  return tab.in_s ? tab.I(p.chart->s_of_r(r)) : tab.I(r);
}

double phi(const RadialGeometry& geom, double r) {
  const WarpProfile& p = geom.profile;
  require_radius(p, r, geom.tables ? geom.tables->r_hi : 0.0);
  if (r == 0.0) return 0.0;
  if (p.preset) {
    switch (*p.preset) {
      case Preset::Euclidean: return 0.5 * r;
      case Preset::Sphere: return std::tan(0.5 * r);
      case Preset::GaussianShrinker: {
        double s = p.chart->s_of_r(r);
        if (s == 0.0) return 0.0;
        return -2.0 * std::expm1(-0.25 * s * s) / (s * p.chart->rho(s));
      }
    }
  }
  if (r < kSeriesSwitch) return 0.5 * r + p.K0 * r * r * r / 24.0;
  return integral_I(geom, r) / p.h(r);
}

double disk_area(const RadialGeometry& geom, double R) {
  if (!(R > 0.0)) throw std::domain_error("disk_area: radius must be positive");
  return 2.0 * M_PI * integral_I(geom, R);
}

double J_integral(const RadialGeometry& geom, double r) {
  const WarpProfile& p = geom.profile;
  require_radius(p, r, geom.tables ? geom.tables->r_hi : 0.0);
  if (p.preset) {
    switch (*p.preset) {
      case Preset::Euclidean: return 0.0;
      case Preset::Sphere: {
        double sn = std::sin(0.5 * r);
        double q = sn * sn;
        return -4.0 * q * q;  // -(1 - cos r)^2
      }
      case Preset::GaussianShrinker: {
        double s = p.chart->s_of_r(r);
        double u = 0.25 * s * s;
        return -4.0 * (std::expm1(-u) + u);  // 4 - s^2 - 4 e^{-s^2/4}
      }
    }
  }
  const auto& tab = *geom.tables;
  return tab.in_s ? tab.J(p.chart->s_of_r(r)) : tab.J(r);
}

ConformalChart build_chart(const WarpProfile& profile, int s_grid_resolution) {
  if (profile.chart) {
    const ChartData& cd = *profile.chart;
    ConformalChart chart;
    chart.s_of_r = cd.s_of_r;
    chart.r_of_s = cd.r_of_s;
    chart.rho = cd.rho;
    chart.rho_prime = cd.rho_prime;
    chart.rho_prime_over_s = cd.rho_prime_over_s;
    chart.s_max = cd.s_max;
    chart.r_max = profile.r_max;
    chart.preset = profile.preset;
    chart.K0 = profile.K0;
    return chart;
  }
  return build_chart_generic(profile, s_grid_resolution);
}

ConformalChart build_chart_generic(const WarpProfile& profile, int s_grid_resolution) {
  if (std::abs(profile.h(0.0)) > 1e-6 || std::abs(profile.dh(0.0) - 1.0) > 1e-6)
    throw std::invalid_argument("build_chart: cannot normalize, profile violates (C1)");

  int n = std::max(s_grid_resolution, 512);
  double r_hi = std::isfinite(profile.r_max) ? profile.r_max * (1.0 - 1e-6) : 16.0;
  double K0 = profile.K0;
  auto w = [&profile, K0](double t) {
    if (t < kSeriesSwitch) return K0 * t / 6.0;  // 1/h - 1/t, series near 0
    return 1.0 / profile.h(t) - 1.0 / t;
  };

  std::vector<double> r_nodes(n + 1), W(n + 1);
  double acc = 0.0;
  r_nodes[0] = 0.0;
  W[0] = 0.0;
  for (int i = 1; i <= n; ++i) {
    double a = r_hi * (i - 1) / n, b = r_hi * i / n;
    acc += integrate_gl(w, a, b, 12);
    r_nodes[i] = b;
    W[i] = acc;
  }
  auto W_spline = std::make_shared<CubicSpline>(r_nodes, W);
  auto h = profile.h;
  auto dh = profile.dh;

  auto s_of_r = [W_spline, r_hi](double r) {
    if (r < 0 || r > r_hi) throw std::domain_error("s_of_r: radius outside working domain");
    if (r == 0.0) return 0.0;
    return r * std::exp((*W_spline)(r));
  };

  std::vector<double> s_nodes(n + 1);
  for (int i = 0; i <= n; ++i) s_nodes[i] = r_nodes[i] * std::exp(W[i]);
  auto inv = std::make_shared<MonotoneCubic>(s_nodes, r_nodes);
  double s_hi = s_nodes.back();

  auto r_of_s = [inv, s_of_r, h, s_hi, r_hi](double s) {
    if (s < 0 || s > s_hi) throw std::domain_error("r_of_s: chart radius outside working domain");
    if (s == 0.0) return 0.0;
    double r = std::clamp((*inv)(s), 0.0, r_hi);
    // Newton polish against s_of_r; ds/dr = s/h.
    for (int it = 0; it < 3; ++it) {
      double sr = s_of_r(r);
      r = std::clamp(r - (sr - s) * h(r) / sr, 0.0, r_hi);
    }
    return r;
  };

  ConformalChart chart;
  chart.s_of_r = s_of_r;
  chart.r_of_s = r_of_s;
  chart.rho = [r_of_s, h, K0](double s) {
    if (s < kSeriesSwitch) return 1.0 - 0.25 * K0 * s * s;
    return h(r_of_s(s)) / s;
  };
  chart.rho_prime = [r_of_s, h, dh, K0](double s) {
    if (s < kSeriesSwitch) return -0.5 * K0 * s;
    double r = r_of_s(s);
    return (h(r) / s) * (dh(r) - 1.0) / s;
  };
  chart.rho_prime_over_s = [r_of_s, h, dh, K0](double s) {
    if (s < kSeriesSwitch) return -0.5 * K0;
    double r = r_of_s(s);
    return (h(r) / s) * (dh(r) - 1.0) / (s * s);
  };
  chart.s_max = s_hi;
  chart.r_max = r_hi;
  chart.preset = profile.preset;
  chart.K0 = K0;
  return chart;
}

double chart_disk_potential(const ConformalChart& chart, double S) {
  if (!(S >= 0.0)) throw std::domain_error("chart_disk_potential: negative radius");
  auto f = [&chart](double t) { return t * chart.rho(t) * chart.rho(t); };
  return integrate_adaptive(f, 0.0, S);
}

}  // namespace fbms
