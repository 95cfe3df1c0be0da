#pragma once
#include <functional>
#include <memory>
#include <optional>

#include "fbms/warp.hpp"

namespace fbms {

struct RadialTables;  // quadrature-backed cumulative integrals

// Radial potentials of a profile: I(r) = int_0^r h, phi = I/h,
// J(r) = 2 int_0^r I h''. Presets evaluate closed forms; everything else
// goes through cumulative quadrature tables built at construction.
struct RadialGeometry {
  WarpProfile profile;
  std::shared_ptr<const RadialTables> tables;
};

RadialGeometry make_radial_geometry(const WarpProfile& profile, int resolution = 2048);

double integral_I(const RadialGeometry& geom, double r);
double phi(const RadialGeometry& geom, double r);
double disk_area(const RadialGeometry& geom, double R);  // 2 pi I(R)
double J_integral(const RadialGeometry& geom, double r);

// Conformal coordinates: g = rho(s)^2 * euclidean, s(0) = 0, ds/dr = s/h.
struct ConformalChart {
  std::function<double(double)> s_of_r;
  std::function<double(double)> r_of_s;
  std::function<double(double)> rho;
  std::function<double(double)> rho_prime;
  std::function<double(double)> rho_prime_over_s;
  double s_max = 0.0;
  double r_max = 0.0;
  std::optional<Preset> preset;
  double K0 = 0.0;
};

// Wraps the profile's own chart data when present; otherwise integrates
// s(r) = r * exp(int_0^r (1/h - 1/t) dt), whose integrand is bounded at 0.
ConformalChart build_chart(const WarpProfile& profile, int s_grid_resolution = 2048);

// Always takes the quadrature route, even for presets; the test suite
// compares it against the closed forms.
ConformalChart build_chart_generic(const WarpProfile& profile, int s_grid_resolution = 2048);

// int_0^S t rho(t)^2 dt; equals I(r(S)) and is what flat disks integrate.
double chart_disk_potential(const ConformalChart& chart, double S);

}  // namespace fbms
