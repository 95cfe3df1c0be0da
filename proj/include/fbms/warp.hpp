#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fbms {

enum class Preset { Euclidean, Sphere, GaussianShrinker };

enum class ProfileSource { ClosedFormPreset, ConformalDerived, Tabulated };

// Chart-side data attached to a profile when a conformal description is
// available (presets and conformal-derived profiles). Profiles built from
// a warp table have none; build_chart then integrates the chart ODE.
struct ChartData {
  std::function<double(double)> s_of_r;
  std::function<double(double)> r_of_s;
  std::function<double(double)> rho;
  std::function<double(double)> rho_prime;
  std::function<double(double)> rho_prime_over_s;  // rho'(s)/s, finite at s = 0
  std::function<double(double)> rho_second;        // may be empty
  double s_max = 0.0;
};

// Rotationally symmetric metric g = dr^2 + h(r)^2 g_S described by its
// warping function. Immutable after construction; evaluators are pure.
struct WarpProfile {
  std::function<double(double)> h;
  std::function<double(double)> dh;
  std::function<double(double)> d2h;
  double r_max = 0.0;  // domain upper bound, may be +inf
  ProfileSource source = ProfileSource::ClosedFormPreset;
  std::optional<Preset> preset;
  std::shared_ptr<const ChartData> chart;
  double K0 = 0.0;  // radial sectional curvature at the center, -h'''(0)
};

Preset preset_from_name(const std::string& name);
std::string preset_name(Preset p);

WarpProfile make_preset(Preset name);

// Profile with h(r) = s*rho(s), where r(s) integrates rho from 0.
// rho(0) must equal 1 (the chart gauge forced by h ~ r near the center).
// rho_second is optional; when absent h'' falls back to a finite
// difference of rho_prime.
WarpProfile from_conformal_factor(std::function<double(double)> rho,
                                  std::function<double(double)> rho_prime,
                                  double s_max,
                                  std::function<double(double)> rho_second = nullptr,
                                  int resolution = 2048);

// Tabulated profiles: twice-differentiable spline through the samples;
// h'' is the analytic second derivative of the piecewise cubic.
WarpProfile from_warp_table(std::vector<double> r, std::vector<double> h);
WarpProfile from_conformal_table(std::vector<double> s, std::vector<double> rho,
                                 int resolution = 2048);

struct AdmissibilityReport {
  bool h0_ok = false;    // |h(0)| <= tol
  bool dh0_ok = false;   // |h'(0) - 1| <= tol
  bool d2h0_ok = false;  // |h''(0)| <= tol
  bool curvature_positive = false;
  double min_K = 0.0;
  bool degenerate_c2 = false;  // |K| <= tol on the whole grid (flat case)
  bool c1_pass() const { return h0_ok && dh0_ok && d2h0_ok; }
  bool pass() const { return c1_pass() && curvature_positive; }
};

AdmissibilityReport check_admissibility(const WarpProfile& profile,
                                        std::span<const double> grid, double tol = 1e-8);

// K(r) = -h''(r)/h(r); the r = 0 value is the limit -h'''(0).
double curvature_K(const WarpProfile& profile, double r);

}  // namespace fbms
