#pragma once
#include "fbms/radial.hpp"

namespace fbms {

struct StarMax {
  double value = 0.0;
  double binding_r = 0.0;
};

// max over a grid of r in (0, R] of (*)(r, R), with one local refinement
// pass around the grid maximizer.
StarMax star_max(const RadialGeometry& geom, double R, int grid_n = 512);

struct ThresholdReport {
  bool found = false;
  double R_bar = 0.0;              // geodesic
  double S_bar = 0.0;              // chart radius s(R_bar)
  double binding_r = 0.0;
  int grid_n = 0;
  double certificate_below = 0.0;  // star_max at R_bar (1 - 1e-3), expected <= 0
  double certificate_above = 0.0;  // star_max at R_bar (1 + 1e-3), expected > 0
  bool at_domain_bound = false;
  bool identically_zero = false;   // flat case: (*) vanishes for every (r, R)
};

// Largest R with max_{r in (0,R]} (*) <= 0, by bracket growth + bisection.
// The returned R_bar is always a predicate-verified point.
ThresholdReport find_R_bar(const RadialGeometry& geom, const ConformalChart& chart,
                           double tol = 1e-8, int grid_n = 512);

// Positive root of 8 + r^4 - e^{r^2/2} (8 - 4 r^2 + r^4), bracketed away
// from the double root at 0.
double gaussian_root_reference();

// Scalar curvature of g = rho^2 delta in ambient dimension 3, from rho,
// rho' and a finite-difference rho''.
double conformal_scalar_curvature(const ConformalChart& chart, double s);

}  // namespace fbms
