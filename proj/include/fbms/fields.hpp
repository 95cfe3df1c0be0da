#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "fbms/radial.hpp"

namespace fbms {

using Eigen::VectorXd;

// Evaluation site for the tangential divergence formulas: a chart point
// plus a euclid-orthonormal 2-frame spanning the candidate tangent plane.
// grad_sigma_r_sq = |grad^Sigma r|^2 = (<x,e1>^2 + <x,e2>^2)/|x|^2; the
// same value in g, since g-orthonormal frames of the plane are e_i/rho.
struct TangentPlaneSample {
  VectorXd x;
  VectorXd e1;
  VectorXd e2;
  double grad_sigma_r_sq = 1.0;
};

TangentPlaneSample make_tangent_sample(VectorXd x, const VectorXd& u1, const VectorXd& u2);

// Seeded sampler: x uniform in the chart ball by rejection, frame from two
// orthonormalized gaussians. Per-sample streams are derived from
// (seed, counter), so sweeps are thread-count independent. Points closer
// than exclude_radius to *exclude are resampled.
TangentPlaneSample random_tangent_sample(int dim, double ball_radius, std::uint64_t seed,
                                         std::uint64_t counter, const VectorXd* exclude = nullptr,
                                         double exclude_radius = 1e-6);

// div_Sigma of the radial field Phi = phi(r) d/dr:
// 1 + J(r) h(r)^-2 (1 - grad_sigma_r_sq).
double div_sigma_radial(const RadialGeometry& geom, double r, double grad_sigma_r_sq);

enum class SphereFieldKind { Phi, Psi };

// Extrinsic fields on the unit sphere in R^{n+1}:
// Phi_p = tan(d/2) grad d_p, Psi_p = Phi_{-p} = -cot(d/2) grad d_p.
VectorXd sphere_field(SphereFieldKind kind, const VectorXd& center, const VectorXd& x);

// (cos R) Phi_p + (1 - cos R) Psi_y on the geodesic ball B_R(p), R <= pi/2,
// with d(p, y) = R.
VectorXd sphere_W(double R, const VectorXd& p, const VectorXd& y, const VectorXd& x);

// Singular conformal field V = (x - y) / (rho^2 |x - y|^2), chart components.
VectorXd conformal_V(const ConformalChart& chart, const VectorXd& y, const VectorXd& x);

// Exact tangential divergence of V:
// 2|A|^2 - (1/2) (rho'/(s rho^2))^2 |x_perp|^2  with
// A = y_perp/(rho|x-y|^2) - (1/(rho|x-y|^2) + rho'/(2 s rho^2)) x_perp.
double div_sigma_V(const ConformalChart& chart, const VectorXd& y, const TangentPlaneSample& sample);

enum class FieldKind { SphereExtrinsic, Conformal };

// The calibration field. Conformal kind: W = Phi - 2 I(R) V in chart
// components, with Phi = phi(r) x/(s rho). Extrinsic kind wraps sphere_W.
struct CalibrationField {
  FieldKind kind = FieldKind::Conformal;
  RadialGeometry geom;
  ConformalChart chart;
  double R = 0.0;    // geodesic ball radius
  double s_R = 0.0;  // chart radius of the ball (conformal kind)
  double I_R = 0.0;  // I(R)
  VectorXd y;        // boundary point: chart coords, or sphere point (extrinsic)
  VectorXd p;        // ball center on the sphere (extrinsic kind)

  VectorXd value(const VectorXd& x) const;
  double div_exact(const TangentPlaneSample& sample) const;
};

CalibrationField conformal_W(const RadialGeometry& geom, const ConformalChart& chart, double R,
                             const VectorXd& y_direction);
CalibrationField sphere_extrinsic_W(double R, const VectorXd& p, const VectorXd& y);

// (*)(r, R) = J(r) + I(R) (h'(r) - 1)^2; nonpositivity on (0, R] is what
// certifies div_Sigma W <= 1 at radius R.
double star_term(const RadialGeometry& geom, double r, double R);

// Numerical tangential divergence: 4th-order central differences of the
// chart components along the frame, plus the conformal correction term
// applied to Y = rho^2 W. Independent of the div_exact code path.
double fd_div_oracle(const CalibrationField& field, const TangentPlaneSample& sample, double step);

// For each geodesic eps: mean over inward directions at y of
// <W, -grad d_y> * pi * eps / (2 pi I(R)); tends to 1 as eps -> 0.
std::vector<std::pair<double, double>> singular_flux_check(const CalibrationField& field,
                                                           std::vector<double> eps_list);

// Chart <-> sphere identification used to compare the two constructions
// (chart gauge s = 2 tan(r/2)).
struct Stereographic {
  VectorXd p;             // pole in R^{n+1}
  Eigen::MatrixXd basis;  // (n+1) x n, orthonormal columns spanning p-perp

  static Stereographic make(const VectorXd& p);
  VectorXd to_chart(const VectorXd& q) const;
  VectorXd to_sphere(const VectorXd& x) const;
  VectorXd push(const VectorXd& q, const VectorXd& w) const;  // d(to_chart) at q
};

}  // namespace fbms
