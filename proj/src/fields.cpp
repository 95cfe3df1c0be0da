#include "fbms/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "fbms/rng.hpp"

namespace fbms {

namespace {

void require_unit(const VectorXd& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > 1e-9) throw std::invalid_argument(std::string(what) + " must be a unit vector");
}

VectorXd perp_part(const VectorXd& v, const TangentPlaneSample& s) {
  return v - v.dot(s.e1) * s.e1 - v.dot(s.e2) * s.e2;
}

}  // namespace

TangentPlaneSample make_tangent_sample(VectorXd x, const VectorXd& u1, const VectorXd& u2) {
  TangentPlaneSample s;
  double n1 = u1.norm();
  if (n1 < 1e-14) throw std::invalid_argument("make_tangent_sample: degenerate frame");
  s.e1 = u1 / n1;
  VectorXd v = u2 - u2.dot(s.e1) * s.e1;
  double n2 = v.norm();
  if (n2 < 1e-12 * (1.0 + u2.norm())) throw std::invalid_argument("make_tangent_sample: degenerate frame");
  s.e2 = v / n2;
  s.x = std::move(x);
  double sn = s.x.norm();
  if (sn > 0.0) {
    double a1 = s.x.dot(s.e1) / sn, a2 = s.x.dot(s.e2) / sn;
    s.grad_sigma_r_sq = std::clamp(a1 * a1 + a2 * a2, 0.0, 1.0);
  } else {
    s.grad_sigma_r_sq = 1.0;  // correction terms vanish at the center anyway
  }
  return s;
}

TangentPlaneSample random_tangent_sample(int dim, double ball_radius, std::uint64_t seed,
                                         std::uint64_t counter, const VectorXd* exclude,
                                         double exclude_radius) {
  auto rng = sample_rng(seed, counter);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXd x(dim);
  for (int tries = 0; tries < 10000; ++tries) {
    for (int i = 0; i < dim; ++i) x[i] = ball_radius * uni(rng);
    if (x.norm() > ball_radius) continue;
    if (exclude && (x - *exclude).norm() < exclude_radius) continue;
    VectorXd u1(dim), u2(dim);
    for (int i = 0; i < dim; ++i) u1[i] = gauss(rng);
    for (int i = 0; i < dim; ++i) u2[i] = gauss(rng);
    try {
      return make_tangent_sample(x, u1, u2);
    } catch (const std::invalid_argument&) {
      continue;  // resample a degenerate frame
    }
  }
  throw std::runtime_error("random_tangent_sample: rejection sampling failed");
}

double div_sigma_radial(const RadialGeometry& geom, double r, double grad_sigma_r_sq) {
  if (r < 0.0 || r >= geom.profile.r_max) throw std::domain_error("div_sigma_radial: radius out of domain");
  if (r < 1e-9) return 1.0;  // J/h^2 -> 0 at the center
  double h = geom.profile.h(r);
  return 1.0 + J_integral(geom, r) / (h * h) * (1.0 - grad_sigma_r_sq);
}

VectorXd sphere_field(SphereFieldKind kind, const VectorXd& center, const VectorXd& x) {
  require_unit(center, "sphere_field center");
  require_unit(x, "sphere_field point");
  double chord = (x - center).norm();
  double d = 2.0 * std::asin(std::min(1.0, 0.5 * chord));
  if (kind == SphereFieldKind::Phi) {
    if ((x + center).norm() < 1e-12) throw std::domain_error("sphere_field: Phi singular at the antipode");
    if (d < 1e-14) return VectorXd::Zero(x.size());  // phi(0) = 0
    VectorXd grad = -(center - std::cos(d) * x) / std::sin(d);
    return std::tan(0.5 * d) * grad;
  }
  if (chord < 1e-12) throw std::domain_error("sphere_field: Psi singular at its center");
  VectorXd grad = -(center - std::cos(d) * x) / std::sin(d);
  return -(1.0 / std::tan(0.5 * d)) * grad;
}

VectorXd sphere_W(double R, const VectorXd& p, const VectorXd& y, const VectorXd& x) {
  if (R > 0.5 * M_PI + 1e-12) throw std::invalid_argument("sphere_W: ball not contained in a hemisphere");
  require_unit(p, "sphere_W pole");
  double dpy = 2.0 * std::asin(std::min(1.0, 0.5 * (y - p).norm()));
  if (std::abs(dpy - R) > 1e-8) throw std::invalid_argument("sphere_W: y must lie on the boundary sphere");
  double cR = std::cos(R);
  return cR * sphere_field(SphereFieldKind::Phi, p, x) +
         (1.0 - cR) * sphere_field(SphereFieldKind::Psi, y, x);
}

VectorXd conformal_V(const ConformalChart& chart, const VectorXd& y, const VectorXd& x) {
  VectorXd d = x - y;
  double dn2 = d.squaredNorm();
  if (dn2 < 1e-24) throw std::domain_error("conformal_V: evaluation at the singular point");
  double rho = chart.rho(x.norm());
  return d / (rho * rho * dn2);
}

double div_sigma_V(const ConformalChart& chart, const VectorXd& y, const TangentPlaneSample& sample) {
  VectorXd d = sample.x - y;
  double dn2 = d.squaredNorm();
  if (dn2 < 1e-24) throw std::domain_error("div_sigma_V: evaluation at the singular point");
  double s = sample.x.norm();
  double rho = chart.rho(s);
  double c = 1.0 / (rho * dn2);
  double q = chart.rho_prime_over_s(s) / (2.0 * rho * rho);
  VectorXd A = c * perp_part(y, sample) - (c + q) * perp_part(sample.x, sample);
  return 2.0 * A.squaredNorm() - 2.0 * q * q * perp_part(sample.x, sample).squaredNorm();
}

VectorXd CalibrationField::value(const VectorXd& x) const {
  if (kind == FieldKind::SphereExtrinsic) return sphere_W(R, p, y, x);
  VectorXd d = x - y;
  if (d.squaredNorm() < 1e-24) throw std::domain_error("CalibrationField: evaluation at the singular point");
  double s = x.norm();
  VectorXd radial = VectorXd::Zero(x.size());
  if (s > 0.0) {
    double r = chart.r_of_s(s);
    radial = (phi(geom, r) / (s * chart.rho(s))) * x;
  }
  return radial - 2.0 * I_R * conformal_V(chart, y, x);
}

double CalibrationField::div_exact(const TangentPlaneSample& sample) const {
  if (kind != FieldKind::Conformal) throw std::logic_error("div_exact: conformal fields only");
  double s = sample.x.norm();
  double r = s > 0.0 ? chart.r_of_s(s) : 0.0;
  return div_sigma_radial(geom, r, sample.grad_sigma_r_sq) -
         2.0 * I_R * div_sigma_V(chart, y, sample);
}

CalibrationField conformal_W(const RadialGeometry& geom, const ConformalChart& chart, double R,
                             const VectorXd& y_direction) {
  if (!(R > 0.0)) throw std::domain_error("conformal_W: radius must be positive");
  CalibrationField f;
  f.kind = FieldKind::Conformal;
  f.geom = geom;
  f.chart = chart;
  f.R = R;
  f.s_R = chart.s_of_r(R);
  f.I_R = integral_I(geom, R);
  double yn = y_direction.norm();
  if (yn < 1e-14) throw std::invalid_argument("conformal_W: y direction is zero");
  f.y = y_direction * (f.s_R / yn);
  return f;
}

CalibrationField sphere_extrinsic_W(double R, const VectorXd& p, const VectorXd& y) {
  CalibrationField f;
  f.kind = FieldKind::SphereExtrinsic;
  f.R = R;
  f.p = p;
  f.y = y;
  f.value(p);  // validates p, y, R eagerly (the center is a regular point)
  return f;
}

double star_term(const RadialGeometry& geom, double r, double R) {
  if (r < 0.0 || r > R) throw std::domain_error("star_term: need 0 <= r <= R");
  double dhm1 = geom.profile.dh(r) - 1.0;
  return J_integral(geom, r) + integral_I(geom, R) * dhm1 * dhm1;
}

double fd_div_oracle(const CalibrationField& field, const TangentPlaneSample& sample, double step) {
  if (field.kind != FieldKind::Conformal) throw std::logic_error("fd_div_oracle: conformal fields only");
  if (!(step > 0.0)) throw std::invalid_argument("fd_div_oracle: step must be positive");
  if ((sample.x - field.y).norm() < 10.0 * step)
    throw std::invalid_argument("fd_div_oracle: step too large relative to distance to the singularity");
  auto Y = [&field](const VectorXd& z) -> VectorXd {
    double rho = field.chart.rho(z.norm());
    return rho * rho * field.value(z);
  };
  double div_delta = 0.0;
  for (const VectorXd* e : {&sample.e1, &sample.e2}) {
    double f2p = Y(sample.x + 2.0 * step * *e).dot(*e);
    double f1p = Y(sample.x + step * *e).dot(*e);
    double f1m = Y(sample.x - step * *e).dot(*e);
    double f2m = Y(sample.x - 2.0 * step * *e).dot(*e);
    div_delta += (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * step);
  }
  double s = sample.x.norm();
  double rho = field.chart.rho(s);
  VectorXd xperp = perp_part(sample.x, sample);
  return div_delta / (rho * rho) +
         2.0 * field.chart.rho_prime_over_s(s) / (rho * rho * rho) * Y(sample.x).dot(xperp);
}

std::vector<std::pair<double, double>> singular_flux_check(const CalibrationField& field,
                                                           std::vector<double> eps_list) {
  if (field.kind != FieldKind::Conformal) throw std::logic_error("singular_flux_check: conformal fields only");
  const int n = static_cast<int>(field.y.size());
  const double S = field.y.norm();
  const VectorXd yhat = field.y / S;
  const double rho_S = field.chart.rho(S);
  const double area = 2.0 * M_PI * field.I_R;

  // Fixed inward direction fan at y.
  const int K = 64;
  std::vector<VectorXd> dirs;
  dirs.reserve(K);
  for (int k = 0; k < K; ++k) {
    auto rng = sample_rng(0x5f1dUL, k);
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = gauss(rng);
    w -= w.dot(yhat) * yhat;
    if (w.norm() < 1e-8) continue;
    w.normalize();
    VectorXd u = -yhat + 0.8 * w;
    dirs.push_back(u.normalized());
  }

  std::vector<std::pair<double, double>> table;
  for (double eps : eps_list) {
    if (!(eps > 0.0) || eps / rho_S >= 0.1 * S)
      throw std::domain_error("singular_flux_check: eps outside (0, s(R)/10)");
    double acc = 0.0;
    for (const VectorXd& u : dirs) {
      double delta = eps / rho_S;
      delta = eps / field.chart.rho((field.y + 0.5 * delta * u).norm());
      VectorXd x = field.y + delta * u;
      // <W, -grad d_y>_g = -rho(|x|) <W, x - y> / |x - y|
      double val = -field.chart.rho(x.norm()) * field.value(x).dot(x - field.y) / delta;
      acc += val * M_PI * eps / area;
    }
    table.emplace_back(eps, acc / static_cast<double>(dirs.size()));
  }
  return table;
}

Stereographic Stereographic::make(const VectorXd& p) {
  require_unit(p, "stereographic pole");
  const int m = static_cast<int>(p.size());
  Stereographic st;
  st.p = p;
  st.basis.resize(m, m - 1);
  int skip = 0;
  for (int i = 1; i < m; ++i)
    if (std::abs(p[i]) > std::abs(p[skip])) skip = i;
  int col = 0;
  for (int j = 0; j < m; ++j) {
    if (j == skip) continue;
    VectorXd v = VectorXd::Unit(m, j) - p[j] * p;
    for (int c = 0; c < col; ++c) v -= v.dot(st.basis.col(c)) * st.basis.col(c);
    st.basis.col(col++) = v.normalized();
  }
  return st;
}

VectorXd Stereographic::to_chart(const VectorXd& q) const {
  double den = 1.0 + q.dot(p);
  if (den < 1e-12) throw std::domain_error("stereographic: point at the antipode of the pole");
  return 2.0 * (basis.transpose() * q) / den;
}

VectorXd Stereographic::to_sphere(const VectorXd& x) const {
  double u = 0.25 * x.squaredNorm();
  return ((1.0 - u) * p + basis * x) / (1.0 + u);
}

VectorXd Stereographic::push(const VectorXd& q, const VectorXd& w) const {
  double den = 1.0 + q.dot(p);
  if (den < 1e-12) throw std::domain_error("stereographic: point at the antipode of the pole");
  return 2.0 * (basis.transpose() * w) / den -
         2.0 * (basis.transpose() * q) * (w.dot(p) / (den * den));
}

}  // namespace fbms
