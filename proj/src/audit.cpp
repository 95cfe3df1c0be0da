#include "fbms/audit.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace fbms {

namespace {

VectorXd to_vec(const Vector3d& v) {
  VectorXd out(3);
  out << v.x(), v.y(), v.z();
  return out;
}

double curved_tri_area(const Vector3d& a, const Vector3d& b, const Vector3d& c,
                       const ConformalChart& chart) {
  double Ae = 0.5 * (b - a).cross(c - a).norm();
  double w = 0.0;
  for (const Vector3d& m : {0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a)}) {
    double rho = chart.rho(m.norm());
    w += rho * rho;
  }
  return Ae * w / 3.0;
}

// Crossing parameter of |a + t(b-a) - y| = eps on [0, 1]; the caller
// guarantees a sign change.
double edge_crossing(const Vector3d& a, const Vector3d& b, const Vector3d& y, double eps) {
  Vector3d u = a - y, w = b - a;
  double A = w.squaredNorm();
  double B = u.dot(w);
  double C = u.squaredNorm() - eps * eps;
  double disc = std::max(0.0, B * B - A * C);
  double sq = std::sqrt(disc);
  double t1 = (-B - sq) / A, t2 = (-B + sq) / A;
  if (t1 >= 0.0 && t1 <= 1.0) return t1;
  return std::clamp(t2, 0.0, 1.0);
}

}  // namespace

AuditRecord calibration_audit(const TriMesh& mesh, const CalibrationField& field, double eps) {
  if (field.kind != FieldKind::Conformal)
    throw std::invalid_argument("calibration_audit: conformal fields only");
  AuditRecord rec;
  rec.eps = eps;
  const ConformalChart& chart = field.chart;

  // Snap the singularity to a boundary vertex.
  Vector3d y(field.y[0], field.y[1], field.y[2]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    if (!mesh.boundary_flag[v]) continue;
    double d = (mesh.vertices[v] - y).norm();
    if (d < best) {
      best = d;
      rec.y_vertex = static_cast<int>(v);
    }
  }
  if (rec.y_vertex < 0 || best > 1e-6 * mesh.S)
    throw std::invalid_argument("calibration_audit: y is not a boundary vertex of the mesh");
  y = mesh.vertices[rec.y_vertex];

  // eps must resolve a few rings of triangles around y.
  double local_h = 0.0;
  int ne = 0;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k)
      if (t[k] == rec.y_vertex) {
        local_h += (mesh.vertices[t[(k + 1) % 3]] - mesh.vertices[t[k]]).norm();
        ++ne;
      }
  local_h = ne ? local_h / ne : 0.0;
  if (eps < 5.0 * local_h)
    throw std::invalid_argument("calibration_audit: eps must cover >= 5 local edge lengths");

  rec.area_g = area_g(mesh, chart);
  rec.bound = disk_area(field.geom, field.R);
  rec.gap = rec.area_g - rec.bound;

  for (const auto& tri : mesh.triangles) {
    const Vector3d& a = mesh.vertices[tri[0]];
    const Vector3d& b = mesh.vertices[tri[1]];
    const Vector3d& c = mesh.vertices[tri[2]];
    double d0 = (a - y).norm(), d1 = (b - y).norm(), d2 = (c - y).norm();
    bool out0 = d0 >= eps, out1 = d1 >= eps, out2 = d2 >= eps;
    int n_out = out0 + out1 + out2;
    if (n_out == 0) continue;

    TangentPlaneSample plane = make_tangent_sample(to_vec((a + b + c) / 3.0), to_vec(b - a),
                                                   to_vec(c - a));
    std::vector<Vector3d> poly;
    if (n_out == 3) {
      poly = {a, b, c};
    } else {
      // Walk the triangle boundary, keeping outside corners and inserting
      // circle crossings; with one circle and two crossings this yields
      // the chord-clipped polygon.
      const Vector3d* vs[3] = {&a, &b, &c};
      double dv[3] = {d0, d1, d2};
      std::vector<Vector3d> crossings;
      for (int k = 0; k < 3; ++k) {
        if (dv[k] >= eps) poly.push_back(*vs[k]);
        int k2 = (k + 1) % 3;
        if ((dv[k] - eps) * (dv[k2] - eps) < 0.0) {
          double t = edge_crossing(*vs[k], *vs[k2], y, eps);
          Vector3d pc = *vs[k] + t * (*vs[k2] - *vs[k]);
          poly.push_back(pc);
          crossings.push_back(pc);
        }
      }
      if (crossings.size() == 2) {
        // Inner-circle flux along the chord, outward normal toward y.
        Vector3d chord = crossings[1] - crossings[0];
        double len = chord.norm();
        if (len > 1e-15) {
          Vector3d m = 0.5 * (crossings[0] + crossings[1]);
          Vector3d chat = chord / len;
          Vector3d toy = (y - m) - (y - m).dot(chat) * chat;
          double tn = toy.norm();
          if (tn > 1e-15) {
            Vector3d eta = toy / tn;
            double rho = chart.rho(m.norm());
            rec.singular_flux += rho * rho * field.value(to_vec(m)).dot(to_vec(eta)) * len;
          }
        }
      }
      if (poly.size() < 3) continue;
    }
    // Fan quadrature over the (planar) outside polygon.
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
      double sub = curved_tri_area(poly[0], poly[i], poly[i + 1], chart);
      Vector3d ctr = (poly[0] + poly[i] + poly[i + 1]) / 3.0;
      TangentPlaneSample sample = plane;
      sample.x = to_vec(ctr);
      double sn = sample.x.norm();
      if (sn > 0.0) {
        double a1 = sample.x.dot(sample.e1) / sn, a2 = sample.x.dot(sample.e2) / sn;
        sample.grad_sigma_r_sq = std::clamp(a1 * a1 + a2 * a2, 0.0, 1.0);
      } else {
        sample.grad_sigma_r_sq = 1.0;
      }
      rec.area_outside += sub;
      rec.div_integral += sub * field.div_exact(sample);
    }
  }

  // Outer boundary flux, the eps-disk part excluded.
  std::map<std::pair<int, int>, int> opposite;
  for (const auto& tri : mesh.triangles)
    for (int k = 0; k < 3; ++k) opposite[{tri[k], tri[(k + 1) % 3]}] = tri[(k + 2) % 3];
  for (const auto& e : boundary_edges(mesh)) {
    Vector3d a = mesh.vertices[e[0]], b = mesh.vertices[e[1]];
    double da = (a - y).norm(), db = (b - y).norm();
    if (da < eps && db < eps) continue;
    if (da < eps || db < eps) {
      double t = edge_crossing(a, b, y, eps);
      Vector3d pc = a + t * (b - a);
      if (da < eps)
        a = pc;
      else
        b = pc;
    }
    auto it = opposite.find({e[0], e[1]});
    if (it == opposite.end()) it = opposite.find({e[1], e[0]});
    const Vector3d& opp = mesh.vertices[it->second];
    Vector3d m = 0.5 * (a + b);
    Vector3d n_tri = (b - a).cross(opp - a);
    if (n_tri.norm() < 1e-30) continue;
    Vector3d eta = (b - a).cross(n_tri).normalized();
    if (eta.dot(opp - m) > 0.0) eta = -eta;
    double rho = chart.rho(m.norm());
    rec.boundary_flux += rho * rho * field.value(to_vec(m)).dot(to_vec(eta)) * (b - a).norm();
  }

  rec.slack_pointwise = rec.area_outside - rec.div_integral;
  rec.divergence_residual = rec.div_integral - rec.boundary_flux - rec.singular_flux;
  return rec;
}

BoundCheck area_bound_report(const TriMesh& mesh, const ConformalChart& chart,
                             const RadialGeometry& geom, double R) {
  BoundCheck out;
  out.area_g = area_g(mesh, chart);
  out.bound = disk_area(geom, R);
  out.gap = out.area_g - out.bound;
  out.pass = out.gap >= -0.01 * out.bound;
  return out;
}

IsoperimetricCheck isoperimetric_check(const TriMesh& mesh, const ConformalChart& chart,
                                       double R) {
  if (!chart.preset || *chart.preset != Preset::Sphere)
    throw std::invalid_argument("isoperimetric_check: sphere chart required");
  IsoperimetricCheck out;
  out.area_g = area_g(mesh, chart);
  out.boundary_length_g = boundary_length_g(mesh, chart);
  out.slack = out.area_g - std::tan(0.5 * R) * out.boundary_length_g;
  out.pass = out.slack >= -1e-3 * out.area_g;
  return out;
}

double equality_alignment(const TriMesh& mesh) {
  if (mesh.triangles.empty()) return 0.0;
  std::size_t aligned = 0;
  for (const auto& tri : mesh.triangles) {
    const Vector3d& a = mesh.vertices[tri[0]];
    const Vector3d& b = mesh.vertices[tri[1]];
    const Vector3d& c = mesh.vertices[tri[2]];
    TangentPlaneSample s = make_tangent_sample(to_vec((a + b + c) / 3.0), to_vec(b - a),
                                               to_vec(c - a));
    if (s.grad_sigma_r_sq >= 0.99) ++aligned;
  }
  return static_cast<double>(aligned) / static_cast<double>(mesh.triangles.size());
}

}  // namespace fbms
