#include "fbms/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "fbms/parallel.hpp"
#include "fbms/rng.hpp"

namespace fbms {

namespace {

int ring_start(int k) { return 1 + 3 * k * (k - 1); }

// Hexagonal disk triangulation: ring k carries 6k vertices, 6m^2 triangles
// at m rings.
TriMesh hex_disk(double radius, int m) {
  TriMesh mesh;
  mesh.vertices.emplace_back(0.0, 0.0, 0.0);
  for (int k = 1; k <= m; ++k) {
    double rk = (k == m) ? radius : radius * k / m;
    int cnt = 6 * k;
    for (int j = 0; j < cnt; ++j) {
      double th = 2.0 * M_PI * j / cnt;
      mesh.vertices.emplace_back(rk * std::cos(th), rk * std::sin(th), 0.0);
    }
  }
  for (int i = 0; i < 6; ++i)
    mesh.triangles.push_back({0, 1 + i, 1 + (i + 1) % 6});
  for (int k = 2; k <= m; ++k) {
    int so = ring_start(k), si = ring_start(k - 1);
    int no = 6 * k, ni = 6 * (k - 1);
    for (int sct = 0; sct < 6; ++sct) {
      for (int t = 0; t < k; ++t) {
        int o0 = so + (sct * k + t) % no;
        int o1 = so + (sct * k + t + 1) % no;
        int i0 = si + (sct * (k - 1) + t) % ni;
        mesh.triangles.push_back({o0, o1, i0});
        if (t + 1 < k) {
          int i1 = si + (sct * (k - 1) + t + 1) % ni;
          mesh.triangles.push_back({o1, i1, i0});
        }
      }
    }
  }
  mesh.boundary_flag.assign(mesh.vertices.size(), 0);
  for (int j = 0; j < 6 * m; ++j) mesh.boundary_flag[ring_start(m) + j] = 1;
  return mesh;
}

double catenoid_waist(double z0, double wb) {
  // Larger root of A cosh(z0/A) = wb; exists when z0/wb is below ~0.6627.
  auto g = [&](double A) { return A * std::cosh(z0 / A); };
  double lo = 1e-3 * wb, hi = wb;
  for (int it = 0; it < 200; ++it) {  // minimize g by golden section
    double a = lo + 0.381966 * (hi - lo), b = hi - 0.381966 * (hi - lo);
    if (g(a) < g(b))
      hi = b;
    else
      lo = a;
  }
  double Astar = 0.5 * (lo + hi);
  if (g(Astar) > wb) throw std::invalid_argument("make_mesh: annulus waist has no catenoid solution");
  lo = Astar;
  hi = wb;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) < wb)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct TriEval {
  double curved = 0.0;
  double flat = 0.0;
  Vector3d grad[3];
};

// Curved area of one triangle and its gradient with respect to the three
// vertices: d(A_e * w)/dv with w the mid-edge average of rho^2.
void eval_triangle(const Vector3d& a, const Vector3d& b, const Vector3d& c,
                   const ConformalChart& chart, bool with_grad, TriEval& out) {
  Vector3d n = (b - a).cross(c - a);
  double n2 = n.norm();
  double Ae = 0.5 * n2;
  Vector3d mids[3] = {0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a)};
  double rho2[3], drho2[3];
  for (int i = 0; i < 3; ++i) {
    double t = mids[i].norm();
    double rho = chart.rho(t);
    rho2[i] = rho * rho;
    drho2[i] = 2.0 * rho * chart.rho_prime(t);
  }
  double w = (rho2[0] + rho2[1] + rho2[2]) / 3.0;
  out.curved = Ae * w;
  out.flat = Ae;
  if (!with_grad) return;
  if (n2 < 1e-30) {
    out.grad[0].setZero();
    out.grad[1].setZero();
    out.grad[2].setZero();
    return;
  }
  Vector3d nhat = n / n2;
  Vector3d dA[3] = {0.5 * (b - c).cross(nhat), 0.5 * (c - a).cross(nhat),
                    0.5 * (a - b).cross(nhat)};
  Vector3d dwm[3];  // d w / d(mid_i)
  for (int i = 0; i < 3; ++i) {
    double t = mids[i].norm();
    dwm[i] = t > 1e-14 ? Vector3d((drho2[i] / (3.0 * t)) * mids[i]) : Vector3d::Zero();
  }
  // vertex a touches mids 0 and 2 with weight 1/2, etc.
  out.grad[0] = dA[0] * w + Ae * 0.5 * (dwm[0] + dwm[2]);
  out.grad[1] = dA[1] * w + Ae * 0.5 * (dwm[0] + dwm[1]);
  out.grad[2] = dA[2] * w + Ae * 0.5 * (dwm[1] + dwm[2]);
}

struct Assembler {
  const ConformalChart* chart;
  std::vector<std::array<int, 3>> tris;
  std::vector<std::vector<std::pair<int, int>>> incidence;  // vertex -> (tri, corner)

  Assembler(const TriMesh& mesh, const ConformalChart& c) : chart(&c), tris(mesh.triangles) {
    incidence.resize(mesh.vertices.size());
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
      for (int k = 0; k < 3; ++k) incidence[tris[t][k]].emplace_back(t, k);
  }

  // Deterministic for any worker count: per-slot writes + fixed-tree sums.
  double area(const std::vector<Vector3d>& x, std::vector<Vector3d>* grad,
              double* min_flat) const {
    std::vector<TriEval> evals(tris.size());
    std::vector<double> curved(tris.size());
    bool with_grad = grad != nullptr;
    parallel_for(tris.size(), [&](std::size_t t) {
      eval_triangle(x[tris[t][0]], x[tris[t][1]], x[tris[t][2]], *chart, with_grad, evals[t]);
      curved[t] = evals[t].curved;
    });
    if (grad) {
      grad->assign(x.size(), Vector3d::Zero());
      parallel_for(x.size(), [&](std::size_t v) {
        Vector3d g = Vector3d::Zero();
        for (auto [t, k] : incidence[v]) g += evals[t].grad[k];
        (*grad)[v] = g;
      });
    }
    if (min_flat) {
      double mn = std::numeric_limits<double>::infinity();
      for (const auto& e : evals) mn = std::min(mn, e.flat);
      *min_flat = mn;
    }
    return pairwise_sum(curved);
  }
};

double mean_edge_length(const TriMesh& mesh) {
  double total = 0.0;
  std::size_t cnt = 0;
  for (const auto& t : mesh.triangles) {
    total += (mesh.vertices[t[0]] - mesh.vertices[t[1]]).norm();
    total += (mesh.vertices[t[1]] - mesh.vertices[t[2]]).norm();
    total += (mesh.vertices[t[2]] - mesh.vertices[t[0]]).norm();
    cnt += 3;
  }
  return cnt ? total / cnt : 0.0;
}

double corner_angle(const Vector3d& at, const Vector3d& u, const Vector3d& v) {
  Vector3d a = u - at, b = v - at;
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace

MeshShape mesh_shape_from_name(const std::string& name) {
  if (name == "flat-disk") return MeshShape::FlatDisk;
  if (name == "tilted-disk") return MeshShape::TiltedDisk;
  if (name == "perturbed-disk") return MeshShape::PerturbedDisk;
  if (name == "annulus") return MeshShape::Annulus;
  throw std::invalid_argument("unknown mesh shape: " + name);
}

std::string mesh_shape_name(MeshShape s) {
  switch (s) {
    case MeshShape::FlatDisk: return "flat-disk";
    case MeshShape::TiltedDisk: return "tilted-disk";
    case MeshShape::PerturbedDisk: return "perturbed-disk";
    case MeshShape::Annulus: return "annulus";
  }
  throw std::logic_error("mesh_shape_name");
}

TriMesh make_mesh(MeshShape shape, double S, int resolution, std::uint64_t seed,
                  double amplitude) {
  if (!(S > 0.0)) throw std::invalid_argument("make_mesh: S must be positive");
  if (resolution < 3) throw std::invalid_argument("make_mesh: resolution must be >= 3");

  switch (shape) {
    case MeshShape::FlatDisk: {
      TriMesh mesh = hex_disk(S, resolution);
      mesh.S = S;
      return mesh;
    }
    case MeshShape::TiltedDisk: {
      double frac = amplitude > 0.0 ? amplitude : 0.3;
      if (frac >= 1.0) throw std::invalid_argument("make_mesh: tilt offset must be below 1");
      double d = frac * S;
      double w = std::sqrt(S * S - d * d);
      TriMesh mesh = hex_disk(w, resolution);
      for (auto& v : mesh.vertices) v.z() = d;
      mesh.S = S;
      return mesh;
    }
    case MeshShape::PerturbedDisk: {
      double amp = amplitude > 0.0 ? amplitude : 0.05;
      TriMesh mesh = hex_disk(S, resolution);
      mesh.S = S;
      auto rng = sample_rng(seed, 0xa11dULL);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      struct Bump {
        double cx, cy, sigma, sign;
      };
      std::vector<Bump> bumps(5);
      for (auto& bmp : bumps) {
        double rr = 0.8 * S * std::sqrt(uni(rng));
        double th = 2.0 * M_PI * uni(rng);
        bmp.cx = rr * std::cos(th);
        bmp.cy = rr * std::sin(th);
        bmp.sigma = (0.25 + 0.25 * uni(rng)) * S;
        bmp.sign = uni(rng) < 0.5 ? -1.0 : 1.0;
      }
      std::vector<double> field(mesh.vertices.size(), 0.0);
      double peak = 0.0;
      for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        double f = 0.0;
        for (const auto& bmp : bumps) {
          double dx = mesh.vertices[i].x() - bmp.cx, dy = mesh.vertices[i].y() - bmp.cy;
          f += bmp.sign * std::exp(-(dx * dx + dy * dy) / (2.0 * bmp.sigma * bmp.sigma));
        }
        field[i] = f;
        peak = std::max(peak, std::abs(f));
      }
      if (peak > 0.0)
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
          mesh.vertices[i].z() += amp * S * field[i] / peak;
      for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
        if (mesh.boundary_flag[i]) mesh.vertices[i] *= S / mesh.vertices[i].norm();
      return mesh;
    }
    case MeshShape::Annulus: {
      double z0 = 0.5 * S;
      double wb = std::sqrt(S * S - z0 * z0);
      double A = catenoid_waist(z0, wb);
      int nz = resolution, nt = 6 * resolution;
      TriMesh mesh;
      mesh.S = S;
      mesh.vertices.reserve((nz + 1) * nt);
      for (int i = 0; i <= nz; ++i) {
        double z = -z0 + 2.0 * z0 * i / nz;
        double w = (i == 0 || i == nz) ? wb : A * std::cosh(z / A);
        for (int j = 0; j < nt; ++j) {
          double th = 2.0 * M_PI * j / nt;
          mesh.vertices.emplace_back(w * std::cos(th), w * std::sin(th), z);
        }
      }
      auto idx = [nt](int i, int j) { return i * nt + (j % nt); };
      for (int i = 0; i < nz; ++i) {
        for (int j = 0; j < nt; ++j) {
          mesh.triangles.push_back({idx(i, j), idx(i, j + 1), idx(i + 1, j)});
          mesh.triangles.push_back({idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j)});
        }
      }
      mesh.boundary_flag.assign(mesh.vertices.size(), 0);
      for (int j = 0; j < nt; ++j) {
        mesh.boundary_flag[idx(0, j)] = 1;
        mesh.boundary_flag[idx(nz, j)] = 1;
      }
      return mesh;
    }
  }
  throw std::logic_error("make_mesh");
}

double area_g(const TriMesh& mesh, const ConformalChart& chart) {
  std::vector<double> curved(mesh.triangles.size());
  parallel_for(mesh.triangles.size(), [&](std::size_t t) {
    TriEval e;
    const auto& tri = mesh.triangles[t];
    eval_triangle(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]], chart,
                  false, e);
    curved[t] = e.curved;
  });
  return pairwise_sum(curved);
}

double boundary_length_g(const TriMesh& mesh, const ConformalChart& chart) {
  auto edges = boundary_edges(mesh);
  if (edges.empty()) throw std::invalid_argument("boundary_length_g: mesh has no boundary");
  std::vector<double> lens(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vector3d& a = mesh.vertices[edges[i][0]];
    const Vector3d& b = mesh.vertices[edges[i][1]];
    lens[i] = (b - a).norm() * chart.rho((0.5 * (a + b)).norm());
  }
  return pairwise_sum(lens);
}

std::pair<TriMesh, SolveReport> minimize(const TriMesh& mesh, const ConformalChart& chart,
                                         const MinimizeOptions& opts) {
  TriMesh cur = mesh;
  SolveReport rep;
  Assembler asmb(cur, chart);
  const double h_mean = mean_edge_length(cur);
  const double tol = opts.grad_tol > 0.0 ? opts.grad_tol : 1.0 * h_mean * h_mean * h_mean;

  auto project = [&](std::vector<Vector3d>& g) {
    parallel_for(g.size(), [&](std::size_t v) {
      if (cur.boundary_flag[v]) {
        Vector3d rad = cur.vertices[v] / cur.vertices[v].norm();
        g[v] -= g[v].dot(rad) * rad;
      }
    });
  };
  auto max_norm = [](const std::vector<Vector3d>& g) {
    double m = 0.0;
    for (const auto& v : g) m = std::max(m, v.norm());
    return m;
  };

  std::vector<Vector3d> grad, grad_prev, x_prev;
  double min_flat = 0.0;
  double area = asmb.area(cur.vertices, &grad, &min_flat);
  project(grad);
  double t_prev = 0.0;

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    double res = max_norm(grad);
    rep.gradient_residual = res;
    if (opts.trace) opts.trace->push_back({static_cast<double>(iter), area, res});
    if (res <= tol) {
      rep.converged = true;
      break;
    }

    double t;
    if (iter == 0 || x_prev.empty()) {
      t = opts.step0_frac * h_mean / res;
    } else {
      double num = 0.0, den = 0.0;
      for (std::size_t v = 0; v < grad.size(); ++v) {
        Vector3d dx = cur.vertices[v] - x_prev[v];
        Vector3d dg = grad[v] - grad_prev[v];
        num += dx.dot(dg);
        den += dg.dot(dg);
      }
      t = (num > 0.0 && den > 0.0) ? num / den : 2.0 * t_prev;
      t = std::min(t, 10.0 * h_mean / res);
    }

    double g2 = 0.0;
    for (const auto& g : grad) g2 += g.squaredNorm();

    std::vector<Vector3d> cand(cur.vertices.size());
    double cand_area = area, cand_min_flat = min_flat;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      parallel_for(cur.vertices.size(), [&](std::size_t v) {
        Vector3d p = cur.vertices[v] - t * grad[v];
        if (cur.boundary_flag[v]) p *= cur.S / p.norm();
        cand[v] = p;
      });
      cand_area = asmb.area(cand, nullptr, &cand_min_flat);
      if (cand_area <= area - opts.armijo * t * g2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      rep.line_search_failed = true;
      break;
    }
    if (cand_min_flat < 1e-14) {
      rep.degenerated = true;  // keep the last healthy iterate
      break;
    }

    x_prev = cur.vertices;
    grad_prev = grad;
    cur.vertices.swap(cand);
    area = asmb.area(cur.vertices, &grad, &min_flat);
    project(grad);
    t_prev = t;
  }

  rep.iterations = iter;
  rep.area_g = area;
  rep.boundary_length_g = boundary_length_g(cur, chart);
  rep.bound = 2.0 * M_PI * chart_disk_potential(chart, cur.S);
  rep.gap = rep.area_g - rep.bound;
  rep.orthogonality_defect = orthogonality_defect(cur, chart);
  return {std::move(cur), rep};
}

double orthogonality_defect(const TriMesh& mesh, const ConformalChart&) {
  auto bedges = boundary_edges(mesh);
  if (bedges.empty()) throw std::invalid_argument("orthogonality_defect: mesh has no boundary");
  std::map<int, std::vector<int>> nbrs;
  for (const auto& e : bedges) {
    nbrs[e[0]].push_back(e[1]);
    nbrs[e[1]].push_back(e[0]);
  }
  // Area-weighted vertex normals and 1-ring centroids.
  std::vector<Vector3d> normal(mesh.vertices.size(), Vector3d::Zero());
  std::vector<Vector3d> ringsum(mesh.vertices.size(), Vector3d::Zero());
  std::vector<int> ringcnt(mesh.vertices.size(), 0);
  for (const auto& t : mesh.triangles) {
    Vector3d n = (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                     .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
    for (int k = 0; k < 3; ++k) {
      normal[t[k]] += n;
      ringsum[t[k]] += mesh.vertices[t[(k + 1) % 3]] + mesh.vertices[t[(k + 2) % 3]];
      ringcnt[t[k]] += 2;
    }
  }
  double worst = 0.0;
  for (const auto& [v, nb] : nbrs) {
    if (nb.size() != 2) continue;
    Vector3d tangent = (mesh.vertices[nb[0]] - mesh.vertices[nb[1]]).normalized();
    Vector3d n = normal[v];
    if (n.norm() < 1e-30) continue;
    Vector3d conormal = n.normalized().cross(tangent);
    Vector3d outward = mesh.vertices[v] - ringsum[v] / ringcnt[v];
    if (conormal.dot(outward) < 0.0) conormal = -conormal;
    Vector3d radial = mesh.vertices[v].normalized();
    double ang = std::acos(std::clamp(conormal.dot(radial), -1.0, 1.0));
    worst = std::max(worst, ang);
  }
  return worst;
}

double gauss_bonnet_defect(const TriMesh& mesh, const ConformalChart&) {
  std::vector<double> angle_sum(mesh.vertices.size(), 0.0);
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k)
      angle_sum[t[k]] += corner_angle(mesh.vertices[t[k]], mesh.vertices[t[(k + 1) % 3]],
                                      mesh.vertices[t[(k + 2) % 3]]);
  }
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      edge_count[{std::min(a, b), std::max(a, b)}]++;
    }
  int V = static_cast<int>(mesh.vertices.size());
  int E = static_cast<int>(edge_count.size());
  int F = static_cast<int>(mesh.triangles.size());
  int chi = V - E + F;
  double total = 0.0;
  for (int v = 0; v < V; ++v)
    total += (mesh.boundary_flag[v] ? M_PI : 2.0 * M_PI) - angle_sum[v];
  return std::abs(total - 2.0 * M_PI * chi);
}

double boundary_geodesic_curvature(const TriMesh& mesh, const ConformalChart& chart) {
  auto bedges = boundary_edges(mesh);
  if (bedges.empty()) throw std::invalid_argument("boundary_geodesic_curvature: no boundary");
  std::vector<double> angle_sum(mesh.vertices.size(), 0.0);
  // Edge -> its triangle and opposite vertex, for the in-plane outward normal.
  std::map<std::pair<int, int>, std::pair<int, int>> owner;  // (a,b) -> (tri, opp)
  for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int k = 0; k < 3; ++k) {
      angle_sum[tri[k]] += corner_angle(mesh.vertices[tri[k]], mesh.vertices[tri[(k + 1) % 3]],
                                        mesh.vertices[tri[(k + 2) % 3]]);
      owner[{tri[k], tri[(k + 1) % 3]}] = {t, tri[(k + 2) % 3]};
    }
  }
  double turning = 0.0;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    if (mesh.boundary_flag[v]) turning += M_PI - angle_sum[v];

  double corr = 0.0;
  for (const auto& e : bedges) {
    const Vector3d& a = mesh.vertices[e[0]];
    const Vector3d& b = mesh.vertices[e[1]];
    auto it = owner.find({e[0], e[1]});
    if (it == owner.end()) it = owner.find({e[1], e[0]});
    const Vector3d& opp = mesh.vertices[it->second.second];
    Vector3d mid = 0.5 * (a + b);
    Vector3d n_tri = (b - a).cross(opp - a);
    Vector3d n_edge = (b - a).cross(n_tri).normalized();
    if (n_edge.dot(opp - mid) > 0.0) n_edge = -n_edge;
    double mn = mid.norm();
    if (mn < 1e-14) continue;
    double dn_logrho = chart.rho_prime(mn) / chart.rho(mn) * mid.dot(n_edge) / mn;
    corr += dn_logrho * (b - a).norm();
  }
  return (turning + corr) / boundary_length_g(mesh, chart);
}

MeshValidation validate_mesh(const TriMesh& mesh) {
  MeshValidation val;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edges;  // key -> ordered uses
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      edges[{std::min(a, b), std::max(a, b)}].push_back({a, b});
    }
  val.manifold = true;
  val.oriented = true;
  std::vector<std::uint8_t> on_boundary(mesh.vertices.size(), 0);
  for (const auto& [key, uses] : edges) {
    if (uses.size() > 2) val.manifold = false;
    if (uses.size() == 2 && uses[0] == uses[1]) val.oriented = false;
    if (uses.size() == 1) {
      on_boundary[key.first] = 1;
      on_boundary[key.second] = 1;
    }
  }
  val.flags_consistent = true;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    if (on_boundary[v] != (mesh.boundary_flag[v] ? 1 : 0)) val.flags_consistent = false;
  val.boundary_on_sphere = true;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
    if (mesh.boundary_flag[v] && std::abs(mesh.vertices[v].norm() - mesh.S) > 1e-10)
      val.boundary_on_sphere = false;
  val.euler_characteristic = static_cast<int>(mesh.vertices.size()) -
                             static_cast<int>(edges.size()) +
                             static_cast<int>(mesh.triangles.size());
  val.min_triangle_area = std::numeric_limits<double>::infinity();
  for (const auto& t : mesh.triangles) {
    double a = 0.5 * (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                         .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]])
                         .norm();
    val.min_triangle_area = std::min(val.min_triangle_area, a);
  }
  return val;
}

std::vector<std::array<int, 2>> boundary_edges(const TriMesh& mesh) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      count[{std::min(a, b), std::max(a, b)}]++;
    }
  std::vector<std::array<int, 2>> out;
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (count[{std::min(a, b), std::max(a, b)}] == 1) out.push_back({a, b});
    }
  return out;
}

void write_obj(const TriMesh& mesh, std::ostream& os) {
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    os << buf;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(buf, sizeof(buf), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    os << buf;
  }
}

}  // namespace fbms
