#pragma once
#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fbms/radial.hpp"

namespace fbms {

using Eigen::Vector3d;

// Discrete surface in the conformal chart. Boundary vertices live on the
// sphere |x| = S and slide on it during minimization.
struct TriMesh {
  std::vector<Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::uint8_t> boundary_flag;
  double S = 0.0;
};

enum class MeshShape { FlatDisk, TiltedDisk, PerturbedDisk, Annulus };

MeshShape mesh_shape_from_name(const std::string& name);
std::string mesh_shape_name(MeshShape s);

// flat-disk: planar disk through the origin. tilted-disk: planar disk in
// the plane <x, n> = amplitude * S, boundary on |x| = S (its tangent
// planes miss the radial direction, so it is not free-boundary critical).
// perturbed-disk: flat disk plus seeded smooth normal noise of the given
// amplitude, boundary re-projected to the sphere. annulus: catenoid-like
// band with both boundary circles on |x| = S.
TriMesh make_mesh(MeshShape shape, double S, int resolution, std::uint64_t seed = 0,
                  double amplitude = 0.0);

// Curved area: per-triangle euclidean area times the 3-point mid-edge
// average of rho^2 (exact for quadratic integrands).
double area_g(const TriMesh& mesh, const ConformalChart& chart);

// Curved boundary length: euclidean edge lengths weighted by rho at the
// edge midpoint.
double boundary_length_g(const TriMesh& mesh, const ConformalChart& chart);

struct MinimizeOptions {
  int max_iter = 5000;
  double grad_tol = 0.0;   // <= 0: scale-aware default, see minimize()
  double armijo = 1e-4;
  double step0_frac = 0.2;  // first trial step moves at most this * mean edge
  std::vector<std::array<double, 3>>* trace = nullptr;  // (iter, area, residual)
};

struct SolveReport {
  double area_g = 0.0;
  double boundary_length_g = 0.0;
  double bound = 0.0;  // 2 pi I(R)
  double gap = 0.0;    // area_g - bound
  double orthogonality_defect = 0.0;  // radians
  double gradient_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  bool line_search_failed = false;
  bool degenerated = false;
};

// Projected gradient descent on area_g. Interior vertices move along the
// negative gradient; boundary vertices move tangentially to |x| = S and
// are re-projected. Backtracking keeps the area sequence monotone.
std::pair<TriMesh, SolveReport> minimize(const TriMesh& mesh, const ConformalChart& chart,
                                         const MinimizeOptions& opts = {});

// Max over boundary vertices of the angle between the discrete outward
// conormal and the radial direction (euclidean angle; conformally
// invariant).
double orthogonality_defect(const TriMesh& mesh, const ConformalChart& chart);

// |sum of angle defects + boundary turning - 2 pi chi|; exact combinatorial
// identity, useful as a topology/bookkeeping check.
double gauss_bonnet_defect(const TriMesh& mesh, const ConformalChart& chart);

// Length-weighted mean geodesic curvature of the boundary in g: euclidean
// turning plus the conformal correction int dn(log rho), over the curved
// length.
double boundary_geodesic_curvature(const TriMesh& mesh, const ConformalChart& chart);

struct MeshValidation {
  bool manifold = false;
  bool oriented = false;
  bool boundary_on_sphere = false;
  bool flags_consistent = false;
  int euler_characteristic = 0;
  double min_triangle_area = 0.0;
  bool ok() const {
    return manifold && oriented && boundary_on_sphere && flags_consistent &&
           min_triangle_area >= 1e-14;
  }
};

MeshValidation validate_mesh(const TriMesh& mesh);

std::vector<std::array<int, 2>> boundary_edges(const TriMesh& mesh);

void write_obj(const TriMesh& mesh, std::ostream& os);

}  // namespace fbms
