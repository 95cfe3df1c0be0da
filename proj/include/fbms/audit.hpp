#pragma once
#include "fbms/fields.hpp"
#include "fbms/mesh.hpp"

namespace fbms {

// One run of the divergence-theorem chain on a discrete surface, with the
// eps-disk around the boundary singularity excised exactly as in the
// continuous argument: area >= int div = outer flux + inner-circle flux.
struct AuditRecord {
  double area_g = 0.0;
  double area_outside = 0.0;  // curved area of the mesh minus the eps-disk
  double div_integral = 0.0;
  double boundary_flux = 0.0;
  double singular_flux = 0.0;
  double bound = 0.0;  // 2 pi I(R)
  double gap = 0.0;
  double slack_pointwise = 0.0;      // area_outside - div_integral
  double divergence_residual = 0.0;  // div_integral - boundary_flux - singular_flux
  double eps = 0.0;
  int y_vertex = -1;
};

// field.y must coincide with a boundary vertex of the mesh; eps is a chart
// length and must cover at least ~5 local edge lengths around y.
AuditRecord calibration_audit(const TriMesh& mesh, const CalibrationField& field, double eps);

struct BoundCheck {
  bool pass = false;
  double area_g = 0.0;
  double bound = 0.0;
  double gap = 0.0;
};

// area_g vs 2 pi I(R); passes when the gap is above -1% of the bound.
BoundCheck area_bound_report(const TriMesh& mesh, const ConformalChart& chart,
                             const RadialGeometry& geom, double R);

struct IsoperimetricCheck {
  bool pass = false;
  double area_g = 0.0;
  double boundary_length_g = 0.0;
  double slack = 0.0;  // area - tan(R/2) * length
};

// Sphere chart only: area >= tan(R/2) * boundary length, within 1e-3 of
// the area.
IsoperimetricCheck isoperimetric_check(const TriMesh& mesh, const ConformalChart& chart, double R);

// Fraction of triangles whose tangent plane nearly contains the radial
// direction (grad_sigma_r_sq >= 0.99 at the centroid).
double equality_alignment(const TriMesh& mesh);

}  // namespace fbms
