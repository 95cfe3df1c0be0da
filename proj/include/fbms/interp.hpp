#pragma once
#include <vector>

namespace fbms {

// C2 cubic spline with not-a-knot ends. Derivatives of the evaluator are
// the analytic derivatives of the piecewise cubic.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double deriv(double t) const;
  double deriv2(double t) const;

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  bool empty() const { return x_.empty(); }

 private:
  int segment(double t) const;
  std::vector<double> x_, y_, c1_, c2_, c3_;  // y + a1*d + a2*d^2 + a3*d^3
};

// Monotone cubic Hermite (Fritsch-Carlson). Used for invertible tables;
// only C1, so it never backs an h'' evaluator.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double deriv(double t) const;

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

 private:
  int segment(double t) const;
  std::vector<double> x_, y_, m_;
};

}  // namespace fbms
