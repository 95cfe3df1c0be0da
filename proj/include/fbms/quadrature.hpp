#pragma once
#include <functional>
#include <vector>

namespace fbms {

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n; machine-precision for n <= 64.
const GaussRule& gauss_legendre(int n);

// Fixed-order Gauss-Legendre on [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n = 20);

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 48;
};

// Adaptive bisection with a GL10-vs-GL20 error estimate per panel.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadOptions& opt = {});

}  // namespace fbms
