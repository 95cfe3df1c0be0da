#include "fbms/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fbms {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = static_cast<int>(x_.size());
  if (n < 4 || y_.size() != x_.size()) throw std::invalid_argument("CubicSpline: need >= 4 nodes");
  for (int i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("CubicSpline: abscissae not increasing");

  // Node second derivatives M_i with not-a-knot ends. The end conditions
  //   h1 M0 = (h0+h1) M1 - h0 M2,   h_{n-3} M_{n-1} = (h_{n-3}+h_{n-2}) M_{n-2} - h_{n-2} M_{n-3}
  // are substituted into the first/last interior rows, leaving a
  // tridiagonal system in M_1..M_{n-2}.
  std::vector<double> h(n - 1), m(n);
  for (int i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

  const int k = n - 2;  // interior unknowns
  std::vector<double> a(k), b(k), c(k), d(k);
  for (int i = 1; i <= k; ++i) {
    a[i - 1] = h[i - 1];
    b[i - 1] = 2.0 * (h[i - 1] + h[i]);
    c[i - 1] = h[i];
    d[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  b[0] += h[0] * (h[0] + h[1]) / h[1];
  c[0] -= h[0] * h[0] / h[1];
  a[0] = 0.0;
  b[k - 1] += h[n - 2] * (h[n - 3] + h[n - 2]) / h[n - 3];
  a[k - 1] -= h[n - 2] * h[n - 2] / h[n - 3];
  c[k - 1] = 0.0;

  for (int i = 1; i < k; ++i) {
    double f = a[i] / b[i - 1];
    b[i] -= f * c[i - 1];
    d[i] -= f * d[i - 1];
  }
  m[k] = d[k - 1] / b[k - 1];
  for (int i = k - 1; i >= 1; --i) m[i] = (d[i - 1] - c[i - 1] * m[i + 1]) / b[i - 1];
  m[0] = ((h[0] + h[1]) * m[1] - h[0] * m[2]) / h[1];
  m[n - 1] = ((h[n - 3] + h[n - 2]) * m[n - 2] - h[n - 2] * m[n - 3]) / h[n - 3];

  c1_.resize(n - 1);
  c2_.resize(n - 1);
  c3_.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    c1_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
    c2_[i] = m[i] / 2.0;
    c3_[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
  }
}

int CubicSpline::segment(double t) const {
  int n = static_cast<int>(x_.size());
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  int i = static_cast<int>(it - x_.begin()) - 1;
  return std::clamp(i, 0, n - 2);
}

double CubicSpline::operator()(double t) const {
  int i = segment(t);
  double d = t - x_[i];
  return y_[i] + d * (c1_[i] + d * (c2_[i] + d * c3_[i]));
}

double CubicSpline::deriv(double t) const {
  int i = segment(t);
  double d = t - x_[i];
  return c1_[i] + d * (2.0 * c2_[i] + 3.0 * d * c3_[i]);
}

double CubicSpline::deriv2(double t) const {
  int i = segment(t);
  double d = t - x_[i];
  return 2.0 * c2_[i] + 6.0 * d * c3_[i];
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = static_cast<int>(x_.size());
  if (n < 2 || y_.size() != x_.size()) throw std::invalid_argument("MonotoneCubic: need >= 2 nodes");
  std::vector<double> h(n - 1), delta(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    if (!(h[i] > 0)) throw std::invalid_argument("MonotoneCubic: abscissae not increasing");
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  m_.assign(n, 0.0);
  m_[0] = delta[0];
  m_[n - 1] = delta[n - 2];
  for (int i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      m_[i] = 0.0;
    } else {
      double w1 = 2.0 * h[i] + h[i - 1];
      double w2 = h[i] + 2.0 * h[i - 1];
      m_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // Fritsch-Carlson clamp.
  for (int i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m_[i] = m_[i + 1] = 0.0;
    } else {
      double alpha = m_[i] / delta[i], beta = m_[i + 1] / delta[i];
      double s = alpha * alpha + beta * beta;
      if (s > 9.0) {
        double tau = 3.0 / std::sqrt(s);
        m_[i] = tau * alpha * delta[i];
        m_[i + 1] = tau * beta * delta[i];
      }
    }
  }
}

int MonotoneCubic::segment(double t) const {
  int n = static_cast<int>(x_.size());
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  int i = static_cast<int>(it - x_.begin()) - 1;
  return std::clamp(i, 0, n - 2);
}

double MonotoneCubic::operator()(double t) const {
  int i = segment(t);
  double h = x_[i + 1] - x_[i];
  double u = (t - x_[i]) / h;
  double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  double h10 = u * (1 - u) * (1 - u);
  double h01 = u * u * (3 - 2 * u);
  double h11 = u * u * (u - 1);
  return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::deriv(double t) const {
  int i = segment(t);
  double h = x_[i + 1] - x_[i];
  double u = (t - x_[i]) / h;
  double d00 = 6 * u * (u - 1) / h;
  double d10 = (1 - u) * (1 - 3 * u);
  double d01 = -6 * u * (u - 1) / h;
  double d11 = u * (3 * u - 2);
  return d00 * y_[i] + d10 * m_[i] + d01 * y_[i + 1] + d11 * m_[i + 1];
}

}  // namespace fbms
