#include "fbms/threshold.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fbms/fields.hpp"

namespace fbms {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

StarMax star_max(const RadialGeometry& geom, double R, int grid_n) {
  if (!(R > 0.0) || R >= geom.profile.r_max) throw std::domain_error("star_max: R out of domain");
  if (grid_n < 8) throw std::invalid_argument("star_max: grid too coarse");
  StarMax best;
  best.value = -kInf;
  for (int j = 1; j <= grid_n; ++j) {
    double r = R * j / grid_n;
    double v = star_term(geom, r, R);
    if (v > best.value) {
      best.value = v;
      best.binding_r = r;
    }
  }
  // One refinement pass around the grid maximizer.
  double lo = std::max(best.binding_r - R / grid_n, R * 1e-12);
  double hi = std::min(best.binding_r + R / grid_n, R);
  for (int j = 0; j <= 64; ++j) {
    double r = lo + (hi - lo) * j / 64.0;
    double v = star_term(geom, r, R);
    if (v > best.value) {
      best.value = v;
      best.binding_r = r;
    }
  }
  return best;
}

ThresholdReport find_R_bar(const RadialGeometry& geom, const ConformalChart& chart, double tol,
                           int grid_n) {
  ThresholdReport rep;
  rep.grid_n = grid_n;
  const double r_max = geom.profile.r_max;
  const bool bounded = std::isfinite(r_max);

  double R0 = std::min(bounded ? 0.5 * r_max : 1.0, 1.0);
  auto ok = [&](double R) { return star_max(geom, R, grid_n).value <= 0.0; };

  // Flat degeneracy: (*) identically zero.
  {
    StarMax a = star_max(geom, R0, grid_n);
    StarMax b = star_max(geom, 1.7 * R0 < r_max ? 1.7 * R0 : 0.3 * R0, grid_n);
    if (std::abs(a.value) <= 1e-13 && std::abs(b.value) <= 1e-13) {
      rep.found = true;
      rep.identically_zero = true;
      rep.at_domain_bound = true;
      rep.R_bar = r_max;
      rep.S_bar = bounded ? chart.s_of_r(r_max * (1.0 - 1e-9)) : kInf;
      return rep;
    }
  }

  double lo, hi;
  if (ok(R0)) {
    lo = R0;
    hi = R0;
    bool bracketed = false;
    for (int k = 0; k < 60; ++k) {
      double next = std::min(2.0 * hi, bounded ? r_max * (1.0 - 1e-9) : 2.0 * hi);
      if (next <= hi) break;
      if (ok(next)) {
        lo = next;
        hi = next;
        if (bounded && next >= r_max * (1.0 - 2e-9)) {
          rep.at_domain_bound = true;
          break;
        }
      } else {
        hi = next;
        bracketed = true;
        break;
      }
    }
    if (!bracketed && rep.at_domain_bound) {
      rep.found = true;
      rep.R_bar = lo;
      StarMax sm = star_max(geom, lo, grid_n);
      rep.binding_r = sm.binding_r;
      rep.certificate_below = star_max(geom, lo * (1.0 - 1e-3), grid_n).value;
      rep.S_bar = chart.s_of_r(lo);
      return rep;
    }
    if (!bracketed) {
      // Unbounded domain and the predicate never failed along the doubling.
      rep.found = true;
      rep.at_domain_bound = true;
      rep.R_bar = lo;
      rep.S_bar = chart.s_of_r(lo);
      return rep;
    }
  } else {
    hi = R0;
    lo = 0.0;
    double probe = R0;
    for (int k = 0; k < 60 && lo == 0.0; ++k) {
      probe *= 0.5;
      if (probe < tol) break;
      if (ok(probe)) lo = probe;
      else hi = probe;
    }
    if (lo == 0.0) return rep;  // no admissible radius at this resolution
  }

  for (int it = 0; it < 60 && hi - lo > tol * 0.5; ++it) {
    double mid = 0.5 * (lo + hi);
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }

  rep.found = true;
  rep.R_bar = lo;
  StarMax sm = star_max(geom, lo, grid_n);
  rep.binding_r = sm.binding_r;
  rep.certificate_below = star_max(geom, lo * (1.0 - 1e-3), grid_n).value;
  double above = lo * (1.0 + 1e-3);
  if (above < r_max) rep.certificate_above = star_max(geom, above, grid_n).value;
  rep.S_bar = chart.s_of_r(lo);
  return rep;
}

double gaussian_root_reference() {
  auto f = [](double r) {
    double r2 = r * r;
    return 8.0 + r2 * r2 - std::exp(0.5 * r2) * (8.0 - 4.0 * r2 + r2 * r2);
  };
  double lo = 1.0, hi = 2.0;  // f(1) > 0 > f(2); the double root at 0 is excluded
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double conformal_scalar_curvature(const ConformalChart& chart, double s) {
  if (s < 0.0 || s >= chart.s_max) throw std::domain_error("conformal_scalar_curvature: s out of domain");
  double rho = chart.rho(s);
  double delta = 1e-5;
  double rho2;
  if (s >= delta)
    rho2 = (chart.rho_prime(s + delta) - chart.rho_prime(s - delta)) / (2.0 * delta);
  else
    rho2 = (-3.0 * chart.rho_prime(s) + 4.0 * chart.rho_prime(s + delta) -
            chart.rho_prime(s + 2.0 * delta)) /
           (2.0 * delta);
  double lp = s > 1e-9 ? chart.rho_prime(s) / rho : 0.0;       // (ln rho)'
  double lpp = rho2 / rho - lp * lp;                           // (ln rho)''
  double lap = s > 1e-9 ? lpp + 2.0 * chart.rho_prime_over_s(s) / rho : 3.0 * lpp;
  return (-4.0 * lap - 2.0 * lp * lp) / (rho * rho);
}

}  // namespace fbms
