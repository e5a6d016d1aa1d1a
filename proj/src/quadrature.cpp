#include "ehcav/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ehcav {

std::vector<std::pair<double, double>> gauss_legendre_01(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_01: need n >= 1");
  std::vector<std::pair<double, double>> out(n);
  // Newton iteration on P_n over [-1,1], then map to [0,1].
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p0 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = (n == 1) ? x : p1;
      double pm = (n == 1) ? 1.0 : p0;
      pp = n * (x * pn - pm) / (x * x - 1.0);
      double dx = pn / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    out[i] = {0.5 * (x + 1.0), 0.5 * w};
  }
  return out;
}

namespace {

double factor_value(const AxisFactor& f, double u) {
  switch (f.kind) {
    case AxisFactor::Kind::Sin:
      return std::sin(M_PI * f.m * u);
    case AxisFactor::Kind::Cos:
      return std::cos(M_PI * f.m * u);
    default:
      return 1.0;
  }
}

void require_points(const TrigPoly& p, int n) {
  int need = 2 * p.max_harmonic() + 1;
  if (n < need)
    throw std::invalid_argument("integrate_numeric: points_per_axis below 2*max_harmonic+1");
}

}  // namespace

double integrate_numeric(const TrigPoly& p, const CavityGeometry& geom,
                         int points_per_axis) {
  require_points(p, points_per_axis);
  auto gl = gauss_legendre_01(points_per_axis);
  double total = 0.0;
  for (const auto& [key, coef] : p.terms()) {
    double t = coef.to_double(geom.lengths());
    for (int ax = 0; ax < 3; ++ax) {
      double s = 0.0;
      for (const auto& [u, w] : gl) s += w * factor_value(key.f[ax], u);
      t *= s * geom.lengths()[ax];
    }
    total += t;
  }
  return total;
}

double integrate_numeric_pointwise(const TrigPoly& p, const CavityGeometry& geom,
                                   int points_per_axis) {
  require_points(p, points_per_axis);
  auto gl = gauss_legendre_01(points_per_axis);
  double total = 0.0;
  for (const auto& [ux, wx] : gl)
    for (const auto& [uy, wy] : gl)
      for (const auto& [uz, wz] : gl)
        total += wx * wy * wz * p.evaluate({ux, uy, uz}, geom.lengths());
  return total * geom.volume();
}

int suggested_points(int max_harmonic) {
  int n = 2 * max_harmonic + 17;
  return n < 24 ? 24 : n;
}

}  // namespace ehcav
