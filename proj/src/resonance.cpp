#include "ehcav/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace ehcav {

AspectFamily AspectFamily::one_one_r() { return AspectFamily{}; }

AspectFamily AspectFamily::ab1(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("AspectFamily::ab1: a must be positive");
  AspectFamily f;
  f.kind_ = Kind::AB1;
  f.a_ = a;
  f.name_ = std::to_string(a) + ":b:1";
  return f;
}

void AspectFamily::line_coeffs(const ModeId& m, double& alpha, double& beta) const {
  validate_mode(m);
  if (m.is_one_d())
    throw std::invalid_argument("AspectFamily: box modes required");
  if (kind_ == Kind::OneOneR) {
    // (w Lz/pi)^2 = (n^2 + p^2) r^2 + q^2,  x = r^2
    alpha = (double)(m.n * m.n + m.p * m.p);
    beta = (double)(m.q * m.q);
  } else {
    // (w Lz/pi)^2 = p^2 / b^2 + n^2/a^2 + q^2,  x = 1/b^2
    alpha = (double)(m.p * m.p);
    beta = (double)(m.n * m.n) / (a_ * a_) + (double)(m.q * m.q);
  }
}

double AspectFamily::param_from_x(double x) const {
  return kind_ == Kind::OneOneR ? std::sqrt(x) : 1.0 / std::sqrt(x);
}

double AspectFamily::x_from_param(double p) const {
  return kind_ == Kind::OneOneR ? p * p : 1.0 / (p * p);
}

double AspectFamily::frequency(const ModeId& m, double param) const {
  double alpha, beta;
  line_coeffs(m, alpha, beta);
  return std::sqrt(alpha * x_from_param(param) + beta);
}

CavityGeometry AspectFamily::geometry(double param, double lz) const {
  if (kind_ == Kind::OneOneR) return CavityGeometry::unit_aspect(param, lz);
  return CavityGeometry(a_ * lz, param * lz, lz);
}

namespace {

struct Line {
  double alpha, beta;
  double operator()(double x) const { return std::sqrt(alpha * x + beta); }
};

/// 2 sqrt(P x + Q) - sqrt(A x + B) - sqrt(C x + D)
struct Mismatch {
  Line pump, s1, s2;
  double operator()(double x) const { return 2.0 * pump(x) - s1(x) - s2(x); }
};

void refine_bisect(const Mismatch& f, double lo, double hi, double rel_tol,
                   std::vector<double>& roots) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) {
    roots.push_back(lo);
    return;
  }
  if (fhi == 0.0) {
    roots.push_back(hi);
    return;
  }
  if ((flo > 0) == (fhi > 0)) return;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0 || (hi - lo) <= rel_tol * mid) {
      roots.push_back(mid);
      return;
    }
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  roots.push_back(0.5 * (lo + hi));
}

/// Candidate roots of the twice-squared form
/// [(4P-A-C)x + (4Q-B-D)]^2 = 4 (Ax+B)(Cx+D).
void quadratic_candidates(const Mismatch& f, std::vector<double>& xs) {
  double P = f.pump.alpha, Q = f.pump.beta;
  double A = f.s1.alpha, B = f.s1.beta;
  double C = f.s2.alpha, D = f.s2.beta;
  double E = 4.0 * P - A - C, F = 4.0 * Q - B - D;
  double c2 = E * E - 4.0 * A * C;
  double c1 = 2.0 * E * F - 4.0 * (A * D + B * C);
  double c0 = F * F - 4.0 * B * D;
  auto push = [&](double x) {
    if (std::isfinite(x) && x > 0.0) xs.push_back(x);
  };
  if (std::abs(c2) < 1e-30) {
    if (std::abs(c1) > 1e-30) push(-c0 / c1);
    return;
  }
  double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return;
  double s = std::sqrt(disc);
  // numerically stable pair
  double q = -0.5 * (c1 + (c1 >= 0 ? s : -s));
  push(q / c2);
  if (q != 0.0) push(c0 / q);
}

}  // namespace

SolveResult aspect_ratio_for_resonance(const ModeId& pump, const ModeId& sig1,
                                       const ModeId& sig2, const AspectFamily& family,
                                       const SolveOptions& opts) {
  Mismatch f;
  family.line_coeffs(pump, f.pump.alpha, f.pump.beta);
  family.line_coeffs(sig1, f.s1.alpha, f.s1.beta);
  family.line_coeffs(sig2, f.s2.alpha, f.s2.beta);

  SolveResult res;
  if (opts.param_min >= opts.param_max) return res;

  double x_lo = std::min(family.x_from_param(opts.param_min),
                         family.x_from_param(opts.param_max));
  double x_hi = std::max(family.x_from_param(opts.param_min),
                         family.x_from_param(opts.param_max));

  // identically satisfied condition (e.g. both signals equal to the pump)
  bool all_zero = true;
  for (int i = 0; i <= 8 && all_zero; ++i) {
    double x = x_lo * std::pow(x_hi / x_lo, i / 8.0);
    all_zero = std::abs(f(x)) <= 1e-13 * (2.0 * f.pump(x));
  }
  if (all_zero) {
    res.status = ResonanceStatus::Degenerate;
    return res;
  }

  std::vector<double> roots;
  int n = std::max(opts.grid_points, 2);
  double prev_x = x_lo;
  double step = std::pow(x_hi / x_lo, 1.0 / (n - 1));
  for (int i = 1; i < n; ++i) {
    double x = (i + 1 == n) ? x_hi : prev_x * step;
    refine_bisect(f, prev_x, x, opts.rel_tol, roots);
    prev_x = x;
  }

  // algebraic candidates catch roots the grid may straddle tangentially
  std::vector<double> cands;
  quadratic_candidates(f, cands);
  for (double x : cands) {
    if (x < x_lo || x > x_hi) continue;
    double lo = x * (1.0 - 1e-6), hi = x * (1.0 + 1e-6);
    std::size_t before = roots.size();
    refine_bisect(f, std::max(lo, x_lo), std::min(hi, x_hi), opts.rel_tol, roots);
    if (roots.size() == before && std::abs(f(x)) <= 1e-12 * (2.0 * f.pump(x)))
      roots.push_back(x);  // tangency without a sign change
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> params;
  for (double x : roots) {
    double p = family.param_from_x(x);
    if (std::abs(f(x)) > 1e-11 * (2.0 * f.pump(x))) continue;  // spurious
    bool dup = false;
    for (double q : params) dup = dup || std::abs(p - q) <= 1e-11 * q;
    if (!dup) params.push_back(p);
  }
  std::sort(params.begin(), params.end());
  if (!params.empty()) {
    res.status = ResonanceStatus::Hits;
    res.params = std::move(params);
  }
  return res;
}

namespace {

std::vector<ModeId> box_modes_up_to(int max_index) {
  std::vector<ModeId> modes;
  for (int n = 0; n <= max_index; ++n)
    for (int p = 0; p <= max_index; ++p)
      for (int q = 0; q <= max_index; ++q) {
        ModeId te = ModeId::te(n, p, q);
        if (is_valid_mode(te)) modes.push_back(te);
        ModeId tm = ModeId::tm(n, p, q);
        if (is_valid_mode(tm)) modes.push_back(tm);
      }
  return modes;
}

bool hit_less(const ResonanceHit& a, const ResonanceHit& b) {
  if (a.r != b.r) return a.r < b.r;
  if (auto c = a.pump <=> b.pump; c != 0) return c < 0;
  if (auto c = a.sig1 <=> b.sig1; c != 0) return c < 0;
  return a.sig2 < b.sig2;
}

}  // namespace

std::vector<ResonanceHit> scan_resonances(int max_index, const ScanOptions& opts) {
  if (max_index < 1 || max_index > 8)
    throw std::invalid_argument("scan_resonances: max_index must be in 1..8");
  auto modes = box_modes_up_to(max_index);
  AspectFamily family = AspectFamily::one_one_r();

  SolveOptions sopts;
  sopts.param_min = opts.param_min;
  sopts.param_max = opts.param_max;
  sopts.grid_points = opts.grid_points;

  auto worker = [&](std::size_t begin, std::size_t end) {
    std::vector<ResonanceHit> hits;
    for (std::size_t pi = begin; pi < end; ++pi) {
      const ModeId& pump = modes[pi];
      for (std::size_t i = 0; i < modes.size(); ++i) {
        for (std::size_t j = i; j < modes.size(); ++j) {
          auto res = aspect_ratio_for_resonance(pump, modes[i], modes[j], family, sopts);
          if (res.status != ResonanceStatus::Hits) continue;
          for (double r : res.params) {
            double wp = family.frequency(pump, r);
            double w1 = family.frequency(modes[i], r);
            double w2 = family.frequency(modes[j], r);
            hits.push_back({pump, modes[i], modes[j], family.name(), r,
                            std::abs(2.0 * wp - w1 - w2) * M_PI});
          }
        }
      }
    }
    return hits;
  };

  unsigned nthreads = opts.threads > 0 ? (unsigned)opts.threads
                                       : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, (unsigned)modes.size());
  std::vector<std::future<std::vector<ResonanceHit>>> futures;
  std::size_t chunk = (modes.size() + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    std::size_t b = t * chunk, e = std::min(modes.size(), b + chunk);
    if (b >= e) break;
    futures.push_back(std::async(std::launch::async, worker, b, e));
  }
  std::vector<ResonanceHit> all;
  for (auto& f : futures) {
    auto part = f.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), hit_less);
  return all;
}

}  // namespace ehcav
