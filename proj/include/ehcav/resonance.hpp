#pragma once

#include <string>
#include <vector>

#include "ehcav/modes.hpp"

namespace ehcav {

/// One-parameter rectangular families over which the energy-conservation
/// condition 2 w_pump = w_sig1 + w_sig2 is solved. Frequencies are taken in
/// units of pi/Lz, where they depend only on the shape parameter.
class AspectFamily {
 public:
  /// Lx = Ly = Lz / r, parameter r.
  static AspectFamily one_one_r();
  /// (a : b : 1) with a = Lx/Lz fixed, parameter b = Ly/Lz.
  static AspectFamily ab1(double a);

  /// w * Lz / pi at shape parameter `param`.
  double frequency(const ModeId& mode, double param) const;
  CavityGeometry geometry(double param, double lz) const;
  const std::string& name() const { return name_; }

  /// x-space representation: (w Lz/pi)^2 = alpha * x + beta with
  /// x = param^2 (1:1:r) or x = 1/param^2 (a:b:1).
  void line_coeffs(const ModeId& mode, double& alpha, double& beta) const;
  double param_from_x(double x) const;
  double x_from_param(double p) const;

 private:
  enum class Kind { OneOneR, AB1 } kind_ = Kind::OneOneR;
  double a_ = 1.0;
  std::string name_ = "1:1:r";
};

struct ResonanceHit {
  ModeId pump, sig1, sig2;
  std::string family;
  double r = 0.0;        // shape parameter at the solution
  double residual = 0.0; // |2 w_p - w_1 - w_2| at the solution, units pi/Lz
};

struct SolveOptions {
  double param_min = 1e-3;
  double param_max = 100.0;
  int grid_points = 10000;  // log-spaced bracketing grid
  double rel_tol = 1e-14;
};

enum class ResonanceStatus { Hits, None, Degenerate };

struct SolveResult {
  ResonanceStatus status = ResonanceStatus::None;
  std::vector<double> params;  // ascending; empty unless status == Hits
};

/// Finds every shape parameter in range solving 2 w_pump = w_sig1 + w_sig2.
/// Bracketing on the grid plus the algebraic candidates of the twice-squared
/// quadratic, refined by bisection. An identically satisfied condition is
/// flagged Degenerate and excluded from hits.
SolveResult aspect_ratio_for_resonance(const ModeId& pump, const ModeId& sig1,
                                       const ModeId& sig2,
                                       const AspectFamily& family = AspectFamily::one_one_r(),
                                       const SolveOptions& opts = {});

struct ScanOptions {
  double param_min = 1e-3;
  double param_max = 100.0;
  int grid_points = 64;  // scan triples are cheap to pre-filter
  int threads = 0;       // 0 = hardware concurrency
};

/// Enumerates all valid (pump, sig1 <= sig2) triples with indices up to
/// max_index over the 1:1:r family and returns the deduplicated hits sorted
/// by (r, pump, signals). Deterministic across runs and thread counts.
std::vector<ResonanceHit> scan_resonances(int max_index, const ScanOptions& opts = {});

}  // namespace ehcav
