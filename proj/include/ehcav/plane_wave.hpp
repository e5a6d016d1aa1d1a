#pragma once

#include <complex>

#include "ehcav/amplitudes.hpp"
#include "ehcav/vertex.hpp"

namespace ehcav {

/// Outcome of decomposing a merging process onto traveling waves:
/// the cavity matrix element is re-expressed as a finite sum of plane-wave
/// vertex amplitudes filtered by 4-momentum conservation.
struct PlaneWaveReport {
  int total_tuples = 0;
  int survivors = 0;
  bool all_collinear = true;
  bool signs_aligned = true;                    // all survivor weights equal
  std::complex<double> reduced_factor{0.0};     // sum of survivor weights
  std::complex<double> plane_wave_sum{0.0};     // sum of weight * vertex
  double cavity_value = 0.0;                    // engine amplitude at couplings
  bool cavity_exact_zero = false;
  bool consistent = false;
};

/// Decomposes every leg of a 3->1 merging process into plane waves, keeps the
/// 4-momentum conserving tuples and sums their vertex amplitudes; the result
/// is compared against the direct cavity-mode evaluation.
PlaneWaveReport planewave_consistency(const ProcessSpec& spec, const Couplings& c);

}  // namespace ehcav
