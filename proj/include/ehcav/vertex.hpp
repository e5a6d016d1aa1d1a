#pragma once

#include <array>
#include <complex>
#include <vector>

namespace ehcav {

/// Massless plane-wave leg for the tree-level four-photon vertex.
/// The 4-momentum is (omega, k) with omega = |k|; the polarization 4-vector
/// is (0, e) with e.k = 0.
struct PlaneWaveLeg {
  std::array<double, 4> k;                  // (omega, kx, ky, kz)
  std::array<std::complex<double>, 4> eps;  // polarization
  bool outgoing = false;

  static PlaneWaveLeg make(const std::array<double, 3>& kvec,
                           const std::array<std::complex<double>, 3>& pol,
                           bool outgoing);
};

/// Tree-level contraction of the quartic invariants
/// kappa[(F F)^2 + beta (F Fdual)^2] over four external plane waves, with
/// each field strength replaced by i(k_mu eps_nu - k_nu eps_mu) (conjugated
/// for outgoing legs). Explicit component loops over the 4-tensors.
/// Throws unless 4-momentum is conserved to 1e-12 (relative) and every leg is
/// massless and transverse.
std::complex<double> eh_four_photon_vertex(const std::array<PlaneWaveLeg, 4>& legs,
                                           double kappa, double beta);

/// Validation helpers exposed for tests.
double momentum_violation(const std::array<PlaneWaveLeg, 4>& legs);

}  // namespace ehcav
