#pragma once

#include <complex>

#include "ehcav/wick.hpp"

namespace ehcav {

struct Couplings {
  double kappa = 1.0;
  double beta = 0.0;
};

enum class ProcessKind { Merge3to1OneD, Merge3to1Box, Scatter2to2 };

/// Fully specified transition between cavity states.
/// For merge processes the legs enter as plain operator insertions (no
/// occupation normalization), matching the combinatorial convention of the
/// bracket values; the 2->2 scattering applies the 1/sqrt(m!) prefactors.
struct ProcessSpec {
  ProcessKind kind;
  CavityGeometry geom;
  ExternalState state;
  bool normalized_states;

  /// Three pump quanta with polarizations (i, j, l) and harmonics (n, n, p)
  /// merging into the (2n+p) harmonic with polarization s.
  static ProcessSpec merge_1d(const CavityGeometry& geom, int n, int p, Axis pol_i,
                              Axis pol_j, Axis pol_l, Axis pol_s);
  /// Two quanta of `pump` plus one of `second` merging into the sum-index mode
  /// of family `out_family` in a box cavity.
  static ProcessSpec merge_box(const CavityGeometry& geom, const ModeId& pump,
                               const ModeId& second, ModeFamily out_family);
  /// Two quanta of `pump` scattering into `sig1` + `sig2`.
  static ProcessSpec scatter_2to2(const CavityGeometry& geom, const ModeId& pump,
                                  const ModeId& sig1, const ModeId& sig2);

  double sum_omega_in() const;
  double sum_omega_out() const;
};

/// Matrix element value split by electromagnetic invariant:
/// M = c_f4 * kappa + c_ffdual * kappa * beta.
struct ExactOrFloat {
  std::optional<SurdSum> exact;
  double value = 0.0;
  bool is_exact_zero() const { return exact && exact->is_zero(); }
};

struct AmplitudeValue {
  ExactOrFloat c_f4;
  ExactOrFloat c_ffdual;
  bool resonant = true;
  double frequency_mismatch = 0.0;  // |sum w_in - sum w_out|
  double total(const Couplings& c) const {
    return c.kappa * (c_f4.value + c.beta * c_ffdual.value);
  }
};

/// Assembles the first-order S-matrix element (with the global i and the
/// energy delta stripped): sums all Wick contraction classes of the four
/// quartic monomials, integrates over the box and collects the per-invariant
/// coefficients. Off-resonance processes are flagged, not zeroed.
AmplitudeValue matrix_element(const ProcessSpec& spec);

/// The four bracket values of the 2->2 element, each including the global
/// 4*kappa and the state normalization:
///   M = e4 - 2*b2e2 + b4 + 4*beta*be2.
struct Scatter2to2Brackets {
  double e4 = 0.0;
  double b4 = 0.0;
  double b2e2 = 0.0;
  double be2 = 0.0;
  double total(double beta) const { return e4 - 2.0 * b2e2 + b4 + 4.0 * beta * be2; }
};

Scatter2to2Brackets scatter_2to2_components(const CavityGeometry& geom,
                                            const ModeId& pump, const ModeId& sig1,
                                            const ModeId& sig2, double kappa);

/// Exact per-monomial bracket values of the 1-D merge, in units of the
/// inverse transverse area (the common S is divided out). b2e2 already
/// carries the -2 weight of its monomial, so the beta-independent part of the
/// amplitude is the plain sum ee_sq + b2e2 + bb_sq.
struct Merge3to1Brackets {
  SurdSum ee_sq;    // <(E.E)^2>
  SurdSum bb_sq;    // <(B.B)^2>
  SurdSum b2e2;     // <-2 B^2 E^2>
  SurdSum eb_sq;    // <(B.E)^2>
  SurdSum e4_assembled;  // kappa-coefficient of the (E.E)^2 S-matrix piece
  SurdSum total(const Rational& beta) const {
    return ee_sq + b2e2 + bb_sq + eb_sq * (beta * Rational(4));
  }
};

/// Polarizations (i, j, l) for the pump legs (harmonics n, n, p) and s for
/// the outgoing (2n+p) harmonic. `out_harmonic`, when supplied, must equal
/// 2n+p; anything else is rejected.
Merge3to1Brackets merge_3to1_term(const CavityGeometry& geom, int n, int p,
                                  Axis pol_i, Axis pol_j, Axis pol_l, Axis pol_s,
                                  int out_harmonic = -1);

/// sqrt(2) * xi^2 * conj(eta) * M_{2->2} for the coherent-pump channel.
std::complex<double> coherent_amplitude(std::complex<double> xi,
                                        std::complex<double> eta,
                                        const CavityGeometry& geom,
                                        const Couplings& couplings);

}  // namespace ehcav
