#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ehcav/modes.hpp"
#include "ehcav/trig_poly.hpp"

namespace ehcav {

enum class FieldKind { Electric, Magnetic };
enum class LegSide { In, Out };

struct ExternalLeg {
  ModeId mode;
  LegSide side;
};

/// One monomial of the quartic interaction, written as two dotted pairs of
/// field slots: (s0.s1)(s2.s3). The four monomials carry weights
/// +1, -2, +1 and +4*beta relative to the common factor 4*kappa.
struct QuarticPattern {
  std::array<FieldKind, 4> slots;
  Rational weight;   // +1, -2, +1, +4
  bool beta_scaled;  // true for the (B.E)(B.E) monomial
  const char* name;
};

const std::array<QuarticPattern, 4>& quartic_patterns();

/// Contraction of a ladder operator with a field operator: scalar weight
/// times a spatial profile times exp(+-i omega t).
///   E: (+-i) sqrt(omega/2V) A(r),   B: 1/sqrt(2 omega V) curl A(r)
struct ContractionKernel {
  VectorTrigPoly spatial;  // A or curl A
  int i_phase;             // power of i: E out +1, E in +3 (= -1), B 0
  int omega_half_exp;      // omega exponent, in halves: E +1, B -1
  double omega;
  double frequency_sign;  // +1 out, -1 in (phase exp(+-i omega t))
};

ContractionKernel contraction_kernel(const ModeId& mode, FieldKind field,
                                     LegSide side, const CavityGeometry& geom,
                                     const LengthRep& rep);

/// One class of Wick pairings: multiplicity times a kernel product with its
/// collected scalar weight and net oscillation frequency.
struct ContractionTerm {
  int multiplicity = 0;
  TrigPoly kernel_product;           // dot(s0,s1) * dot(s2,s3)
  int i_phase = 0;                   // net power of i, 0..3
  double scalar = 0.0;               // 1/(4V^2) * prod omega^{+-1/2}
  std::optional<Surd> exact_scalar;  // same value, exact, when derivable
  double osc_frequency = 0.0;        // sum omega_out - sum omega_in
  std::string class_key;             // canonical pairing label
};

struct LegCountMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All perfect matchings of the four field slots onto the four external legs,
/// grouped into kernel classes with combinatorial multiplicities. Throws
/// LegCountMismatch unless exactly four legs are supplied (any other leg count
/// gives a vanishing amplitude at first order).
std::vector<ContractionTerm> enumerate_contractions(const QuarticPattern& pattern,
                                                    const std::vector<ExternalLeg>& legs,
                                                    const CavityGeometry& geom,
                                                    const LengthRep& rep);

/// Fock part of an external state: occupations per mode and side.
struct FockEntry {
  ModeId mode;
  int occupation = 1;
};

struct ExternalState {
  std::vector<FockEntry> in;
  std::vector<FockEntry> out;

  /// One leg per quantum, in declaration order.
  std::vector<ExternalLeg> expand() const;
  void validate() const;  // occupations positive, modes unique per side
};

/// Fock normalization prod 1/sqrt(m!) over both sides.
Surd state_prefactor_exact(const ExternalState& state);
double state_prefactor(const ExternalState& state);

/// Closed-form reduction of the coherent-state double sum for the channel
/// (pump coherent xi)^2 -> (partner coherent eta) + one signal quantum,
/// relative to the corresponding two-quantum Fock element:
/// sqrt(2) * xi^2 * conj(eta).
std::complex<double> coherent_reduction_factor(std::complex<double> xi,
                                               std::complex<double> eta);

}  // namespace ehcav
