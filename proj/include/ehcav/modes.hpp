#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ehcav/geometry.hpp"
#include "ehcav/trig_poly.hpp"

namespace ehcav {

enum class ModeFamily { TE, TM, OneDY, OneDZ };

struct InvalidMode : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Identity of a cavity eigenmode: family plus integer indices.
/// The 1-D families use a single index n (harmonic along x) with the
/// polarization carried by the family tag.
struct ModeId {
  ModeFamily family = ModeFamily::TE;
  int n = 0, p = 0, q = 0;

  bool is_one_d() const {
    return family == ModeFamily::OneDY || family == ModeFamily::OneDZ;
  }
  Axis polarization() const {  // 1-D families only
    return family == ModeFamily::OneDY ? Axis::Y : Axis::Z;
  }

  static ModeId te(int n, int p, int q) { return {ModeFamily::TE, n, p, q}; }
  static ModeId tm(int n, int p, int q) { return {ModeFamily::TM, n, p, q}; }
  static ModeId one_d(Axis pol, int n) {
    return {pol == Axis::Y ? ModeFamily::OneDY : ModeFamily::OneDZ, n, 0, 0};
  }

  /// Text forms: TE011, TM130, 1D-y:3.
  static ModeId parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const ModeId&, const ModeId&) = default;
  friend auto operator<=>(const ModeId&, const ModeId&) = default;
};

/// Accepts exactly the index sets for which the eigenfunction is nonzero:
/// TM needs n,p >= 1 (q >= 0); TE needs q >= 1 and not n = p = 0; 1-D needs
/// n >= 1. Indices are bounded by TrigPoly::kMaxHarmonic.
void validate_mode(const ModeId& mode);
bool is_valid_mode(const ModeId& mode) noexcept;

/// Eigenfrequency omega = sqrt(kx^2 + ky^2 + kz^2); pi n / Lx for 1-D modes.
double mode_frequency(const CavityGeometry& geom, const ModeId& mode);

/// omega^2 / pi^2 as an exact rational (requires exact lengths).
Rational omega_sq_over_pi2(const CavityGeometry& geom, const ModeId& mode);

/// omega^2 / pi^2 as a symbolic length monomial where one exists
/// (1-D modes: n^2 / Lx^2).
std::optional<Surd> omega_sq_over_pi2_symbolic(const ModeId& mode);

/// True when the eigenprofile's prefactors reduce to surd monomials with the
/// lengths kept symbolic (all 1-D modes; TE with n=0 or p=0; TM with q=0).
bool profile_is_symbolic(const ModeId& mode);

/// Dimensionless eigenprofile of the electric field, normalized so that
/// the squared profile integrates to V over the box. Exact coefficients;
/// `rep` selects symbolic length monomials or substituted rational lengths.
VectorTrigPoly electric_profile(const CavityGeometry& geom, const ModeId& mode,
                                const LengthRep& rep);
/// Picks the symbolic representation when available, otherwise substitutes
/// the geometry's exact rational lengths.
VectorTrigPoly electric_profile(const CavityGeometry& geom, const ModeId& mode);

/// curl of the electric profile (the magnetic kernel's spatial part).
VectorTrigPoly magnetic_profile(const CavityGeometry& geom, const ModeId& mode,
                                const LengthRep& rep);
VectorTrigPoly magnetic_profile(const CavityGeometry& geom, const ModeId& mode);

/// One traveling-wave component of a cavity mode.
struct PlaneWaveComponent {
  std::complex<double> coeff;
  std::array<double, 3> wavevector;
  std::array<std::complex<double>, 3> polarization;
};

/// Finite plane-wave decomposition: 2 components for a 1-D mode, up to 8 for
/// a box mode. Summing coeff * polarization * exp(i k.x) over the components
/// reproduces the eigenprofile exactly.
std::vector<PlaneWaveComponent> decompose_plane_waves(const CavityGeometry& geom,
                                                      const ModeId& mode);

}  // namespace ehcav
