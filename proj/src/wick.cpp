#include "ehcav/wick.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ehcav {

const std::array<QuarticPattern, 4>& quartic_patterns() {
  using F = FieldKind;
  static const std::array<QuarticPattern, 4> p = {{
      {{F::Electric, F::Electric, F::Electric, F::Electric}, Rational(1), false, "(E.E)(E.E)"},
      {{F::Magnetic, F::Magnetic, F::Electric, F::Electric}, Rational(-2), false, "(B.B)(E.E)"},
      {{F::Magnetic, F::Magnetic, F::Magnetic, F::Magnetic}, Rational(1), false, "(B.B)(B.B)"},
      {{F::Magnetic, F::Electric, F::Magnetic, F::Electric}, Rational(4), true, "(B.E)(B.E)"},
  }};
  return p;
}

ContractionKernel contraction_kernel(const ModeId& mode, FieldKind field,
                                     LegSide side, const CavityGeometry& geom,
                                     const LengthRep& rep) {
  validate_mode(mode);
  ContractionKernel k{electric_profile(geom, mode, rep),
                      0, 0, mode_frequency(geom, mode),
                      side == LegSide::Out ? 1.0 : -1.0};
  if (field == FieldKind::Electric) {
    k.i_phase = side == LegSide::Out ? 1 : 3;
    k.omega_half_exp = +1;
  } else {
    k.spatial = k.spatial.curl();
    k.i_phase = 0;
    k.omega_half_exp = -1;
  }
  return k;
}

namespace {

std::string leg_key(const ExternalLeg& l) {
  return l.mode.str() + (l.side == LegSide::Out ? ">" : "<");
}

/// sqrt and fourth roots of a radical-free Surd with exponents divisible as
/// needed; used for the omega-ratio scalars.
Surd quarter_root(const Surd& s) {
  if (!s.rad.empty()) throw std::logic_error("quarter_root: unexpected radical");
  if (s.pi_pow % 4 != 0 || s.len[0] % 4 != 0 || s.len[1] % 4 != 0 || s.len[2] % 4 != 0)
    throw std::logic_error("quarter_root: exponents not divisible by 4");
  if (s.coef.is_negative()) throw std::logic_error("quarter_root: negative value");
  Surd out = Surd::fourth_root_of(s.coef);
  out.pi_pow += s.pi_pow / 4;
  for (int i = 0; i < 3; ++i) out.len[i] += s.len[i] / 4;
  return out;
}

Surd surd_inverse(const Surd& s) {
  if (!s.rad.empty()) throw std::logic_error("surd_inverse: unexpected radical");
  Surd out(Rational(1) / s.coef);
  out.pi_pow = -s.pi_pow;
  for (int i = 0; i < 3; ++i) out.len[i] = -s.len[i];
  return out;
}

/// omega^2 / pi^2 as a radical-free Surd, or nullopt.
std::optional<Surd> omega_sq_surd(const ModeId& mode, const CavityGeometry& geom,
                                  const LengthRep& rep) {
  if (rep.mode == LengthRep::Mode::Exact)
    return Surd(omega_sq_over_pi2(geom, mode));
  return omega_sq_over_pi2_symbolic(mode);
}

}  // namespace

std::vector<ContractionTerm> enumerate_contractions(const QuarticPattern& pattern,
                                                    const std::vector<ExternalLeg>& legs,
                                                    const CavityGeometry& geom,
                                                    const LengthRep& rep) {
  if (legs.size() != 4)
    throw LegCountMismatch("enumerate_contractions: need exactly 4 external legs, got " +
                           std::to_string(legs.size()));

  // group all 4! slot assignments into kernel classes
  struct ClassData {
    int count = 0;
    std::array<int, 4> rep_perm{};
  };
  std::map<std::string, ClassData> classes;
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    auto pair_key = [&](int s0, int s1) {
      std::string a = leg_key(legs[perm[s0]]) + (pattern.slots[s0] == FieldKind::Magnetic ? "B" : "E");
      std::string b = leg_key(legs[perm[s1]]) + (pattern.slots[s1] == FieldKind::Magnetic ? "B" : "E");
      return a <= b ? a + "|" + b : b + "|" + a;
    };
    std::string k0 = pair_key(0, 1);
    std::string k1 = pair_key(2, 3);
    std::string key = k0 <= k1 ? k0 + " . " + k1 : k1 + " . " + k0;
    auto& cd = classes[key];
    if (cd.count == 0) cd.rep_perm = perm;
    ++cd.count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ContractionTerm> out;
  out.reserve(classes.size());
  for (const auto& [key, cd] : classes) {
    ContractionTerm t;
    t.multiplicity = cd.count;
    t.class_key = key;

    std::array<ContractionKernel, 4> kernels = {
        contraction_kernel(legs[cd.rep_perm[0]].mode, pattern.slots[0],
                           legs[cd.rep_perm[0]].side, geom, rep),
        contraction_kernel(legs[cd.rep_perm[1]].mode, pattern.slots[1],
                           legs[cd.rep_perm[1]].side, geom, rep),
        contraction_kernel(legs[cd.rep_perm[2]].mode, pattern.slots[2],
                           legs[cd.rep_perm[2]].side, geom, rep),
        contraction_kernel(legs[cd.rep_perm[3]].mode, pattern.slots[3],
                           legs[cd.rep_perm[3]].side, geom, rep)};

    t.kernel_product =
        dot(kernels[0].spatial, kernels[1].spatial) * dot(kernels[2].spatial, kernels[3].spatial);

    t.i_phase = 0;
    double omega_ratio = 1.0;
    bool exact_ok = true;
    Surd ratio_surd = Surd::one();
    for (const auto& k : kernels) {
      t.i_phase = (t.i_phase + k.i_phase) % 4;
      omega_ratio *= std::pow(k.omega, k.omega_half_exp);
    }
    for (int s = 0; s < 4; ++s) {
      const ModeId& m = legs[cd.rep_perm[s]].mode;
      auto w = omega_sq_surd(m, geom, rep);
      if (!w) {
        exact_ok = false;
        break;
      }
      Surd wpi = *w;
      wpi.pi_pow += 2;  // omega^2 = pi^2 * (omega^2/pi^2)
      ratio_surd = ratio_surd * (kernels[s].omega_half_exp > 0 ? wpi : surd_inverse(wpi));
    }

    double v2 = geom.volume() * geom.volume();
    t.scalar = std::sqrt(omega_ratio) / (4.0 * v2);
    if (exact_ok) {
      Surd inv_v2 = rep.length_power(Axis::X, -2) * rep.length_power(Axis::Y, -2) *
                    rep.length_power(Axis::Z, -2);
      inv_v2.coef *= Rational(1, 4);
      t.exact_scalar = quarter_root(ratio_surd) * inv_v2;
    }

    t.osc_frequency = 0.0;
    for (const auto& l : legs)
      t.osc_frequency += (l.side == LegSide::Out ? 1.0 : -1.0) * mode_frequency(geom, l.mode);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ExternalLeg> ExternalState::expand() const {
  validate();
  std::vector<ExternalLeg> legs;
  for (const auto& e : in)
    for (int i = 0; i < e.occupation; ++i) legs.push_back({e.mode, LegSide::In});
  for (const auto& e : out)
    for (int i = 0; i < e.occupation; ++i) legs.push_back({e.mode, LegSide::Out});
  return legs;
}

void ExternalState::validate() const {
  auto check_side = [](const std::vector<FockEntry>& side) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i].occupation < 1)
        throw std::invalid_argument("ExternalState: occupation must be positive");
      validate_mode(side[i].mode);
      for (std::size_t j = i + 1; j < side.size(); ++j)
        if (side[i].mode == side[j].mode)
          throw std::invalid_argument("ExternalState: mode repeated on one side");
    }
  };
  check_side(in);
  check_side(out);
}

Surd state_prefactor_exact(const ExternalState& state) {
  state.validate();
  Rational fact(1);
  auto fold = [&](const std::vector<FockEntry>& side) {
    for (const auto& e : side)
      for (int i = 2; i <= e.occupation; ++i) fact *= Rational(i);
  };
  fold(state.in);
  fold(state.out);
  return Surd::sqrt_of(Rational(1) / fact);
}

double state_prefactor(const ExternalState& state) {
  return state_prefactor_exact(state).to_double({1.0, 1.0, 1.0});
}

std::complex<double> coherent_reduction_factor(std::complex<double> xi,
                                               std::complex<double> eta) {
  return std::sqrt(2.0) * xi * xi * std::conj(eta);
}

}  // namespace ehcav
