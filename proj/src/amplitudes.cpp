#include "ehcav/amplitudes.hpp"

#include <cmath>

namespace ehcav {

namespace {

ExternalState state_from_multiset(std::vector<ModeId> in_modes,
                                  std::vector<ModeId> out_modes) {
  ExternalState st;
  auto fold = [](std::vector<ModeId>& modes, std::vector<FockEntry>& side) {
    for (const auto& m : modes) {
      bool found = false;
      for (auto& e : side)
        if (e.mode == m) {
          ++e.occupation;
          found = true;
        }
      if (!found) side.push_back({m, 1});
    }
  };
  fold(in_modes, st.in);
  fold(out_modes, st.out);
  return st;
}

}  // namespace

ProcessSpec ProcessSpec::merge_1d(const CavityGeometry& geom, int n, int p, Axis pol_i,
                                  Axis pol_j, Axis pol_l, Axis pol_s) {
  ExternalState st = state_from_multiset(
      {ModeId::one_d(pol_i, n), ModeId::one_d(pol_j, n), ModeId::one_d(pol_l, p)},
      {ModeId::one_d(pol_s, 2 * n + p)});
  return {ProcessKind::Merge3to1OneD, geom, st, false};
}

ProcessSpec ProcessSpec::merge_box(const CavityGeometry& geom, const ModeId& pump,
                                   const ModeId& second, ModeFamily out_family) {
  validate_mode(pump);
  validate_mode(second);
  ModeId out{out_family, 2 * pump.n + second.n, 2 * pump.p + second.p,
             2 * pump.q + second.q};
  ExternalState st = state_from_multiset({pump, pump, second}, {out});
  return {ProcessKind::Merge3to1Box, geom, st, false};
}

ProcessSpec ProcessSpec::scatter_2to2(const CavityGeometry& geom, const ModeId& pump,
                                      const ModeId& sig1, const ModeId& sig2) {
  for (const auto& m : {pump, sig1, sig2})
    if (m.is_one_d())
      throw std::invalid_argument("scatter_2to2: box modes required, got " + m.str());
  ExternalState st = state_from_multiset({pump, pump}, {sig1, sig2});
  return {ProcessKind::Scatter2to2, geom, st, true};
}

double ProcessSpec::sum_omega_in() const {
  double s = 0.0;
  for (const auto& e : state.in) s += e.occupation * mode_frequency(geom, e.mode);
  return s;
}

double ProcessSpec::sum_omega_out() const {
  double s = 0.0;
  for (const auto& e : state.out) s += e.occupation * mode_frequency(geom, e.mode);
  return s;
}

namespace {

struct PatternValue {
  SurdSum exact;
  double value = 0.0;
  bool exact_ok = true;
};

int phase_sign(int i_phase) {
  switch (i_phase % 4) {
    case 0:
      return +1;
    case 2:
      return -1;
    default:
      throw std::logic_error("matrix_element: odd power of i in a quartic term");
  }
}

PatternValue evaluate_pattern(const QuarticPattern& pattern,
                              const std::vector<ExternalLeg>& legs,
                              const CavityGeometry& geom, const LengthRep& rep) {
  PatternValue pv;
  for (const auto& term : enumerate_contractions(pattern, legs, geom, rep)) {
    SurdSum integral = term.kernel_product.integrate_box(rep);
    int sign = phase_sign(term.i_phase);
    pv.value += term.multiplicity * sign * term.scalar *
                integral.to_double(geom.lengths());
    if (term.exact_scalar && pv.exact_ok) {
      Surd s = *term.exact_scalar * Rational(term.multiplicity * sign);
      pv.exact += integral * s;
    } else {
      pv.exact_ok = false;
    }
  }
  return pv;
}

LengthRep pick_rep(const std::vector<ExternalLeg>& legs, const CavityGeometry& geom) {
  bool symbolic = true;
  for (const auto& l : legs) symbolic = symbolic && profile_is_symbolic(l.mode);
  if (symbolic && !geom.has_exact_lengths()) return LengthRep::symbolic();
  if (geom.has_exact_lengths()) return LengthRep::rational(geom);
  if (symbolic) return LengthRep::symbolic();
  throw std::invalid_argument(
      "matrix_element: modes need exact rational lengths for this geometry");
}

}  // namespace

AmplitudeValue matrix_element(const ProcessSpec& spec) {
  auto legs = spec.state.expand();
  LengthRep rep = pick_rep(legs, spec.geom);

  double norm = spec.normalized_states ? state_prefactor(spec.state) : 1.0;
  Surd norm_exact =
      spec.normalized_states ? state_prefactor_exact(spec.state) : Surd::one();

  AmplitudeValue out;
  SurdSum f4_exact, dual_exact;
  bool f4_ok = true, dual_ok = true;
  for (const auto& pattern : quartic_patterns()) {
    PatternValue pv = evaluate_pattern(pattern, legs, spec.geom, rep);
    // global 4*kappa; pattern weight; state normalization
    double w = 4.0 * pattern.weight.to_double() * norm;
    if (pattern.beta_scaled) {
      out.c_ffdual.value += w * pv.value;
      if (pv.exact_ok)
        dual_exact += pv.exact * (norm_exact * (pattern.weight * Rational(4)));
      else
        dual_ok = false;
    } else {
      out.c_f4.value += w * pv.value;
      if (pv.exact_ok)
        f4_exact += pv.exact * (norm_exact * (pattern.weight * Rational(4)));
      else
        f4_ok = false;
    }
  }
  if (f4_ok) {
    out.c_f4.exact = f4_exact;
    out.c_f4.value = f4_exact.to_double(spec.geom.lengths());
  }
  if (dual_ok) {
    out.c_ffdual.exact = dual_exact;
    out.c_ffdual.value = dual_exact.to_double(spec.geom.lengths());
  }

  double win = spec.sum_omega_in(), wout = spec.sum_omega_out();
  out.frequency_mismatch = std::abs(win - wout);
  out.resonant = out.frequency_mismatch <= 1e-12 * std::max(win, wout);
  return out;
}

Scatter2to2Brackets scatter_2to2_components(const CavityGeometry& geom,
                                            const ModeId& pump, const ModeId& sig1,
                                            const ModeId& sig2, double kappa) {
  ProcessSpec spec = ProcessSpec::scatter_2to2(geom, pump, sig1, sig2);
  auto legs = spec.state.expand();
  LengthRep rep = pick_rep(legs, geom);
  double norm = state_prefactor(spec.state);

  Scatter2to2Brackets br;
  for (const auto& pattern : quartic_patterns()) {
    double v = 4.0 * kappa * norm * evaluate_pattern(pattern, legs, geom, rep).value;
    if (pattern.beta_scaled)
      br.be2 = v;
    else if (pattern.slots[0] == FieldKind::Electric)
      br.e4 = v;
    else if (pattern.slots[2] == FieldKind::Electric)
      br.b2e2 = v;
    else
      br.b4 = v;
  }
  return br;
}

Merge3to1Brackets merge_3to1_term(const CavityGeometry& geom, int n, int p, Axis pol_i,
                                  Axis pol_j, Axis pol_l, Axis pol_s,
                                  int out_harmonic) {
  if (out_harmonic >= 0 && out_harmonic != 2 * n + p)
    throw std::invalid_argument(
        "merge_3to1_term: the outgoing harmonic must be 2n+p = " +
        std::to_string(2 * n + p) + ", got " + std::to_string(out_harmonic));
  ProcessSpec spec = ProcessSpec::merge_1d(geom, n, p, pol_i, pol_j, pol_l, pol_s);
  auto legs = spec.state.expand();
  LengthRep rep = LengthRep::symbolic();

  // bracket normalization: multiply the box integral by S = Ly*Lz, leaving
  // values in units of 1/Lx^3
  Surd s_area = Surd::one();
  s_area.len[1] = 1;
  s_area.len[2] = 1;

  Merge3to1Brackets br;
  for (const auto& pattern : quartic_patterns()) {
    PatternValue pv = evaluate_pattern(pattern, legs, geom, rep);
    if (!pv.exact_ok)
      throw std::logic_error("merge_3to1_term: exact path unavailable");
    SurdSum bracket = pv.exact * s_area;
    if (pattern.beta_scaled)
      br.eb_sq = bracket;
    else if (pattern.slots[0] == FieldKind::Electric) {
      br.ee_sq = bracket;
      br.e4_assembled = pv.exact * Rational(4);
    } else if (pattern.slots[2] == FieldKind::Electric)
      br.b2e2 = bracket * pattern.weight;  // carries the -2 monomial weight
    else
      br.bb_sq = bracket;
  }
  return br;
}

std::complex<double> coherent_amplitude(std::complex<double> xi,
                                        std::complex<double> eta,
                                        const CavityGeometry& geom,
                                        const Couplings& couplings) {
  ProcessSpec spec = ProcessSpec::scatter_2to2(geom, ModeId::te(0, 1, 1),
                                               ModeId::tm(1, 1, 0), ModeId::tm(1, 3, 0));
  double m22 = matrix_element(spec).total(couplings);
  return coherent_reduction_factor(xi, eta) * m22;
}

}  // namespace ehcav
