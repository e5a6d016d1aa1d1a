#include "ehcav/plane_wave.hpp"

#include <cmath>

namespace ehcav {

namespace {

double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

bool collinear(const std::array<double, 3>& a, const std::array<double, 3>& b,
               double scale) {
  double cx = a[1] * b[2] - a[2] * b[1];
  double cy = a[2] * b[0] - a[0] * b[2];
  double cz = a[0] * b[1] - a[1] * b[0];
  return norm3({cx, cy, cz}) <= 1e-10 * scale * scale;
}

}  // namespace

PlaneWaveReport planewave_consistency(const ProcessSpec& spec, const Couplings& c) {
  if (spec.kind == ProcessKind::Scatter2to2)
    throw std::invalid_argument("planewave_consistency: merging processes only");

  auto legs = spec.state.expand();
  std::vector<std::vector<PlaneWaveComponent>> decomp;
  std::vector<bool> outgoing;
  for (const auto& l : legs) {
    decomp.push_back(decompose_plane_waves(spec.geom, l.mode));
    outgoing.push_back(l.side == LegSide::Out);
  }

  PlaneWaveReport rep;
  int n_legs = (int)legs.size();
  int total = 1;
  for (const auto& d : decomp) total *= (int)d.size();
  rep.total_tuples = total;

  std::complex<double> first_weight{0.0};
  for (int t = 0; t < total; ++t) {
    int rem = t;
    std::vector<const PlaneWaveComponent*> pick(n_legs);
    for (int i = 0; i < n_legs; ++i) {
      pick[i] = &decomp[i][rem % decomp[i].size()];
      rem /= (int)decomp[i].size();
    }
    // 4-momentum balance (energy of a component = |k|)
    std::array<double, 4> sum{};
    double scale = 0.0;
    for (int i = 0; i < n_legs; ++i) {
      double s = outgoing[i] ? -1.0 : 1.0;
      double w = norm3(pick[i]->wavevector);
      sum[0] += s * w;
      for (int a = 0; a < 3; ++a) sum[a + 1] += s * pick[i]->wavevector[a];
      scale = std::max(scale, w);
    }
    double miss = std::max(std::max(std::abs(sum[0]), std::abs(sum[1])),
                           std::max(std::abs(sum[2]), std::abs(sum[3])));
    if (miss > 1e-10 * scale) continue;

    ++rep.survivors;
    for (int i = 1; i < n_legs; ++i)
      if (!collinear(pick[0]->wavevector, pick[i]->wavevector, scale))
        rep.all_collinear = false;

    std::complex<double> weight = 1.0;
    for (int i = 0; i < n_legs; ++i)
      weight *= outgoing[i] ? std::conj(pick[i]->coeff) : pick[i]->coeff;
    if (rep.survivors == 1)
      first_weight = weight;
    else if (std::abs(weight - first_weight) > 1e-12 * std::abs(first_weight))
      rep.signs_aligned = false;
    rep.reduced_factor += weight;

    std::array<PlaneWaveLeg, 4> vlegs;
    for (int i = 0; i < n_legs && i < 4; ++i)
      vlegs[i] = PlaneWaveLeg::make(pick[i]->wavevector, pick[i]->polarization,
                                    outgoing[i]);
    rep.plane_wave_sum += weight * eh_four_photon_vertex(vlegs, c.kappa, c.beta);
  }

  AmplitudeValue amp = matrix_element(spec);
  rep.cavity_value = amp.total(c);
  rep.cavity_exact_zero = amp.c_f4.is_exact_zero() && amp.c_ffdual.is_exact_zero();

  double wscale = std::max(std::abs(spec.sum_omega_in()), 1e-300);
  double vertex_scale = c.kappa * std::pow(wscale, 6);  // 4 F-tensors, 2 dots
  rep.consistent = std::abs(rep.plane_wave_sum) <= 1e-10 * std::max(vertex_scale, 1.0) &&
                   (rep.cavity_exact_zero || std::abs(rep.cavity_value) <= 1e-12);
  return rep;
}

}  // namespace ehcav
