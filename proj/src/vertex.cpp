#include "ehcav/vertex.hpp"

#include <cmath>
#include <stdexcept>

namespace ehcav {

namespace {

using cd = std::complex<double>;
using FTensor = std::array<std::array<cd, 4>, 4>;

constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

FTensor field_strength(const PlaneWaveLeg& l) {
  const cd i(0.0, 1.0);
  cd phase = l.outgoing ? -i : i;  // exp(-i k x) incoming, conjugate outgoing
  FTensor f{};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      cd e_nu = l.outgoing ? std::conj(l.eps[nu]) : l.eps[nu];
      cd e_mu = l.outgoing ? std::conj(l.eps[mu]) : l.eps[mu];
      f[mu][nu] = phase * (l.k[mu] * e_nu - l.k[nu] * e_mu);
    }
  }
  return f;
}

int levi_civita(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (idx[i] == idx[j]) return 0;
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (idx[i] > idx[j]) ++inversions;
  return inversions % 2 == 0 ? +1 : -1;
}

FTensor dual(const FTensor& f) {
  // Fdual^{mu nu} = 1/2 eps^{mu nu rho sigma} F_{rho sigma}, eps^{0123} = +1
  FTensor d{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          int e = levi_civita(mu, nu, r, s);
          if (e == 0) continue;
          // F_{rho sigma} = g_rho g_sigma F^{rho sigma}
          d[mu][nu] += 0.5 * e * metric(r) * metric(s) * f[r][s];
        }
  return d;
}

cd contract(const FTensor& a, const FTensor& b) {
  // F^{mu nu} G_{mu nu}
  cd v = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) v += a[mu][nu] * b[mu][nu] * metric(mu) * metric(nu);
  return v;
}

double minkowski(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

}  // namespace

PlaneWaveLeg PlaneWaveLeg::make(const std::array<double, 3>& kvec,
                                const std::array<std::complex<double>, 3>& pol,
                                bool outgoing) {
  PlaneWaveLeg l;
  double w = std::sqrt(kvec[0] * kvec[0] + kvec[1] * kvec[1] + kvec[2] * kvec[2]);
  l.k = {w, kvec[0], kvec[1], kvec[2]};
  l.eps = {0.0, pol[0], pol[1], pol[2]};
  l.outgoing = outgoing;
  return l;
}

double momentum_violation(const std::array<PlaneWaveLeg, 4>& legs) {
  std::array<double, 4> sum{};
  double scale = 0.0;
  for (const auto& l : legs) {
    double s = l.outgoing ? -1.0 : 1.0;
    for (int mu = 0; mu < 4; ++mu) sum[mu] += s * l.k[mu];
    scale = std::max(scale, std::abs(l.k[0]));
  }
  double v = 0.0;
  for (int mu = 0; mu < 4; ++mu) v = std::max(v, std::abs(sum[mu]));
  return scale > 0.0 ? v / scale : v;
}

std::complex<double> eh_four_photon_vertex(const std::array<PlaneWaveLeg, 4>& legs,
                                           double kappa, double beta) {
  for (const auto& l : legs) {
    double k2 = minkowski(l.k, l.k);
    if (std::abs(k2) > 1e-10 * (l.k[0] * l.k[0] + 1e-300))
      throw std::invalid_argument("eh_four_photon_vertex: leg is off the light cone");
    cd ek = 0.0;
    for (int mu = 0; mu < 4; ++mu) ek += l.eps[mu] * l.k[mu] * metric(mu);
    double emag = 0.0;
    for (int mu = 0; mu < 4; ++mu) emag += std::norm(l.eps[mu]);
    if (std::abs(ek) > 1e-10 * std::sqrt(emag) * l.k[0])
      throw std::invalid_argument("eh_four_photon_vertex: polarization not transverse");
  }
  if (momentum_violation(legs) > 1e-12)
    throw std::invalid_argument("eh_four_photon_vertex: momentum not conserved");

  std::array<FTensor, 4> f, fd;
  for (int a = 0; a < 4; ++a) {
    f[a] = field_strength(legs[a]);
    fd[a] = dual(f[a]);
  }

  // each unordered pairing {(a,b),(c,d)} enters with combinatorial weight 8
  static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  cd total = 0.0;
  for (const auto& pr : pairings) {
    cd ff = contract(f[pr[0]], f[pr[1]]) * contract(f[pr[2]], f[pr[3]]);
    cd dd = contract(fd[pr[0]], f[pr[1]]) * contract(fd[pr[2]], f[pr[3]]);
    total += 8.0 * kappa * (ff + beta * dd);
  }
  return total;
}

}  // namespace ehcav
