#include "ehcav/modes.hpp"

#include <cctype>
#include <cmath>

namespace ehcav {

namespace {

const char* family_name(ModeFamily f) {
  switch (f) {
    case ModeFamily::TE:
      return "TE";
    case ModeFamily::TM:
      return "TM";
    case ModeFamily::OneDY:
      return "1D-y";
    default:
      return "1D-z";
  }
}

}  // namespace

std::string ModeId::str() const {
  if (is_one_d()) return std::string(family_name(family)) + ":" + std::to_string(n);
  std::string s = family_name(family);
  if (n > 9 || p > 9 || q > 9)
    return s + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q);
  return s + std::to_string(n) + std::to_string(p) + std::to_string(q);
}

ModeId ModeId::parse(const std::string& text) {
  auto bad = [&]() -> ModeId {
    throw InvalidMode("cannot parse mode id '" + text + "'");
  };
  if (text.rfind("1D-", 0) == 0 || text.rfind("1d-", 0) == 0) {
    if (text.size() < 5 || text[4] != ':') bad();
    char pol = (char)std::tolower(text[3]);
    if (pol != 'y' && pol != 'z') bad();
    int n = std::stoi(text.substr(5));
    return one_d(pol == 'y' ? Axis::Y : Axis::Z, n);
  }
  if (text.size() < 5) bad();
  ModeFamily fam;
  if (text.rfind("TE", 0) == 0)
    fam = ModeFamily::TE;
  else if (text.rfind("TM", 0) == 0)
    fam = ModeFamily::TM;
  else
    return bad();
  std::string idx = text.substr(2);
  int v[3];
  if (idx.find(',') != std::string::npos) {
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      std::size_t next = idx.find(',', pos);
      if (i < 2 && next == std::string::npos) bad();
      v[i] = std::stoi(idx.substr(pos, next - pos));
      pos = next + 1;
    }
  } else {
    if (idx.size() != 3) bad();
    for (int i = 0; i < 3; ++i) {
      if (!std::isdigit((unsigned char)idx[i])) bad();
      v[i] = idx[i] - '0';
    }
  }
  return {fam, v[0], v[1], v[2]};
}

void validate_mode(const ModeId& m) {
  auto fail = [&](const std::string& why) {
    throw InvalidMode("invalid mode " + m.str() + ": " + why);
  };
  const int cap = TrigPoly::kMaxHarmonic;
  if (m.n < 0 || m.p < 0 || m.q < 0) fail("negative index");
  if (m.n > cap || m.p > cap || m.q > cap) fail("index above harmonic bound");
  switch (m.family) {
    case ModeFamily::OneDY:
    case ModeFamily::OneDZ:
      if (m.n < 1) fail("1-D mode needs n >= 1");
      break;
    case ModeFamily::TM:
      if (m.n < 1 || m.p < 1) fail("TM needs n >= 1 and p >= 1");
      break;
    case ModeFamily::TE:
      if (m.q < 1) fail("TE needs q >= 1");
      if (m.n == 0 && m.p == 0) fail("TE needs n, p not both zero");
      break;
  }
}

bool is_valid_mode(const ModeId& m) noexcept {
  try {
    validate_mode(m);
    return true;
  } catch (...) {
    return false;
  }
}

double mode_frequency(const CavityGeometry& geom, const ModeId& mode) {
  validate_mode(mode);
  if (mode.is_one_d()) return M_PI * mode.n / geom.lx();
  double kx = M_PI * mode.n / geom.lx();
  double ky = M_PI * mode.p / geom.ly();
  double kz = M_PI * mode.q / geom.lz();
  return std::sqrt(kx * kx + ky * ky + kz * kz);
}

Rational omega_sq_over_pi2(const CavityGeometry& geom, const ModeId& mode) {
  validate_mode(mode);
  const auto& L = geom.exact_lengths();
  auto sq = [](const Rational& r) { return r * r; };
  if (mode.is_one_d()) return sq(Rational(mode.n) / L[0]);
  return sq(Rational(mode.n) / L[0]) + sq(Rational(mode.p) / L[1]) +
         sq(Rational(mode.q) / L[2]);
}

std::optional<Surd> omega_sq_over_pi2_symbolic(const ModeId& mode) {
  validate_mode(mode);
  if (mode.is_one_d()) {
    Surd s(Rational((long long)mode.n * mode.n));
    s.len[0] = -2;
    return s;
  }
  int nz = (mode.n > 0) + (mode.p > 0) + (mode.q > 0);
  if (nz == 1) {
    int axis = mode.n > 0 ? 0 : (mode.p > 0 ? 1 : 2);
    long long idx = mode.n > 0 ? mode.n : (mode.p > 0 ? mode.p : mode.q);
    Surd s(Rational(idx * idx));
    s.len[axis] = -2;
    return s;
  }
  return std::nullopt;
}

bool profile_is_symbolic(const ModeId& mode) {
  switch (mode.family) {
    case ModeFamily::OneDY:
    case ModeFamily::OneDZ:
      return true;
    case ModeFamily::TE:
      return mode.n == 0 || mode.p == 0;
    case ModeFamily::TM:
      return mode.q == 0;
  }
  return false;
}

namespace {

using Kind = AxisFactor::Kind;

TrigPoly product3(const CavityGeometry&, const Surd& coef, Kind kx, int n, Kind ky,
                  int p, Kind kz, int q) {
  TrigPoly t = TrigPoly::constant(coef);
  t = t * TrigPoly::factor(Axis::X, kx, n, Surd::one());
  t = t * TrigPoly::factor(Axis::Y, ky, p, Surd::one());
  t = t * TrigPoly::factor(Axis::Z, kz, q, Surd::one());
  return t;
}

VectorTrigPoly profile_symbolic(const CavityGeometry& geom, const ModeId& m) {
  LengthRep rep = LengthRep::symbolic();
  VectorTrigPoly prof(geom, rep);
  if (m.is_one_d()) {
    prof[(int)m.polarization()] =
        TrigPoly::factor(Axis::X, Kind::Sin, m.n, Surd::sqrt_of(Rational(2)));
    return prof;
  }
  if (m.family == ModeFamily::TE) {
    // symbolic TE requires n = 0 or p = 0; the transverse ratio collapses to 1
    Surd norm = Surd::sqrt_of(Rational(4 * (2 - (m.n == 0) - (m.p == 0))));
    if (m.n == 0) {
      prof[0] = product3(geom, norm, Kind::Cos, 0, Kind::Sin, m.p, Kind::Sin, m.q);
    } else {
      prof[1] = product3(geom, -norm, Kind::Sin, m.n, Kind::Cos, 0, Kind::Sin, m.q);
    }
    return prof;
  }
  // TM with q = 0: only the z component survives and N kperp / omega = N
  Surd norm = Surd::sqrt_of(Rational(4));
  prof[2] = product3(geom, -norm, Kind::Sin, m.n, Kind::Sin, m.p, Kind::Cos, 0);
  return prof;
}

VectorTrigPoly profile_exact(const CavityGeometry& geom, const ModeId& m) {
  LengthRep rep = LengthRep::rational(geom);
  VectorTrigPoly prof(geom, rep);
  const auto& L = geom.exact_lengths();
  if (m.is_one_d()) {
    prof[(int)m.polarization()] =
        TrigPoly::factor(Axis::X, Kind::Sin, m.n, Surd::sqrt_of(Rational(2)));
    return prof;
  }
  Rational rx = Rational(m.n) / L[0];  // kx / pi
  Rational ry = Rational(m.p) / L[1];
  Rational rz = Rational(m.q) / L[2];
  Rational cperp = rx * rx + ry * ry;
  if (m.family == ModeFamily::TE) {
    Surd norm = Surd::sqrt_of(Rational(4 * (2 - (m.n == 0) - (m.p == 0))));
    Surd inv_kperp = Surd::sqrt_of(Rational(1) / cperp);
    Surd cx = norm * inv_kperp * ry;
    Surd cy = -(norm * inv_kperp * rx);
    prof[0] = product3(geom, cx, Kind::Cos, m.n, Kind::Sin, m.p, Kind::Sin, m.q);
    prof[1] = product3(geom, cy, Kind::Sin, m.n, Kind::Cos, m.p, Kind::Sin, m.q);
    return prof;
  }
  Rational comega = cperp + rz * rz;  // omega^2 / pi^2
  Surd norm = Surd::sqrt_of(Rational(4 * (2 - (m.q == 0))));
  Surd cx = norm * Surd::sqrt_of(Rational(1) / (comega * cperp)) * (rx * rz);
  Surd cy = norm * Surd::sqrt_of(Rational(1) / (comega * cperp)) * (ry * rz);
  Surd cz = -(norm * Surd::sqrt_of(cperp / comega));
  prof[0] = product3(geom, cx, Kind::Cos, m.n, Kind::Sin, m.p, Kind::Sin, m.q);
  prof[1] = product3(geom, cy, Kind::Sin, m.n, Kind::Cos, m.p, Kind::Sin, m.q);
  prof[2] = product3(geom, cz, Kind::Sin, m.n, Kind::Sin, m.p, Kind::Cos, m.q);
  return prof;
}

}  // namespace

VectorTrigPoly electric_profile(const CavityGeometry& geom, const ModeId& mode,
                                const LengthRep& rep) {
  validate_mode(mode);
  if (rep.mode == LengthRep::Mode::Symbolic) {
    if (!profile_is_symbolic(mode))
      throw std::invalid_argument(
          "electric_profile: " + mode.str() +
          " has no symbolic-length representation; use exact rational lengths");
    return profile_symbolic(geom, mode);
  }
  return profile_exact(geom, mode);
}

VectorTrigPoly electric_profile(const CavityGeometry& geom, const ModeId& mode) {
  validate_mode(mode);
  if (profile_is_symbolic(mode)) return profile_symbolic(geom, mode);
  if (geom.has_exact_lengths()) return profile_exact(geom, mode);
  throw std::invalid_argument("electric_profile: " + mode.str() +
                              " needs exact rational lengths for this geometry");
}

VectorTrigPoly magnetic_profile(const CavityGeometry& geom, const ModeId& mode,
                                const LengthRep& rep) {
  return electric_profile(geom, mode, rep).curl();
}

VectorTrigPoly magnetic_profile(const CavityGeometry& geom, const ModeId& mode) {
  return electric_profile(geom, mode).curl();
}

std::vector<PlaneWaveComponent> decompose_plane_waves(const CavityGeometry& geom,
                                                      const ModeId& mode) {
  validate_mode(mode);
  const std::complex<double> I(0.0, 1.0);
  std::vector<PlaneWaveComponent> out;

  if (mode.is_one_d()) {
    double k = M_PI * mode.n / geom.lx();
    double amp = std::sqrt(2.0);
    int pol = (int)mode.polarization();
    for (int s : {+1, -1}) {
      PlaneWaveComponent c;
      c.coeff = (double)s / (2.0 * I);
      c.wavevector = {s * k, 0.0, 0.0};
      c.polarization = {0.0, 0.0, 0.0};
      c.polarization[pol] = amp;
      out.push_back(c);
    }
    return out;
  }

  // per-component double amplitudes and per-axis factor kinds
  std::array<int, 3> idx = {mode.n, mode.p, mode.q};
  std::array<double, 3> k = {M_PI * mode.n / geom.lx(), M_PI * mode.p / geom.ly(),
                             M_PI * mode.q / geom.lz()};
  double kperp = std::hypot(k[0], k[1]);
  double omega = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  std::array<double, 3> amp{};
  // kinds[i][ax]: true = cos on that axis for component i
  std::array<std::array<bool, 3>, 3> is_cos{};
  if (mode.family == ModeFamily::TE) {
    double norm = std::sqrt(4.0 * (2 - (mode.n == 0) - (mode.p == 0)));
    amp = {norm * k[1] / kperp, -norm * k[0] / kperp, 0.0};
    is_cos[0] = {true, false, false};
    is_cos[1] = {false, true, false};
  } else {
    double norm = std::sqrt(4.0 * (2 - (mode.q == 0)));
    amp = {norm * k[0] * k[2] / (omega * kperp), norm * k[1] * k[2] / (omega * kperp),
           -norm * kperp / omega};
    is_cos[0] = {true, false, false};
    is_cos[1] = {false, true, false};
    is_cos[2] = {false, false, true};
  }

  std::vector<int> free_axes;
  for (int ax = 0; ax < 3; ++ax)
    if (idx[ax] > 0) free_axes.push_back(ax);

  int count = 1 << free_axes.size();
  for (int bits = 0; bits < count; ++bits) {
    std::array<int, 3> sign = {1, 1, 1};
    for (std::size_t j = 0; j < free_axes.size(); ++j)
      if (bits & (1 << j)) sign[free_axes[j]] = -1;

    PlaneWaveComponent c;
    c.coeff = 1.0;
    for (int ax : free_axes) c.coeff *= (double)sign[ax] / (2.0 * I);
    for (int ax = 0; ax < 3; ++ax) c.wavevector[ax] = sign[ax] * k[ax] * (idx[ax] > 0);
    for (int i = 0; i < 3; ++i) {
      std::complex<double> v = amp[i];
      if (v == 0.0) {
        c.polarization[i] = 0.0;
        continue;
      }
      for (int ax : free_axes)
        if (is_cos[i][ax]) v *= I * (double)sign[ax];
      c.polarization[i] = v;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace ehcav
