#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "ehcav/rational.hpp"

namespace ehcav {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// Box geometry. Lengths are held as doubles; when constructed from rationals
/// the exact values are kept as well, enabling fully exact coefficient
/// arithmetic for arbitrary modes.
class CavityGeometry {
 public:
  CavityGeometry(double lx, double ly, double lz) : len_{lx, ly, lz} { check(); }

  CavityGeometry(const Rational& lx, const Rational& ly, const Rational& lz)
      : len_{lx.to_double(), ly.to_double(), lz.to_double()},
        exact_(std::array<Rational, 3>{lx, ly, lz}) {
    check();
  }

  /// 1:1:r family: Lx = Ly = Lz / r.
  static CavityGeometry unit_aspect(double r, double lz) {
    if (!(r > 0.0) || !(lz > 0.0))
      throw std::invalid_argument("CavityGeometry: aspect ratio and Lz must be positive");
    return CavityGeometry(lz / r, lz / r, lz);
  }

  double length(Axis a) const { return len_[(int)a]; }
  const std::array<double, 3>& lengths() const { return len_; }
  double lx() const { return len_[0]; }
  double ly() const { return len_[1]; }
  double lz() const { return len_[2]; }

  double volume() const { return len_[0] * len_[1] * len_[2]; }
  /// Transverse area of the effective one-dimensional cavity along x.
  double transverse_area() const { return len_[1] * len_[2]; }
  /// r with Lx = Ly = Lz/r (meaningful for the 1:1:r family).
  double aspect_ratio() const { return len_[2] / len_[0]; }

  bool has_exact_lengths() const { return exact_.has_value(); }
  const std::array<Rational, 3>& exact_lengths() const {
    if (!exact_) throw std::logic_error("CavityGeometry: no exact lengths available");
    return *exact_;
  }
  Rational exact_length(Axis a) const { return exact_lengths()[(int)a]; }
  Rational exact_volume() const {
    const auto& e = exact_lengths();
    return e[0] * e[1] * e[2];
  }

  bool same_as(const CavityGeometry& o) const { return len_ == o.len_; }

 private:
  std::array<double, 3> len_;
  std::optional<std::array<Rational, 3>> exact_;

  void check() const {
    for (double l : len_)
      if (!(l > 0.0) || !std::isfinite(l))
        throw std::invalid_argument("CavityGeometry: lengths must be positive and finite");
  }
};

}  // namespace ehcav
