#pragma once

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "ehcav/geometry.hpp"
#include "ehcav/surd.hpp"

namespace ehcav {

/// How factors of the box lengths enter coefficients.
///  - Symbolic: lengths stay as monomial exponents Lx^a Ly^b Lz^c.
///  - Exact:    lengths are substituted as exact rationals.
struct LengthRep {
  enum class Mode { Symbolic, Exact };
  Mode mode = Mode::Symbolic;
  std::array<Rational, 3> exact{Rational(1), Rational(1), Rational(1)};

  static LengthRep symbolic() { return LengthRep{}; }
  static LengthRep rational(const CavityGeometry& g) {
    LengthRep r;
    r.mode = Mode::Exact;
    r.exact = g.exact_lengths();
    return r;
  }

  /// L_axis^power as an exact scalar.
  Surd length_power(Axis a, int power) const {
    if (mode == Mode::Symbolic) {
      Surd s = Surd::one();
      s.len[(int)a] = power;
      return s;
    }
    Rational v(1);
    Rational base = exact[(int)a];
    for (int i = 0; i < (power >= 0 ? power : -power); ++i) v *= base;
    if (power < 0) v = Rational(1) / v;
    return Surd(v);
  }

  bool operator==(const LengthRep&) const = default;
};

/// One factor along a single axis, in the scaled coordinate u = x/L in [0,1]:
/// 1, sin(pi m u) or cos(pi m u). Canonical form: One has m = 0, Sin/Cos m >= 1.
struct AxisFactor {
  enum class Kind : int { One = 0, Cos = 1, Sin = 2 };
  Kind kind = Kind::One;
  int m = 0;

  auto operator<=>(const AxisFactor&) const = default;
};

struct TrigKey {
  std::array<AxisFactor, 3> f;
  auto operator<=>(const TrigKey&) const = default;
};

/// Exact trigonometric polynomial over the box: sum of terms
/// (SurdSum coefficient) x f_x(u_x) f_y(u_y) f_z(u_z), kept in canonical
/// product-to-sum reduced form with like terms merged.
class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly zero() { return TrigPoly(); }

  static TrigPoly constant(const Surd& c) {
    TrigPoly p;
    p.add_term(TrigKey{}, SurdSum(c));
    return p;
  }

  /// c * sin/cos(pi m u_axis)
  static TrigPoly factor(Axis axis, AxisFactor::Kind kind, int m, const Surd& c) {
    if (kind == AxisFactor::Kind::Sin && m == 0) return zero();
    if (kind != AxisFactor::Kind::One && (m < 0 || m > kMaxHarmonic))
      throw std::invalid_argument("TrigPoly: harmonic out of range");
    TrigKey k{};
    if (kind != AxisFactor::Kind::One && m != 0) k.f[(int)axis] = {kind, m};
    TrigPoly p;
    p.add_term(k, SurdSum(c));
    return p;
  }

  const std::map<TrigKey, SurdSum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int max_harmonic() const {
    int m = 0;
    for (const auto& [k, c] : terms_)
      for (const auto& f : k.f) m = std::max(m, f.m);
    return m;
  }

  TrigPoly& operator+=(const TrigPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TrigPoly& operator-=(const TrigPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }

  TrigPoly scaled(const Surd& s) const {
    TrigPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
  }
  TrigPoly scaled(const SurdSum& s) const {
    TrigPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
  }
  TrigPoly operator-() const {
    TrigPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k, -c);
    return out;
  }

  /// Product with full product-to-sum reduction to canonical form.
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        SurdSum coef = ca * cb;
        // reduce per axis; each axis yields up to two (sign, factor) branches
        struct Branch {
          TrigKey key;
          Rational weight;
        };
        std::array<Branch, 8> branches;
        branches[0] = {TrigKey{}, Rational(1)};
        int nb = 1;
        bool dead = false;
        for (int ax = 0; ax < 3 && !dead; ++ax) {
          auto parts = combine(ka.f[ax], kb.f[ax]);
          int np = 0;
          std::array<Branch, 8> next;
          for (int i = 0; i < nb; ++i) {
            for (const auto& pr : parts) {
              if (pr.weight.is_zero()) continue;
              Branch nbr = branches[i];
              nbr.key.f[ax] = pr.factor;
              nbr.weight *= pr.weight;
              next[np++] = nbr;
            }
          }
          nb = np;
          dead = (nb == 0);
          branches = next;
        }
        for (int i = 0; i < nb; ++i)
          out.add_term(branches[i].key, coef * branches[i].weight);
      }
    }
    return out;
  }

  /// d/dx_axis. sin(pi m u) -> (pi m / L) cos(pi m u), etc.
  TrigPoly derivative(Axis axis, const LengthRep& rep) const {
    TrigPoly out;
    for (const auto& [k, c] : terms_) {
      const AxisFactor& f = k.f[(int)axis];
      if (f.kind == AxisFactor::Kind::One) continue;
      Surd scale = rep.length_power(axis, -1);
      scale.pi_pow += 1;
      scale.coef *= Rational(f.m);
      TrigKey nk = k;
      if (f.kind == AxisFactor::Kind::Sin) {
        nk.f[(int)axis] = {AxisFactor::Kind::Cos, f.m};
        out.add_term(nk, c * scale);
      } else {
        nk.f[(int)axis] = {AxisFactor::Kind::Sin, f.m};
        out.add_term(nk, c * (-scale));
      }
    }
    return out;
  }

  /// Exact integral over the box [0,Lx]x[0,Ly]x[0,Lz].
  /// Per axis: int_0^L 1 = L, int cos(pi m u) = 0 (m>=1),
  /// int sin(pi m u) = L (1-(-1)^m)/(pi m).
  SurdSum integrate_box(const LengthRep& rep) const {
    SurdSum total;
    for (const auto& [k, c] : terms_) {
      Surd factor = Surd::one();
      bool zero = false;
      for (int ax = 0; ax < 3; ++ax) {
        const AxisFactor& f = k.f[ax];
        if (f.kind == AxisFactor::Kind::Cos) {
          zero = true;
          break;
        }
        Surd lf = rep.length_power((Axis)ax, 1);
        if (f.kind == AxisFactor::Kind::Sin) {
          if (f.m % 2 == 0) {
            zero = true;
            break;
          }
          lf.coef *= Rational(2, f.m);
          lf.pi_pow -= 1;
        }
        factor = factor * lf;
      }
      if (!zero) total += c * factor;
    }
    return total;
  }

  /// Value at scaled coordinates u in [0,1]^3 with double lengths for the
  /// coefficient monomials.
  double evaluate(const std::array<double, 3>& u, const std::array<double, 3>& lengths) const {
    double v = 0.0;
    for (const auto& [k, c] : terms_) {
      double t = c.to_double(lengths);
      for (int ax = 0; ax < 3; ++ax) {
        const AxisFactor& f = k.f[ax];
        if (f.kind == AxisFactor::Kind::Sin)
          t *= std::sin(M_PI * f.m * u[ax]);
        else if (f.kind == AxisFactor::Kind::Cos)
          t *= std::cos(M_PI * f.m * u[ax]);
      }
      v += t;
    }
    return v;
  }

  std::string str() const;

  static constexpr int kMaxHarmonic = 64;

 private:
  std::map<TrigKey, SurdSum> terms_;

  void add_term(const TrigKey& k, const SurdSum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  struct Part {
    AxisFactor factor;
    Rational weight;
  };

  /// Product-to-sum for a single axis; returns up to two parts.
  static std::array<Part, 2> combine(const AxisFactor& a, const AxisFactor& b) {
    using K = AxisFactor::Kind;
    auto one = [](Rational w) { return Part{{K::One, 0}, w}; };
    auto cosf = [](int m, Rational w) {
      if (m == 0) return Part{{K::One, 0}, w};
      return Part{{K::Cos, check_m(m)}, w};
    };
    auto sinf = [](int m, Rational w) {
      if (m == 0) return Part{{K::One, 0}, Rational(0)};
      if (m < 0) return Part{{K::Sin, check_m(-m)}, -w};
      return Part{{K::Sin, check_m(m)}, w};
    };
    if (a.kind == K::One) return {Part{b, Rational(1)}, one(Rational(0))};
    if (b.kind == K::One) return {Part{a, Rational(1)}, one(Rational(0))};
    const Rational half(1, 2);
    if (a.kind == K::Sin && b.kind == K::Sin)
      return {cosf(std::abs(a.m - b.m), half), cosf(a.m + b.m, -half)};
    if (a.kind == K::Cos && b.kind == K::Cos)
      return {cosf(std::abs(a.m - b.m), half), cosf(a.m + b.m, half)};
    if (a.kind == K::Sin)  // sin(a)cos(b) = [sin(a+b) + sin(a-b)]/2
      return {sinf(a.m + b.m, half), sinf(a.m - b.m, half)};
    // cos(a)sin(b) = [sin(a+b) - sin(a-b)]/2
    return {sinf(a.m + b.m, half), sinf(a.m - b.m, -half)};
  }

  static int check_m(int m) {
    if (m > 16 * kMaxHarmonic) throw std::overflow_error("TrigPoly: harmonic blow-up");
    return m;
  }
};

/// Three-component trigonometric field over a fixed geometry.
class VectorTrigPoly {
 public:
  VectorTrigPoly(const CavityGeometry& g, const LengthRep& rep)
      : geom_(g), rep_(rep) {}
  VectorTrigPoly(const CavityGeometry& g, const LengthRep& rep,
                 std::array<TrigPoly, 3> comp)
      : geom_(g), rep_(rep), comp_(std::move(comp)) {}

  const TrigPoly& operator[](int i) const { return comp_[i]; }
  TrigPoly& operator[](int i) { return comp_[i]; }
  const CavityGeometry& geometry() const { return geom_; }
  const LengthRep& length_rep() const { return rep_; }

  VectorTrigPoly curl() const {
    VectorTrigPoly out(geom_, rep_);
    out.comp_[0] = comp_[2].derivative(Axis::Y, rep_) - comp_[1].derivative(Axis::Z, rep_);
    out.comp_[1] = comp_[0].derivative(Axis::Z, rep_) - comp_[2].derivative(Axis::X, rep_);
    out.comp_[2] = comp_[1].derivative(Axis::X, rep_) - comp_[0].derivative(Axis::Y, rep_);
    return out;
  }

  TrigPoly divergence() const {
    TrigPoly d = comp_[0].derivative(Axis::X, rep_);
    d += comp_[1].derivative(Axis::Y, rep_);
    d += comp_[2].derivative(Axis::Z, rep_);
    return d;
  }

  std::array<double, 3> evaluate(const std::array<double, 3>& u) const {
    return {comp_[0].evaluate(u, geom_.lengths()), comp_[1].evaluate(u, geom_.lengths()),
            comp_[2].evaluate(u, geom_.lengths())};
  }

  friend TrigPoly dot(const VectorTrigPoly& a, const VectorTrigPoly& b) {
    if (!a.geom_.same_as(b.geom_) || !(a.rep_ == b.rep_))
      throw std::invalid_argument("dot: geometry or length representation mismatch");
    TrigPoly out;
    for (int i = 0; i < 3; ++i) out += a.comp_[i] * b.comp_[i];
    return out;
  }

 private:
  CavityGeometry geom_;
  LengthRep rep_;
  std::array<TrigPoly, 3> comp_;
};

}  // namespace ehcav
