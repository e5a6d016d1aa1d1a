#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehcav/rational.hpp"

namespace ehcav {

/// One exact scalar monomial
///
///     coef * rad^(1/4) * pi^pi_pow * Lx^len[0] * Ly^len[1] * Lz^len[2]
///
/// where `rad` is a positive integer kept in fully factored form with prime
/// exponents in [1,3] (fourth-power-free normal form). Every square root and
/// fourth root of a rational lands in this representation, so equality of the
/// irrational part is a plain structural comparison.
class Surd {
 public:
  Rational coef;
  std::map<long long, int> rad;  // prime -> exponent in [1,3]
  int pi_pow = 0;
  std::array<int, 3> len = {0, 0, 0};

  Surd() : coef(0) {}
  explicit Surd(const Rational& c) : coef(c) {}
  Surd(const Rational& c, int pi, std::array<int, 3> l) : coef(c), pi_pow(pi), len(l) {}

  static Surd one() { return Surd(Rational(1)); }
  static Surd zero() { return Surd(Rational(0)); }

  /// sqrt(r) for r >= 0, exact. sqrt(a/b) = sqrt(a*b)/b.
  static Surd sqrt_of(const Rational& r) { return root_of(r, 2); }
  /// r^(1/4) for r >= 0, exact. (a/b)^(1/4) = (a*b^3)^(1/4)/b.
  static Surd fourth_root_of(const Rational& r) { return root_of(r, 1); }

  bool is_zero() const { return coef.is_zero(); }
  bool is_rational() const { return rad.empty(); }

  Surd operator*(const Surd& o) const {
    Surd out;
    out.coef = coef * o.coef;
    if (out.coef.is_zero()) return Surd::zero();
    out.pi_pow = pi_pow + o.pi_pow;
    for (int i = 0; i < 3; ++i) out.len[i] = len[i] + o.len[i];
    out.rad = rad;
    for (const auto& [p, e] : o.rad) out.rad[p] += e;
    out.reduce_rad();
    return out;
  }

  Surd operator*(const Rational& r) const {
    Surd out = *this;
    out.coef *= r;
    if (out.coef.is_zero()) return Surd::zero();
    return out;
  }

  Surd operator-() const {
    Surd out = *this;
    out.coef = -out.coef;
    return out;
  }

  /// Structural key of the irrational part; terms with equal keys may be added.
  bool same_kind(const Surd& o) const {
    return pi_pow == o.pi_pow && len == o.len && rad == o.rad;
  }

  std::strong_ordering kind_order(const Surd& o) const {
    if (auto c = pi_pow <=> o.pi_pow; c != 0) return c;
    if (auto c = len <=> o.len; c != 0) return c;
    if (auto c = rad.size() <=> o.rad.size(); c != 0) return c;
    auto it = rad.begin();
    auto jt = o.rad.begin();
    for (; it != rad.end(); ++it, ++jt) {
      if (auto c = it->first <=> jt->first; c != 0) return c;
      if (auto c = it->second <=> jt->second; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  double rad_double() const {
    double v = 1.0;
    for (const auto& [p, e] : rad) v *= std::pow((double)p, 0.25 * e);
    return v;
  }

  double to_double(const std::array<double, 3>& lengths) const {
    double v = coef.to_double() * rad_double();
    if (pi_pow != 0) v *= std::pow(M_PI, pi_pow);
    for (int i = 0; i < 3; ++i)
      if (len[i] != 0) v *= std::pow(lengths[i], len[i]);
    return v;
  }

  std::string str() const;

 private:
  static Surd root_of(const Rational& r, int quarter_exp) {
    if (r.is_negative()) throw std::domain_error("Surd: root of negative rational");
    if (r.is_zero()) return Surd::zero();
    Surd out = Surd::one();
    factor_into(out, r.num(), quarter_exp);
    factor_into(out, r.den(), -quarter_exp);
    out.reduce_rad();
    // negative exponents: p^(-e/4) = p^((4-e)/4) / p
    for (auto it = out.rad.begin(); it != out.rad.end();) {
      if (it->second < 0) {
        int e = it->second;
        int k = (-e + 3) / 4;  // smallest k with e + 4k >= 0
        out.coef *= Rational(1, ipow(it->first, k));
        it->second = e + 4 * k;
        if (it->second == 0)
          it = out.rad.erase(it);
        else
          ++it;
      } else {
        ++it;
      }
    }
    return out;
  }

  static long long ipow(long long b, int e) {
    __int128 v = 1;
    for (int i = 0; i < e; ++i) {
      v *= b;
      if (v > INT64_MAX) throw std::overflow_error("Surd: power overflow");
    }
    return (long long)v;
  }

  static void factor_into(Surd& out, long long n, int quarter_exp) {
    if (n == 1) return;
    long long m = n;
    auto take = [&](long long p, int mult) {
      int e = mult * quarter_exp;
      out.rad[p] += e;
    };
    for (long long p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
      if (m % p == 0) {
        int cnt = 0;
        while (m % p == 0) {
          m /= p;
          ++cnt;
        }
        take(p, cnt);
      }
      if (p > 2000000) break;  // inputs stay far below this
    }
    if (m > 1) {
      // remaining cofactor: prime (composite would have had a factor below
      // the trial bound for the magnitudes this engine produces)
      if (m > (long long)4e12)
        throw std::overflow_error("Surd: radicand too large to factor");
      take(m, 1);
    }
  }

  void reduce_rad() {
    for (auto it = rad.begin(); it != rad.end();) {
      int e = it->second;
      if (e >= 4) {
        coef *= Rational(ipow(it->first, e / 4));
        e %= 4;
      }
      if (e == 0)
        it = rad.erase(it);
      else {
        it->second = e;
        ++it;
      }
    }
  }
};

/// Formal sum of Surd terms, canonically merged. Exact zero is an empty sum.
class SurdSum {
 public:
  SurdSum() = default;
  explicit SurdSum(const Surd& s) { add(s); }
  explicit SurdSum(const Rational& r) { add(Surd(r)); }

  static SurdSum zero() { return SurdSum(); }

  const std::vector<Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Surd& s) {
    if (s.is_zero()) return;
    for (auto& t : terms_) {
      if (t.same_kind(s)) {
        t.coef += s.coef;
        if (t.coef.is_zero()) erase_term(&t);
        return;
      }
    }
    insert_sorted(s);
  }

  SurdSum& operator+=(const SurdSum& o) {
    for (const auto& t : o.terms_) add(t);
    return *this;
  }
  SurdSum& operator-=(const SurdSum& o) {
    for (const auto& t : o.terms_) add(-t);
    return *this;
  }
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }

  SurdSum operator*(const Surd& s) const {
    SurdSum out;
    for (const auto& t : terms_) out.add(t * s);
    return out;
  }
  SurdSum operator*(const SurdSum& o) const {
    SurdSum out;
    for (const auto& t : terms_)
      for (const auto& u : o.terms_) out.add(t * u);
    return out;
  }
  SurdSum operator*(const Rational& r) const {
    SurdSum out;
    for (const auto& t : terms_) out.add(t * r);
    return out;
  }
  SurdSum operator-() const {
    SurdSum out;
    for (const auto& t : terms_) out.add(-t);
    return out;
  }

  friend bool operator==(const SurdSum& a, const SurdSum& b) {
    return (a - b).is_zero();
  }

  double to_double(const std::array<double, 3>& lengths) const {
    double v = 0.0;
    for (const auto& t : terms_) v += t.to_double(lengths);
    return v;
  }

  std::string str() const;

 private:
  std::vector<Surd> terms_;

  void erase_term(Surd* t) { terms_.erase(terms_.begin() + (t - terms_.data())); }

  void insert_sorted(const Surd& s) {
    auto it = terms_.begin();
    while (it != terms_.end() && it->kind_order(s) == std::strong_ordering::less) ++it;
    terms_.insert(it, s);
  }
};

}  // namespace ehcav
