#include <sstream>

#include "ehcav/surd.hpp"
#include "ehcav/trig_poly.hpp"

namespace ehcav {

std::string Surd::str() const {
  std::ostringstream os;
  os << coef.str();
  if (!rad.empty()) {
    os << "*(";
    bool first = true;
    for (const auto& [p, e] : rad) {
      if (!first) os << "*";
      first = false;
      os << p;
      if (e != 1) os << "^" << e;
    }
    os << ")^(1/4)";
  }
  if (pi_pow != 0) os << "*pi^" << pi_pow;
  static const char* names[3] = {"Lx", "Ly", "Lz"};
  for (int i = 0; i < 3; ++i)
    if (len[i] != 0) os << "*" << names[i] << "^" << len[i];
  return os.str();
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].str();
  }
  return os.str();
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  static const char* axes[3] = {"x", "y", "z"};
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int ax = 0; ax < 3; ++ax) {
      const auto& f = k.f[ax];
      if (f.kind == AxisFactor::Kind::Sin)
        os << "*sin(" << f.m << "pi " << axes[ax] << ")";
      else if (f.kind == AxisFactor::Kind::Cos)
        os << "*cos(" << f.m << "pi " << axes[ax] << ")";
    }
  }
  return os.str();
}

}  // namespace ehcav
