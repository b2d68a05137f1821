#include "weylkit/laurent.hpp"

#include <sstream>

namespace weylkit {

LaurentPoly LaurentPoly::term(long exponent, mpz_class coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.c_[exponent] = std::move(coefficient);
  return p;
}

mpz_class LaurentPoly::coefficient(long exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::prune(long exponent) {
  auto it = c_.find(exponent);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, a] : o.c_) {
    r.c_[e] += a;
    r.prune(e);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  for (const auto& [e, a] : o.c_) {
    r.c_[e] -= a;
    r.prune(e);
  }
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, a1] : c_)
    for (const auto& [e2, a2] : o.c_) {
      r.c_[e1 + e2] += a1 * a2;
      r.prune(e1 + e2);
    }
  return r;
}

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class acc(0);
  for (const auto& [e, a] : c_) acc += a;
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    long e = it->first;
    mpz_class a = it->second;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    mpz_class m = abs(a);
    if (m != 1 || e == 0) os << m.get_str();
    if (e != 0) {
      if (m != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace weylkit
