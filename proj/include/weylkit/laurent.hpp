#ifndef WEYLKIT_LAURENT_HPP
#define WEYLKIT_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace weylkit {

/// Element of Z[v, v^-1]: finitely supported exponent -> coefficient map,
/// zero coefficients never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return term(0, 1); }
  static LaurentPoly term(long exponent, mpz_class coefficient);

  bool is_zero() const { return c_.empty(); }
  const std::map<long, mpz_class>& terms() const { return c_; }
  mpz_class coefficient(long exponent) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  /// Specialize v -> 1.
  mpz_class eval_at_one() const;
  /// Canonical rendering, descending exponents: "v^2 - 1 + v^-2".
  std::string to_string() const;

 private:
  void prune(long exponent);
  std::map<long, mpz_class> c_;
};

}  // namespace weylkit

#endif  // WEYLKIT_LAURENT_HPP
