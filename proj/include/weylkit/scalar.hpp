#ifndef WEYLKIT_SCALAR_HPP
#define WEYLKIT_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <vector>

#include "weylkit/qpoly.hpp"

namespace weylkit {

class Scalar;

/// The real field Q(c), c = 2cos(pi/M), in which every bilinear-form entry
/// -cos(pi/m) with m | M lives.  Degree-1 instances (including the plain
/// rationals) evaluate c to an explicit rational; higher-degree instances
/// carry the minimal polynomial of c, its Sturm chain, and an isolating
/// interval for the real embedding, refined by bisection on demand.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Shared degree-1 field with c = 0 (plain rationals).
  static std::shared_ptr<const NumberField> rationals();
  /// Q(2cos(pi/M)).
  static std::shared_ptr<const NumberField> cos_field(unsigned M);

  int degree() const { return psi_.degree(); }
  unsigned order() const { return M_; }
  const QPoly& minimal_polynomial() const { return psi_; }

  Scalar from_rational(const mpq_class& q) const;
  /// The generator c itself.
  Scalar generator() const;
  /// 2cos(pi/m) for m dividing M, via the Chebyshev-type identity
  /// 2cos(k*pi/M) = q_k(c) with k = M/m.
  Scalar two_cos_pi_over(unsigned m) const;

  /// Exact sign of p(c) for p already reduced mod psi.
  int sign_at_c(const std::vector<mpq_class>& reduced) const;
  /// Reduce a coefficient vector mod psi (degree-1: evaluate at c).
  std::vector<mpq_class> reduce(const std::vector<mpq_class>& p) const;
  /// Non-trusted float approximation of c.
  double approx_c() const;

 private:
  NumberField() = default;
  void isolate_largest_root();

  QPoly psi_;
  unsigned M_ = 2;
  mpq_class c_rational_;  // meaningful iff degree() == 1
  std::vector<QPoly> sturm_;
  mutable mpq_class iso_lo_, iso_hi_;  // isolating interval, psi changes sign
  mutable std::mutex iso_mx_;
};

/// An element of a NumberField: a polynomial in c of degree < deg(psi) with
/// rational coefficients, always kept reduced.  Values are immutable;
/// arithmetic requires both operands to share the same field instance.
class Scalar {
 public:
  Scalar() = default;  // zero of the rational field
  Scalar(std::shared_ptr<const NumberField> field, std::vector<mpq_class> coeffs);

  const std::shared_ptr<const NumberField>& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  /// Exact sign of the real value: -1, 0, or +1.
  int sign() const;
  bool is_rational() const;
  /// Value as a rational; valid only when is_rational().
  mpq_class rational_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator*(const mpq_class& k) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Arbitrary total order on canonical forms (container use, not numeric).
  bool operator<(const Scalar& o) const;

  double approx() const;  // non-trusted
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;
  std::shared_ptr<const NumberField> field_;
  std::vector<mpq_class> c_;  // ascending powers of c, reduced, trimmed
};

}  // namespace weylkit

#endif  // WEYLKIT_SCALAR_HPP
