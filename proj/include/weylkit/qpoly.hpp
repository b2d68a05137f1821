#ifndef WEYLKIT_QPOLY_HPP
#define WEYLKIT_QPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace weylkit {

/// Dense univariate polynomial over Q, coefficients in ascending degree order.
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  /// x^k
  static QPoly monomial(int k, const mpq_class& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  const mpq_class& coeff(int k) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& leading() const { return c_.back(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const mpq_class& k) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  /// Exact division; aborts if the remainder is nonzero.
  QPoly divexact(const QPoly& d) const;

  QPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  /// Interval evaluation: exact bounds for {p(t) : t in [lo,hi]}.
  std::pair<mpq_class, mpq_class> eval_interval(const mpq_class& lo,
                                                const mpq_class& hi) const;
  double eval_double(double x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// n-th cyclotomic polynomial, n >= 1.
QPoly cyclotomic(unsigned n);

/// Minimal polynomial over Q of 2*cos(pi/M), M >= 2. Monic.
QPoly min_poly_two_cos_pi_over(unsigned M);

/// Sturm sequence of p (squarefree input expected for exact root counts).
std::vector<QPoly> sturm_sequence(const QPoly& p);

/// Number of distinct real roots of the chain's polynomial in (lo, hi].
int sturm_count(const std::vector<QPoly>& chain, const mpq_class& lo,
                const mpq_class& hi);

}  // namespace weylkit

#endif  // WEYLKIT_QPOLY_HPP
