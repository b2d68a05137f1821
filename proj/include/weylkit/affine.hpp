#ifndef WEYLKIT_AFFINE_HPP
#define WEYLKIT_AFFINE_HPP

#include <gmpxx.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "weylkit/coxeter.hpp"

namespace weylkit {

/// Integer cocharacter (lambda_1, ..., lambda_n), extended n-periodically:
/// lambda_{i+n} = lambda_i.
class Cocharacter {
 public:
  explicit Cocharacter(std::vector<long> entries);
  int rank() const { return static_cast<int>(l_.size()); }
  /// Periodic lookup, any integer index (1-based).
  long at(long i) const;
  const std::vector<long>& entries() const { return l_; }

 private:
  std::vector<long> l_;
};

/// Element of the extended affine Weyl group of GL_n in window notation:
/// a bijection v of Z with v(i+n) = v(i)+n, recorded by (v(1),...,v(n)).
class AffinePermutation {
 public:
  AffinePermutation(int n, std::vector<long> window);
  static AffinePermutation identity(int n);
  /// s_i, 0 <= i < n, swapping the residue classes of i and i+1.
  static AffinePermutation generator(int n, int i);
  static AffinePermutation from_word(int n, const std::vector<int>& word);
  /// v(i) = v_f(i) + n * lambda_{v_f(i)} (decomposition v = eps^lambda v_f).
  static AffinePermutation from_parts(const std::vector<int>& finite_perm,
                                      const Cocharacter& lambda);
  /// Pure translation eps^lambda: i -> i + n*lambda_i.
  static AffinePermutation translation(const Cocharacter& lambda);

  int rank() const { return n_; }
  const std::vector<long>& window() const { return w_; }
  /// v(i) for any integer i.
  long apply(long i) const;

  AffinePermutation operator*(const AffinePermutation& o) const;  // (uv)(i)=u(v(i))
  AffinePermutation inverse() const;
  bool operator==(const AffinePermutation& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const AffinePermutation& o) const { return !(*this == o); }
  bool operator<(const AffinePermutation& o) const { return w_ < o.w_; }

  /// Number of inversions {(i,j) : 1 <= i <= n, i < j, v(i) > v(j)}.
  long length() const;
  /// (sum_i (v(i)-i))/n; zero iff v lies in the affine Weyl group W_a.
  long component() const;
  bool in_affine_weyl_group() const { return component() == 0; }

  bool has_left_descent(int i) const;   // ell(s_i v) < ell(v)
  bool has_right_descent(int i) const;  // ell(v s_i) < ell(v)
  /// Greedy-left-descent canonical word (requires component 0).
  std::vector<int> canonical_word() const;

  /// Finite part and cocharacter with v = eps^lambda v_f.
  std::pair<std::vector<int>, Cocharacter> to_parts() const;

  std::string window_string() const;  // "3,0"

 private:
  int n_;
  std::vector<long> w_;
};

/// Superbasic datum for GL_n: slope m/n with gcd(m, n) = 1; b maps
/// e_i -> e_{i+m} and the twist beta is conjugation by it.
struct SuperbasicDatum {
  SuperbasicDatum(int n, long m);
  int n;
  long m;
};

/// The linear lower bound f(z) = a z + b for ell(beta(v) v^-1), with the
/// finite-part cap c it was derived from.
struct BoundSpec {
  mpq_class a;
  mpq_class b;
  long c;
  mpq_class eval(long z) const { return a * z + b; }
  std::string to_string() const;  // "f(z) = 2z - 4"
};

/// beta(v): i -> v(i-m) + m.  Length-preserving group automorphism with
/// beta(s_i) = s_{i+m}.
AffinePermutation beta_twist(const AffinePermutation& v, const SuperbasicDatum& d);

/// S_k = sum_{1<=i<=n} |lambda_{i+k} - lambda_i|, 1 <= k <= n-1.
long s_k_sum(const Cocharacter& lambda, int k);

/// The unique d in [0,n) with m*d = k (mod n).
long d_of(const SuperbasicDatum& d, long k);

/// The bound of the source estimate, with cap c = 2n-3 (certified only for
/// n in {2,3}; see bound_f_effective).
BoundSpec bound_f(int n);
/// Same slope with cap max(2n-3, n(n-1)/2), valid for every n >= 2; all
/// enumeration radii use this one.
BoundSpec bound_f_effective(int n);

/// Every v in W_a with ell(v) <= max_length, exactly once, in nondecreasing
/// length order (windows sorted within a shell).
void enumerate_ball(int n, long max_length,
                    const std::function<void(const AffinePermutation&)>& yield);
std::vector<AffinePermutation> ball(int n, long max_length);

/// {v in W_a : ell(beta(v) v^-1) < r}, via the effective analytic radius.
std::vector<AffinePermutation> small_twist_set(const SuperbasicDatum& d, long r);

/// {v in W_a, ell(v) within the analytic radius : w_a in D(v^-1, beta(v))},
/// membership decided by full Hecke expansion in affine A_{n-1}.  A finite
/// superset of the cells meeting X_w(b)^0.
std::vector<AffinePermutation> candidate_cells(const SuperbasicDatum& d,
                                               const AffinePermutation& w_a);

}  // namespace weylkit

#endif  // WEYLKIT_AFFINE_HPP
