#include "weylkit/affine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

#include "weylkit/hecke.hpp"

namespace weylkit {

namespace {
// Representative of j in {1,...,n}.
long mod1n(long j, int n) {
  long r = j % n;
  if (r <= 0) r += n;
  return r;
}
}  // namespace

Cocharacter::Cocharacter(std::vector<long> entries) : l_(std::move(entries)) {
  if (l_.empty()) throw DomainError("cocharacter: empty");
}

long Cocharacter::at(long i) const {
  return l_[static_cast<size_t>(mod1n(i, rank()) - 1)];
}

AffinePermutation::AffinePermutation(int n, std::vector<long> window)
    : n_(n), w_(std::move(window)) {
  if (n < 1 || static_cast<int>(w_.size()) != n)
    throw DomainError("affine permutation: window size must equal n");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (long v : w_) {
    long r = mod1n(v, n) - 1;
    if (seen[static_cast<size_t>(r)])
      throw DomainError("affine permutation: window residues are not a permutation");
    seen[static_cast<size_t>(r)] = true;
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::generator(int n, int i) {
  if (i < 0 || i >= n) throw DomainError("affine generator index out of range");
  std::vector<long> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  if (i == 0) {
    w[0] = 0;
    w[static_cast<size_t>(n - 1)] = n + 1;
    if (n == 1) w[0] = 1;  // degenerate, unused (n >= 2 in practice)
  } else {
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
  }
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::from_word(int n, const std::vector<int>& word) {
  AffinePermutation v = identity(n);
  for (int i : word) v = v * generator(n, i);
  return v;
}

AffinePermutation AffinePermutation::from_parts(const std::vector<int>& finite_perm,
                                                const Cocharacter& lambda) {
  int n = static_cast<int>(finite_perm.size());
  if (lambda.rank() != n) throw DomainError("from_parts: rank mismatch");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : finite_perm) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw DomainError("from_parts: not a permutation of {1..n}");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  std::vector<long> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    long vf = finite_perm[static_cast<size_t>(i)];
    w[static_cast<size_t>(i)] = vf + static_cast<long>(n) * lambda.at(vf);
  }
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::translation(const Cocharacter& lambda) {
  int n = lambda.rank();
  std::vector<long> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    w[static_cast<size_t>(i - 1)] = i + static_cast<long>(n) * lambda.at(i);
  return AffinePermutation(n, std::move(w));
}

long AffinePermutation::apply(long i) const {
  long r = mod1n(i, n_);
  return w_[static_cast<size_t>(r - 1)] + (i - r);
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& o) const {
  if (n_ != o.n_) throw DomainError("affine multiply: rank mismatch");
  std::vector<long> w(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) w[static_cast<size_t>(i - 1)] = apply(o.apply(i));
  return AffinePermutation(n_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<long> w(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    long j = w_[static_cast<size_t>(i - 1)];
    long r = mod1n(j, n_);
    // v^{-1}(r) = v^{-1}(j) + (r - j) = i + r - j
    w[static_cast<size_t>(r - 1)] = i + r - j;
  }
  return AffinePermutation(n_, std::move(w));
}

long AffinePermutation::length() const {
  // v(j) = w(r) + (j - r) >= j + min_r(w(r) - r), so inversions with row i
  // can only occur while j <= v(i) - min_r(w(r) - r).
  long min_shift = 0;
  for (int r = 1; r <= n_; ++r)
    min_shift = std::min(min_shift, w_[static_cast<size_t>(r - 1)] - r);
  long count = 0;
  for (int i = 1; i <= n_; ++i) {
    long vi = w_[static_cast<size_t>(i - 1)];
    for (long j = i + 1; j <= vi - min_shift; ++j)
      if (apply(j) < vi) ++count;
  }
  return count;
}

long AffinePermutation::component() const {
  long sum = 0;
  for (int i = 1; i <= n_; ++i) sum += w_[static_cast<size_t>(i - 1)] - i;
  assert(sum % n_ == 0);
  return sum / n_;
}

bool AffinePermutation::has_right_descent(int i) const {
  // ell(v s_i) < ell(v) iff v(i) > v(i+1)
  return apply(i) > apply(i + 1);
}

bool AffinePermutation::has_left_descent(int i) const {
  // ell(s_i v) < ell(v) iff v^{-1}(i) > v^{-1}(i+1); position of value i
  // comes after position of value i+1.
  AffinePermutation vi = inverse();
  return vi.apply(i) > vi.apply(i + 1);
}

std::vector<int> AffinePermutation::canonical_word() const {
  if (!in_affine_weyl_group())
    throw DomainError("canonical_word: element is not in W_a (component != 0)");
  std::vector<int> word;
  AffinePermutation v = *this;
  AffinePermutation vinv = v.inverse();
  AffinePermutation id = identity(n_);
  while (v != id) {
    int s = -1;
    for (int i = 0; i < n_; ++i)
      if (vinv.apply(i) > vinv.apply(i + 1)) {
        s = i;
        break;
      }
    assert(s >= 0);
    word.push_back(s);
    v = generator(n_, s) * v;
    vinv = v.inverse();
  }
  return word;
}

std::pair<std::vector<int>, Cocharacter> AffinePermutation::to_parts() const {
  std::vector<int> vf(static_cast<size_t>(n_));
  std::vector<long> lambda(static_cast<size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i) {
    long v = w_[static_cast<size_t>(i - 1)];
    long r = mod1n(v, n_);
    vf[static_cast<size_t>(i - 1)] = static_cast<int>(r);
    lambda[static_cast<size_t>(r - 1)] = (v - r) / n_;
  }
  return {std::move(vf), Cocharacter(std::move(lambda))};
}

std::string AffinePermutation::window_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ",";
    os << w_[static_cast<size_t>(i)];
  }
  return os.str();
}

SuperbasicDatum::SuperbasicDatum(int n_, long m_) : n(n_), m(m_) {
  if (n < 2) throw DomainError("superbasic datum: n >= 2 required");
  long g = std::gcd(static_cast<long>(n), m < 0 ? -m : m);
  if (g != 1) throw DomainError("superbasic datum: gcd(m, n) must be 1");
}

AffinePermutation beta_twist(const AffinePermutation& v, const SuperbasicDatum& d) {
  if (v.rank() != d.n) throw DomainError("beta_twist: rank mismatch");
  std::vector<long> w(static_cast<size_t>(d.n));
  for (int i = 1; i <= d.n; ++i) w[static_cast<size_t>(i - 1)] = v.apply(i - d.m) + d.m;
  return AffinePermutation(d.n, std::move(w));
}

long s_k_sum(const Cocharacter& lambda, int k) {
  int n = lambda.rank();
  if (k < 1 || k > n - 1) throw DomainError("s_k_sum: k must be in [1, n-1]");
  long sum = 0;
  for (int i = 1; i <= n; ++i) sum += std::abs(lambda.at(i + k) - lambda.at(i));
  return sum;
}

long d_of(const SuperbasicDatum& d, long k) {
  long kr = ((k % d.n) + d.n) % d.n;
  for (long x = 0; x < d.n; ++x)
    if ((((x * d.m) % d.n) + d.n) % d.n == kr) return x;
  assert(false && "d_of: no solution; gcd(m,n) != 1?");
  return -1;
}

std::string BoundSpec::to_string() const {
  auto coeff = [](const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
  };
  std::string s = "f(z) = ";
  if (a == 1)
    s += "z";
  else
    s += coeff(a) + "z";
  if (b != 0) {
    mpq_class ab = abs(b);
    s += (b < 0 ? " - " : " + ");
    if (ab.get_den() == 1)
      s += ab.get_num().get_str();
    else
      s += ab.get_num().get_str() + "/" + ab.get_den().get_str();
  }
  return s;
}

namespace {
BoundSpec make_bound(int n, long cap) {
  mpq_class a(2, n - 1);
  a.canonicalize();
  mpq_class b = -(mpq_class(2) + a) * cap;
  b.canonicalize();
  return BoundSpec{a, b, cap};
}
}  // namespace

BoundSpec bound_f(int n) {
  if (n < 2) throw DomainError("bound_f: n >= 2 required");
  return make_bound(n, 2L * n - 3);
}

BoundSpec bound_f_effective(int n) {
  if (n < 2) throw DomainError("bound_f_effective: n >= 2 required");
  long c = std::max(2L * n - 3, static_cast<long>(n) * (n - 1) / 2);
  return make_bound(n, c);
}

void enumerate_ball(int n, long max_length,
                    const std::function<void(const AffinePermutation&)>& yield) {
  if (n < 1) throw DomainError("enumerate_ball: n >= 1 required");
  std::set<std::vector<long>> seen;
  std::vector<AffinePermutation> shell{AffinePermutation::identity(n)};
  seen.insert(shell[0].window());
  for (long len = 0; len <= max_length && !shell.empty(); ++len) {
    std::sort(shell.begin(), shell.end());
    for (const auto& v : shell) yield(v);
    std::vector<AffinePermutation> next;
    for (const auto& v : shell)
      for (int s = 0; s < n; ++s) {
        if (v.has_right_descent(s)) continue;
        AffinePermutation vs = v * AffinePermutation::generator(n, s);
        if (seen.insert(vs.window()).second) next.push_back(vs);
      }
    shell = std::move(next);
  }
}

std::vector<AffinePermutation> ball(int n, long max_length) {
  std::vector<AffinePermutation> out;
  enumerate_ball(n, max_length, [&out](const AffinePermutation& v) { out.push_back(v); });
  return out;
}

namespace {
// Largest z >= 0 with f(z) < r (strict) or f(z) <= r (inclusive).
long analytic_radius(const BoundSpec& f, const mpq_class& r, bool strict) {
  // f(z) = az + b with a > 0; z < (r-b)/a resp. z <= (r-b)/a.
  mpq_class t = (r - f.b) / f.a;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  long z = fl.get_si();
  if (strict && mpq_class(fl) == t) --z;  // boundary: need f(z) strictly below
  return std::max(z, 0L);
}
}  // namespace

std::vector<AffinePermutation> small_twist_set(const SuperbasicDatum& d, long r) {
  std::vector<AffinePermutation> out;
  if (r <= 0) return out;
  long zmax = analytic_radius(bound_f_effective(d.n), mpq_class(r), /*strict=*/true);
  enumerate_ball(d.n, zmax, [&](const AffinePermutation& v) {
    AffinePermutation tw = beta_twist(v, d) * v.inverse();
    if (tw.length() < r) out.push_back(v);
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    long lx = x.length(), ly = y.length();
    return lx != ly ? lx < ly : x < y;
  });
  return out;
}

std::vector<AffinePermutation> candidate_cells(const SuperbasicDatum& d,
                                               const AffinePermutation& w_a) {
  if (w_a.rank() != d.n) throw DomainError("candidate_cells: rank mismatch");
  if (!w_a.in_affine_weyl_group())
    throw DomainError("candidate_cells: w_a is not in W_a (component != 0)");
  long lw = w_a.length();
  long zmax = analytic_radius(bound_f_effective(d.n), mpq_class(lw), /*strict=*/false);

  auto sys = CoxeterSystem::preset("affine-A" + std::to_string(d.n - 1));
  HeckeAlgebra algebra = HeckeAlgebra::equal_parameters(sys);
  std::vector<int> target = w_a.canonical_word();

  std::vector<AffinePermutation> out;
  enumerate_ball(d.n, zmax, [&](const AffinePermutation& v) {
    GroupElement vinv = sys->from_word(v.inverse().canonical_word());
    GroupElement bv = sys->from_word(beta_twist(v, d).canonical_word());
    for (const auto& w : algebra.support(vinv, bv))
      if (w.word() == target) {
        out.push_back(v);
        break;
      }
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    long lx = x.length(), ly = y.length();
    return lx != ly ? lx < ly : x < y;
  });
  return out;
}

}  // namespace weylkit
