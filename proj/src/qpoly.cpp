#include "weylkit/qpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylkit {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) {
  QPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

QPoly QPoly::monomial(int k, const mpq_class& c) {
  QPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(k) + 1, mpq_class(0));
    p.c_.back() = c;
  }
  return p;
}

const mpq_class& QPoly::coeff(int k) const {
  static const mpq_class zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(k)];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x = -x;
  QPoly p;
  p.c_ = std::move(r);
  return p;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& k) const {
  if (k == 0) return QPoly();
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= k;
  QPoly p;
  p.c_ = std::move(r);
  return p;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("QPoly: division by zero");
  std::vector<mpq_class> rem(c_);
  int dd = d.degree();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd < dd) return {QPoly(), *this};
  std::vector<mpq_class> quo(static_cast<size_t>(rd - dd) + 1, mpq_class(0));
  const mpq_class& lead = d.leading();
  for (int k = rd; k >= dd; --k) {
    mpq_class q = rem[static_cast<size_t>(k)] / lead;
    if (q == 0) continue;
    quo[static_cast<size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(k - dd + j)] -= q * d.c_[static_cast<size_t>(j)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::divexact(const QPoly& d) const {
  auto [q, r] = divmod(d);
  assert(r.is_zero());
  return q;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
  return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<mpq_class, mpq_class> QPoly::eval_interval(const mpq_class& lo,
                                                     const mpq_class& hi) const {
  mpq_class a(0), b(0);  // running interval [a,b]
  for (size_t i = c_.size(); i-- > 0;) {
    // [a,b] * [lo,hi]
    mpq_class p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    mpq_class na = std::min(std::min(p1, p2), std::min(p3, p4));
    mpq_class nb = std::max(std::max(p1, p2), std::max(p3, p4));
    a = na + c_[i];
    b = nb + c_[i];
  }
  return {a, b};
}

double QPoly::eval_double(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeff(k);
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

QPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  // x^n - 1 divided by Phi_d for all proper divisors d.
  std::vector<mpq_class> xn(n + 1, mpq_class(0));
  xn[0] = -1;
  xn[n] = 1;
  QPoly p{std::vector<mpq_class>(xn)};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = p.divexact(cyclotomic(d));
  return p;
}

QPoly min_poly_two_cos_pi_over(unsigned M) {
  if (M < 2) throw std::invalid_argument("min_poly_two_cos_pi_over: M >= 2 required");
  // 2cos(pi/M) = z + 1/z for z a primitive 2M-th root of unity.  Fold the
  // palindromic cyclotomic polynomial Phi_{2M}(z) through z^j + z^-j = q_j(x),
  // q_0 = 2, q_1 = x, q_{j+1} = x q_j - q_{j-1}.
  QPoly phi = cyclotomic(2 * M);
  int D = phi.degree();
  assert(D % 2 == 0);
  int h = D / 2;
  QPoly qprev = QPoly::constant(2);
  QPoly qcur = QPoly::monomial(1);
  QPoly x = QPoly::monomial(1);
  QPoly res = QPoly::constant(phi.coeff(h));
  for (int j = 1; j <= h; ++j) {
    res = res + qcur * phi.coeff(h + j);
    QPoly qnext = x * qcur - qprev;
    qprev = qcur;
    qcur = qnext;
  }
  assert(res.degree() == h && res.leading() == 1);
  return res;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    QPoly r = -a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {
int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    mpq_class v = p.eval(x);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}
}  // namespace

int sturm_count(const std::vector<QPoly>& chain, const mpq_class& lo,
                const mpq_class& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace weylkit
