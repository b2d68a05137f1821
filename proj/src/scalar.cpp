#include "weylkit/scalar.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weylkit {

namespace {
void trim(std::vector<mpq_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace

std::shared_ptr<const NumberField> NumberField::rationals() {
  static std::shared_ptr<const NumberField> inst = [] {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->M_ = 2;
    f->psi_ = QPoly::monomial(1);  // c = 2cos(pi/2) = 0
    f->c_rational_ = 0;
    return std::shared_ptr<const NumberField>(f);
  }();
  return inst;
}

std::shared_ptr<const NumberField> NumberField::cos_field(unsigned M) {
  if (M < 2) throw std::invalid_argument("NumberField: M >= 2 required");
  if (M == 2) return rationals();
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->M_ = M;
  f->psi_ = min_poly_two_cos_pi_over(M);
  if (f->psi_.degree() == 1) {
    f->c_rational_ = -f->psi_.coeff(0);  // monic x - c
  } else {
    f->sturm_ = sturm_sequence(f->psi_);
    f->isolate_largest_root();
    // Sanity check against a floating evaluation; not part of the trusted path.
    double c = 2.0 * std::cos(M_PI / static_cast<double>(M));
    if (std::abs(f->psi_.eval_double(c)) > 1e-12)
      throw std::logic_error("NumberField: minimal polynomial sanity check failed");
  }
  return f;
}

void NumberField::isolate_largest_root() {
  // c = 2cos(pi/M) is the largest real root of psi.  Bisect [-2,2], always
  // keeping the rightmost subinterval that contains a root, until exactly one
  // remains.  Endpoints are rational and psi is irreducible of degree >= 2,
  // so psi never vanishes at an endpoint.
  mpq_class lo(-2), hi(2);
  while (sturm_count(sturm_, lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (sturm_count(sturm_, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  // Tighten until psi changes sign across the interval, so later refinement
  // can bisect on the sign of psi alone.
  while (sgn(psi_.eval(lo)) == sgn(psi_.eval(hi))) {
    mpq_class mid = (lo + hi) / 2;
    if (sturm_count(sturm_, mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
  }
  iso_lo_ = lo;
  iso_hi_ = hi;
}

std::vector<mpq_class> NumberField::reduce(const std::vector<mpq_class>& p) const {
  if (degree() == 1) {
    mpq_class acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * c_rational_ + p[i];
    std::vector<mpq_class> r;
    if (acc != 0) r.push_back(acc);
    return r;
  }
  QPoly rem = QPoly(std::vector<mpq_class>(p)).divmod(psi_).second;
  auto r = rem.coeffs();
  trim(r);
  return r;
}

int NumberField::sign_at_c(const std::vector<mpq_class>& reduced) const {
  if (reduced.empty()) return 0;
  if (degree() == 1) return sgn(reduced[0]);
  QPoly p{std::vector<mpq_class>(reduced)};
  std::lock_guard<std::mutex> lock(iso_mx_);
  for (;;) {
    auto [a, b] = p.eval_interval(iso_lo_, iso_hi_);
    if (a > 0) return 1;
    if (b < 0) return -1;
    // p(c) != 0 (p has degree < deg psi, psi irreducible), so refining the
    // isolating interval terminates.
    mpq_class mid = (iso_lo_ + iso_hi_) / 2;
    if (sgn(psi_.eval(mid)) == sgn(psi_.eval(iso_lo_)))
      iso_lo_ = mid;
    else
      iso_hi_ = mid;
  }
}

Scalar NumberField::from_rational(const mpq_class& q) const {
  std::vector<mpq_class> c;
  if (q != 0) c.push_back(q);
  return Scalar(shared_from_this(), std::move(c));
}

Scalar NumberField::generator() const {
  if (degree() == 1) return from_rational(c_rational_);
  return Scalar(shared_from_this(), {mpq_class(0), mpq_class(1)});
}

Scalar NumberField::two_cos_pi_over(unsigned m) const {
  // Rational values exist in every field.
  if (m == 1) return from_rational(-2);
  if (m == 2) return from_rational(0);
  if (m == 3) return from_rational(1);
  if (m == 0 || M_ % m != 0)
    throw std::invalid_argument("NumberField: m must divide M");
  unsigned k = M_ / m;
  // q_0 = 2, q_1 = c, q_{j+1} = c*q_j - q_{j-1}; q_k(c) = 2cos(k pi / M).
  Scalar qprev = from_rational(2);
  Scalar qcur = generator();
  if (k == 0) return qprev;
  Scalar c = generator();
  for (unsigned j = 1; j < k; ++j) {
    Scalar qnext = c * qcur - qprev;
    qprev = qcur;
    qcur = qnext;
  }
  return qcur;
}

double NumberField::approx_c() const {
  if (degree() == 1) return c_rational_.get_d();
  return 2.0 * std::cos(M_PI / static_cast<double>(M_));
}

Scalar::Scalar(std::shared_ptr<const NumberField> field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)) {
  c_ = field_->reduce(coeffs);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_.get() != o.field_.get())
    throw std::invalid_argument("Scalar: operands belong to different fields");
}

int Scalar::sign() const {
  if (!field_) return 0;
  return field_->sign_at_c(c_);
}

bool Scalar::is_rational() const { return c_.size() <= 1; }

mpq_class Scalar::rational_value() const {
  if (c_.empty()) return mpq_class(0);
  assert(c_.size() == 1);
  return c_[0];
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!field_) return o;
  if (!o.field_) return *this;
  check_same_field(o);
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  trim(r);
  Scalar s;
  s.field_ = field_;
  s.c_ = std::move(r);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(*this);
  for (auto& x : s.c_) x = -x;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (!field_ || !o.field_) return Scalar{};
  check_same_field(o);
  if (c_.empty() || o.c_.empty()) {
    Scalar s;
    s.field_ = field_;
    return s;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  Scalar s;
  s.field_ = field_;
  s.c_ = field_->reduce(r);
  return s;
}

Scalar Scalar::operator*(const mpq_class& k) const {
  Scalar s(*this);
  if (k == 0) {
    s.c_.clear();
    return s;
  }
  for (auto& x : s.c_) x *= k;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (c_.empty() && o.c_.empty()) return true;
  return field_.get() == o.field_.get() && c_ == o.c_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

double Scalar::approx() const {
  if (!field_) return 0.0;
  double c = field_->approx_c(), acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * c + c_[i].get_d();
  return acc;
}

std::string Scalar::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  return QPoly(std::vector<mpq_class>(c_)).to_string("c");
}

}  // namespace weylkit
