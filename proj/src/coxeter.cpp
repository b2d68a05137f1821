#include "weylkit/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace weylkit {

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries)
    : m_(std::move(entries)) {
  int n = static_cast<int>(m_.size());
  if (n == 0) throw DomainError("CoxeterMatrix: empty matrix");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(m_[i].size()) != n)
      throw DomainError("CoxeterMatrix: row " + std::to_string(i) + " has wrong size");
  for (int i = 0; i < n; ++i) {
    if (m_[i][i] != 1)
      throw DomainError("CoxeterMatrix: diagonal entry (" + std::to_string(i) + "," +
                        std::to_string(i) + ") must be 1");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m_[i][j] != kInfinite && m_[i][j] < 2)
        throw DomainError("CoxeterMatrix: off-diagonal entry (" + std::to_string(i) +
                          "," + std::to_string(j) + ") must be >= 2 or infinite");
      if (m_[i][j] != m_[j][i])
        throw DomainError("CoxeterMatrix: asymmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("rank") || !j.contains("matrix"))
    throw DomainError("system file: expected keys \"rank\" and \"matrix\"");
  int n = j["rank"].get<int>();
  auto rows = j["matrix"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != n)
    throw DomainError("system file: matrix size does not match rank");
  return CoxeterMatrix(std::move(rows));
}

std::string CoxeterMatrix::to_json_text() const {
  nlohmann::json j;
  j["rank"] = rank();
  j["matrix"] = m_;
  return j.dump();
}

namespace {

std::vector<std::vector<int>> chain_matrix(int n, int special_pos, int special_m) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    int v = (i == special_pos) ? special_m : 3;
    m[i][i + 1] = m[i + 1][i] = v;
  }
  return m;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::preset(const std::string& name) {
  auto num_after = [&](size_t pos) { return std::stoi(name.substr(pos)); };
  try {
    if (name.rfind("affine-A", 0) == 0) {
      int k = num_after(8);
      if (k < 1) throw DomainError("preset: affine-A<k> requires k >= 1");
      int n = k + 1;
      if (n == 2) {
        return CoxeterMatrix({{1, kInfinite}, {kInfinite, 1}});
      }
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        m[i][j] = m[j][i] = 3;
      }
      return CoxeterMatrix(std::move(m));
    }
    if (name.rfind("A", 0) == 0 && name.size() > 1 && std::isdigit(name[1])) {
      int k = num_after(1);
      if (k < 1) throw DomainError("preset: A<k> requires k >= 1");
      return CoxeterMatrix(chain_matrix(k, -1, 3));
    }
    if (name.rfind("B", 0) == 0 && name.size() > 1 && std::isdigit(name[1])) {
      int k = num_after(1);
      if (k < 2) throw DomainError("preset: B<k> requires k >= 2");
      return CoxeterMatrix(chain_matrix(k, k - 2, 4));
    }
    if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
      int m = std::stoi(name.substr(3, name.size() - 4));
      if (m != kInfinite && m < 2) throw DomainError("preset: I2(<m>) requires m >= 2 or 0");
      return CoxeterMatrix({{1, m}, {m, 1}});
    }
    if (name.rfind("free(", 0) == 0 && name.back() == ')') {
      int k = std::stoi(name.substr(5, name.size() - 6));
      if (k < 1) throw DomainError("preset: free(<k>) requires k >= 1");
      std::vector<std::vector<int>> m(k, std::vector<int>(k, kInfinite));
      for (int i = 0; i < k; ++i) m[i][i] = 1;
      return CoxeterMatrix(std::move(m));
    }
  } catch (const std::invalid_argument&) {
    // fall through to unknown-preset error
  } catch (const std::out_of_range&) {
  }
  throw DomainError("unknown preset: " + name);
}

// ---------------------------------------------------------------------------
// GroupElement internals

struct GroupElement::Impl {
  std::shared_ptr<const CoxeterSystem> sys;
  std::vector<Scalar> fwd;  // row-major n x n
  std::vector<Scalar> inv;
  mutable std::mutex word_mx;
  mutable std::optional<std::vector<int>> word;
};

namespace {

// First-nonzero sign test; columns of group matrices are roots, hence
// sign-coherent (Prop 2.2 is checked independently by the invariant suite).
bool column_negative(const std::vector<Scalar>& m, int n, int col) {
  for (int i = 0; i < n; ++i) {
    const Scalar& v = m[static_cast<size_t>(i) * n + col];
    if (!v.is_zero()) return v.sign() < 0;
  }
  return false;
}

// In-place: m <- sigma(s) * m (changes row s only).
void left_gen_inplace(const CoxeterSystem& sys, std::vector<Scalar>& m, int s) {
  int n = sys.rank();
  std::vector<Scalar> new_row(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Scalar acc = m[static_cast<size_t>(s) * n + j];
    for (int k = 0; k < n; ++k) {
      const Scalar& f = sys.form(k, s);
      if (f.is_zero()) continue;
      acc = acc - f * m[static_cast<size_t>(k) * n + j] * mpq_class(2);
    }
    new_row[static_cast<size_t>(j)] = std::move(acc);
  }
  for (int j = 0; j < n; ++j) m[static_cast<size_t>(s) * n + j] = std::move(new_row[static_cast<size_t>(j)]);
}

// In-place: m <- m * sigma(s) (updates every column using old column s).
void right_gen_inplace(const CoxeterSystem& sys, std::vector<Scalar>& m, int s) {
  int n = sys.rank();
  std::vector<Scalar> col_s(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) col_s[static_cast<size_t>(i)] = m[static_cast<size_t>(i) * n + s];
  for (int t = 0; t < n; ++t) {
    const Scalar& f = sys.form(t, s);
    if (f.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      m[static_cast<size_t>(i) * n + t] =
          m[static_cast<size_t>(i) * n + t] - f * col_s[static_cast<size_t>(i)] * mpq_class(2);
  }
}

bool is_identity_matrix(const CoxeterSystem& sys, const std::vector<Scalar>& m) {
  int n = sys.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& v = m[static_cast<size_t>(i) * n + j];
      if (i == j) {
        if (v.is_zero() || !v.is_rational() || v.rational_value() != 1) return false;
      } else if (!v.is_zero()) {
        return false;
      }
    }
  return true;
}

std::vector<Scalar> matrix_product(const CoxeterSystem& sys,
                                   const std::vector<Scalar>& a,
                                   const std::vector<Scalar>& b) {
  int n = sys.rank();
  std::vector<Scalar> r(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = sys.field()->from_rational(0);
      for (int k = 0; k < n; ++k) {
        const Scalar& x = a[static_cast<size_t>(i) * n + k];
        const Scalar& y = b[static_cast<size_t>(k) * n + j];
        if (x.is_zero() || y.is_zero()) continue;
        acc = acc + x * y;
      }
      r[static_cast<size_t>(i) * n + j] = std::move(acc);
    }
  return r;
}

}  // namespace

const CoxeterSystem& GroupElement::system() const { return *impl_->sys; }

bool GroupElement::is_identity() const {
  return is_identity_matrix(*impl_->sys, impl_->fwd);
}

const std::vector<int>& GroupElement::word() const {
  std::lock_guard<std::mutex> lock(impl_->word_mx);
  if (!impl_->word) {
    const CoxeterSystem& sys = *impl_->sys;
    int n = sys.rank();
    std::vector<Scalar> fwd = impl_->fwd, inv = impl_->inv;
    std::vector<int> w;
    while (!is_identity_matrix(sys, fwd)) {
      int s = -1;
      for (int t = 0; t < n; ++t)
        if (column_negative(inv, n, t)) {
          s = t;
          break;
        }
      assert(s >= 0 && "non-identity element without a left descent");
      w.push_back(s);
      left_gen_inplace(sys, fwd, s);
      right_gen_inplace(sys, inv, s);
    }
    impl_->word = std::move(w);
  }
  return *impl_->word;
}

int GroupElement::length() const { return static_cast<int>(word().size()); }

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (impl_->sys.get() != o.impl_->sys.get())
    throw DomainError("multiply: elements belong to different systems");
  const CoxeterSystem& sys = *impl_->sys;
  auto impl = std::make_shared<Impl>();
  impl->sys = impl_->sys;
  impl->fwd = matrix_product(sys, impl_->fwd, o.impl_->fwd);
  impl->inv = matrix_product(sys, o.impl_->inv, impl_->inv);
  return GroupElement(std::move(impl));
}

GroupElement GroupElement::inverse() const {
  auto impl = std::make_shared<Impl>();
  impl->sys = impl_->sys;
  impl->fwd = impl_->inv;
  impl->inv = impl_->fwd;
  return GroupElement(std::move(impl));
}

bool GroupElement::operator==(const GroupElement& o) const {
  if (impl_.get() == o.impl_.get()) return true;
  if (impl_->sys.get() != o.impl_->sys.get()) return false;
  return impl_->fwd == o.impl_->fwd;
}

bool GroupElement::operator<(const GroupElement& o) const {
  const std::vector<int>&a = word(), &b = o.word();
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool GroupElement::has_right_descent(int s) const {
  return column_negative(impl_->fwd, impl_->sys->rank(), s);
}

bool GroupElement::has_left_descent(int s) const {
  return column_negative(impl_->inv, impl_->sys->rank(), s);
}

Root GroupElement::apply(const Root& r) const {
  const CoxeterSystem& sys = *impl_->sys;
  int n = sys.rank();
  std::vector<Scalar> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Scalar acc = sys.field()->from_rational(0);
    for (int j = 0; j < n; ++j) {
      const Scalar& m = impl_->fwd[static_cast<size_t>(i) * n + j];
      if (m.is_zero() || r.coords()[static_cast<size_t>(j)].is_zero()) continue;
      acc = acc + m * r.coords()[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(i)] = std::move(acc);
  }
  return Root(&sys, std::move(out));
}

const Scalar& GroupElement::matrix_entry(int i, int j) const {
  return impl_->fwd[static_cast<size_t>(i) * impl_->sys->rank() + j];
}

// ---------------------------------------------------------------------------
// Root

Root::Root(const CoxeterSystem* sys, std::vector<Scalar> coords)
    : sys_(sys), c_(std::move(coords)) {}

bool Root::is_positive() const {
  bool nonzero = false;
  for (const auto& x : c_) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) return false;
    nonzero = true;
  }
  return nonzero;
}

bool Root::is_negative() const {
  bool nonzero = false;
  for (const auto& x : c_) {
    if (x.is_zero()) continue;
    if (x.sign() > 0) return false;
    nonzero = true;
  }
  return nonzero;
}

Root Root::operator-() const {
  std::vector<Scalar> r(c_);
  for (auto& x : r) x = -x;
  return Root(sys_, std::move(r));
}

Root Root::operator-(const Root& o) const {
  std::vector<Scalar> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - o.c_[i];
  return Root(sys_, std::move(r));
}

bool Root::operator<(const Root& o) const {
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].to_string();
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(CoxeterMatrix m) : matrix_(std::move(m)) {
  int n = matrix_.rank();
  bool fast = true;
  unsigned M = 2;
  for (int i = 0; i < n && fast; ++i)
    for (int j = 0; j < n; ++j) {
      int e = matrix_.entry(i, j);
      if (i != j && e != CoxeterMatrix::kInfinite && e > 3) {
        fast = false;
        break;
      }
    }
  if (!fast) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int e = matrix_.entry(i, j);
        if (i != j && e != CoxeterMatrix::kInfinite)
          M = static_cast<unsigned>(std::lcm<long, long>(M, e));
      }
  }
  field_ = fast ? NumberField::rationals() : NumberField::cos_field(M);

  form_.assign(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int e = matrix_.entry(i, j);
      if (i == j) {
        form_[i][j] = field_->from_rational(1);
      } else if (e == CoxeterMatrix::kInfinite) {
        form_[i][j] = field_->from_rational(-1);
      } else if (e == 2) {
        form_[i][j] = field_->from_rational(0);
      } else if (e == 3) {
        form_[i][j] = field_->from_rational(mpq_class(-1, 2));
      } else {
        form_[i][j] = -(field_->two_cos_pi_over(static_cast<unsigned>(e)) *
                        mpq_class(1, 2));
      }
    }

  gen_matrix_.assign(static_cast<size_t>(n),
                     std::vector<Scalar>(static_cast<size_t>(n) * n));
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        Scalar v = (i == t) ? field_->from_rational(1) : field_->from_rational(0);
        if (i == s) v = v - form_[t][s] * mpq_class(2);
        gen_matrix_[s][static_cast<size_t>(i) * n + t] = std::move(v);
      }
  }
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::create(CoxeterMatrix matrix) {
  return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(std::move(matrix)));
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::preset(const std::string& name) {
  return create(CoxeterMatrix::preset(name));
}

Scalar CoxeterSystem::bilinear(const Root& a, const Root& b) const {
  Scalar acc = field_->from_rational(0);
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a.coords()[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.coords()[static_cast<size_t>(j)].is_zero() || form_[i][j].is_zero()) continue;
      acc = acc + a.coords()[static_cast<size_t>(i)] * form_[i][j] *
                      b.coords()[static_cast<size_t>(j)];
    }
  }
  return acc;
}

GroupElement CoxeterSystem::make_element(std::vector<Scalar> fwd,
                                         std::vector<Scalar> inv) const {
  auto impl = std::make_shared<GroupElement::Impl>();
  impl->sys = shared_from_this();
  impl->fwd = std::move(fwd);
  impl->inv = std::move(inv);
  return GroupElement(std::move(impl));
}

GroupElement CoxeterSystem::identity() const {
  int n = rank();
  std::vector<Scalar> id(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      id[static_cast<size_t>(i) * n + j] = field_->from_rational(i == j ? 1 : 0);
  auto copy = id;
  return make_element(std::move(id), std::move(copy));
}

GroupElement CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank())
    throw DomainError("generator index out of range: " + std::to_string(s));
  auto m = gen_matrix_[static_cast<size_t>(s)];
  auto copy = m;  // involutions are their own inverse
  return make_element(std::move(m), std::move(copy));
}

GroupElement CoxeterSystem::from_word(const std::vector<int>& word) const {
  GroupElement x = identity();
  for (int s : word) x = right_mult_gen(x, s);
  return x;
}

GroupElement CoxeterSystem::left_mult_gen(int s, const GroupElement& x) const {
  if (s < 0 || s >= rank())
    throw DomainError("generator index out of range: " + std::to_string(s));
  auto fwd = x.impl_->fwd;
  auto inv = x.impl_->inv;
  left_gen_inplace(*this, fwd, s);
  right_gen_inplace(*this, inv, s);
  return make_element(std::move(fwd), std::move(inv));
}

GroupElement CoxeterSystem::right_mult_gen(const GroupElement& x, int s) const {
  if (s < 0 || s >= rank())
    throw DomainError("generator index out of range: " + std::to_string(s));
  auto fwd = x.impl_->fwd;
  auto inv = x.impl_->inv;
  right_gen_inplace(*this, fwd, s);
  left_gen_inplace(*this, inv, s);
  return make_element(std::move(fwd), std::move(inv));
}

Root CoxeterSystem::act(int s, const Root& e) const {
  if (s < 0 || s >= rank())
    throw DomainError("generator index out of range: " + std::to_string(s));
  // e - 2(e, e_s) e_s
  Scalar coeff = field_->from_rational(0);
  for (int j = 0; j < rank(); ++j) {
    if (e.coords()[static_cast<size_t>(j)].is_zero() || form_[j][s].is_zero()) continue;
    coeff = coeff + e.coords()[static_cast<size_t>(j)] * form_[j][s];
  }
  std::vector<Scalar> out(e.coords());
  out[static_cast<size_t>(s)] = out[static_cast<size_t>(s)] - coeff * mpq_class(2);
  return Root(this, std::move(out));
}

Root CoxeterSystem::simple_root(int s) const {
  std::vector<Scalar> c(static_cast<size_t>(rank()));
  for (int i = 0; i < rank(); ++i)
    c[static_cast<size_t>(i)] = field_->from_rational(i == s ? 1 : 0);
  return Root(this, std::move(c));
}

Root CoxeterSystem::zero_vector() const {
  std::vector<Scalar> c(static_cast<size_t>(rank()));
  for (int i = 0; i < rank(); ++i) c[static_cast<size_t>(i)] = field_->from_rational(0);
  return Root(this, std::move(c));
}

std::vector<int> CoxeterSystem::reduce_word(const std::vector<int>& word) const {
  return from_word(word).word();
}

InversionSet CoxeterSystem::inversion_set(const GroupElement& x) const {
  const std::vector<int>& w = x.word();
  InversionSet out;
  out.owner = x;
  GroupElement suffix = identity();  // s_k ... s_{i+1}
  for (size_t i = w.size(); i-- > 0;) {
    out.roots.insert(suffix.apply(simple_root(w[i])));
    suffix = right_mult_gen(suffix, w[i]);
  }
  assert(static_cast<int>(out.roots.size()) == x.length());
  return out;
}

std::pair<RootSet, RootSet> CoxeterSystem::inversion_product_parts(
    const GroupElement& x, const GroupElement& y) const {
  RootSet phi_x = inversion_set(x).roots;
  RootSet phi_y = inversion_set(y).roots;
  GroupElement yinv = y.inverse();
  RootSet yinv_neg_phi_x;  // y^{-1}.Phi^-_x
  RootSet yinv_phi_x;      // y^{-1}.Phi_x
  for (const Root& b : phi_x) {
    Root img = yinv.apply(b);
    yinv_phi_x.insert(img);
    yinv_neg_phi_x.insert(-img);
  }
  RootSet a1, a2;
  for (const Root& a : phi_y)
    if (!yinv_neg_phi_x.count(a)) a1.insert(a);
  for (const Root& a : yinv_phi_x)
    if (!phi_y.count(-a)) a2.insert(a);  // Phi^-_y = -Phi_y
  return {std::move(a1), std::move(a2)};
}

std::vector<Root> CoxeterSystem::positive_roots_up_to_depth(int depth_cap) const {
  std::vector<Root> out;
  RootSet seen;
  std::vector<Root> frontier;
  for (int s = 0; s < rank(); ++s) frontier.push_back(simple_root(s));
  for (int depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      if (seen.count(r)) continue;
      seen.insert(r);
      out.push_back(r);
      for (int s = 0; s < rank(); ++s) {
        Root img = act(s, r);
        if (img.is_positive() && !seen.count(img)) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<GroupElement> CoxeterSystem::ball(int max_length) const {
  std::vector<GroupElement> out;
  std::set<std::vector<int>> seen;
  std::vector<GroupElement> shell{identity()};
  seen.insert({});
  for (int len = 0; len <= max_length && !shell.empty(); ++len) {
    std::sort(shell.begin(), shell.end());
    for (const auto& x : shell) out.push_back(x);
    std::vector<GroupElement> next;
    for (const auto& x : shell)
      for (int s = 0; s < rank(); ++s) {
        if (x.has_right_descent(s)) continue;
        GroupElement xs = right_mult_gen(x, s);
        if (seen.insert(xs.word()).second) next.push_back(xs);
      }
    shell = std::move(next);
  }
  return out;
}

}  // namespace weylkit
