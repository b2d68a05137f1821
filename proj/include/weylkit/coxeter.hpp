#ifndef WEYLKIT_COXETER_HPP
#define WEYLKIT_COXETER_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/scalar.hpp"

namespace weylkit {

/// Domain-level failure (bad input, contract violation); the CLI maps these
/// to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric matrix of orders m_st; entry 0 encodes infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinite = 0;

  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);
  static CoxeterMatrix from_json_text(const std::string& text);
  /// "A<k>", "B<k>", "affine-A<k>", "I2(<m>)", "free(<k>)".
  static CoxeterMatrix preset(const std::string& name);

  int rank() const { return static_cast<int>(m_.size()); }
  int entry(int s, int t) const { return m_[s][t]; }
  bool is_infinite(int s, int t) const { return m_[s][t] == kInfinite; }
  std::string to_json_text() const;

 private:
  std::vector<std::vector<int>> m_;
};

class CoxeterSystem;
class Root;

/// Element of W, represented by its matrix in the geometric realization
/// (plus the inverse matrix, so both descent sides are cheap sign tests).
/// Copies share state; the canonical reduced word is memoized.
class GroupElement {
 public:
  GroupElement() = default;

  const CoxeterSystem& system() const;
  bool is_identity() const;
  int length() const;
  /// Greedy-left-descent canonical reduced word.
  const std::vector<int>& word() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  /// Equality is matrix equality (the realization is faithful).
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  /// Total order by (length, canonical word); consistent with equality.
  bool operator<(const GroupElement& o) const;

  /// ell(xs) < ell(x), decided by the sign of x.e_s.
  bool has_right_descent(int s) const;
  /// ell(sx) < ell(x), decided by the sign of x^{-1}.e_s.
  bool has_left_descent(int s) const;

  Root apply(const Root& r) const;
  const Scalar& matrix_entry(int i, int j) const;

 private:
  friend class CoxeterSystem;
  struct Impl;
  explicit GroupElement(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Vector in the span of {e_s} with exact coordinates.
class Root {
 public:
  Root(const CoxeterSystem* sys, std::vector<Scalar> coords);

  const std::vector<Scalar>& coords() const { return c_; }
  const CoxeterSystem& system() const { return *sys_; }
  bool is_positive() const;  // all coords >= 0, not all zero
  bool is_negative() const;
  Root operator-() const;
  Root operator-(const Root& o) const;
  bool operator==(const Root& o) const { return c_ == o.c_; }
  bool operator<(const Root& o) const;
  std::string to_string() const;

 private:
  const CoxeterSystem* sys_;
  std::vector<Scalar> c_;
};

using RootSet = std::set<Root>;

/// Phi_x together with its owner.
struct InversionSet {
  GroupElement owner;
  RootSet roots;
};

/// Exact geometric realization of a Coxeter system (W,S).
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  /// new_system: validates the matrix and populates the bilinear form.
  static std::shared_ptr<const CoxeterSystem> create(CoxeterMatrix matrix);
  static std::shared_ptr<const CoxeterSystem> preset(const std::string& name);

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const std::shared_ptr<const NumberField>& field() const { return field_; }
  /// (e_s, e_t)
  const Scalar& form(int s, int t) const { return form_[s][t]; }
  Scalar bilinear(const Root& a, const Root& b) const;

  GroupElement identity() const;
  GroupElement generator(int s) const;
  GroupElement from_word(const std::vector<int>& word) const;
  /// sigma(s)(e) = e - 2(e,e_s)e_s
  Root act(int s, const Root& e) const;
  Root simple_root(int s) const;
  Root zero_vector() const;

  std::vector<int> reduce_word(const std::vector<int>& word) const;

  /// s * x and x * s via O(n^2) row/column updates.
  GroupElement left_mult_gen(int s, const GroupElement& x) const;
  GroupElement right_mult_gen(const GroupElement& x, int s) const;

  InversionSet inversion_set(const GroupElement& x) const;
  /// The two parts (A1, A2) with Phi_{xy} = A1 disjoint-union A2:
  /// A1 = Phi_y \ y^{-1}.Phi^-_x, A2 = y^{-1}.Phi_x \ Phi^-_y.
  std::pair<RootSet, RootSet> inversion_product_parts(const GroupElement& x,
                                                      const GroupElement& y) const;

  /// Positive roots of depth <= depth_cap (depth 1 = simple roots).
  std::vector<Root> positive_roots_up_to_depth(int depth_cap) const;
  /// Ball of radius max_length, in nondecreasing length order.
  std::vector<GroupElement> ball(int max_length) const;

 private:
  explicit CoxeterSystem(CoxeterMatrix m);
  friend class GroupElement;
  GroupElement make_element(std::vector<Scalar> fwd, std::vector<Scalar> inv) const;

  CoxeterMatrix matrix_;
  std::shared_ptr<const NumberField> field_;
  std::vector<std::vector<Scalar>> form_;
  std::vector<std::vector<Scalar>> gen_matrix_;  // sigma(s), row-major
};

}  // namespace weylkit

#endif  // WEYLKIT_COXETER_HPP
