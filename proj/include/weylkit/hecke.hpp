#ifndef WEYLKIT_HECKE_HPP
#define WEYLKIT_HECKE_HPP

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "weylkit/coxeter.hpp"
#include "weylkit/laurent.hpp"

namespace weylkit {

/// Per-generator weights L(s); L(s) = L(t) is required whenever m_st is odd.
class WeightFunction {
 public:
  static WeightFunction equal_parameters(int rank) {
    return WeightFunction(std::vector<long>(static_cast<size_t>(rank), 1));
  }
  explicit WeightFunction(std::vector<long> weights) : w_(std::move(weights)) {}

  long operator()(int s) const { return w_[static_cast<size_t>(s)]; }
  int rank() const { return static_cast<int>(w_.size()); }
  void validate_against(const CoxeterMatrix& m) const;

 private:
  std::vector<long> w_;
};

/// Finitely supported map W -> Z[v,v^-1]; keys are canonical elements and
/// zero polynomials are never stored.
using HeckeElement = std::map<GroupElement, LaurentPoly>;

/// Iwahori-Hecke algebra of a Coxeter system over Z[v,v^-1] in the T-basis,
/// with quadratic relation (T_s - v_s)(T_s + v_s^-1) = 0, v_s = v^{L(s)}.
class HeckeAlgebra {
 public:
  HeckeAlgebra(std::shared_ptr<const CoxeterSystem> system, WeightFunction weights);
  static HeckeAlgebra equal_parameters(std::shared_ptr<const CoxeterSystem> system);

  const CoxeterSystem& system() const { return *sys_; }
  const WeightFunction& weights() const { return weights_; }

  HeckeElement t_basis(const GroupElement& x) const;
  /// h * T_s.
  HeckeElement t_mult_generator(const HeckeElement& h, int s) const;
  /// Full expansion of T_x T_y, folding over a reduced word of y.
  HeckeElement t_mult(const GroupElement& x, const GroupElement& y) const;
  /// Bilinear extension: product of two algebra elements.
  HeckeElement mult(const HeckeElement& a, const HeckeElement& b) const;
  /// D(x,y): basis elements with nonzero coefficient in T_x T_y.
  std::set<GroupElement> support(const GroupElement& x, const GroupElement& y) const;
  /// D'(x,y): the recursive over-approximation, descent chosen as the
  /// smallest-index left descent of y.
  std::set<GroupElement> support_upper(const GroupElement& x,
                                       const GroupElement& y) const;
  /// True iff every w in D(x,y) satisfies ell(xy) <= ell(w) <= ell(x)+ell(y).
  bool check_support_bounds(const GroupElement& x, const GroupElement& y) const;

 private:
  std::shared_ptr<const CoxeterSystem> sys_;
  WeightFunction weights_;
  std::vector<LaurentPoly> quad_term_;  // v_s - v_s^-1 per generator
};

}  // namespace weylkit

#endif  // WEYLKIT_HECKE_HPP
