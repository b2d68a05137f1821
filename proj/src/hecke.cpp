#include "weylkit/hecke.hpp"

#include <cassert>

namespace weylkit {

void WeightFunction::validate_against(const CoxeterMatrix& m) const {
  if (rank() != m.rank())
    throw DomainError("weight function: rank mismatch");
  for (int s = 0; s < rank(); ++s)
    for (int t = s + 1; t < rank(); ++t) {
      int e = m.entry(s, t);
      if (e != CoxeterMatrix::kInfinite && e % 2 == 1 && (*this)(s) != (*this)(t))
        throw DomainError("weight function: L(" + std::to_string(s) + ") != L(" +
                          std::to_string(t) + ") but m_st = " + std::to_string(e) +
                          " is odd");
    }
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const CoxeterSystem> system,
                           WeightFunction weights)
    : sys_(std::move(system)), weights_(std::move(weights)) {
  weights_.validate_against(sys_->matrix());
  for (int s = 0; s < sys_->rank(); ++s) {
    long L = weights_(s);
    quad_term_.push_back(LaurentPoly::term(L, 1) - LaurentPoly::term(-L, 1));
  }
}

HeckeAlgebra HeckeAlgebra::equal_parameters(std::shared_ptr<const CoxeterSystem> system) {
  int rank = system->rank();
  return HeckeAlgebra(std::move(system), WeightFunction::equal_parameters(rank));
}

HeckeElement HeckeAlgebra::t_basis(const GroupElement& x) const {
  HeckeElement h;
  h.emplace(x, LaurentPoly::one());
  return h;
}

HeckeElement HeckeAlgebra::t_mult_generator(const HeckeElement& h, int s) const {
  HeckeElement out;
  auto add = [&out](const GroupElement& w, const LaurentPoly& p) {
    auto [it, fresh] = out.try_emplace(w, p);
    if (!fresh) {
      it->second = it->second + p;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [w, p] : h) {
    GroupElement ws = sys_->right_mult_gen(w, s);
    if (!w.has_right_descent(s)) {
      add(ws, p);
    } else {
      // T_s^2 = (v_s - v_s^-1) T_s + 1
      add(w, p * quad_term_[static_cast<size_t>(s)]);
      add(ws, p);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::t_mult(const GroupElement& x, const GroupElement& y) const {
  HeckeElement h = t_basis(x);
  for (int s : y.word()) h = t_mult_generator(h, s);
  return h;
}

HeckeElement HeckeAlgebra::mult(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [w2, p2] : b) {
    HeckeElement part = a;
    for (int s : w2.word()) part = t_mult_generator(part, s);
    for (const auto& [w, p] : part) {
      LaurentPoly q = p * p2;
      auto [it, fresh] = out.try_emplace(w, q);
      if (!fresh) {
        it->second = it->second + q;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::set<GroupElement> HeckeAlgebra::support(const GroupElement& x,
                                             const GroupElement& y) const {
  std::set<GroupElement> out;
  for (const auto& [w, p] : t_mult(x, y)) {
    assert(!p.is_zero());
    out.insert(w);
  }
  return out;
}

std::set<GroupElement> HeckeAlgebra::support_upper(const GroupElement& x,
                                                   const GroupElement& y) const {
  if (y.is_identity()) return {x};
  int s = -1;
  for (int t = 0; t < sys_->rank(); ++t)
    if (y.has_left_descent(t)) {
      s = t;
      break;
    }
  assert(s >= 0);
  GroupElement xs = sys_->right_mult_gen(x, s);
  GroupElement sy = sys_->left_mult_gen(s, y);
  if (!x.has_right_descent(s)) return support_upper(xs, sy);
  std::set<GroupElement> out = support_upper(xs, sy);
  auto extra = support_upper(x, sy);
  out.insert(extra.begin(), extra.end());
  return out;
}

bool HeckeAlgebra::check_support_bounds(const GroupElement& x,
                                        const GroupElement& y) const {
  int lo = (x * y).length();
  int hi = x.length() + y.length();
  for (const auto& w : support(x, y)) {
    int l = w.length();
    if (l < lo || l > hi) return false;
  }
  return true;
}

}  // namespace weylkit
