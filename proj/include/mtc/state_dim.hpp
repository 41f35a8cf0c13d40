#pragma once

// Dimensions of modular functor state spaces on labeled marked surfaces.
//
// Two independent evaluators:
//  - StateCounter: pair-of-pants recursion in integer arithmetic,
//      dim(0; i1..in) = (e_0 N_i1 ... N_in)_0,
//      dim(g; L)      = sum_x dim(g-1; L, x, x*),
//    realized as e_0^T N_i1 ... N_in H^g e_0 with the handle operator
//    H = sum_x N_x N_x*.
//  - VerlindeCounter: sum_r S_0r^{2-2g-n} prod_l S_{i_l r}.
// Both work incrementally (start / absorb / close) so that families of
// surfaces sharing label prefixes can be evaluated cheaply.

#include "mtc/modular_data.hpp"
#include "mtc/surface.hpp"

#include <cstdint>
#include <limits>
#include <span>

namespace mtc {

class StateCounter {
 public:
  using Vec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

  StateCounter(const FusionTensor& N, std::span<const Label> dual, Label zero);

  int rank() const { return static_cast<int>(fusion_.size()); }
  const Mat& handle() const { return handle_; }

  Vec start() const;
  /// Appends a label: v'_k = sum_j v_j N_{ij}^k.
  Vec absorb(const Vec& v, Label i) const;
  /// H^g e_0.
  Vec closing(int genus) const;
  std::int64_t close(const Vec& v, int genus) const;
  std::int64_t close(const Vec& v, const Vec& closing) const;

  std::int64_t component(int genus, std::span<const Label> labels) const;
  /// Product over components; 1 for the empty surface.
  std::int64_t operator()(const Surface& a) const;

 private:
  std::vector<Mat> fusion_;  // fusion_[i](j, k) = N_{ij}^k
  Mat handle_;
  Label zero_;
};

template <typename Real>
class VerlindeCounter {
 public:
  using Complex = std::complex<Real>;
  using Vector = typename ModularData<Real>::Vector;

  explicit VerlindeCounter(const ModularData<Real>& md, Real int_tol = Real(1e-6))
      : md_(&md), unit_row_(md.S.row(md.zero).transpose()), int_tol_(int_tol) {}

  Vector start() const { return Vector::Ones(md_->rank()); }
  Vector absorb(const Vector& v, Label i) const { return v.cwiseProduct(md_->S.row(i).transpose()); }

  /// sum_r S_0r^{2-2g-n} v_r for a product v of n columns.
  Complex close_raw(const Vector& v, int genus, int points) const {
    const int e = 2 - 2 * genus - points;
    Complex sum(0);
    for (int r = 0; r < md_->rank(); ++r) sum += power(unit_row_(r), e) * v(r);
    return sum;
  }

  /// sum_r |S_0r^{2-2g-n} v_r|, the scale of the rounding error in close_raw.
  Real close_magnitude(const Vector& v, int genus, int points) const {
    const int e = 2 - 2 * genus - points;
    Real sum = 0;
    for (int r = 0; r < md_->rank(); ++r) sum += std::abs(power(unit_row_(r), e) * v(r));
    return sum;
  }
  std::int64_t close(const Vector& v, int genus, int points) const {
    return round_checked(close_raw(v, genus, points), close_magnitude(v, genus, points));
  }

  std::int64_t component(int genus, std::span<const Label> labels) const {
    Vector v = start();
    for (Label l : labels) v = absorb(v, l);
    return close(v, genus, static_cast<int>(labels.size()));
  }

  std::int64_t operator()(const Surface& a) const {
    std::int64_t out = 1;
    for (const auto& c : a.components) {
      std::vector<Label> ls;
      for (const auto& p : c.points) ls.push_back(p.label);
      out *= component(c.genus, ls);
    }
    return out;
  }

  static Complex power(Complex base, int e) {
    if (e < 0) {
      base = Complex(1) / base;
      e = -e;
    }
    Complex out(1);
    for (; e; e >>= 1) {
      if (e & 1) out *= base;
      base *= base;
    }
    return out;
  }

  /// Nearest integer; throws NumericalError when z is not close to a
  /// nonnegative integer. The slack is int_tol relative to |z|, widened to
  /// a forward error bound when the summed term magnitude is large.
  std::int64_t round_checked(Complex z, Real magnitude = 0) const {
    const Real r = std::round(z.real());
    const Real bound = Real(64) * md_->rank() * std::numeric_limits<Real>::epsilon() * magnitude;
    const Real slack = std::min(Real(0.25), std::max(int_tol_ * std::max(Real(1), std::abs(z)), bound));
    if (std::abs(z - Complex(r, 0)) > slack || r < 0)
      throw NumericalError("Verlinde dimension " + std::to_string(double(z.real())) + "+" +
                           std::to_string(double(z.imag())) + "i is not a nonnegative integer");
    return static_cast<std::int64_t>(r);
  }

 private:
  const ModularData<Real>* md_;
  Vector unit_row_;
  Real int_tol_;
};

template <typename Real>
std::int64_t state_dim(const ModularData<Real>& md, const FusionTensor& N, const Surface& a) {
  return StateCounter(N, md.dual, md.zero)(a);
}

template <typename Real>
std::int64_t state_dim_verlinde(const ModularData<Real>& md, const Surface& a) {
  return VerlindeCounter<Real>(md)(a);
}

struct GluingCheck {
  std::int64_t sum_recursion = 0;   // sum over labels of dim(a with p, q labeled (x, x*))
  std::int64_t sum_verlinde = 0;
  std::int64_t glued_recursion = 0;  // dim of the glued surface
  std::int64_t glued_verlinde = 0;
  bool holds = false;
  explicit operator bool() const { return holds; }
};

/// Gluing identity at dimension level: p and q are slots whose labels are
/// replaced by (x, x*) for every label x. Holds iff both sides agree under
/// both evaluators.
template <typename Real>
GluingCheck check_gluing_dimension(const ModularData<Real>& md, const FusionTensor& N, const Surface& a, int p,
                                   int q) {
  const StateCounter rec(N, md.dual, md.zero);
  const VerlindeCounter<Real> ver(md);
  const auto [cp, kp] = a.locate(p);
  const auto [cq, kq] = a.locate(q);
  GluingCheck out;
  Surface slot = a;
  for (Label x = 0; x < md.rank(); ++x) {
    slot.components[cp].points[kp].label = x;
    slot.components[cq].points[kq].label = md.dual[x];
    out.sum_recursion += rec(slot);
    out.sum_verlinde += ver(slot);
  }
  slot.components[cp].points[kp].label = md.zero;
  slot.components[cq].points[kq].label = md.zero;
  const Surface glued = glue_points(slot, p, q, md.dual);
  out.glued_recursion = rec(glued);
  out.glued_verlinde = ver(glued);
  out.holds = out.sum_recursion == out.glued_recursion && out.sum_verlinde == out.glued_verlinde &&
              out.sum_recursion == out.sum_verlinde;
  return out;
}

}  // namespace mtc
