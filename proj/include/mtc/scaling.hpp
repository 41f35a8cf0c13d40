#pragma once

// Scalar bookkeeping for rescaled gluing maps and pairings: scaling factors
// s_i, genus-normalized pairing constants, scaled self-duality scalars, the
// canonical and strict scaling solutions, unitarity factors and the
// quasi-isomorphism scalars.
//
// Square roots are principal, except that sqrt(x_i x_i*) is taken to be x_i
// when x_i = x_i* (so sqrt(X^2) = X for star-invariant data).

#include "mtc/characters.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/surface.hpp"

#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtc {

template <typename Real = double>
struct ScalingPair {
  using Vector = typename ModularData<Real>::Vector;
  Vector u;
  Vector w;

  static ScalingPair ones(int n) { return {Vector::Ones(n), Vector::Ones(n)}; }

  bool star_invariant(std::span<const Label> dual, Real tol = Real(1e-12)) const {
    for (std::size_t i = 0; i < dual.size(); ++i)
      if (std::abs(u(i) - u(dual[i])) > tol || std::abs(w(i) - w(dual[i])) > tol) return false;
    return true;
  }
};

template <typename Real = double>
struct SelfDualityData {
  using Vector = typename ModularData<Real>::Vector;
  Vector mu;                                    // mu(i)
  Eigen::Matrix<Real, Eigen::Dynamic, 1> lambda;  // lambda_i > 0
};

/// mu = Frobenius-Schur sign on self-dual labels and 1 elsewhere; lambda = 1.
template <typename Real>
SelfDualityData<Real> default_self_duality(const ModularData<Real>& md, std::span<const int> fs) {
  SelfDualityData<Real> sdd;
  sdd.mu = ModularData<Real>::Vector::Ones(md.rank());
  sdd.lambda = Eigen::Matrix<Real, Eigen::Dynamic, 1>::Ones(md.rank());
  for (int i = 0; i < md.rank(); ++i)
    if (md.self_dual(i)) sdd.mu(i) = Real(fs[i]);
  return sdd;
}

/// Names of violated conditions: mu(i) mu(i*) = 1, mu(zero) = 1,
/// mu(i)^2 = 1 on self-dual labels, lambda > 0.
template <typename Real>
std::vector<std::string> self_duality_violations(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                                                 Real tol = Real(1e-12)) {
  std::vector<std::string> out;
  for (int i = 0; i < md.rank(); ++i) {
    if (std::abs(sdd.mu(i) * sdd.mu(md.dual[i]) - Real(1)) > tol) out.push_back("mu-dual:" + md.labels[i]);
    if (md.self_dual(i) && std::abs(sdd.mu(i) * sdd.mu(i) - Real(1)) > tol) out.push_back("mu-square:" + md.labels[i]);
    if (!(sdd.lambda(i) > 0)) out.push_back("lambda-positive:" + md.labels[i]);
  }
  if (std::abs(sdd.mu(md.zero) - Real(1)) > tol) out.push_back("mu-unit");
  return out;
}

namespace detail {

/// sqrt(x_i x_i*), equal to x_i when x_i = x_i*.
template <typename Real>
std::complex<Real> pair_root(std::complex<Real> xi, std::complex<Real> xs) {
  if (xi == xs) return xi;
  return std::sqrt(xi * xs);
}

template <typename Real>
std::complex<Real> ipow(std::complex<Real> base, long long e) {
  if (e < 0) {
    base = std::complex<Real>(1) / base;
    e = -e;
  }
  std::complex<Real> out(1);
  for (; e; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

}  // namespace detail

/// s_i = sqrt(w_i w_i*) sqrt(dim i) / sqrt(u_i u_i*).
template <typename Real>
std::complex<Real> s_factor(const ModularData<Real>& md, const ScalingPair<Real>& sp, Label i) {
  check_label(md, i);
  const Label s = md.dual[i];
  const auto den = detail::pair_root(sp.u(i), sp.u(s));
  if (std::abs(den) == Real(0)) throw std::domain_error("s_factor: u_i u_i* vanishes");
  return detail::pair_root(sp.w(i), sp.w(s)) * std::sqrt(quantum_dim(md, i)) / den;
}

/// prod over components of D^{-4g} prod_l s_{i_l} w_{i_l}.
template <typename Real>
std::complex<Real> pairing_normalization(const ModularData<Real>& md, const ScalingPair<Real>& sp, const Surface& a) {
  const auto D = global_D(md);
  std::complex<Real> out(1);
  for (const auto& c : a.components) {
    out *= detail::ipow(D, -4LL * c.genus);
    for (const auto& p : c.points) out *= s_factor(md, sp, p.label) * sp.w(p.label);
  }
  return out;
}

/// mu(i, w) = (w_i / w_i*) mu(i).
template <typename Real>
std::complex<Real> mu_scaled(const SelfDualityData<Real>& sdd, const ScalingPair<Real>& sp, Label i,
                             std::span<const Label> dual) {
  return sp.w(i) / sp.w(dual[i]) * sdd.mu(i);
}

/// Product of mu(i_l, w) over the marked points.
template <typename Real>
std::complex<Real> self_duality_scalar(const SelfDualityData<Real>& sdd, const ScalingPair<Real>& sp,
                                       const Surface& a, std::span<const Label> dual) {
  std::complex<Real> out(1);
  for (Label l : a.labels()) out *= mu_scaled(sdd, sp, l, dual);
  return out;
}

/// max_i |u_i - s_i w_i|.
template <typename Real>
Real canonical_residual(const ModularData<Real>& md, const ScalingPair<Real>& sp) {
  Real worst = 0;
  for (int i = 0; i < md.rank(); ++i) worst = std::max(worst, std::abs(sp.u(i) - s_factor(md, sp, i) * sp.w(i)));
  return worst;
}

/// w = 1, u_i = dim(i)^{1/4}. Requires mu = 1 on non-self-dual labels.
template <typename Real>
ScalingPair<Real> solve_canonical(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                                  Real tol = Real(1e-12)) {
  for (int i = 0; i < md.rank(); ++i)
    if (!md.self_dual(i) && std::abs(sdd.mu(i) - Real(1)) > tol)
      throw std::invalid_argument("solve_canonical: mu(" + md.labels[i] + ") != 1 on a non-self-dual label");
  auto sp = ScalingPair<Real>::ones(md.rank());
  for (int i = 0; i < md.rank(); ++i) sp.u(i) = std::sqrt(std::sqrt(quantum_dim(md, i)));
  return sp;
}

template <typename Real>
std::complex<Real> character_phase(const QZ& x, Real scale = Real(2)) {
  return std::polar(Real(1), scale * std::numbers::pi_v<Real> * Real(x.num()) / Real(x.den()));
}

/// Residuals of the strict equations: u_i = s_i w_i and
/// mu(i) u_i / u_i* = exp(2 pi i chi(i)).
template <typename Real>
struct StrictResiduals {
  Real scaling = 0;
  Real character = 0;
};

template <typename Real>
StrictResiduals<Real> strict_residuals(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                                       const ScalingPair<Real>& sp, const GroupCharacter& chi) {
  StrictResiduals<Real> r;
  r.scaling = canonical_residual(md, sp);
  for (int i = 0; i < md.rank(); ++i)
    r.character = std::max(r.character, std::abs(sdd.mu(i) * sp.u(i) / sp.u(md.dual[i]) -
                                                  character_phase<Real>(chi.values[i])));
  return r;
}

/// Strict scaling from a fundamental symplectic character chi. Self-dual
/// labels keep the canonical values. For a non-self-dual pair (i, i*) with
/// i < i*, the root of exp(2 pi i chi(i)) is exp(pi i chi(i)) and that of
/// exp(2 pi i chi(i*)) its inverse; then w_i = that root, u_i = dim^{1/4} w_i.
template <typename Real>
ScalingPair<Real> solve_strict(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                               const GroupCharacter& chi, Real tol = Real(1e-12)) {
  if (static_cast<int>(chi.values.size()) != md.rank())
    throw std::invalid_argument("solve_strict: character has the wrong number of values");
  for (int i = 0; i < md.rank(); ++i) {
    if (md.self_dual(i)) {
      const bool symplectic = std::abs(sdd.mu(i) + Real(1)) <= tol;
      if (chi.values[i] != (symplectic ? QZ(1, 2) : QZ()))
        throw std::invalid_argument("solve_strict: character is not fundamental symplectic at label " +
                                    md.labels[i]);
    } else {
      if (std::abs(sdd.mu(i) - Real(1)) > tol)
        throw std::invalid_argument("solve_strict: mu(" + md.labels[i] + ") != 1 on a non-self-dual label");
      if (chi.values[i] + chi.values[md.dual[i]] != QZ())
        throw std::invalid_argument("solve_strict: chi(i) + chi(i*) != 0 at label " + md.labels[i]);
    }
  }
  auto sp = solve_canonical(md, sdd, tol);
  for (int i = 0; i < md.rank(); ++i) {
    const Label s = md.dual[i];
    if (s <= i) continue;
    const auto root = character_phase<Real>(chi.values[i], Real(1));
    sp.w(i) = root;
    sp.w(s) = Real(1) / root;
    sp.u(i) *= sp.w(i);
    sp.u(s) *= sp.w(s);
  }
  return sp;
}

/// r_i = sqrt(dim i) / sqrt(lambda_i u_i conj(u_i)).
template <typename Real>
std::complex<Real> unitary_r(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                             const typename ModularData<Real>::Vector& u, Label i) {
  return std::sqrt(quantum_dim(md, i)) / std::sqrt(sdd.lambda(i) * std::norm(u(i)));
}

/// prod_l (r_i r_i*) / (sigma(i) w_i conj(w_i*)) with sigma(i) = lambda_i* mu(i),
/// r taken in the u-scaling and the pairing in the w-scaling.
template <typename Real>
std::complex<Real> unitary_rho(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                               const typename ModularData<Real>::Vector& u,
                               const typename ModularData<Real>::Vector& w, const Surface& a) {
  std::complex<Real> out(1);
  for (Label i : a.labels()) {
    const Label s = md.dual[i];
    const auto sigma = sdd.lambda(s) * sdd.mu(i);
    out *= unitary_r(md, sdd, u, i) * unitary_r(md, sdd, u, s) / (sigma * w(i) * std::conj(w(s)));
  }
  return out;
}

/// The unitarity factor of the u-scaled gluing with the u-scaled pairing.
template <typename Real>
std::complex<Real> unitary_rho(const ModularData<Real>& md, const SelfDualityData<Real>& sdd,
                               const ScalingPair<Real>& sp, const Surface& a) {
  return unitary_rho(md, sdd, sp.u, sp.u, a);
}

/// dim(i) / theta(i).
template <typename Real>
std::complex<Real> z_of_label(const ModularData<Real>& md, Label i) {
  return quantum_dim(md, i) / md.theta(i);
}

template <typename Real>
struct QuasiIsoScalars {
  typename ModularData<Real>::Vector alpha;
  typename ModularData<Real>::Vector gamma;
};

/// Solves (alpha_i alpha_i*)^2 f_i f_i* = 1 with alpha_i = alpha_i* =
/// sqrt(sqrt(1 / (f_i f_i*))) (principal roots) and sets
/// gamma_i = 1 / (alpha_i alpha_i* f_i).
template <typename Real>
QuasiIsoScalars<Real> quasi_iso_gamma(const ModularData<Real>& md, const typename ModularData<Real>::Vector& f) {
  if (f.size() != md.rank()) throw std::invalid_argument("quasi_iso_gamma: one value per label expected");
  QuasiIsoScalars<Real> out{f, f};
  for (int i = 0; i < md.rank(); ++i) {
    const Label s = md.dual[i];
    if (s < i) continue;
    if (f(i) == Real(0) || f(s) == Real(0)) throw std::domain_error("quasi_iso_gamma: f must be nonzero");
    const auto pair = std::sqrt(Real(1) / (f(i) * f(s)));  // alpha_i alpha_i*
    out.alpha(i) = out.alpha(s) = std::sqrt(pair);
  }
  for (int i = 0; i < md.rank(); ++i) out.gamma(i) = Real(1) / (out.alpha(i) * out.alpha(md.dual[i]) * f(i));
  return out;
}

enum class GluingKind { same_component, distinct_components };

/// Coefficient of the label-i summand when the normalized pairing of the glued
/// surface is expanded over the normalized pairings of the pieces:
/// (displayed gluing factor) * D^{-4 [same component]} / (s_i s_i*). The
/// displayed factors are u_i u_i* / (w_i w_i*) dim(i)^{-1}, times D^4 for the
/// same-component case.
template <typename Real>
std::complex<Real> gluing_coefficient(const ModularData<Real>& md, const ScalingPair<Real>& sp, Label i,
                                      GluingKind kind) {
  const Label s = md.dual[i];
  const auto D4 = detail::ipow(global_D(md), 4);
  auto factor = sp.u(i) * sp.u(s) / (sp.w(i) * sp.w(s) * quantum_dim(md, i));
  if (kind == GluingKind::same_component) factor *= D4;
  const auto genus_shift = kind == GluingKind::same_component ? Real(1) / D4 : std::complex<Real>(1);
  return factor * genus_shift / (s_factor(md, sp, i) * s_factor(md, sp, s));
}

}  // namespace mtc
