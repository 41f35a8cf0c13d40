#pragma once

// Modular data of quantum groups at q = exp(2 pi i / (k + h)) from the
// Kac-Peterson formulas
//   S_{lambda mu} ~ sum_{w in W} sign(w) exp(-2 pi i <w(lambda+rho), mu+rho> / (k+h)),
//   theta_lambda  = exp(pi i <lambda, lambda + 2 rho> / (k+h)).
// SU(N) uses partition coordinates, where the sum over S_N is a determinant;
// general simple Lie algebras sum over the enumerated Weyl group.

#include "mtc/lie.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/young.hpp"

#include <Eigen/LU>

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtc {

/// exp(2 pi i p / m), with p reduced modulo m first.
template <typename Real>
std::complex<Real> unit_phase(std::int64_t p, std::int64_t m) {
  p %= m;
  if (p < 0) p += m;
  return std::polar(Real(1), Real(2) * std::numbers::pi_v<Real> * Real(p) / Real(m));
}

namespace detail {

template <typename Real>
void normalize_s_matrix(typename ModularData<Real>::Matrix& S) {
  const auto s00 = S(0, 0);
  S *= std::conj(s00) / std::abs(s00);
  S /= std::sqrt(S.row(0).squaredNorm());
}

}  // namespace detail

inline constexpr int kMaxSuN = 6;
inline constexpr int kMaxSuLevel = 8;

template <typename Real = double>
ModularData<Real> su_modular_data(int N, int k) {
  if (N < 2 || k < 0) throw std::invalid_argument("su_modular_data: need N >= 2, k >= 0");
  if (N > kMaxSuN || k > kMaxSuLevel)
    throw std::length_error("su_modular_data: N <= 6 and k <= 8 supported");
  using Complex = std::complex<Real>;
  using Matrix = typename ModularData<Real>::Matrix;

  const auto diagrams = su_level_labels(N, k);
  const int n = static_cast<int>(diagrams.size());
  const std::int64_t K = k + N, M = std::int64_t{N} * K;

  // shifted partition coordinates of lambda + rho
  std::vector<std::vector<std::int64_t>> x(n, std::vector<std::int64_t>(N));
  std::vector<std::int64_t> total(n, 0);
  for (int l = 0; l < n; ++l)
    for (int a = 0; a < N; ++a) {
      x[l][a] = diagrams[l].row(a) + N - 1 - a;
      total[l] += x[l][a];
    }

  Matrix S(n, n);
  Matrix block(N, N);
  for (int l = 0; l < n; ++l)
    for (int m = l; m < n; ++m) {
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) block(a, b) = unit_phase<Real>(-N * x[l][a] * x[m][b], M);
      const Complex v = unit_phase<Real>(total[l] * total[m], M) * block.partialPivLu().determinant();
      S(l, m) = S(m, l) = v;
    }
  detail::normalize_s_matrix<Real>(S);

  ModularData<Real> md;
  md.S = std::move(S);
  md.theta.resize(n);
  md.dual.resize(n);
  for (int l = 0; l < n; ++l) {
    const auto& lam = diagrams[l];
    std::int64_t t = 0;  // N <lambda, lambda + 2 rho>
    for (int a = 0; a < N; ++a) t += N * (std::int64_t{lam.row(a)} * lam.row(a) + std::int64_t{lam.row(a)} * (N - 1 - 2 * a));
    t -= std::int64_t{lam.size()} * lam.size();
    md.theta(l) = unit_phase<Real>(t, 2 * M);
    md.labels.push_back(lam.str());
  }
  for (int l = 0; l < n; ++l) {
    const auto d = young_dagger(N, diagrams[l]);
    for (int m = 0; m < n; ++m)
      if (diagrams[m] == d) md.dual[l] = m;
  }
  md.zero = 0;
  return md;
}

/// Label string of a weight in Dynkin coordinates, "(1,0,0)".
inline std::string weight_label(const Eigen::VectorXi& w) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w(i));
  }
  return s + ")";
}

inline constexpr std::int64_t kLieWorkBudget = 10'000'000;

template <typename Real = double>
ModularData<Real> simple_lie_modular_data(const LieData& ld) {
  const auto weights = level_weights(ld);
  const int n = static_cast<int>(weights.size());
  if (!ld.weyl_enumerated() || ld.weyl_order * n * n > kLieWorkBudget)
    throw std::length_error("simple_lie_modular_data: " + ld.name() + " at level " + std::to_string(ld.level) +
                            " exceeds the |W| * labels^2 budget");
  using Matrix = typename ModularData<Real>::Matrix;
  const std::int64_t K = ld.level + ld.dual_coxeter;
  const std::int64_t M = std::int64_t{ld.form_denominator} * K;
  const Eigen::VectorXi rho = ld.rho();
  const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> F = ld.form.cast<std::int64_t>();

  // orbit images w(lambda + rho), paired against F (mu + rho)
  std::vector<std::vector<Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>>> orbit(n);
  std::vector<Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>> dual_side(n);
  for (int l = 0; l < n; ++l) {
    const Eigen::VectorXi shifted = weights[l] + rho;
    for (const auto& w : ld.weyl) orbit[l].push_back((w * shifted).cast<std::int64_t>().transpose());
    dual_side[l] = F * shifted.cast<std::int64_t>();
  }
  Matrix S(n, n);
  for (int l = 0; l < n; ++l)
    for (int m = l; m < n; ++m) {
      std::complex<Real> v(0);
      for (std::size_t w = 0; w < ld.weyl.size(); ++w)
        v += Real(ld.weyl_sign[w]) * unit_phase<Real>(-orbit[l][w].dot(dual_side[m]), M);
      S(l, m) = S(m, l) = v;
    }
  detail::normalize_s_matrix<Real>(S);

  ModularData<Real> md;
  md.S = std::move(S);
  md.theta.resize(n);
  md.dual.assign(n, -1);
  for (int l = 0; l < n; ++l) {
    md.theta(l) = unit_phase<Real>(ld.pairing(weights[l], weights[l] + 2 * rho), 2 * M);
    md.labels.push_back(weight_label(weights[l]));
    const Eigen::VectorXi d = ld.dagger(weights[l]);
    for (int m = 0; m < n; ++m)
      if (weights[m] == d) md.dual[l] = m;
  }
  md.zero = 0;
  return md;
}

/// Left-hand side of the coupon sign identity
///   (-a^{-1} s)^{n m + m (m-1)} (a^{-1} v)^m,  n = N - m,
/// with a = q^{-1/(2N)}, v = q^{-N/2}, s = q^{1/2} taken as principal powers of
/// q = exp(2 pi i / (k + N)). Expected value (-1)^{(N-1) m}.
template <typename Real = double>
std::complex<Real> coupon_sign(int N, int k, int m) {
  if (N < 1 || k < 0 || m < 0 || m > N) throw std::invalid_argument("coupon_sign: need 0 <= m <= N");
  const int n = N - m;
  const std::int64_t den = 2 * std::int64_t{N} * (k + N);
  const std::complex<Real> neg_ainv_s = -unit_phase<Real>(1 + N, den);           // -q^{(N+1)/(2N)}
  const std::complex<Real> ainv_v = unit_phase<Real>(1 - std::int64_t{N} * N, den);  // q^{(1-N^2)/(2N)}
  std::complex<Real> out(1);
  for (int e = 0; e < n * m + m * (m - 1); ++e) out *= neg_ainv_s;
  for (int e = 0; e < m; ++e) out *= ainv_v;
  return out;
}

}  // namespace mtc
