#pragma once

// Modular data of a modular tensor category: label set with duality, S-matrix
// and twists, together with the scalars derived from them (quantum dimensions,
// global dimension D, Gauss sum Delta, Verlinde fusion, Frobenius-Schur signs).

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

using Label = int;

/// Input whose shape is wrong (sizes, ranges, non-involutive duality).
class StructuralError : public std::runtime_error {
 public:
  StructuralError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// A numeric result that should be (near) exact but is not, e.g. a
/// non-integral Verlinde coefficient.
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string code;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

template <typename Real = double>
struct ModularData {
  using Scalar = Real;
  using Complex = std::complex<Real>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  std::vector<std::string> labels;
  Label zero = 0;
  std::vector<Label> dual;
  Matrix S;
  Vector theta;
  Real tol = Real(1e-9);

  int rank() const { return static_cast<int>(labels.size()); }

  Label find(std::string_view name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<Label>(i);
    throw std::out_of_range("unknown label '" + std::string(name) + "'");
  }

  bool self_dual(Label i) const { return dual[i] == i; }
};

/// One-label category Vect: S = [1], theta = 1.
template <typename Real = double>
ModularData<Real> trivial_modular_data() {
  ModularData<Real> md;
  md.labels = {"1"};
  md.zero = 0;
  md.dual = {0};
  md.S = ModularData<Real>::Matrix::Ones(1, 1);
  md.theta = ModularData<Real>::Vector::Ones(1);
  return md;
}

template <typename Real>
void check_label(const ModularData<Real>& md, Label i) {
  if (i < 0 || i >= md.rank())
    throw std::out_of_range("unknown label index " + std::to_string(i));
}

/// Throws StructuralError on shape problems; these are not reportable
/// invariant violations because nothing downstream is well defined.
template <typename Real>
void check_structure(const ModularData<Real>& md) {
  const auto n = md.rank();
  if (n == 0) throw StructuralError("labels", "label set is empty");
  if (md.S.rows() != n || md.S.cols() != n)
    throw StructuralError("S", "expected " + std::to_string(n) + "x" + std::to_string(n) +
                                   " matrix, got " + std::to_string(md.S.rows()) + "x" +
                                   std::to_string(md.S.cols()));
  if (md.theta.size() != n)
    throw StructuralError("theta", "expected " + std::to_string(n) + " twists, got " +
                                       std::to_string(md.theta.size()));
  if (static_cast<int>(md.dual.size()) != n)
    throw StructuralError("dual", "dual map has wrong size");
  if (md.zero < 0 || md.zero >= n) throw StructuralError("zero", "unit label out of range");
  for (int i = 0; i < n; ++i)
    if (md.dual[i] < 0 || md.dual[i] >= n)
      throw StructuralError("dual", "dual of '" + md.labels[i] + "' out of range");
  for (int i = 0; i < n; ++i)
    if (md.dual[md.dual[i]] != i)
      throw StructuralError("dual-involution", "dual(dual(" + md.labels[i] + ")) != " + md.labels[i]);
  if (md.dual[md.zero] != md.zero)
    throw StructuralError("dual-unit", "dual(zero) != zero");
  if (!(md.tol > Real(0))) throw StructuralError("tol", "tolerance must be positive");
}

template <typename Real>
typename ModularData<Real>::Complex quantum_dim(const ModularData<Real>& md, Label i) {
  check_label(md, i);
  return md.S(md.zero, i) / md.S(md.zero, md.zero);
}

template <typename Real>
typename ModularData<Real>::Vector quantum_dims(const ModularData<Real>& md) {
  return md.S.row(md.zero).transpose() / md.S(md.zero, md.zero);
}

/// Empty report iff every invariant holds within md.tol.
template <typename Real>
ValidationReport validate_modular_data(const ModularData<Real>& md) {
  check_structure(md);
  ValidationReport report;
  const auto n = md.rank();
  const Real tol = md.tol;
  using std::abs;

  Real asym = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) asym = std::max(asym, abs(md.S(i, j) - md.S(j, i)));
  if (asym > tol) report.push_back({"S-symmetry", "max |S_ij - S_ji| = " + std::to_string(double(asym))});

  if (abs(md.S(md.zero, md.zero)) <= tol) {
    report.push_back({"S-unit", "S_00 vanishes"});
    return report;
  }

  Eigen::FullPivLU<typename ModularData<Real>::Matrix> lu(md.S);
  lu.setThreshold(tol);
  if (lu.rank() < n) report.push_back({"S-invertible", "rank " + std::to_string(lu.rank()) + " < " + std::to_string(n)});

  if (abs(md.theta(md.zero) - Real(1)) > tol) report.push_back({"theta-unit", "theta(zero) != 1"});
  for (int i = 0; i < n; ++i)
    if (abs(md.theta(i) - md.theta(md.dual[i])) > tol) {
      report.push_back({"theta-dual", "theta(" + md.labels[i] + ") != theta(dual)"});
      break;
    }
  const auto d = quantum_dims(md);
  for (int i = 0; i < n; ++i)
    if (abs(d(i) - d(md.dual[i])) > tol) {
      report.push_back({"dim-dual", "dim(" + md.labels[i] + ") != dim(dual)"});
      break;
    }
  return report;
}

/// D with D^2 = sum_i dim(i)^2; the root with nonnegative real part.
template <typename Real>
typename ModularData<Real>::Complex global_D(const ModularData<Real>& md) {
  return std::sqrt(quantum_dims(md).array().square().sum());
}

enum class TwistConvention {
  inverse,  ///< Delta = sum_i theta_i^{-1} dim(i)^2
  direct,   ///< Delta = sum_i theta_i dim(i)^2 (conjugate convention)
};

template <typename Real>
typename ModularData<Real>::Complex gauss_sum_delta(const ModularData<Real>& md,
                                                    TwistConvention conv = TwistConvention::inverse) {
  const typename ModularData<Real>::Vector d = quantum_dims(md);
  const auto d2 = d.array().square();
  if (conv == TwistConvention::inverse) return (d2 / md.theta.array()).sum();
  return (d2 * md.theta.array()).sum();
}

/// (Delta^{-1} D)^s.
template <typename Real>
typename ModularData<Real>::Complex anomaly_scalar(const ModularData<Real>& md, long long s,
                                                   TwistConvention conv = TwistConvention::inverse) {
  using Complex = typename ModularData<Real>::Complex;
  const Complex delta = gauss_sum_delta(md, conv);
  if (std::abs(delta) <= md.tol) throw NumericalError("anomaly_scalar: Delta vanishes");
  const Complex base = global_D(md) / delta;
  Complex out(1), b = s >= 0 ? base : Complex(1) / base;
  for (unsigned long long e = s >= 0 ? s : -static_cast<unsigned long long>(s); e; e >>= 1) {
    if (e & 1) out *= b;
    b *= b;
  }
  return out;
}

/// Fusion multiplicities N_{ij}^k stored as fusion matrices
/// (N_i)_{jk} = N_{ij}^k.
class FusionTensor {
 public:
  FusionTensor() = default;
  explicit FusionTensor(std::vector<Eigen::MatrixXi> by_first) : mats_(std::move(by_first)) {}

  int rank() const { return static_cast<int>(mats_.size()); }
  int operator()(Label i, Label j, Label k) const { return mats_[i](j, k); }
  int& at(Label i, Label j, Label k) { return mats_[i](j, k); }
  const Eigen::MatrixXi& matrix(Label i) const { return mats_[i]; }

  friend bool operator==(const FusionTensor& a, const FusionTensor& b) {
    if (a.rank() != b.rank()) return false;
    for (int i = 0; i < a.rank(); ++i)
      if (a.mats_[i] != b.mats_[i]) return false;
    return true;
  }

 private:
  std::vector<Eigen::MatrixXi> mats_;
};

/// Unrounded Verlinde sums sum_r S_ir S_jr conj(S_kr) / S_0r, indexed as
/// raw[i](j, k).
template <typename Real>
std::vector<typename ModularData<Real>::Matrix> verlinde_fusion_raw(const ModularData<Real>& md) {
  using Matrix = typename ModularData<Real>::Matrix;
  const auto n = md.rank();
  const Matrix& S = md.S;
  // raw_i = S diag(S_i. / S_0.) S^dagger
  std::vector<Matrix> raw(n);
  for (int i = 0; i < n; ++i) {
    const auto ratio = (S.row(i).array() / S.row(md.zero).array()).matrix();
    raw[i] = S * ratio.asDiagonal() * S.adjoint();
  }
  return raw;
}

/// Largest distance of a Verlinde sum from the nearest integer.
template <typename Real>
Real fusion_integrality_defect(const std::vector<typename ModularData<Real>::Matrix>& raw) {
  Real worst = 0;
  for (const auto& m : raw)
    for (Eigen::Index j = 0; j < m.rows(); ++j)
      for (Eigen::Index k = 0; k < m.cols(); ++k) {
        const auto z = m(j, k);
        worst = std::max(worst, std::abs(z - std::complex<Real>(std::round(z.real()), 0)));
      }
  return worst;
}

template <typename Real>
FusionTensor verlinde_fusion(const ModularData<Real>& md, Real int_tol = Real(1e-6)) {
  const auto raw = verlinde_fusion_raw(md);
  const auto n = md.rank();
  std::vector<Eigen::MatrixXi> mats(n, Eigen::MatrixXi::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto z = raw[i](j, k);
        const Real r = std::round(z.real());
        if (std::abs(z - std::complex<Real>(r, 0)) > int_tol || r < 0)
          throw NumericalError("verlinde_fusion: N_{" + md.labels[i] + "," + md.labels[j] + "}^{" +
                               md.labels[k] + "} = " + std::to_string(double(z.real())) + "+" +
                               std::to_string(double(z.imag())) + "i is not a nonnegative integer");
        mats[i](j, k) = static_cast<int>(r);
      }
  return FusionTensor(std::move(mats));
}

/// Names of violated fusion axioms (unit, duality, commutativity, rigidity).
inline std::vector<std::string> fusion_axiom_violations(const FusionTensor& N, std::span<const Label> dual,
                                                        Label zero) {
  std::vector<std::string> out;
  const int n = N.rank();
  bool unit = true, dualok = true, comm = true, rigid = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (N(zero, i, j) != (i == j ? 1 : 0)) unit = false;
      if (N(i, j, zero) != (j == dual[i] ? 1 : 0)) dualok = false;
      for (int k = 0; k < n; ++k) {
        if (N(i, j, k) != N(j, i, k)) comm = false;
        if (N(i, j, k) != N(dual[i], k, j)) rigid = false;
      }
    }
  if (!unit) out.push_back("fusion-unit");
  if (!dualok) out.push_back("fusion-dual");
  if (!comm) out.push_back("fusion-commutative");
  if (!rigid) out.push_back("fusion-rigidity");
  return out;
}

/// Unrounded Frobenius-Schur indicator
///   nu(i) = D^{-2} sum_{j,k} N_{jk}^i dim(j) dim(k) (theta_j / theta_k)^2.
template <typename Real>
typename ModularData<Real>::Complex fs_indicator_value(const ModularData<Real>& md, const FusionTensor& N,
                                                       Label i) {
  check_label(md, i);
  using Complex = typename ModularData<Real>::Complex;
  const auto d = quantum_dims(md);
  Complex sum(0), D2(0);
  for (int j = 0; j < md.rank(); ++j) {
    D2 += d(j) * d(j);
    for (int k = 0; k < md.rank(); ++k) {
      const int m = N(j, k, i);
      if (!m) continue;
      const Complex r = md.theta(j) / md.theta(k);
      sum += Real(m) * d(j) * d(k) * r * r;
    }
  }
  return sum / D2;
}

/// Frobenius-Schur sign: 0 for non-self-dual labels, +-1 otherwise.
template <typename Real>
int fs_indicator(const ModularData<Real>& md, const FusionTensor& N, Label i) {
  const auto v = fs_indicator_value(md, N, i);
  const Real tol = std::max(md.tol, Real(1e-7));
  for (int s : {-1, 0, 1})
    if (std::abs(v - std::complex<Real>(s, 0)) <= tol) {
      if ((s == 0) != (md.dual[i] != i))
        throw NumericalError("fs_indicator: value inconsistent with duality of '" + md.labels[i] + "'");
      return s;
    }
  throw NumericalError("fs_indicator: value for '" + md.labels[i] + "' is not in {-1,0,1}");
}

template <typename Real>
std::vector<int> fs_indicators(const ModularData<Real>& md, const FusionTensor& N) {
  std::vector<int> out(md.rank());
  for (int i = 0; i < md.rank(); ++i) out[i] = fs_indicator(md, N, i);
  return out;
}

}  // namespace mtc
