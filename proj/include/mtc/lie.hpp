#pragma once

// Root data of simple Lie algebras in Dynkin (fundamental weight) coordinates,
// with an explicitly enumerated Weyl group.

#include "mtc/smith.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace mtc {

enum class CartanType { A, B, C, D, E, F, G };

struct LieData {
  CartanType type = CartanType::A;
  int rank = 1;
  int level = 0;

  /// cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), so that
  /// alpha_i = sum_j cartan(i, j) omega_j.
  Eigen::MatrixXi cartan;
  /// (omega_i, omega_j) = form(i, j) / form_denominator, long roots of length^2 2.
  Eigen::MatrixXi form;
  int form_denominator = 1;
  /// Coefficients of the highest coroot; the level of lambda is comarks . lambda.
  Eigen::VectorXi comarks;
  int dual_coxeter = 0;

  /// Weyl group as integer matrices acting on Dynkin coordinates (column
  /// vectors). Empty when the group is too large to enumerate.
  std::vector<Eigen::MatrixXi> weyl;
  std::vector<int> weyl_sign;
  Eigen::MatrixXi longest;  // w_0, filled when weyl is enumerated
  std::int64_t weyl_order = 0;  // classical order, always filled

  Eigen::VectorXi rho() const { return Eigen::VectorXi::Ones(rank); }
  bool weyl_enumerated() const { return !weyl.empty(); }
  std::string name() const;  // e.g. "D4"

  /// Exact inner product times form_denominator.
  std::int64_t pairing(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const;
  /// -w_0(lambda).
  Eigen::VectorXi dagger(const Eigen::VectorXi& lambda) const;
};

/// Groups up to this order are enumerated when building LieData.
inline constexpr std::int64_t kWeylEnumerationLimit = 100000;

/// Accepts A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6-8, F4, G2.
LieData make_lie_data(CartanType type, int rank, int level);
/// "A2", "D4", "G2", ...
LieData make_lie_data(const std::string& name, int level);

/// Dominant weights of level <= k, ordered by level then lexicographically.
std::vector<Eigen::VectorXi> level_weights(const LieData& ld);

/// Weight lattice modulo root lattice, with the projection of weights given
/// by AbelianPresentation::torsion_coords on Dynkin coordinates.
AbelianPresentation lattice_fundamental_group(const LieData& ld);

}  // namespace mtc
