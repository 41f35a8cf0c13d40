#pragma once

// Integer matrices, row echelon reduction and Smith normal form, used to
// present finite abelian groups Z^n / rowspan(R).

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace mtc {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntRow = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

/// U * A = H with U unimodular and H in row echelon form (pivots positive).
/// U is only filled when requested.
struct RowEchelon {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
};

RowEchelon row_echelon(const IntMatrix& A, bool track_transform = false);

/// U * A * V = diag(d_0, d_1, ...), d_t | d_{t+1}, d_t > 0 for t < rank.
/// Only the column transform V is kept: it is what maps generators into the
/// cokernel coordinates.
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // length rank
  IntMatrix V;
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Cokernel Z^n / rowspan(R) written as (+)_j Z/d_j (+) Z^free with d_j > 1.
/// coords(x) maps an integer row vector to its class.
struct AbelianPresentation {
  std::vector<std::int64_t> invariant_factors;  // d_j > 1, each divides the next
  int free_rank = 0;
  IntMatrix torsion_map;  // n x invariant_factors.size()
  IntMatrix free_map;     // n x free_rank

  std::int64_t order() const;  // product of invariant factors (free part ignored)
  /// Torsion coordinates of x, reduced into [0, d_j).
  IntRow torsion_coords(const IntRow& x) const;
  IntRow free_coords(const IntRow& x) const;
  bool is_zero(const IntRow& x) const;
};

AbelianPresentation cokernel(const IntMatrix& relations, int generators);

}  // namespace mtc
