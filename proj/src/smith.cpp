#include "mtc/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace mtc {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix entry overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer matrix entry overflow");
  return r;
}

// row_dst -= q * row_src
template <typename M>
void row_axpy(M& A, Eigen::Index dst, Eigen::Index src, std::int64_t q) {
  if (!q) return;
  for (Eigen::Index c = 0; c < A.cols(); ++c)
    if (A(src, c)) A(dst, c) = checked_sub(A(dst, c), checked_mul(q, A(src, c)));
}

template <typename M>
void col_axpy(M& A, Eigen::Index dst, Eigen::Index src, std::int64_t q) {
  if (!q) return;
  for (Eigen::Index r = 0; r < A.rows(); ++r)
    if (A(r, src)) A(r, dst) = checked_sub(A(r, dst), checked_mul(q, A(r, src)));
}

}  // namespace

RowEchelon row_echelon(const IntMatrix& A, bool track_transform) {
  RowEchelon out;
  out.H = A;
  IntMatrix& H = out.H;
  const Eigen::Index m = H.rows(), n = H.cols();
  if (track_transform) out.U = IntMatrix::Identity(m, m);
  Eigen::Index prow = 0;
  for (Eigen::Index c = 0; c < n && prow < m; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index r = prow; r < m; ++r)
        if (H(r, c) && (best < 0 || std::llabs(H(r, c)) < std::llabs(H(best, c)))) best = r;
      if (best < 0) break;
      if (best != prow) {
        H.row(best).swap(H.row(prow));
        if (track_transform) out.U.row(best).swap(out.U.row(prow));
      }
      bool clean = true;
      for (Eigen::Index r = prow + 1; r < m; ++r) {
        if (!H(r, c)) continue;
        const std::int64_t q = H(r, c) / H(prow, c);
        row_axpy(H, r, prow, q);
        if (track_transform) row_axpy(out.U, r, prow, q);
        if (H(r, c)) clean = false;
      }
      if (clean) break;
    }
    if (prow < m && H(prow, c)) {
      if (H(prow, c) < 0) {
        H.row(prow) *= -1;
        if (track_transform) out.U.row(prow) *= -1;
      }
      ++prow;
    }
  }
  out.rank = static_cast<int>(prow);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  // Row operations never touch V, so shrink tall inputs to their echelon rows first.
  const RowEchelon ech = row_echelon(A);
  IntMatrix M = ech.H.topRows(ech.rank);
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithForm out;
  out.V = IntMatrix::Identity(n, n);

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero in the trailing block
    auto place_min = [&]() -> bool {
      Eigen::Index br = -1, bc = -1;
      for (Eigen::Index r = t; r < m; ++r)
        for (Eigen::Index c = t; c < n; ++c)
          if (M(r, c) && (br < 0 || std::llabs(M(r, c)) < std::llabs(M(br, bc)))) br = r, bc = c;
      if (br < 0) return false;
      if (br != t) M.row(br).swap(M.row(t));
      if (bc != t) {
        M.col(bc).swap(M.col(t));
        out.V.col(bc).swap(out.V.col(t));
      }
      return true;
    };
    if (!place_min()) break;

    while (true) {
      bool dirty = false;
      for (Eigen::Index r = t + 1; r < m; ++r)
        if (M(r, t)) {
          row_axpy(M, r, t, M(r, t) / M(t, t));
          dirty |= M(r, t) != 0;
        }
      for (Eigen::Index c = t + 1; c < n; ++c)
        if (M(t, c)) {
          const std::int64_t q = M(t, c) / M(t, t);
          col_axpy(M, c, t, q);
          col_axpy(out.V, c, t, q);
          dirty |= M(t, c) != 0;
        }
      if (dirty) {
        place_min();
        continue;
      }
      // divisibility of the trailing block by the pivot
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < m && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < n; ++c)
          if (M(r, c) % M(t, t)) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      row_axpy(M, t, bad, -1);
    }
    out.diagonal.push_back(std::llabs(M(t, t)));
    ++out.rank;
  }
  return out;
}

std::int64_t AbelianPresentation::order() const {
  std::int64_t o = 1;
  for (auto d : invariant_factors) o = checked_mul(o, d);
  return o;
}

IntRow AbelianPresentation::torsion_coords(const IntRow& x) const {
  IntRow out = x * torsion_map;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    out(j) %= invariant_factors[j];
    if (out(j) < 0) out(j) += invariant_factors[j];
  }
  return out;
}

IntRow AbelianPresentation::free_coords(const IntRow& x) const { return x * free_map; }

bool AbelianPresentation::is_zero(const IntRow& x) const {
  return torsion_coords(x).isZero() && free_coords(x).isZero();
}

AbelianPresentation cokernel(const IntMatrix& relations, int generators) {
  if (relations.cols() != generators) throw std::invalid_argument("cokernel: column count mismatch");
  const SmithForm snf = smith_normal_form(relations);
  AbelianPresentation p;
  std::vector<Eigen::Index> torsion_cols;
  for (int t = 0; t < snf.rank; ++t)
    if (snf.diagonal[t] > 1) {
      p.invariant_factors.push_back(snf.diagonal[t]);
      torsion_cols.push_back(t);
    }
  p.free_rank = generators - snf.rank;
  p.torsion_map.resize(generators, static_cast<Eigen::Index>(torsion_cols.size()));
  for (std::size_t j = 0; j < torsion_cols.size(); ++j) p.torsion_map.col(j) = snf.V.col(torsion_cols[j]);
  p.free_map = snf.V.rightCols(p.free_rank);
  return p;
}

}  // namespace mtc
