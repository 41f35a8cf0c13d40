#pragma once

// Young diagrams labelling the simple objects of quantum SU(N) at level k.

#include "mtc/qz.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

struct YoungDiagram {
  std::vector<int> rows;  // weakly decreasing, positive

  int size() const;  // |lambda|
  int length() const { return static_cast<int>(rows.size()); }
  int first_row() const { return rows.empty() ? 0 : rows.front(); }
  int row(int r) const { return r < length() ? rows[r] : 0; }  // zero-padded, 0-based

  /// "()" for the empty diagram, "(2,1)" otherwise.
  std::string str() const;
  static YoungDiagram parse(std::string_view s);

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Canonical order: by |lambda|, then lexicographically by rows.
bool canonical_less(const YoungDiagram& a, const YoungDiagram& b);

/// True when lambda has fewer than N rows and lambda_1 <= k.
bool in_level_set(int N, int k, const YoungDiagram& lambda);

/// All diagrams with < N rows and lambda_1 <= k, empty diagram first.
std::vector<YoungDiagram> su_level_labels(int N, int k);

/// Complement of lambda in the lambda_1 x N rectangle, rotated by 180 degrees:
/// row r of the result is lambda_1 - lambda_{N+1-r}.
YoungDiagram young_dagger(int N, const YoungDiagram& lambda);

/// |lambda| / N in Q/Z.
QZ su_mu_tilde(int N, const YoungDiagram& lambda);

/// Dynkin labels a_i = lambda_i - lambda_{i+1}, i = 1..N-1.
std::vector<int> dynkin_labels(int N, const YoungDiagram& lambda);

}  // namespace mtc
