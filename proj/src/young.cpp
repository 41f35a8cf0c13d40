#include "mtc/young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mtc {

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string YoungDiagram::str() const {
  std::string s = "(";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(rows[r]);
  }
  return s + ")";
}

YoungDiagram YoungDiagram::parse(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("not a Young diagram: '" + std::string(s) + "'");
  YoungDiagram y;
  std::string_view body = s.substr(1, s.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string tok(body.substr(0, comma));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty() || v <= 0)
      throw std::invalid_argument("not a Young diagram: '" + std::string(s) + "'");
    y.rows.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (!std::is_sorted(y.rows.rbegin(), y.rows.rend()))
    throw std::invalid_argument("rows must be weakly decreasing: '" + std::string(s) + "'");
  return y;
}

bool canonical_less(const YoungDiagram& a, const YoungDiagram& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.rows < b.rows;
}

bool in_level_set(int N, int k, const YoungDiagram& lambda) {
  return lambda.length() < N && lambda.first_row() <= k;
}

std::vector<YoungDiagram> su_level_labels(int N, int k) {
  if (N < 2) throw std::invalid_argument("su_level_labels: N must be at least 2");
  if (k < 0) throw std::invalid_argument("su_level_labels: level must be nonnegative");
  std::vector<YoungDiagram> out;
  YoungDiagram cur;
  auto rec = [&](auto&& self, int maxrow) -> void {
    out.push_back(cur);
    if (cur.length() >= N - 1) return;
    for (int r = 1; r <= maxrow; ++r) {
      cur.rows.push_back(r);
      self(self, r);
      cur.rows.pop_back();
    }
  };
  rec(rec, k);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

YoungDiagram young_dagger(int N, const YoungDiagram& lambda) {
  if (lambda.length() >= N) throw std::invalid_argument("young_dagger: diagram has too many rows");
  YoungDiagram out;
  const int top = lambda.first_row();
  for (int r = 0; r < N; ++r) {
    const int v = top - lambda.row(N - 1 - r);
    if (v > 0) out.rows.push_back(v);
  }
  return out;
}

QZ su_mu_tilde(int N, const YoungDiagram& lambda) { return QZ(lambda.size(), N); }

std::vector<int> dynkin_labels(int N, const YoungDiagram& lambda) {
  std::vector<int> a(N - 1);
  for (int i = 0; i < N - 1; ++i) a[i] = lambda.row(i) - lambda.row(i + 1);
  return a;
}

}  // namespace mtc
