#include "mtc/lie.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mtc {
namespace {

// 6 * (alpha_i, alpha_j), Bourbaki numbering, long roots of length^2 2.
Eigen::MatrixXi root_form6(CartanType t, int n) {
  Eigen::MatrixXi B = Eigen::MatrixXi::Zero(n, n);
  auto edge = [&](int i, int j, int v) { B(i, j) = B(j, i) = v; };
  switch (t) {
    case CartanType::A:
      B.diagonal().setConstant(12);
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -6);
      break;
    case CartanType::B:
      B.diagonal().setConstant(12);
      B(n - 1, n - 1) = 6;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -6);
      break;
    case CartanType::C:
      B.diagonal().setConstant(6);
      B(n - 1, n - 1) = 12;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -3);
      edge(n - 2, n - 1, -6);
      break;
    case CartanType::D:
      B.diagonal().setConstant(12);
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -6);
      edge(n - 3, n - 1, -6);
      break;
    case CartanType::E:
      B.diagonal().setConstant(12);
      edge(0, 2, -6);
      edge(1, 3, -6);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -6);
      break;
    case CartanType::F:
      B.diagonal() << 12, 12, 6, 6;
      edge(0, 1, -6);
      edge(1, 2, -6);
      edge(2, 3, -3);
      break;
    case CartanType::G:
      B.diagonal() << 4, 12;
      edge(0, 1, -6);
      break;
  }
  return B;
}

std::int64_t classical_weyl_order(CartanType t, int n) {
  auto fact = [](int m) {
    std::int64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (t) {
    case CartanType::A: return fact(n + 1);
    case CartanType::B:
    case CartanType::C: return (std::int64_t{1} << n) * fact(n);
    case CartanType::D: return (std::int64_t{1} << (n - 1)) * fact(n);
    case CartanType::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case CartanType::F: return 1152;
    case CartanType::G: return 12;
  }
  return 0;
}

void check_rank(CartanType t, int n) {
  bool ok = false;
  switch (t) {
    case CartanType::A: ok = n >= 1; break;
    case CartanType::B:
    case CartanType::C: ok = n >= 2; break;
    case CartanType::D: ok = n >= 4; break;
    case CartanType::E: ok = n >= 6 && n <= 8; break;
    case CartanType::F: ok = n == 4; break;
    case CartanType::G: ok = n == 2; break;
  }
  if (!ok) throw std::invalid_argument("unsupported Cartan type/rank");
}

using Key = std::vector<int>;

Key key_of(const Eigen::VectorXi& v) { return Key(v.data(), v.data() + v.size()); }

}  // namespace

std::string LieData::name() const { return std::string(1, "ABCDEFG"[static_cast<int>(type)]) + std::to_string(rank); }

std::int64_t LieData::pairing(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const {
  return (x.cast<std::int64_t>().transpose() * form.cast<std::int64_t>() * y.cast<std::int64_t>())(0, 0);
}

Eigen::VectorXi LieData::dagger(const Eigen::VectorXi& lambda) const {
  if (!weyl_enumerated()) throw std::logic_error("dagger: Weyl group not enumerated for " + name());
  return -(longest * lambda);
}

LieData make_lie_data(CartanType type, int rank, int level) {
  check_rank(type, rank);
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  LieData ld;
  ld.type = type;
  ld.rank = rank;
  ld.level = level;
  const int n = rank;

  const Eigen::MatrixXi B6 = root_form6(type, n);
  ld.cartan.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ld.cartan(i, j) = 2 * B6(i, j) / B6(j, j);

  // (omega_i, omega_j) = (A^{-1})_ij (alpha_j, alpha_j) / 2 = adj(A)_ij B6_jj / (12 det A)
  const Eigen::MatrixXd Ad = ld.cartan.cast<double>();
  const int det = static_cast<int>(std::lround(Ad.determinant()));
  const Eigen::MatrixXd adj_d = Ad.inverse() * det;
  Eigen::MatrixXi num(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) num(i, j) = static_cast<int>(std::lround(adj_d(i, j))) * B6(j, j);
  int den = 12 * det;
  int g = den;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g = std::gcd(g, num(i, j));
  ld.form = num / g;
  ld.form_denominator = den / g;

  // positive roots in the simple-root basis; the highest one gives the comarks
  std::set<Key> roots;
  std::vector<Eigen::VectorXi> queue;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    roots.insert(key_of(e));
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Eigen::VectorXi beta = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int pair = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < n; ++j) pair += beta(j) * ld.cartan(j, i);
      Eigen::VectorXi r = beta;
      r(i) -= pair;
      if ((r.array() >= 0).all() && !r.isZero() && roots.insert(key_of(r)).second) queue.push_back(r);
    }
  }
  Eigen::VectorXi highest;
  for (const auto& k : roots) {
    Eigen::VectorXi v = Eigen::Map<const Eigen::VectorXi>(k.data(), n);
    if (highest.size() == 0 || v.sum() > highest.sum()) highest = v;
  }
  ld.comarks.resize(n);
  for (int j = 0; j < n; ++j) ld.comarks(j) = highest(j) * B6(j, j) / 12;
  ld.dual_coxeter = 1 + ld.comarks.sum();

  ld.weyl_order = classical_weyl_order(type, n);
  if (ld.weyl_order <= kWeylEnumerationLimit) {
    std::vector<Eigen::MatrixXi> simple(n, Eigen::MatrixXi::Identity(n, n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) simple[i](j, i) -= ld.cartan(i, j);
    const Eigen::VectorXi rho = ld.rho();
    std::map<Key, std::size_t> seen;
    ld.weyl.push_back(Eigen::MatrixXi::Identity(n, n));
    ld.weyl_sign.push_back(1);
    seen.emplace(key_of(rho), 0);
    for (std::size_t at = 0; at < ld.weyl.size(); ++at)
      for (int i = 0; i < n; ++i) {
        Eigen::MatrixXi w = simple[i] * ld.weyl[at];
        if (seen.emplace(key_of(w * rho), ld.weyl.size()).second) {
          ld.weyl.push_back(std::move(w));
          ld.weyl_sign.push_back(-ld.weyl_sign[at]);
        }
      }
    if (static_cast<std::int64_t>(ld.weyl.size()) != ld.weyl_order)
      throw std::logic_error("Weyl group enumeration of " + ld.name() + " has the wrong order");
    ld.longest = ld.weyl[seen.at(key_of(-rho))];
  }
  return ld;
}

LieData make_lie_data(const std::string& name, int level) {
  if (name.size() < 2) throw std::invalid_argument("bad Lie type '" + name + "'");
  const std::string types = "ABCDEFG";
  const auto pos = types.find(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
  if (pos == std::string::npos) throw std::invalid_argument("bad Lie type '" + name + "'");
  std::size_t used = 0;
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1), &used);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad Lie type '" + name + "'");
  }
  if (used != name.size() - 1) throw std::invalid_argument("bad Lie type '" + name + "'");
  return make_lie_data(static_cast<CartanType>(pos), rank, level);
}

std::vector<Eigen::VectorXi> level_weights(const LieData& ld) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi cur = Eigen::VectorXi::Zero(ld.rank);
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == ld.rank) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a * ld.comarks(i) <= budget; ++a) {
      cur(i) = a;
      self(self, i + 1, budget - a * ld.comarks(i));
    }
    cur(i) = 0;
  };
  rec(rec, 0, ld.level);
  std::sort(out.begin(), out.end(), [&](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    const int la = ld.comarks.dot(a), lb = ld.comarks.dot(b);
    if (la != lb) return la < lb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  return out;
}

AbelianPresentation lattice_fundamental_group(const LieData& ld) {
  return cokernel(ld.cartan.cast<std::int64_t>(), ld.rank);
}

}  // namespace mtc
