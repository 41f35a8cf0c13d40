#include "mtc/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mtc {

IntMatrix build_relation_matrix(const FusionTensor& N, std::span<const Label> dual) {
  const int n = N.rank();
  if (static_cast<int>(dual.size()) != n) throw std::invalid_argument("build_relation_matrix: dual map size");
  std::set<std::vector<std::int64_t>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        if (N(i, j, dual[k]) > 0) {
          std::vector<std::int64_t> r(n, 0);
          ++r[i];
          ++r[j];
          ++r[k];
          rows.insert(std::move(r));
        }
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> r(n, 0);
    ++r[i];
    ++r[dual[i]];
    rows.insert(std::move(r));
  }
  IntMatrix R(static_cast<Eigen::Index>(rows.size()), n);
  Eigen::Index at = 0;
  for (const auto& r : rows) {
    for (int c = 0; c < n; ++c) R(at, c) = r[c];
    ++at;
  }
  return R;
}

DualGroupPresentation dual_group(const FusionTensor& N, std::span<const Label> dual) {
  DualGroupPresentation p;
  p.relations = build_relation_matrix(N, dual);
  p.group = cokernel(p.relations, N.rank());
  p.invariant_factors = p.group.invariant_factors;
  p.free_rank = p.group.free_rank;
  for (int i = 0; i < N.rank(); ++i) {
    IntRow e = IntRow::Zero(N.rank());
    e(i) = 1;
    p.label_image.push_back(p.group.torsion_coords(e));
  }
  return p;
}

bool is_character(const DualGroupPresentation& pres, const GroupCharacter& chi) {
  if (static_cast<Eigen::Index>(chi.values.size()) != pres.relations.cols()) return false;
  for (Eigen::Index r = 0; r < pres.relations.rows(); ++r) {
    QZ s;
    for (Eigen::Index c = 0; c < pres.relations.cols(); ++c)
      if (pres.relations(r, c)) s += pres.relations(r, c) * chi.values[c];
    if (!s.is_zero()) return false;
  }
  return true;
}

GroupCharacter character_from_coords(const DualGroupPresentation& pres, std::span<const std::int64_t> coords) {
  if (coords.size() != pres.invariant_factors.size()) throw std::invalid_argument("character coordinate count");
  GroupCharacter chi;
  for (const auto& img : pres.label_image) {
    QZ v;
    for (std::size_t t = 0; t < coords.size(); ++t) v += QZ(coords[t] * img(t) % pres.invariant_factors[t], pres.invariant_factors[t]);
    chi.values.push_back(v);
  }
  return chi;
}

std::vector<GroupCharacter> generator_characters(const DualGroupPresentation& pres) {
  std::vector<GroupCharacter> out;
  for (std::size_t t = 0; t < pres.invariant_factors.size(); ++t) {
    std::vector<std::int64_t> c(pres.invariant_factors.size(), 0);
    c[t] = 1;
    out.push_back(character_from_coords(pres, c));
  }
  return out;
}

namespace {

std::optional<Certificate> find_certificate(const DualGroupPresentation& pres,
                                            std::span<const std::optional<QZ>> targets) {
  std::vector<int> constrained;
  for (int i = 0; i < pres.labels(); ++i)
    if (targets[i]) constrained.push_back(i);
  const auto t = static_cast<Eigen::Index>(pres.invariant_factors.size());
  const auto c = static_cast<Eigen::Index>(constrained.size());
  // integer relations among the constrained images: left kernel of [P; diag(d)]
  IntMatrix M = IntMatrix::Zero(c + t, t);
  for (Eigen::Index r = 0; r < c; ++r) M.row(r) = pres.label_image[constrained[r]];
  for (Eigen::Index j = 0; j < t; ++j) M(c + j, j) = pres.invariant_factors[j];
  const RowEchelon ech = row_echelon(M, true);
  for (Eigen::Index r = ech.rank; r < c + t; ++r) {
    Certificate cert;
    cert.coefficients.assign(pres.labels(), 0);
    for (Eigen::Index k = 0; k < c; ++k) {
      cert.coefficients[constrained[k]] = ech.U(r, k);
      cert.target_sum += ech.U(r, k) * *targets[constrained[k]];
    }
    if (!cert.target_sum.is_zero()) return cert;
  }
  return std::nullopt;
}

bool lex_less(const std::vector<QZ>& a, const std::vector<QZ>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CongruenceSolution solve_congruences(const DualGroupPresentation& pres,
                                     std::span<const std::optional<QZ>> targets) {
  if (static_cast<int>(targets.size()) != pres.labels()) throw std::invalid_argument("one target per label expected");
  CongruenceSolution out;
  out.torsion_only = pres.free_rank > 0;
  if (auto cert = find_certificate(pres, targets)) {
    out.certificate = std::move(cert);
    return out;
  }
  if (pres.order() > kCharacterSearchLimit)
    throw std::length_error("character group of order " + std::to_string(pres.order()) + " is too large to search");

  const auto& d = pres.invariant_factors;
  std::vector<std::int64_t> coords(d.size(), 0);
  while (true) {
    GroupCharacter chi = character_from_coords(pres, coords);
    bool ok = true;
    for (int i = 0; i < pres.labels() && ok; ++i) ok = !targets[i] || chi.values[i] == *targets[i];
    if (ok && (!out.character || lex_less(chi.values, out.character->values))) out.character = std::move(chi);
    std::size_t pos = 0;
    while (pos < d.size() && ++coords[pos] == d[pos]) coords[pos++] = 0;
    if (pos == d.size()) break;
  }
  if (!out.character) throw std::logic_error("solve_congruences: no certificate and no solution");
  return out;
}

std::vector<std::optional<QZ>> symplectic_targets(std::span<const Label> dual, std::span<const int> fs) {
  std::vector<std::optional<QZ>> t(dual.size());
  for (std::size_t i = 0; i < dual.size(); ++i)
    if (dual[i] == static_cast<Label>(i)) t[i] = fs[i] == -1 ? QZ(1, 2) : QZ();
  return t;
}

CongruenceSolution find_fundamental_symplectic_character(const DualGroupPresentation& pres,
                                                         std::span<const Label> dual, std::span<const int> fs) {
  const auto t = symplectic_targets(dual, fs);
  return solve_congruences(pres, t);
}

bool is_fundamental_symplectic(const GroupCharacter& chi, std::span<const Label> dual, std::span<const int> fs) {
  const auto t = symplectic_targets(dual, fs);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] && chi.values[i] != *t[i]) return false;
  return true;
}

QZ character_sum(const GroupCharacter& chi, const Surface& a) {
  QZ s;
  for (Label l : a.labels()) s += chi.values.at(l);
  return s;
}

VanishingResult vanishing_check(const GroupCharacter& chi, const Surface& a, std::int64_t dimension) {
  VanishingResult r{character_sum(chi, a), dimension, false};
  r.holds = r.character_sum.is_zero() || dimension == 0;
  return r;
}

}  // namespace mtc
