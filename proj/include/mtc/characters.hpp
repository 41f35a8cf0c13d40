#pragma once

// The group of Q/Z-valued functions on labels that are additive on
// fusion-supported triples: chi(i) + chi(j) + chi(k) = 0 whenever
// Hom(1, V_i V_j V_k) != 0, and chi(i) + chi(i*) = 0. It is the character group
// of the abelian group presented by those relations, computed by Smith normal
// form. Characters are exact elements of Q/Z.

#include "mtc/modular_data.hpp"
#include "mtc/qz.hpp"
#include "mtc/smith.hpp"
#include "mtc/state_dim.hpp"
#include "mtc/surface.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mtc {

/// Rows: one per unordered triple i <= j <= k with N_{ij}^{k*} > 0 (label
/// multiplicities as entries), then one per pair {i, i*}; deduplicated and
/// sorted.
IntMatrix build_relation_matrix(const FusionTensor& N, std::span<const Label> dual);

struct DualGroupPresentation {
  IntMatrix relations;
  AbelianPresentation group;
  std::vector<std::int64_t> invariant_factors;  // 1-factors dropped
  std::vector<IntRow> label_image;              // class of each label in (+)_j Z/d_j
  int free_rank = 0;

  int labels() const { return static_cast<int>(label_image.size()); }
  std::int64_t order() const { return group.order(); }
};

DualGroupPresentation dual_group(const FusionTensor& N, std::span<const Label> dual);

struct GroupCharacter {
  std::vector<QZ> values;  // per label
  friend bool operator==(const GroupCharacter&, const GroupCharacter&) = default;
};

/// Every relation row maps to 0 in Q/Z.
bool is_character(const DualGroupPresentation& pres, const GroupCharacter& chi);

/// Character sending a group element c (coordinates in (+)_j Z/d_j, with
/// 0 <= c_j < d_j) to label values sum_j c_j image(i)_j / d_j.
GroupCharacter character_from_coords(const DualGroupPresentation& pres, std::span<const std::int64_t> coords);

/// The characters dual to the invariant-factor generators.
std::vector<GroupCharacter> generator_characters(const DualGroupPresentation& pres);

/// Sum_i coefficients_i image(i) = 0 in the group, while
/// sum_i coefficients_i target_i != 0 in Q/Z: no character meets the targets.
struct Certificate {
  std::vector<std::int64_t> coefficients;  // per label, zero off the constrained labels
  QZ target_sum;
};

struct CongruenceSolution {
  std::optional<GroupCharacter> character;
  std::optional<Certificate> certificate;
  bool torsion_only = false;  // the presentation had a free part, which was ignored
};

/// Groups larger than this are not searched exhaustively.
inline constexpr std::int64_t kCharacterSearchLimit = 1'000'000;

/// Finds the character with chi(i) = target_i on every constrained label, the
/// smallest one in lexicographic label order; or a certificate of
/// infeasibility. Throws std::length_error for groups beyond the search limit.
CongruenceSolution solve_congruences(const DualGroupPresentation& pres,
                                     std::span<const std::optional<QZ>> targets);

/// Target values: 1/2 on self-dual labels with indicator -1, 0 on the other
/// self-dual labels, unconstrained elsewhere.
std::vector<std::optional<QZ>> symplectic_targets(std::span<const Label> dual, std::span<const int> fs);

CongruenceSolution find_fundamental_symplectic_character(const DualGroupPresentation& pres,
                                                         std::span<const Label> dual, std::span<const int> fs);

/// True when chi restricted to self-dual labels is 1/2 exactly on the
/// symplectic ones.
bool is_fundamental_symplectic(const GroupCharacter& chi, std::span<const Label> dual, std::span<const int> fs);

/// Sum of chi over the labels of a surface.
QZ character_sum(const GroupCharacter& chi, const Surface& a);

struct VanishingResult {
  QZ character_sum;
  std::int64_t dimension = 0;
  bool holds = false;  // character_sum != 0 implies dimension == 0
};

VanishingResult vanishing_check(const GroupCharacter& chi, const Surface& a, std::int64_t dimension);

template <typename Real>
VanishingResult vanishing_check(const ModularData<Real>& md, const FusionTensor& N, const GroupCharacter& chi,
                                const Surface& a) {
  return vanishing_check(chi, a, state_dim(md, N, a));
}

}  // namespace mtc
