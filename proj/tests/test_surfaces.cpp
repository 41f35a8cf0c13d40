#include "doctest.h"

#include "mtc/quantum_group.hpp"
#include "mtc/state_dim.hpp"
#include "mtc/surface.hpp"

#include <random>

using namespace mtc;

namespace {

struct Family {
  ModularData<double> md;
  FusionTensor fusion;
};

Family family(int N, int k) {
  Family f{su_modular_data(N, k), {}};
  f.fusion = verlinde_fusion(f.md);
  return f;
}

// Random surface with 1-2 components, total genus <= 2 and <= 4 points.
Surface random_surface(std::mt19937& rng, int labels) {
  std::uniform_int_distribution<int> comps(1, 2), genus(0, 2), npts(0, 4), lab(0, labels - 1);
  const int nc = comps(rng);
  std::vector<std::pair<int, std::vector<Label>>> spec(nc);
  int g_left = genus(rng), p_left = npts(rng);
  for (int c = 0; c < nc; ++c) {
    const int g = c + 1 == nc ? g_left : std::uniform_int_distribution<int>(0, g_left)(rng);
    const int p = c + 1 == nc ? p_left : std::uniform_int_distribution<int>(0, p_left)(rng);
    g_left -= g;
    p_left -= p;
    spec[c].first = g;
    for (int i = 0; i < p; ++i) spec[c].second.push_back(lab(rng));
  }
  return make_surface(spec, std::uniform_int_distribution<int>(-5, 5)(rng));
}

}  // namespace

TEST_CASE("disjoint union") {
  const Surface a = connected_surface(1, {0, 1}, 2);
  const Surface b = connected_surface(0, {1}, 3);
  CHECK(disjoint_union(Surface{}, a) == a);
  const Surface u = disjoint_union(a, b);
  CHECK(u.components.size() == 2);
  CHECK(u.weight == 5);
  CHECK_NOTHROW(check_surface(u));
  CHECK(u.components[1].points[0].id == 2);
  CHECK(disjoint_union(connected_surface(0, {0}), connected_surface(0, {0})).components.size() == 2);
}

TEST_CASE("orientation reversal") {
  const auto f = family(3, 1);
  const Surface a = connected_surface(0, {1, 2, 1}, 4);
  const Surface r = reverse_orientation(a, f.md.dual);
  CHECK(r.labels() == std::vector<Label>{2, 1, 2});
  CHECK(r.weight == -4);
  CHECK(reverse_orientation(r, f.md.dual) == a);
}

TEST_CASE("gluing") {
  const auto f = family(3, 2);
  const Label i = f.md.find("(1)"), is = f.md.find("(1,1)"), j = f.md.find("(2)");
  const Surface torus = glue_points(connected_surface(0, {i, is, j}), 0, 1, f.md.dual);
  REQUIRE(torus.components.size() == 1);
  CHECK(torus.components[0].genus == 1);
  CHECK(torus.labels() == std::vector<Label>{j});

  const Surface two = make_surface({{0, {i, j, i}}, {0, {is, j, is}}});
  const Surface merged = glue_points(two, 0, 3, f.md.dual);
  REQUIRE(merged.components.size() == 1);
  CHECK(merged.components[0].genus == 0);
  CHECK(merged.point_count() == 4);

  const Surface g12 = make_surface({{1, {i}}, {2, {is}}});
  CHECK(glue_points(g12, 0, 1, f.md.dual).components[0].genus == 3);

  CHECK_THROWS_AS(glue_points(connected_surface(0, {i, i}), 0, 1, f.md.dual), std::invalid_argument);
  CHECK_THROWS_AS(glue_points(connected_surface(0, {i, is}), 0, 7, f.md.dual), std::out_of_range);
  CHECK_THROWS_AS(glue_points(connected_surface(0, {i, is}), 0, 0, f.md.dual), std::invalid_argument);
}

TEST_CASE("factorization") {
  const auto f = family(3, 2);
  const Label i = f.md.find("(1)");
  const auto t = factorize(connected_surface(1, {}), 0, i, NonSeparating{}, f.md.dual);
  CHECK(t.surface.components[0].genus == 0);
  CHECK(t.surface.labels() == std::vector<Label>{i, f.md.dual[i]});
  CHECK(factorize(connected_surface(2, {}), 0, i, NonSeparating{}, f.md.dual).surface.components[0].genus == 1);
  CHECK_THROWS_AS(factorize(connected_surface(0, {i}), 0, i, NonSeparating{}, f.md.dual), std::invalid_argument);

  const Surface s = connected_surface(2, {1, 2, 3, 4});
  const auto sep = factorize(s, 0, i, Separating{1, {0, 1}}, f.md.dual);
  REQUIRE(sep.surface.components.size() == 2);
  CHECK(sep.surface.components[0].genus == 1);
  CHECK(sep.surface.components[1].genus == 1);
  const Surface back = glue_points(sep.surface, sep.plus, sep.minus, f.md.dual);
  CHECK(back == s);

  const auto ns = factorize(s, 0, i, NonSeparating{}, f.md.dual);
  CHECK(glue_points(ns.surface, ns.plus, ns.minus, f.md.dual) == s);
}

TEST_CASE("glue then factorize returns the original shape") {
  const auto f = family(3, 2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Surface a = random_surface(rng, f.md.rank());
    // add a dual pair to glue on
    const Label x = std::uniform_int_distribution<int>(0, f.md.rank() - 1)(rng);
    a.components[0].points.push_back({a.max_id() + 1, x});
    const int c2 = static_cast<int>(a.components.size()) - 1;
    a.components[c2].points.push_back({a.max_id() + 1, f.md.dual[x]});
    const int p = a.max_id() - 1, q = a.max_id();
    const Surface g = glue_points(a, p, q, f.md.dual);
    Factorization back;
    if (c2 == 0) {
      back = factorize(g, 0, x, NonSeparating{}, f.md.dual);
    } else {
      std::vector<int> first;
      for (const auto& m : a.components[0].points)
        if (m.id != p) first.push_back(m.id);
      back = factorize(g, 0, x, Separating{a.components[0].genus, first}, f.md.dual);
    }
    CHECK(same_shape(back.surface, a));
  }
}

TEST_CASE("sphere axioms and small dimensions") {
  const auto f = family(2, 2);
  for (Label l = 0; l < f.md.rank(); ++l) {
    CHECK(state_dim(f.md, f.fusion, connected_surface(0, {l})) == (l == 0 ? 1 : 0));
    CHECK(state_dim_verlinde(f.md, connected_surface(0, {l})) == (l == 0 ? 1 : 0));
    for (Label m = 0; m < f.md.rank(); ++m) {
      CHECK(state_dim(f.md, f.fusion, connected_surface(0, {l, m})) == (m == f.md.dual[l] ? 1 : 0));
      CHECK(state_dim_verlinde(f.md, connected_surface(0, {l, m})) == (m == f.md.dual[l] ? 1 : 0));
    }
  }
  CHECK(state_dim(f.md, f.fusion, connected_surface(1, {})) == 3);
  CHECK(state_dim_verlinde(f.md, connected_surface(1, {})) == 3);
  CHECK(state_dim(f.md, f.fusion, connected_surface(0, {1, 1, 1, 1})) == 2);
  CHECK(state_dim_verlinde(f.md, connected_surface(0, {1, 1, 1, 1})) == 2);
  CHECK(state_dim(f.md, f.fusion, Surface{}) == 1);

  const auto f1 = family(2, 1);
  CHECK(state_dim_verlinde(f1.md, connected_surface(2, {})) == 4);
  CHECK(state_dim(f1.md, f1.fusion, connected_surface(2, {})) == 4);
}

TEST_CASE("recursion and Verlinde agree; multiplicativity and duality") {
  std::mt19937 rng(11);
  for (auto [N, k] : {std::pair{2, 3}, {3, 2}, {4, 2}}) {
    const auto f = family(N, k);
    for (int trial = 0; trial < 60; ++trial) {
      const Surface a = random_surface(rng, f.md.rank());
      const Surface b = random_surface(rng, f.md.rank());
      const auto da = state_dim(f.md, f.fusion, a);
      CHECK(da == state_dim_verlinde(f.md, a));
      CHECK(state_dim(f.md, f.fusion, disjoint_union(a, b)) == da * state_dim(f.md, f.fusion, b));
      CHECK(state_dim(f.md, f.fusion, reverse_orientation(a, f.md.dual)) == da);
    }
  }
}

TEST_CASE("gluing identity at dimension level") {
  std::mt19937 rng(3);
  for (auto [N, k] : {std::pair{2, 2}, {3, 2}, {4, 1}}) {
    const auto f = family(N, k);
    for (int trial = 0; trial < 40; ++trial) {
      Surface a = random_surface(rng, f.md.rank());
      const int c2 = static_cast<int>(a.components.size()) - 1;
      a.components[0].points.push_back({a.max_id() + 1, 0});
      a.components[c2].points.push_back({a.max_id() + 1, 0});
      CHECK(check_gluing_dimension(f.md, f.fusion, a, a.max_id() - 1, a.max_id()).holds);
    }
  }
  const auto t = trivial_modular_data();
  const auto tf = verlinde_fusion(t);
  const auto chk = check_gluing_dimension(t, tf, connected_surface(0, {0, 0}), 0, 1);
  CHECK(chk.holds);
  CHECK(chk.sum_recursion == 1);
  CHECK(chk.glued_verlinde == 1);
}

TEST_CASE("corrupted fusion breaks the gluing check") {
  auto f = family(2, 2);
  f.fusion.at(1, 1, 1) = 1;
  f.fusion.at(1, 1, 2) = 0;
  CHECK_FALSE(check_gluing_dimension(f.md, f.fusion, connected_surface(0, {1, 0, 0}), 1, 2).holds);
}
