#include "mtc/surface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mtc {

int Surface::point_count() const {
  int n = 0;
  for (const auto& c : components) n += static_cast<int>(c.points.size());
  return n;
}

int Surface::max_id() const {
  int m = -1;
  for (const auto& c : components)
    for (const auto& p : c.points) m = std::max(m, p.id);
  return m;
}

std::pair<int, int> Surface::locate(int id) const {
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t k = 0; k < components[c].points.size(); ++k)
      if (components[c].points[k].id == id) return {static_cast<int>(c), static_cast<int>(k)};
  throw std::out_of_range("no marked point with id " + std::to_string(id));
}

Label Surface::label_of(int id) const {
  const auto [c, k] = locate(id);
  return components[c].points[k].label;
}

std::vector<Label> Surface::labels() const {
  std::vector<Label> out;
  for (const auto& c : components)
    for (const auto& p : c.points) out.push_back(p.label);
  return out;
}

void check_surface(const Surface& s) {
  std::set<int> ids;
  for (const auto& c : s.components) {
    if (c.genus < 0) throw std::invalid_argument("negative genus");
    for (const auto& p : c.points)
      if (!ids.insert(p.id).second) throw std::invalid_argument("repeated point id " + std::to_string(p.id));
  }
}

Surface make_surface(const std::vector<std::pair<int, std::vector<Label>>>& components, std::int64_t weight) {
  Surface s;
  s.weight = weight;
  int id = 0;
  for (const auto& [g, labels] : components) {
    Component c{g, {}};
    for (Label l : labels) c.points.push_back({id++, l});
    s.components.push_back(std::move(c));
  }
  check_surface(s);
  return s;
}

Surface connected_surface(int genus, std::vector<Label> labels, std::int64_t weight) {
  return make_surface({{genus, std::move(labels)}}, weight);
}

Surface disjoint_union(const Surface& a, const Surface& b) {
  Surface out = a;
  out.weight = a.weight + b.weight;
  std::set<int> ids;
  for (const auto& c : a.components)
    for (const auto& p : c.points) ids.insert(p.id);
  bool clash = false;
  for (const auto& c : b.components)
    for (const auto& p : c.points) clash = clash || ids.count(p.id);
  int next = a.max_id() + 1;
  for (auto c : b.components) {
    if (clash)
      for (auto& p : c.points) p.id = next++;
    out.components.push_back(std::move(c));
  }
  return out;
}

Surface reverse_orientation(const Surface& a, std::span<const Label> dual) {
  Surface out = a;
  out.weight = -a.weight;
  for (auto& c : out.components)
    for (auto& p : c.points) p.label = dual[p.label];
  return out;
}

Surface glue_points(const Surface& a, int p, int q, std::span<const Label> dual) {
  if (p == q) throw std::invalid_argument("glue_points: cannot glue a point to itself");
  const auto [cp, kp] = a.locate(p);
  const auto [cq, kq] = a.locate(q);
  const Label lp = a.components[cp].points[kp].label, lq = a.components[cq].points[kq].label;
  if (lp != dual[lq])
    throw std::invalid_argument("glue_points: labels of points " + std::to_string(p) + " and " + std::to_string(q) +
                                " are not dual");
  Surface out = a;
  auto drop = [](Component& c, int id) {
    std::erase_if(c.points, [id](const MarkedPoint& m) { return m.id == id; });
  };
  if (cp == cq) {
    auto& c = out.components[cp];
    drop(c, p);
    drop(c, q);
    ++c.genus;
    return out;
  }
  Component merged{a.components[cp].genus + a.components[cq].genus, {}};
  for (const auto& m : a.components[cp].points)
    if (m.id != p) merged.points.push_back(m);
  for (const auto& m : a.components[cq].points)
    if (m.id != q) merged.points.push_back(m);
  out.components[std::min(cp, cq)] = std::move(merged);
  out.components.erase(out.components.begin() + std::max(cp, cq));
  return out;
}

Factorization factorize(const Surface& a, int component, Label i, const Cut& cut, std::span<const Label> dual) {
  if (component < 0 || component >= static_cast<int>(a.components.size()))
    throw std::out_of_range("factorize: no component " + std::to_string(component));
  if (i < 0 || i >= static_cast<int>(dual.size())) throw std::out_of_range("factorize: unknown label");
  Factorization f{a, a.max_id() + 1, a.max_id() + 2};
  const Component& src = a.components[component];
  const MarkedPoint plus{f.plus, i}, minus{f.minus, dual[i]};

  if (std::holds_alternative<NonSeparating>(cut)) {
    if (src.genus < 1) throw std::invalid_argument("factorize: non-separating cut needs genus >= 1");
    auto& c = f.surface.components[component];
    --c.genus;
    c.points.push_back(plus);
    c.points.push_back(minus);
    return f;
  }
  const auto& sep = std::get<Separating>(cut);
  if (sep.genus_first < 0 || sep.genus_first > src.genus)
    throw std::invalid_argument("factorize: genus_first out of range");
  const std::set<int> keep(sep.points_first.begin(), sep.points_first.end());
  for (int id : keep)
    if (std::none_of(src.points.begin(), src.points.end(), [id](const MarkedPoint& m) { return m.id == id; }))
      throw std::invalid_argument("factorize: point " + std::to_string(id) + " is not on the component");
  Component first{sep.genus_first, {}}, second{src.genus - sep.genus_first, {}};
  for (const auto& m : src.points) (keep.count(m.id) ? first : second).points.push_back(m);
  first.points.push_back(plus);
  second.points.push_back(minus);
  f.surface.components[component] = std::move(first);
  f.surface.components.insert(f.surface.components.begin() + component + 1, std::move(second));
  return f;
}

bool same_shape(const Surface& a, const Surface& b) {
  if (a.weight != b.weight) return false;
  auto shape = [](const Surface& s) {
    std::multiset<std::pair<int, std::vector<Label>>> out;
    for (const auto& c : s.components) {
      std::vector<Label> ls;
      for (const auto& p : c.points) ls.push_back(p.label);
      std::sort(ls.begin(), ls.end());
      out.emplace(c.genus, std::move(ls));
    }
    return out;
  };
  return shape(a) == shape(b);
}

int symplectic_multiplicity(const Surface& a, std::span<const int> fs) {
  int nu = 0;
  for (Label l : a.labels()) nu += fs[l] == -1;
  return nu;
}

}  // namespace mtc
