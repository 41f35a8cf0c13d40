// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "mtc/characters.hpp"
#include "mtc/cli.hpp"
#include "mtc/lie.hpp"
#include "mtc/quantum_group.hpp"
#include "mtc/scaling.hpp"
#include "mtc/state_dim.hpp"
#include "mtc/young.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

using namespace mtc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (failures_++ < 3) msgs_ += (msgs_.empty() ? "" : "; ") + what;
  }
  Outcome result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + ", " + std::to_string(checks_) + " checks"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + msgs_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string msgs_;
};

struct Family {
  std::string name;
  ModularData<double> md;
  FusionTensor fusion;
  std::vector<int> fs;
};

Family load(const FamilySpec& spec) {
  Family f{spec.name(), build_family(spec), {}, {}};
  f.fusion = verlinde_fusion(f.md);
  f.fs = fs_indicators(f.md, f.fusion);
  return f;
}

Family load_su(int N, int k) { return load(FamilySpec{"su", N, k, {}, {}}); }

std::string tag(int N, int k) { return "SU(" + std::to_string(N) + ")_" + std::to_string(k); }

GroupCharacter mu_tilde(int N, const ModularData<double>& md) {
  GroupCharacter chi;
  for (const auto& l : md.labels) chi.values.push_back(su_mu_tilde(N, YoungDiagram::parse(l)));
  return chi;
}

// Calls visit(labels) for every tuple of length <= max_len over n labels.
void for_each_tuple(int n, int max_len, const std::function<void(const std::vector<Label>&)>& visit) {
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Label> ls(len, 0);
    while (true) {
      visit(ls);
      int pos = 0;
      while (pos < len && ++ls[pos] == n) ls[pos++] = 0;
      if (pos == len) break;
    }
  }
}

// 1. Fusion integrality and axioms.
Outcome fusion_integrality() {
  Tally t;
  double worst = 0;
  for (int N = 2; N <= 4; ++N)
    for (int k = 0; k <= 6; ++k) {
      const auto md = su_modular_data(N, k);
      const double defect = fusion_integrality_defect<double>(verlinde_fusion_raw(md));
      worst = std::max(worst, defect);
      t.expect(defect < 1e-6, tag(N, k) + " defect " + std::to_string(defect));
      try {
        const auto fusion = verlinde_fusion(md);
        t.expect(fusion_axiom_violations(fusion, md.dual, md.zero).empty(), tag(N, k) + " axioms");
      } catch (const std::exception& e) {
        t.expect(false, tag(N, k) + ": " + e.what());
      }
    }
  std::ostringstream s;
  s << "21 families, worst defect " << std::scientific << std::setprecision(1) << worst;
  return t.result(s.str());
}

// 2. Sphere axioms on built-ins and the gluing identity on random surfaces.
Outcome sphere_and_gluing() {
  Tally t;
  const auto specs = builtin_families();
  for (const auto& spec : specs) {
    const auto f = load(spec);
    const StateCounter rec(f.fusion, f.md.dual, f.md.zero);
    const VerlindeCounter<double> ver(f.md);
    const int n = f.md.rank();
    for (Label l = 0; l < n; ++l) {
      const std::vector<Label> one{l};
      const std::int64_t want = l == f.md.zero;
      t.expect(rec.component(0, one) == want && ver.component(0, one) == want, f.name + " once-punctured");
      for (Label m = 0; m < n; ++m) {
        const std::vector<Label> two{m, l};
        const std::int64_t want2 = m == f.md.dual[l];
        t.expect(rec.component(0, two) == want2 && ver.component(0, two) == want2, f.name + " twice-punctured");
      }
    }
  }

  std::vector<Family> pool;
  for (auto [N, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 3}}) pool.push_back(load_su(N, k));
  pool.push_back(load(FamilySpec{"lie", 0, 1, "G2", {}}));
  pool.push_back(load(FamilySpec{"lie", 0, 2, "B2", {}}));
  std::mt19937 rng(2718);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int same = 0, distinct = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& f = pool[trial % pool.size()];
    auto label = [&] { return Label(uni(0, f.md.rank() - 1)); };
    Surface s;
    int p = 0, q = 1;
    if (trial % 2 == 0) {
      std::vector<Label> ls(uni(2, 4));
      for (auto& l : ls) l = label();
      s = connected_surface(uni(0, 2), ls);
      p = uni(0, static_cast<int>(ls.size()) - 1);
      do q = uni(0, static_cast<int>(ls.size()) - 1);
      while (q == p);
    } else {
      const int first = uni(1, 3);
      const int second = uni(1, 4 - first);
      std::vector<Label> a(first), b(second);
      for (auto& l : a) l = label();
      for (auto& l : b) l = label();
      s = make_surface({{uni(0, 2), a}, {uni(0, 2), b}});
      p = uni(0, first - 1);
      q = first + uni(0, second - 1);
    }
    const auto r = check_gluing_dimension(f.md, f.fusion, s, p, q);
    t.expect(r.holds, f.name + " gluing trial " + std::to_string(trial) + ": " + std::to_string(r.sum_recursion) +
                          " vs " + std::to_string(r.glued_recursion));
    (s.locate(p).first == s.locate(q).first ? same : distinct) += 1;
  }
  return t.result(std::to_string(specs.size()) + " built-in families, gluing " + std::to_string(same) +
                  " same-component + " + std::to_string(distinct) + " distinct-component");
}

// 3. Recursion and Verlinde agree on every connected surface of genus <= 3
// with <= 5 points. Dimensions do not depend on the order of the labels (both
// evaluators are products of commuting factors, spot-checked below), so label
// multisets cover all tuples; disconnected surfaces are products of these.
struct OracleStats {
  long surfaces = 0;
  long mismatches = 0;
  std::string first;
};

OracleStats oracle_family(int N, int k) {
  constexpr int kMaxGenus = 3, kMaxPoints = 5;
  const auto md = su_modular_data<long double>(N, k);
  const auto fusion = verlinde_fusion(md);
  const StateCounter rec(fusion, md.dual, md.zero);
  const VerlindeCounter<long double> ver(md);
  const int n = md.rank();
  using LVec = ModularData<long double>::Vector;

  std::vector<StateCounter::Vec> closings;
  for (int g = 0; g <= kMaxGenus; ++g) closings.push_back(rec.closing(g));
  // powers[g][p] = S_0r^{2-2g-p}
  std::vector<std::vector<LVec>> powers(kMaxGenus + 1, std::vector<LVec>(kMaxPoints + 1, LVec(n)));
  for (int g = 0; g <= kMaxGenus; ++g)
    for (int p = 0; p <= kMaxPoints; ++p)
      for (int r = 0; r < n; ++r) powers[g][p](r) = VerlindeCounter<long double>::power(md.S(md.zero, r), 2 - 2 * g - p);

  OracleStats st;
  std::vector<Label> ls;
  std::function<void(const StateCounter::Vec&, const LVec&, Label)> walk = [&](const StateCounter::Vec& v,
                                                                              const LVec& w, Label from) {
    const int p = static_cast<int>(ls.size());
    for (int g = 0; g <= kMaxGenus; ++g) {
      const std::int64_t a = rec.close(v, closings[g]);
      const LVec terms = powers[g][p].cwiseProduct(w);
      std::int64_t b = -1;
      try {
        b = ver.round_checked(terms.sum(), terms.cwiseAbs().sum());
      } catch (const NumericalError&) {
      }
      ++st.surfaces;
      if (a != b && st.mismatches++ == 0) {
        st.first = tag(N, k) + " g=" + std::to_string(g) + "[";
        for (Label l : ls) st.first += md.labels[l] + " ";
        st.first += "] " + std::to_string(a) + " vs " + std::to_string(b);
      }
    }
    if (p == kMaxPoints) return;
    for (Label l = from; l < n; ++l) {
      ls.push_back(l);
      walk(rec.absorb(v, l), ver.absorb(w, l), l);
      ls.pop_back();
    }
  };
  walk(rec.start(), ver.start(), 0);
  return st;
}

Outcome oracle_equivalence() {
  Tally t;
  std::vector<std::pair<int, int>> cases;
  for (int N = 2; N <= 4; ++N)
    for (int k = 0; k <= 5; ++k) cases.emplace_back(N, k);
  std::vector<std::future<OracleStats>> jobs;
  for (auto [N, k] : cases) jobs.push_back(std::async(std::launch::async, oracle_family, N, k));
  long total = 0;
  for (auto& j : jobs) {
    const auto st = j.get();
    total += st.surfaces;
    t.expect(st.mismatches == 0, st.first);
  }

  // order independence of both evaluators
  std::mt19937 rng(31);
  for (auto [N, k] : {std::pair{3, 2}, {4, 3}, {2, 5}}) {
    const auto f = load_su(N, k);
    const StateCounter rec(f.fusion, f.md.dual, f.md.zero);
    const VerlindeCounter<double> ver(f.md);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Label> ls(5);
      for (auto& l : ls) l = std::uniform_int_distribution<int>(0, f.md.rank() - 1)(rng);
      const int g = trial % 4;
      const auto want = rec.component(g, ls);
      std::shuffle(ls.begin(), ls.end(), rng);
      t.expect(rec.component(g, ls) == want && ver.component(g, ls) == want, f.name + " order dependence");
    }
  }
  return t.result(std::to_string(total) + " surfaces over " + std::to_string(cases.size()) + " families");
}

// 4. Dual fundamental group.
Outcome dual_groups() {
  Tally t;
  for (int N = 2; N <= 4; ++N)
    for (int k = 1; k <= 5; ++k) {
      const auto f = load_su(N, k);
      const auto pres = dual_group(f.fusion, f.md.dual);
      t.expect(pres.invariant_factors == std::vector<std::int64_t>{N}, tag(N, k) + " invariant factors");
      t.expect(pres.free_rank == 0, tag(N, k) + " free rank");
      t.expect(is_character(pres, mu_tilde(N, f.md)), tag(N, k) + " mu tilde");
    }
  const auto d4 = load(FamilySpec{"lie", 0, 1, "D4", {}});
  t.expect(dual_group(d4.fusion, d4.md.dual).invariant_factors == std::vector<std::int64_t>{2, 2}, "D4_1");
  return t.result("SU(N)_k give [N], D4_1 gives [2,2]");
}

// 5. Frobenius-Schur signs of SU(N)_k.
Outcome fs_signs() {
  Tally t;
  int self_dual = 0;
  for (int N = 2; N <= 4; ++N)
    for (int k = 0; k <= 5; ++k) {
      const auto f = load_su(N, k);
      for (int i = 0; i < f.md.rank(); ++i) {
        if (!f.md.self_dual(i)) {
          t.expect(f.fs[i] == 0, tag(N, k) + " non-self-dual " + f.md.labels[i]);
          continue;
        }
        ++self_dual;
        const int size = YoungDiagram::parse(f.md.labels[i]).size();
        const int want = N == 3 ? 1 : (size % 2 ? -1 : 1);
        t.expect(f.fs[i] == want, tag(N, k) + " " + f.md.labels[i]);
      }
    }
  return t.result(std::to_string(self_dual) + " self-dual labels");
}

// 6. Coupon sign identity.
Outcome coupon() {
  Tally t;
  double worst = 0;
  for (int N = 1; N <= 6; ++N)
    for (int k = 0; k <= 6; ++k)
      for (int m = 0; m <= N; ++m) {
        const double want = (N - 1) * m % 2 ? -1.0 : 1.0;
        const double err = std::abs(coupon_sign(N, k, m) - want);
        worst = std::max(worst, err);
        t.expect(err < 1e-9, "N=" + std::to_string(N) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
      }
  std::ostringstream s;
  s << "worst deviation " << std::scientific << std::setprecision(1) << worst;
  return t.result(s.str());
}

// 7. Canonical scaling.
Outcome canonical_scaling() {
  Tally t;
  for (const auto& spec : builtin_families()) {
    const auto f = load(spec);
    const auto sdd = default_self_duality(f.md, f.fs);
    const auto sp = solve_canonical(f.md, sdd);
    for (int i = 0; i < f.md.rank(); ++i) {
      t.expect(std::abs(sp.u(i) - s_factor(f.md, sp, i) * sp.w(i)) < 1e-12, f.name + " residual " + f.md.labels[i]);
      const auto z = z_of_label(f.md, i);
      const auto d = quantum_dim(f.md, i);
      t.expect(std::abs(z - d / f.md.theta(i)) < 1e-12 && std::abs(std::abs(z) - std::abs(d)) < 1e-12,
               f.name + " z " + f.md.labels[i]);
    }
  }
  std::mt19937 rng(1618);
  std::vector<Family> pool{load_su(2, 3), load_su(4, 2), load_su(2, 4), load_su(3, 2)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& f = pool[trial % pool.size()];
    const auto sdd = default_self_duality(f.md, f.fs);
    const auto sp = solve_canonical(f.md, sdd);
    std::vector<Label> ls(std::uniform_int_distribution<int>(0, 6)(rng));
    for (auto& l : ls) l = std::uniform_int_distribution<int>(0, f.md.rank() - 1)(rng);
    const auto s = connected_surface(trial % 3, ls);
    const int nu = symplectic_multiplicity(s, f.fs);
    t.expect(std::abs(self_duality_scalar(sdd, sp, s, f.md.dual) - std::complex<double>(nu % 2 ? -1 : 1)) < 1e-12,
             f.name + " self-duality scalar");
  }
  return t.result("residuals < 1e-12, 100 random tuples");
}

// 8. Strict scaling.
Outcome strict_scaling() {
  Tally t;
  int families = 0;
  for (const auto& spec : builtin_families()) {
    const auto f = load(spec);
    const auto pres = dual_group(f.fusion, f.md.dual);
    const auto sol = find_fundamental_symplectic_character(pres, f.md.dual, f.fs);
    t.expect(sol.character.has_value(), f.name + " has no fundamental symplectic character");
    if (!sol.character) continue;
    ++families;
    const auto sdd = default_self_duality(f.md, f.fs);
    const auto sp = solve_strict(f.md, sdd, *sol.character);
    const auto r = strict_residuals(f.md, sdd, sp, *sol.character);
    t.expect(r.scaling < 1e-12 && r.character < 1e-12, f.name + " strict residuals");
  }
  long surfaces = 0;
  for (auto [N, k] : {std::pair{2, 3}, {3, 2}}) {
    const auto f = load_su(N, k);
    const auto pres = dual_group(f.fusion, f.md.dual);
    const auto chi = *find_fundamental_symplectic_character(pres, f.md.dual, f.fs).character;
    const auto sdd = default_self_duality(f.md, f.fs);
    const auto sp = solve_strict(f.md, sdd, chi);
    const StateCounter rec(f.fusion, f.md.dual, f.md.zero);
    for (int g = 0; g <= 2; ++g)
      for_each_tuple(f.md.rank(), 4, [&](const std::vector<Label>& ls) {
        const auto s = connected_surface(g, ls);
        if (rec(s) == 0) return;
        ++surfaces;
        t.expect(std::abs(self_duality_scalar(sdd, sp, s, f.md.dual) - 1.0) < 1e-12, f.name + " self-duality scalar");
        t.expect(std::abs(unitary_rho(f.md, sdd, sp, s) - 1.0) < 1e-12, f.name + " unitarity factor");
      });
  }
  return t.result(std::to_string(families) + " families, " + std::to_string(surfaces) +
                  " surfaces with nonzero state space");
}

// 9. Vanishing corollary.
Outcome vanishing() {
  Tally t;
  const auto f = load_su(3, 2);
  const auto chi = mu_tilde(3, f.md);
  long nontrivial = 0, total = 0;
  for_each_tuple(f.md.rank(), 4, [&](const std::vector<Label>& ls) {
    const auto r = vanishing_check(f.md, f.fusion, chi, connected_surface(0, ls));
    ++total;
    nontrivial += !r.character_sum.is_zero();
    t.expect(r.holds, "exception");
  });
  return t.result(std::to_string(total) + " surfaces, " + std::to_string(nontrivial) + " with nontrivial character");
}

// 10. Quasi-isomorphism scalars.
Outcome quasi_iso() {
  Tally t;
  const auto md = su_modular_data(3, 1);
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> mag(0.05, 20.0), arg(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    ModularData<double>::Vector f(md.rank());
    for (int i = 0; i < md.rank(); ++i) f(i) = std::polar(mag(rng), arg(rng));
    const auto q = quasi_iso_gamma(md, f);
    for (int i = 0; i < md.rank(); ++i) {
      const Label s = md.dual[i];
      t.expect(std::abs(q.gamma(i) * q.gamma(s) - 1.0) < 1e-12, "gamma gamma*");
      t.expect(q.gamma(i) == 1.0 / (q.alpha(i) * q.alpha(s) * f(i)), "gamma formula");
    }
  }
  return t.result("100 random maps");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"fusion integrality and axioms", fusion_integrality},
      {"sphere axioms and gluing", sphere_and_gluing},
      {"oracle equivalence", oracle_equivalence},
      {"dual fundamental group", dual_groups},
      {"Frobenius-Schur signs", fs_signs},
      {"coupon sign", coupon},
      {"canonical scaling", canonical_scaling},
      {"strict scaling", strict_scaling},
      {"vanishing corollary", vanishing},
      {"quasi-isomorphism scalars", quasi_iso},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::printf("criterion %zu: %s  %s (%s) [%.1fs]\n", c + 1, o.ok ? "PASS" : "FAIL", criteria[c].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
