#include "mtc/cli.hpp"

#include "mtc/characters.hpp"
#include "mtc/lie.hpp"
#include "mtc/quantum_group.hpp"
#include "mtc/scaling.hpp"
#include "mtc/state_dim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace mtc {

using nlohmann::json;

namespace {

constexpr double kScalingTol = 1e-12;
constexpr double kPhaseTol = 1e-9;

// Bad family parameters or flag values; reported as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Analysis {
  FamilySpec spec;
  ModularData<double> md;
  FusionTensor fusion;
  std::vector<int> fs;

  const std::string& label(Label i) const { return md.labels[i]; }
};

Analysis analyze(const std::vector<std::string>& family_args) {
  Analysis a;
  try {
    a.spec = parse_family(family_args);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    a.md = build_family(a.spec);
  } catch (const LoadError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  a.fusion = verlinde_fusion(a.md);
  a.fs = fs_indicators(a.md, a.fusion);
  return a;
}

std::string fmt(double x, int precision = 12) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -precision)) x = 0;
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << x;
  return s.str();
}

std::string fmt(std::complex<double> z, int precision = 12) {
  const double eps = 0.5 * std::pow(10.0, -precision);
  if (std::abs(z.imag()) < eps) return fmt(z.real(), precision);
  if (std::abs(z.real()) < eps) return fmt(z.imag(), precision) + "i";
  return fmt(z.real(), precision) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag()), precision) + "i";
}

// Left-aligned text table.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

json label_map(const ModularData<double>& md, const std::function<json(Label)>& value) {
  json m = json::object();
  for (int i = 0; i < md.rank(); ++i) m[md.labels[i]] = value(i);
  return m;
}

json character_json(const ModularData<double>& md, const GroupCharacter& chi) {
  return label_map(md, [&](Label i) { return chi.values[i].str(); });
}

json family_header(const Analysis& a, const std::string& command) {
  json j;
  j["command"] = command;
  j["family"] = a.spec.name();
  j["metadata"] = a.spec.metadata();
  return j;
}

// ---- info ----------------------------------------------------------------

int cmd_info(const Analysis& a, bool as_json, std::ostream& out) {
  const auto& md = a.md;
  const auto dims = quantum_dims(md);
  const auto D = global_D(md);
  const auto delta = gauss_sum_delta(md);
  json j = family_header(a, "info");
  j["labels"] = md.labels;
  j["zero"] = md.labels[md.zero];
  j["dual"] = label_map(md, [&](Label i) { return md.labels[md.dual[i]]; });
  j["dims"] = label_map(md, [&](Label i) { return complex_to_json(dims(i)); });
  j["theta"] = label_map(md, [&](Label i) { return complex_to_json(md.theta(i)); });
  j["fs_indicators"] = label_map(md, [&](Label i) { return a.fs[i]; });
  j["D"] = complex_to_json(D);
  j["Delta"] = complex_to_json(delta);
  if (as_json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << a.spec.name() << ": " << md.rank() << " labels\n";
  std::vector<std::vector<std::string>> rows{{"label", "dual", "dim", "theta", "FS"}};
  for (int i = 0; i < md.rank(); ++i)
    rows.push_back({md.labels[i], md.labels[md.dual[i]], fmt(dims(i)), fmt(md.theta(i)), std::to_string(a.fs[i])});
  print_table(out, rows);
  out << "D = " << fmt(D) << '\n' << "Delta = " << fmt(delta) << '\n';
  return 0;
}

// ---- dims ----------------------------------------------------------------

int cmd_dims(const Analysis& a, const std::string& literal, bool as_json, std::ostream& out) {
  Surface s;
  try {
    s = parse_surface(literal, a.md);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --surface: ") + e.what());
  }
  const std::int64_t rec = state_dim(a.md, a.fusion, s);
  const std::int64_t ver = state_dim_verlinde(a.md, s);
  json j = family_header(a, "dims");
  j["surface"] = format_surface(s, a.md);
  j["recursion"] = rec;
  j["verlinde"] = ver;
  j["agree"] = rec == ver;
  if (as_json) {
    out << j.dump(2) << '\n';
  } else {
    out << "surface   " << format_surface(s, a.md) << '\n'
        << "recursion " << rec << '\n'
        << "verlinde  " << ver << '\n';
  }
  return rec == ver ? 0 : 1;
}

// ---- characters ----------------------------------------------------------

int cmd_characters(const Analysis& a, bool as_json, std::ostream& out) {
  const auto& md = a.md;
  const auto pres = dual_group(a.fusion, md.dual);
  const auto gens = generator_characters(pres);
  const auto sol = find_fundamental_symplectic_character(pres, md.dual, a.fs);
  json j = family_header(a, "characters");
  j["invariant_factors"] = pres.invariant_factors;
  j["free_rank"] = pres.free_rank;
  j["label_image"] = label_map(md, [&](Label i) {
    return std::vector<std::int64_t>(pres.label_image[i].data(), pres.label_image[i].data() + pres.label_image[i].size());
  });
  json gj = json::array();
  for (const auto& g : gens) gj.push_back(character_json(md, g));
  j["generator_characters"] = gj;
  j["torsion_only"] = sol.torsion_only;
  if (sol.character) j["fundamental_symplectic_character"] = character_json(md, *sol.character);
  if (sol.certificate) {
    json c;
    c["coefficients"] = label_map(md, [&](Label i) { return sol.certificate->coefficients[i]; });
    c["target_sum"] = sol.certificate->target_sum.str();
    j["certificate"] = c;
  }
  if (as_json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << a.spec.name() << '\n' << "invariant factors [";
  for (std::size_t t = 0; t < pres.invariant_factors.size(); ++t) out << (t ? "," : "") << pres.invariant_factors[t];
  out << "]";
  if (pres.free_rank) out << " plus free rank " << pres.free_rank << " (ignored)";
  out << '\n';
  std::vector<std::vector<std::string>> rows{{"label", "FS"}};
  for (std::size_t g = 0; g < gens.size(); ++g) rows[0].push_back("gen" + std::to_string(g + 1));
  rows[0].push_back("symplectic");
  for (int i = 0; i < md.rank(); ++i) {
    std::vector<std::string> r{md.labels[i], std::to_string(a.fs[i])};
    for (const auto& g : gens) r.push_back(g.values[i].str());
    r.push_back(sol.character ? sol.character->values[i].str() : "-");
    rows.push_back(r);
  }
  print_table(out, rows);
  if (sol.character)
    out << "fundamental symplectic character: present\n";
  else {
    out << "fundamental symplectic character: none\ncertificate:";
    for (int i = 0; i < md.rank(); ++i)
      if (sol.certificate->coefficients[i]) out << ' ' << sol.certificate->coefficients[i] << '*' << md.labels[i];
    out << " is 0 in the group, target sum " << sol.certificate->target_sum.str() << '\n';
  }
  return 0;
}

// ---- scaling -------------------------------------------------------------

// Deterministic sample of surfaces with up to two components, genus <= 2
// each and at most four marked points overall.
std::vector<Surface> sample_surfaces(int rank, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> genus(0, 2), label(0, rank - 1), npts(0, 4), ncomp(1, 2);
  std::vector<Surface> out;
  while (static_cast<int>(out.size()) < count) {
    const int comps = ncomp(rng);
    int points = npts(rng);
    std::vector<std::pair<int, std::vector<Label>>> spec;
    for (int c = 0; c < comps; ++c) {
      const int here = c + 1 == comps ? points : std::uniform_int_distribution<int>(0, points)(rng);
      points -= here;
      std::vector<Label> ls;
      for (int t = 0; t < here; ++t) ls.push_back(label(rng));
      spec.emplace_back(genus(rng), ls);
    }
    out.push_back(make_surface(spec));
  }
  return out;
}

int cmd_scaling(const Analysis& a, const std::string& mode, bool as_json, std::ostream& out, std::ostream& err) {
  const auto& md = a.md;
  const auto sdd = default_self_duality(md, a.fs);
  json j = family_header(a, "scaling");
  j["mode"] = mode;
  ScalingPair<double> sp;
  std::optional<GroupCharacter> chi;
  if (mode == "canonical") {
    sp = solve_canonical(md, sdd);
    j["residual"] = canonical_residual(md, sp);
  } else {
    const auto pres = dual_group(a.fusion, md.dual);
    const auto sol = find_fundamental_symplectic_character(pres, md.dual, a.fs);
    if (!sol.character) {
      err << "error: " << a.spec.name() << " has no fundamental symplectic character; strict scaling does not exist\n";
      return 1;
    }
    chi = sol.character;
    sp = solve_strict(md, sdd, *chi);
    const auto r = strict_residuals(md, sdd, sp, *chi);
    j["residual"] = r.scaling;
    j["character_residual"] = r.character;
    j["character"] = character_json(md, *chi);
  }
  j["u"] = label_map(md, [&](Label i) { return complex_to_json(sp.u(i)); });
  j["w"] = label_map(md, [&](Label i) { return complex_to_json(sp.w(i)); });
  j["gluing_coefficient"] = label_map(
      md, [&](Label i) { return complex_to_json(gluing_coefficient(md, sp, i, GluingKind::distinct_components)); });

  // spot checks of the self-duality scalar on sample surfaces
  const StateCounter rec(a.fusion, md.dual, md.zero);
  json checks = json::array();
  bool ok = true;
  for (const auto& s : sample_surfaces(md.rank(), 8, 7)) {
    const auto scalar = self_duality_scalar(sdd, sp, s, md.dual);
    const std::int64_t dim = rec(s);
    const int nu = symplectic_multiplicity(s, a.fs);
    json c;
    c["surface"] = format_surface(s, md);
    c["state_dim"] = dim;
    c["self_duality_scalar"] = complex_to_json(scalar);
    bool good;
    if (mode == "canonical") {
      c["expected"] = nu % 2 ? -1 : 1;
      good = std::abs(scalar - std::complex<double>(nu % 2 ? -1 : 1)) < kPhaseTol;
    } else {
      c["expected"] = dim > 0 ? json(1) : json(nullptr);
      good = dim == 0 || std::abs(scalar - 1.0) < kPhaseTol;
    }
    c["ok"] = good;
    ok = ok && good;
    checks.push_back(c);
  }
  j["spot_checks"] = checks;
  const double residual = j["residual"].get<double>();
  ok = ok && residual < kScalingTol && (!j.contains("character_residual") || j["character_residual"].get<double>() < kScalingTol);
  j["ok"] = ok;

  if (as_json) {
    out << j.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  out << a.spec.name() << " " << mode << " scaling\n";
  std::vector<std::vector<std::string>> rows{{"label", "u", "w", "gluing coefficient"}};
  for (int i = 0; i < md.rank(); ++i)
    rows.push_back({md.labels[i], fmt(sp.u(i)), fmt(sp.w(i)),
                    fmt(gluing_coefficient(md, sp, i, GluingKind::distinct_components))});
  print_table(out, rows);
  out << "residual " << std::scientific << std::setprecision(3) << residual << '\n';
  if (j.contains("character_residual")) out << "character residual " << j["character_residual"].get<double>() << '\n';
  out << std::defaultfloat;
  rows = {{"surface", "dim", "scalar", "expected", "ok"}};
  for (const auto& c : checks)
    rows.push_back({c["surface"].get<std::string>(), std::to_string(c["state_dim"].get<std::int64_t>()),
                    fmt(std::complex<double>(c["self_duality_scalar"][0], c["self_duality_scalar"][1]), 6),
                    c["expected"].is_null() ? "any" : std::to_string(c["expected"].get<int>()),
                    c["ok"].get<bool>() ? "yes" : "NO"});
  print_table(out, rows);
  return ok ? 0 : 1;
}

// ---- verify --------------------------------------------------------------

class Suite {
 public:
  void check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, CheckStatus::pass, {}};
    try {
      r.detail = body();
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  void skip(const std::string& name, const std::string& why) { results.push_back({name, CheckStatus::skip, why}); }
  std::vector<CheckResult> results;
};

[[noreturn]] void fail(const std::string& why) { throw std::runtime_error(why); }

std::string label_list(const ModularData<double>& md, std::span<const Label> ls) {
  std::string s;
  for (Label l : ls) s += (s.empty() ? "" : ",") + md.labels[l];
  return "[" + s + "]";
}

void run_suite(Suite& suite, const FamilySpec& spec) {
  ModularData<double> md;
  suite.check("load", [&] {
    md = build_family(spec);
    return std::to_string(md.rank()) + " labels";
  });
  if (suite.results.back().status == CheckStatus::fail) return;

  suite.check("validate", [&] {
    const auto report = validate_modular_data(md);
    if (!report.empty()) {
      std::string codes;
      for (const auto& v : report) codes += " " + v.code;
      fail("violations:" + codes);
    }
    return std::string();
  });
  suite.check("gauss-sums", [&] {
    const auto D = global_D(md);
    const auto prod = gauss_sum_delta(md, TwistConvention::inverse) * gauss_sum_delta(md, TwistConvention::direct);
    const double defect = std::abs(prod - D * D) / std::abs(D * D);
    if (defect > 1e-9) fail("Delta Delta' != D^2, relative defect " + std::to_string(defect));
    return "D = " + fmt(D, 9);
  });

  FusionTensor N;
  suite.check("fusion-integrality", [&] {
    const double defect = fusion_integrality_defect<double>(verlinde_fusion_raw(md));
    N = verlinde_fusion(md);
    std::ostringstream s;
    s << "defect " << std::scientific << std::setprecision(2) << defect;
    return s.str();
  });
  if (suite.results.back().status == CheckStatus::fail) return;
  suite.check("fusion-axioms", [&] {
    const auto v = fusion_axiom_violations(N, md.dual, md.zero);
    if (!v.empty()) fail(v.front());
    return std::string();
  });

  std::vector<int> fs;
  suite.check("fs-indicators", [&] {
    fs = fs_indicators(md, N);
    if (fs[md.zero] != 1) fail("indicator of the unit is not 1");
    const auto symplectic = std::count(fs.begin(), fs.end(), -1);
    return std::to_string(symplectic) + " symplectic";
  });
  if (suite.results.back().status == CheckStatus::fail) return;

  const StateCounter rec(N, md.dual, md.zero);
  const VerlindeCounter<double> ver(md);
  const int n = md.rank();

  suite.check("sphere-axioms", [&] {
    for (Label l = 0; l < n; ++l) {
      const std::int64_t want = l == md.zero;
      const std::vector<Label> one{l};
      if (rec.component(0, one) != want || ver.component(0, one) != want)
        fail("once-punctured sphere " + md.labels[l]);
      for (Label m = 0; m < n; ++m) {
        const std::int64_t want2 = m == md.dual[l];
        const std::vector<Label> two{m, l};
        if (rec.component(0, two) != want2 || ver.component(0, two) != want2)
          fail("twice-punctured sphere " + label_list(md, two));
      }
    }
    return std::string();
  });

  suite.check("oracle-equivalence", [&] {
    // all connected surfaces of genus <= 2 with at most 3 points (label multisets)
    constexpr int kMaxGenus = 2, kMaxPoints = 3;
    std::vector<StateCounter::Vec> closings;
    for (int g = 0; g <= kMaxGenus; ++g) closings.push_back(rec.closing(g));
    long count = 0;
    std::vector<Label> ls;
    std::function<void(const StateCounter::Vec&, const VerlindeCounter<double>::Vector&, Label)> walk =
        [&](const StateCounter::Vec& v, const VerlindeCounter<double>::Vector& w, Label from) {
          for (int g = 0; g <= kMaxGenus; ++g) {
            const auto a = rec.close(v, closings[g]);
            const auto b = ver.close(w, g, static_cast<int>(ls.size()));
            if (a != b)
              fail("g=" + std::to_string(g) + label_list(md, ls) + ": " + std::to_string(a) + " vs " + std::to_string(b));
            ++count;
          }
          if (static_cast<int>(ls.size()) == kMaxPoints) return;
          for (Label l = from; l < n; ++l) {
            ls.push_back(l);
            walk(rec.absorb(v, l), ver.absorb(w, l), l);
            ls.pop_back();
          }
        };
    walk(rec.start(), ver.start(), 0);
    return std::to_string(count) + " surfaces";
  });

  const auto samples = sample_surfaces(n, 60, 20240601);
  suite.check("gluing", [&] {
    int same = 0, distinct = 0;
    for (const auto& s : samples) {
      std::vector<int> ids;
      for (const auto& c : s.components)
        for (const auto& p : c.points) ids.push_back(p.id);
      if (ids.size() < 2) continue;
      for (std::size_t x = 0; x < ids.size(); ++x)
        for (std::size_t y = x + 1; y < ids.size(); ++y) {
          const auto r = check_gluing_dimension(md, N, s, ids[x], ids[y]);
          if (!r.holds)
            fail(format_surface(s, md) + " slots " + std::to_string(ids[x]) + "," + std::to_string(ids[y]) + ": " +
                 std::to_string(r.sum_recursion) + " vs " + std::to_string(r.glued_recursion));
          (s.locate(ids[x]).first == s.locate(ids[y]).first ? same : distinct) += 1;
        }
    }
    return std::to_string(same) + " same-component, " + std::to_string(distinct) + " distinct-component";
  });

  DualGroupPresentation pres;
  suite.check("dual-group", [&] {
    pres = dual_group(N, md.dual);
    if (pres.free_rank != 0) fail("free part of rank " + std::to_string(pres.free_rank));
    if (!pres.label_image[md.zero].isZero()) fail("unit label maps to a nonzero class");
    for (const auto& g : generator_characters(pres))
      if (!is_character(pres, g)) fail("generator character violates a relation");
    std::string f;
    for (auto d : pres.invariant_factors) f += (f.empty() ? "" : ",") + std::to_string(d);
    return "[" + f + "]";
  });
  if (suite.results.back().status == CheckStatus::fail) return;

  suite.check("vanishing", [&] {
    auto chars = generator_characters(pres);
    long tested = 0;
    for (const auto& chi : chars)
      for (const auto& s : samples) {
        if (!vanishing_check(chi, s, rec(s)).holds) fail(format_surface(s, md));
        ++tested;
      }
    return std::to_string(tested) + " pairs";
  });

  std::optional<GroupCharacter> fsc;
  suite.check("symplectic-character", [&] {
    const auto sol = find_fundamental_symplectic_character(pres, md.dual, fs);
    if (sol.character) {
      fsc = sol.character;
      return std::string("present");
    }
    if (spec.kind == "file") return std::string("absent (certificate found)");
    fail("absent: certificate target sum " + sol.certificate->target_sum.str());
  });

  const auto sdd = default_self_duality(md, fs);
  suite.check("canonical-scaling", [&] {
    const auto sp = solve_canonical(md, sdd);
    const double r = canonical_residual(md, sp);
    if (!(r < kScalingTol)) fail("residual " + std::to_string(r));
    for (const auto& s : samples) {
      const int nu = symplectic_multiplicity(s, fs);
      if (std::abs(self_duality_scalar(sdd, sp, s, md.dual) - std::complex<double>(nu % 2 ? -1 : 1)) > kPhaseTol)
        fail("self-duality scalar on " + format_surface(s, md));
    }
    for (Label i = 0; i < n; ++i) {
      const auto c = gluing_coefficient(md, sp, i, GluingKind::same_component);
      if (std::abs(c * quantum_dim(md, i) - 1.0) > 1e-9) fail("gluing coefficient of " + md.labels[i]);
    }
    std::ostringstream s;
    s << "residual " << std::scientific << std::setprecision(2) << r;
    return s.str();
  });

  if (!fsc) {
    suite.skip("strict-scaling", "no fundamental symplectic character");
  } else {
    suite.check("strict-scaling", [&] {
      const auto sp = solve_strict(md, sdd, *fsc);
      const auto r = strict_residuals(md, sdd, sp, *fsc);
      if (!(r.scaling < kScalingTol) || !(r.character < kScalingTol))
        fail("residuals " + std::to_string(r.scaling) + ", " + std::to_string(r.character));
      const auto dims = quantum_dims(md);
      const bool positive = (dims.array().real() > 0).all() && (dims.array().imag().abs() < 1e-12).all();
      int nonzero = 0;
      for (const auto& s : samples) {
        if (rec(s) == 0) continue;
        ++nonzero;
        if (std::abs(self_duality_scalar(sdd, sp, s, md.dual) - 1.0) > kPhaseTol)
          fail("self-duality scalar != 1 on " + format_surface(s, md));
        if (positive && std::abs(unitary_rho(md, sdd, sp, s) - 1.0) > kPhaseTol)
          fail("unitarity factor != 1 on " + format_surface(s, md));
      }
      return std::to_string(nonzero) + " surfaces with nonzero state space";
    });
  }

  suite.check("quasi-isomorphism", [&] {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> mag(0.2, 5.0), arg(-3.14159, 3.14159);
    for (int t = 0; t < 10; ++t) {
      ModularData<double>::Vector f(n);
      for (int i = 0; i < n; ++i) f(i) = std::polar(mag(rng), arg(rng));
      const auto q = quasi_iso_gamma(md, f);
      for (int i = 0; i < n; ++i)
        if (std::abs(q.gamma(i) * q.gamma(md.dual[i]) - 1.0) > 1e-12) fail("gamma gamma* != 1 at " + md.labels[i]);
    }
    return std::string();
  });
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

json report_json(const FamilyReport& r) {
  json j;
  j["family"] = r.family;
  j["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_word(c.status)}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

void print_report(std::ostream& out, const FamilyReport& r) {
  out << r.family << '\n';
  for (const auto& c : r.checks) {
    out << "  " << status_word(c.status) << "  " << c.name;
    if (!c.detail.empty()) out << std::string(c.name.size() < 22 ? 22 - c.name.size() : 1, ' ') << c.detail;
    out << '\n';
  }
}

int cmd_verify(const std::vector<std::string>& family_args, bool as_json, std::ostream& out) {
  std::vector<FamilySpec> specs;
  if (family_args.size() == 1 && family_args[0] == "builtins") {
    specs = builtin_families();
  } else {
    try {
      specs.push_back(parse_family(family_args));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<std::future<FamilyReport>> jobs;
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, verify_family, s));
  std::vector<FamilyReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.ok(); });
  if (as_json) {
    json j;
    j["command"] = "verify";
    j["ok"] = failed == 0;
    j["families"] = json::array();
    for (const auto& r : reports) j["families"].push_back(report_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(out, r);
    out << reports.size() << " families, " << failed << " failed\n";
  }
  return failed ? 1 : 0;
}

// ---- export --------------------------------------------------------------

int cmd_export(const Analysis& a, std::ostream& out) {
  out << modular_data_to_json(a.md, a.spec.metadata()).dump(2) << '\n';
  return 0;
}

}  // namespace

bool FamilyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
}

std::vector<FamilySpec> builtin_families() {
  std::vector<FamilySpec> out;
  for (int N = 2; N <= 4; ++N)
    for (int k = 0; k <= 5; ++k) out.push_back(FamilySpec{"su", N, k, {}, {}});
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"})
    for (int k = 0; k <= 2; ++k) out.push_back(FamilySpec{"lie", 0, k, t, {}});
  return out;
}

FamilyReport verify_family(const FamilySpec& spec) {
  FamilyReport r;
  r.family = spec.name();
  Suite suite;
  try {
    run_suite(suite, spec);
  } catch (const std::exception& e) {
    suite.results.push_back({"internal", CheckStatus::fail, e.what()});
  }
  r.checks = std::move(suite.results);
  return r;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular functor invariants of modular tensor categories", "mfctl"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::vector<std::string> family;
  std::string surface, mode = "canonical";
  const char* family_help = "su <N> <k> | lie <Type><rank> <k> | file <path> | trivial";
  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("family", family, family_help)->required();
    sub->add_flag("--json", as_json, "Machine-readable JSON output");
    return sub;
  };
  auto* info = add("info", "Labels, dimensions, D, Delta, twists and Frobenius-Schur indicators");
  auto* dims = add("dims", "State space dimension of a surface by recursion and by the Verlinde formula");
  dims->add_option("--surface", surface, "Surface literal, e.g. \"g=1[(1),(1)] + g=0[]\"")->required();
  auto* chars = add("characters", "Dual group, its generator characters and the fundamental symplectic character");
  auto* scaling = add("scaling", "Canonical or strict scaling pair with residuals and spot checks");
  scaling->add_option("--mode", mode, "canonical or strict")->check(CLI::IsMember({"canonical", "strict"}));
  auto* verify = add("verify", "Invariant suite; 'builtins' runs every built-in family");
  auto* exp = add("export", "Modular data file on stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (e.get_exit_code() != 0) err << app.help();
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(family, as_json, out);
    const Analysis a = analyze(family);
    if (info->parsed()) return cmd_info(a, as_json, out);
    if (dims->parsed()) return cmd_dims(a, surface, as_json, out);
    if (chars->parsed()) return cmd_characters(a, as_json, out);
    if (scaling->parsed()) return cmd_scaling(a, mode, as_json, out, err);
    if (exp->parsed()) return cmd_export(a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace mtc
