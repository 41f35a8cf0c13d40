#include "mtc/io.hpp"

#include "mtc/lie.hpp"
#include "mtc/quantum_group.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace mtc {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
  throw LoadError(LoadError::Kind::structure, {field}, "field '" + field + "': " + msg);
}

std::complex<double> complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    field_error(field, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) field_error(key, "missing");
  return j.at(key);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// split on sep outside parentheses and brackets
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

}  // namespace

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json modular_data_to_json(const ModularData<double>& md, const json& metadata) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["labels"] = md.labels;
  j["zero"] = md.labels[md.zero];
  json dual = json::object(), theta = json::object();
  for (int i = 0; i < md.rank(); ++i) {
    dual[md.labels[i]] = md.labels[md.dual[i]];
    theta[md.labels[i]] = complex_to_json(md.theta(i));
  }
  j["dual"] = dual;
  json S = json::array();
  for (int a = 0; a < md.rank(); ++a) {
    json row = json::array();
    for (int b = 0; b < md.rank(); ++b) row.push_back(complex_to_json(md.S(a, b)));
    S.push_back(row);
  }
  j["S"] = S;
  j["theta"] = theta;
  if (!metadata.empty()) j["metadata"] = metadata;
  return j;
}

ModularData<double> modular_data_from_json(const json& j) {
  if (!j.is_object()) field_error("$", "expected an object");
  const json& version = require(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
    field_error("schema_version", std::string("expected \"") + kSchemaVersion + "\"");

  ModularData<double> md;
  const json& labels = require(j, "labels");
  if (!labels.is_array() || labels.empty()) field_error("labels", "expected a nonempty list of strings");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) field_error("labels[" + std::to_string(i) + "]", "expected a string");
    md.labels.push_back(labels[i].get<std::string>());
    if (!index.emplace(md.labels.back(), static_cast<int>(i)).second)
      field_error("labels[" + std::to_string(i) + "]", "duplicate label '" + md.labels.back() + "'");
  }
  const int n = md.rank();
  auto label_index = [&](const json& v, const std::string& field) {
    if (!v.is_string()) field_error(field, "expected a label string");
    const auto it = index.find(v.get<std::string>());
    if (it == index.end()) field_error(field, "unknown label '" + v.get<std::string>() + "'");
    return it->second;
  };

  md.zero = label_index(require(j, "zero"), "zero");

  const json& dual = require(j, "dual");
  if (!dual.is_object()) field_error("dual", "expected an object");
  md.dual.assign(n, -1);
  for (const auto& [key, v] : dual.items()) {
    const auto it = index.find(key);
    if (it == index.end()) field_error("dual." + key, "unknown label");
    md.dual[it->second] = label_index(v, "dual." + key);
  }
  for (int i = 0; i < n; ++i)
    if (md.dual[i] < 0) field_error("dual." + md.labels[i], "missing");

  const json& S = require(j, "S");
  if (!S.is_array() || static_cast<int>(S.size()) != n)
    field_error("S", "expected " + std::to_string(n) + " rows, got " + std::to_string(S.is_array() ? S.size() : 0));
  md.S.resize(n, n);
  for (int a = 0; a < n; ++a) {
    const std::string row = "S[" + std::to_string(a) + "]";
    if (!S[a].is_array() || static_cast<int>(S[a].size()) != n)
      field_error(row, "expected " + std::to_string(n) + " entries");
    for (int b = 0; b < n; ++b) md.S(a, b) = complex_from_json(S[a][b], row + "[" + std::to_string(b) + "]");
  }

  const json& theta = require(j, "theta");
  if (!theta.is_object()) field_error("theta", "expected an object");
  md.theta.resize(n);
  std::vector<bool> seen(n, false);
  for (const auto& [key, v] : theta.items()) {
    const auto it = index.find(key);
    if (it == index.end()) field_error("theta." + key, "unknown label");
    md.theta(it->second) = complex_from_json(v, "theta." + key);
    seen[it->second] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) field_error("theta." + md.labels[i], "missing");

  if (const auto t = tolerance_override()) md.tol = *t;

  ValidationReport report;
  try {
    report = validate_modular_data(md);
  } catch (const StructuralError& e) {
    if (e.code() == "dual-involution" || e.code() == "dual-unit")
      throw LoadError(LoadError::Kind::validation, {e.code()}, std::string("validation failed: ") + e.what());
    throw LoadError(LoadError::Kind::structure, {e.code()}, e.what());
  }
  if (!report.empty()) {
    std::vector<std::string> codes;
    std::string msg = "validation failed:";
    for (const auto& v : report) {
      codes.push_back(v.code);
      msg += " " + v.code + " (" + v.detail + ")";
    }
    throw LoadError(LoadError::Kind::validation, std::move(codes), msg);
  }
  return md;
}

ModularData<double> parse_modular_data(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw LoadError(LoadError::Kind::parse, {"line " + std::to_string(line)},
                    "JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                        e.what());
  }
  return modular_data_from_json(j);
}

ModularData<double> load_modular_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(LoadError::Kind::parse, {path}, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_modular_data(buf.str());
}

Surface parse_surface(std::string_view literal, const ModularData<double>& md) {
  Surface s;
  const std::string body = trim(literal);
  if (body.empty()) return s;
  int id = 0;
  for (const auto& part : split_top(body, '+')) {
    if (part.rfind("g=", 0) != 0) throw std::invalid_argument("surface component must start with 'g=': '" + part + "'");
    const auto open = part.find('[');
    if (open == std::string::npos || part.back() != ']')
      throw std::invalid_argument("surface component needs a [label,...] list: '" + part + "'");
    Component c;
    c.genus = parse_int(trim(std::string_view(part).substr(2, open - 2)), "genus");
    if (c.genus < 0) throw std::invalid_argument("negative genus in '" + part + "'");
    const std::string inner = trim(std::string_view(part).substr(open + 1, part.size() - open - 2));
    if (!inner.empty())
      for (const auto& l : split_top(inner, ',')) c.points.push_back({id++, md.find(l)});
    s.components.push_back(std::move(c));
  }
  return s;
}

std::string format_surface(const Surface& a, const ModularData<double>& md) {
  std::string out;
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    if (c) out += " + ";
    out += "g=" + std::to_string(a.components[c].genus) + "[";
    for (std::size_t k = 0; k < a.components[c].points.size(); ++k) {
      if (k) out += ',';
      out += md.labels[a.components[c].points[k].label];
    }
    out += "]";
  }
  return out;
}

std::optional<double> tolerance_override() {
  const char* env = std::getenv("MF_TOL");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end || !(v > 0)) throw std::invalid_argument(std::string("MF_TOL must be a positive number, got '") + env + "'");
  return v;
}

std::string FamilySpec::name() const {
  if (kind == "su") return "SU(" + std::to_string(N) + ")_" + std::to_string(k);
  if (kind == "lie") return lie_type + "_" + std::to_string(k);
  if (kind == "file") return path;
  return "trivial";
}

json FamilySpec::metadata() const {
  json m;
  m["family"] = kind;
  if (kind == "su") {
    m["N"] = N;
    m["k"] = k;
  } else if (kind == "lie") {
    m["type"] = lie_type;
    m["k"] = k;
  }
  return m;
}

FamilySpec parse_family(const std::vector<std::string>& args) {
  if (args.empty()) throw std::invalid_argument("missing family (su N k | lie <Type><rank> k | file <path> | trivial)");
  FamilySpec f;
  f.kind = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("family '" + f.kind + "' takes " + std::to_string(n - 1) + " argument(s)");
  };
  if (f.kind == "su") {
    need(3);
    f.N = parse_int(args[1], "N");
    f.k = parse_int(args[2], "k");
  } else if (f.kind == "lie") {
    need(3);
    f.lie_type = args[1];
    f.k = parse_int(args[2], "k");
  } else if (f.kind == "file") {
    need(2);
    f.path = args[1];
  } else if (f.kind == "trivial") {
    need(1);
  } else {
    throw std::invalid_argument("unknown family '" + f.kind + "'");
  }
  return f;
}

ModularData<double> build_family(const FamilySpec& f) {
  ModularData<double> md;
  if (f.kind == "su")
    md = su_modular_data(f.N, f.k);
  else if (f.kind == "lie")
    md = simple_lie_modular_data(make_lie_data(f.lie_type, f.k));
  else if (f.kind == "file")
    return load_modular_data(f.path);
  else
    md = trivial_modular_data();
  if (const auto t = tolerance_override()) md.tol = *t;
  return md;
}

}  // namespace mtc
