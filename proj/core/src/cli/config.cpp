#include "faithcert/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "faithcert/linalg/scalar.hpp"
#include "faithcert/lie/lie_algebra.hpp"
#include "faithcert/lie/uea.hpp"

namespace faithcert::cli {

Suite suite_from_string(std::string_view text) {
  if (text == "env") return Suite::env;
  if (text == "rees") return Suite::rees;
  if (text == "sklyanin") return Suite::sklyanin;
  if (text == "all") return Suite::all;
  throw ConfigError("unknown suite '" + std::string(text) + "' (expected env, rees, sklyanin or all)");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::env: return "env";
    case Suite::rees: return "rees";
    case Suite::sklyanin: return "sklyanin";
    case Suite::all: return "all";
  }
  return "all";
}

std::uint32_t Caps::shifts(std::size_t lie_dim) const {
  if (N) return *N;
  return static_cast<std::uint32_t>(lie::filtration_dim(lie_dim, env_d()));
}

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void error(const YAML::Node& node, const std::string& field, const std::string& message) const {
    std::ostringstream out;
    out << source_;
    if (node.IsDefined() && !node.Mark().is_null()) out << ':' << node.Mark().line + 1 << ':' << node.Mark().column + 1;
    out << ": field '" << field << "': " << message;
    throw ConfigError(out.str());
  }

  void expect_map(const YAML::Node& node, const std::string& field, std::set<std::string> allowed) const {
    if (!node.IsMap()) error(node, field, "expected a mapping");
    for (const auto& entry : node) {
      const auto key = entry.first.as<std::string>();
      if (!allowed.contains(key)) error(entry.first, field.empty() ? key : field + "." + key, "unknown key");
    }
  }

  std::string scalar(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) error(node, field, "expected a scalar");
    return node.Scalar();
  }

  std::uint32_t positive(const YAML::Node& node, const std::string& field) const {
    const auto text = scalar(node, field);
    try {
      std::size_t used = 0;
      const long long value = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      if (value <= 0 || value > 1'000'000) error(node, field, "must be a positive integer");
      return static_cast<std::uint32_t>(value);
    } catch (const std::logic_error&) {
      error(node, field, "expected an integer, got '" + text + "'");
    }
  }

  std::size_t index(const YAML::Node& node, const std::string& field) const {
    const auto text = scalar(node, field);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      error(node, field, "expected a basis index, got '" + text + "'");
    return std::stoul(text);
  }

  /// A rational string, checked against the rationals so errors carry a position.
  std::string rational(const YAML::Node& node, const std::string& field) const {
    auto text = scalar(node, field);
    try {
      Scalar::parse(Field::rationals(), text);
    } catch (const std::exception& e) {
      error(node, field, "not a rational number: '" + text + "'");
    }
    return text;
  }

  CurveConfig::Triple triple(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence() || node.size() != 3) error(node, field, "expected three coordinates");
    CurveConfig::Triple out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = rational(node[i], field + "[" + std::to_string(i) + "]");
    return out;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

LieConfig read_lie(const Reader& r, const YAML::Node& node) {
  r.expect_map(node, "lie", {"builtin", "dim", "labels", "structure_constants", "x", "mu"});
  LieConfig lie;
  if (node["builtin"]) {
    const auto name = r.scalar(node["builtin"], "lie.builtin");
    const auto& names = lie::LieAlgebra::builtin_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      r.error(node["builtin"], "lie.builtin", "unknown builtin '" + name + "'");
    if (node["dim"] || node["structure_constants"])
      r.error(node, "lie", "give either builtin or dim/structure_constants, not both");
    lie.builtin = name;
    lie.dim = lie::LieAlgebra::builtin(name).dim();
    lie.labels = lie::LieAlgebra::builtin(name).labels();
  } else {
    if (!node["dim"]) r.error(node, "lie.dim", "required unless builtin is given");
    lie.dim = r.positive(node["dim"], "lie.dim");
    if (const auto& sc = node["structure_constants"]) {
      if (!sc.IsSequence()) r.error(sc, "lie.structure_constants", "expected a list of [i, j, k, value]");
      for (std::size_t n = 0; n < sc.size(); ++n) {
        const auto field = "lie.structure_constants[" + std::to_string(n) + "]";
        const auto& entry = sc[n];
        if (!entry.IsSequence() || entry.size() != 4) r.error(entry, field, "expected [i, j, k, value]");
        LieConfig::Bracket b{r.index(entry[0], field), r.index(entry[1], field), r.index(entry[2], field),
                             r.rational(entry[3], field)};
        if (b.i >= lie.dim || b.j >= lie.dim || b.k >= lie.dim) r.error(entry, field, "index out of range");
        lie.structure_constants.push_back(std::move(b));
      }
    }
    if (const auto& labels = node["labels"]) {
      if (!labels.IsSequence() || labels.size() != lie.dim) r.error(labels, "lie.labels", "expected dim labels");
      for (const auto& l : labels) lie.labels.push_back(r.scalar(l, "lie.labels"));
    } else {
      lie.labels = lie::LieAlgebra(Field::rationals(), lie.dim).labels();
    }
  }
  if (const auto& x = node["x"]) {
    if (x.IsScalar()) {
      const auto label = x.Scalar();
      const auto it = std::find(lie.labels.begin(), lie.labels.end(), label);
      if (it == lie.labels.end()) r.error(x, "lie.x", "no basis element labelled '" + label + "'");
      lie.x.assign(lie.dim, "0");
      lie.x[static_cast<std::size_t>(it - lie.labels.begin())] = "1";
    } else {
      if (!x.IsSequence() || x.size() != lie.dim) r.error(x, "lie.x", "expected a label or dim coordinates");
      for (std::size_t i = 0; i < x.size(); ++i) lie.x.push_back(r.rational(x[i], "lie.x"));
    }
  }
  if (node["mu"]) lie.mu = r.rational(node["mu"], "lie.mu");
  return lie;
}

CurveConfig read_curve(const Reader& r, const YAML::Node& node) {
  r.expect_map(node, "curve", {"psi", "p", "P", "Q", "S"});
  CurveConfig curve;
  const auto need = [&](const char* key) {
    if (!node[key]) r.error(node, std::string("curve.") + key, "required");
    return node[key];
  };
  curve.psi = r.rational(need("psi"), "curve.psi");
  curve.p = r.triple(need("p"), "curve.p");
  curve.P = r.triple(need("P"), "curve.P");
  curve.Q = r.triple(need("Q"), "curve.Q");
  curve.S = r.triple(need("S"), "curve.S");
  return curve;
}

Caps read_caps(const Reader& r, const YAML::Node& node) {
  r.expect_map(node, "caps", {"d", "N", "n_max", "tensor_cap", "sample_margin", "torsion_bound"});
  Caps caps;
  if (node["d"]) caps.d = r.positive(node["d"], "caps.d");
  if (node["N"]) caps.N = r.positive(node["N"], "caps.N");
  if (node["n_max"]) caps.n_max = r.positive(node["n_max"], "caps.n_max");
  if (node["tensor_cap"]) caps.tensor_cap = r.positive(node["tensor_cap"], "caps.tensor_cap");
  if (node["sample_margin"]) caps.sample_margin = r.positive(node["sample_margin"], "caps.sample_margin");
  if (node["torsion_bound"]) caps.torsion_bound = r.positive(node["torsion_bound"], "caps.torsion_bound");
  return caps;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ":" + std::to_string(e.mark.column + 1) +
                      ": " + e.msg);
  }
  const Reader r(source);
  if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
  r.expect_map(root, "", {"suite", "backend", "output", "lie", "curve", "caps"});

  RunConfig config;
  if (root["suite"]) {
    try {
      config.suite = suite_from_string(r.scalar(root["suite"], "suite"));
    } catch (const ConfigError& e) {
      r.error(root["suite"], "suite", e.what());
    }
  }
  if (root["backend"]) {
    config.backend = r.scalar(root["backend"], "backend");
    try {
      Field::parse(config.backend);
    } catch (const std::exception& e) {
      r.error(root["backend"], "backend", e.what());
    }
  }
  if (root["output"]) config.output = r.scalar(root["output"], "output");
  if (root["lie"]) config.lie = read_lie(r, root["lie"]);
  if (root["curve"]) config.curve = read_curve(r, root["curve"]);
  if (root["caps"]) config.caps = read_caps(r, root["caps"]);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

void validate(const RunConfig& config) {
  try {
    Field::parse(config.backend);
  } catch (const std::exception& e) {
    throw ConfigError("field 'backend': " + std::string(e.what()));
  }
  if ((config.runs(Suite::env) || config.runs(Suite::rees)) && !config.lie)
    throw ConfigError("field 'lie': required by suite " + std::string(to_string(config.suite)));
  if (config.runs(Suite::sklyanin) && !config.curve)
    throw ConfigError("field 'curve': required by suite " + std::string(to_string(config.suite)));
  const auto& c = config.caps;
  if (c.d.value_or(1) == 0 || c.N.value_or(1) == 0 || c.n_max == 0 || c.tensor_cap == 0 || c.sample_margin == 0 || c.torsion_bound == 0)
    throw ConfigError("field 'caps': caps must be positive");
}

}  // namespace faithcert::cli
