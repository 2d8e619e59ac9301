#pragma once

// Group specification files (JSON). A finite group:
//
//   {"kind": "finite_matrix",
//    "field": {"kind": "extension", "minimal_poly": "w^2 - 2", "generator": "w"},
//    "variables": ["x", "y"],
//    "generators": [[["1", "0"], ["0", "-1"]], [["w/2", "-w/2"], ["w/2", "w/2"]]]}
//
// An algebraic group:
//
//   {"kind": "algebraic", "field": {"kind": "rationals"},
//    "group_vars": ["z1", "z2"], "variables": ["x1", "x2"],
//    "ideal": ["z1*z2 - 1"], "action": ["z1*x1", "z2*x2"],
//    "linear_reductive": true}
//
// "action_matrix" (rows of polynomials in the group variables) may replace
// "action"; "image_variables" names the y variables. Field kinds are
// "rationals", "prime" (with "p") and "extension".

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ikit/algebraic.hpp"
#include "ikit/finite_group.hpp"
#include "ikit/parse.hpp"

namespace ikit {

struct FiniteGroupSpec {
  std::string name;
  Field field;
  std::vector<std::string> variables;
  std::vector<ScalarMatrix> generators;

  size_t dimension() const { return variables.size(); }
  FiniteMatrixGroup close(size_t cap = 100000) const { return close_group(field, dimension(), generators, cap); }
  Ring ring(MonomialOrder ord = MonomialOrder::grevlex()) const { return make_ring<Scalar>(variables, ord, field); }
};

struct LoadedSpec {
  std::string name;
  std::string text;  // raw file contents
  std::vector<std::string> warnings;
  std::variant<FiniteGroupSpec, AlgebraicGroupSpec> spec;

  bool is_finite() const { return std::holds_alternative<FiniteGroupSpec>(spec); }
  const FiniteGroupSpec& finite() const {
    if (!is_finite()) throw InvalidSpec("this command needs a finite_matrix group spec");
    return std::get<FiniteGroupSpec>(spec);
  }
  const AlgebraicGroupSpec& algebraic() const {
    if (is_finite()) throw InvalidSpec("this command needs an algebraic group spec");
    return std::get<AlgebraicGroupSpec>(spec);
  }
};

namespace detail {

using json = nlohmann::json;

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string as_string(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(std::string(what) + " must be a string");
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

inline Field parse_field(const json& j) {
  std::string kind = as_string(require(j, "kind"), "field kind");
  if (kind == "rationals" || kind == "QQ") return Field::rationals();
  if (kind == "prime") return Field::prime(Integer(as_string(require(j, "p"), "p")));
  if (kind == "extension") {
    std::string gen = j.contains("generator") ? as_string(j.at("generator"), "generator") : "w";
    return Field::extension(parse_upoly(as_string(require(j, "minimal_poly"), "minimal_poly"), gen), gen);
  }
  throw ParseError("unknown field kind \"" + kind + "\"");
}

}  // namespace detail

inline LoadedSpec parse_group_spec(const std::string& text, const std::string& default_name = "") {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  LoadedSpec out{j.contains("name") ? detail::as_string(j.at("name"), "name") : default_name, text, {},
                 FiniteGroupSpec{}};
  Field field = detail::parse_field(detail::require(j, "field"));
  out.warnings = field.spec().warnings;
  std::string kind = detail::as_string(detail::require(j, "kind"), "kind");
  auto vars = detail::string_list(detail::require(j, "variables"), "variables");
  if (kind == "finite_matrix") {
    FiniteGroupSpec f{out.name, field, vars, {}};
    if (j.contains("dimension") && j.at("dimension").get<size_t>() != vars.size())
      throw ParseError("dimension does not match the number of variables");
    const json& gens = detail::require(j, "generators");
    if (!gens.is_array() || gens.empty()) throw ParseError("generators must be a nonempty list of matrices");
    for (const auto& g : gens) {
      if (!g.is_array() || g.size() != vars.size()) throw ParseError("generator matrix has the wrong number of rows");
      ScalarMatrix A(vars.size(), vars.size(), field);
      for (size_t i = 0; i < vars.size(); ++i) {
        auto row = detail::string_list(g[i], "matrix row");
        if (row.size() != vars.size()) throw ParseError("generator matrix row has the wrong length");
        for (size_t k = 0; k < row.size(); ++k) A(i, k) = parse_scalar(row[k], field);
      }
      f.generators.push_back(std::move(A));
    }
    out.spec = std::move(f);
  } else if (kind == "algebraic") {
    auto z = detail::string_list(detail::require(j, "group_vars"), "group_vars");
    std::vector<std::string> y;
    if (j.contains("image_variables")) y = detail::string_list(j.at("image_variables"), "image_variables");
    auto ideal = j.contains("ideal") ? detail::string_list(j.at("ideal"), "ideal") : std::vector<std::string>{};
    std::vector<std::string> action;
    if (j.contains("action")) {
      action = detail::string_list(j.at("action"), "action");
    } else {
      const json& m = detail::require(j, "action_matrix");
      if (!m.is_array() || m.size() != vars.size()) throw ParseError("action_matrix has the wrong number of rows");
      for (const auto& row : m) {
        auto entries = detail::string_list(row, "action_matrix row");
        if (entries.size() != vars.size()) throw ParseError("action_matrix row has the wrong length");
        std::string f;
        for (size_t k = 0; k < entries.size(); ++k) f += (k ? " + (" : "(") + entries[k] + ")*" + vars[k];
        action.push_back(f);
      }
    }
    bool reductive = j.contains("linear_reductive") && j.at("linear_reductive").get<bool>();
    out.spec = AlgebraicGroupSpec(field, z, vars, y, ideal, action, reductive);
  } else {
    throw ParseError("unknown spec kind \"" + kind + "\"");
  }
  return out;
}

inline LoadedSpec load_group_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path.substr(path.find_last_of('/') + 1);
  base = base.substr(0, base.find('.'));
  return parse_group_spec(ss.str(), base);
}

}  // namespace ikit
