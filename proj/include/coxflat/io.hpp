#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coxflat/coxeter.hpp"
#include "coxflat/deform.hpp"
#include "coxflat/hecke.hpp"
#include "coxflat/rewrite.hpp"

namespace coxflat {

// Input error carrying the 1-based line of a text config (0 for JSON input).
struct ParseError : std::runtime_error {
  int line;
  ParseError(int l, const std::string& what)
      : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + what : what),
        line(l) {}
};

// Text format for a Coxeter matrix:
//   vertices: a b c          (names; rank = count)
//   default = 2              (optional; otherwise every pair must be listed)
//   a b 3                    (one entry per line; order is an integer >= 2 or "inf")
// '#' starts a comment. Vertices may be referenced by name or 0-based index.
CoxeterMatrix parse_matrix_text(const std::string& text);
CoxeterMatrix load_matrix_file(const std::string& path);

// Rationals appear as "p/q" strings throughout.
nlohmann::json to_json(const ParameterPoint& u);   // [{"edge":[i,j],"m":m,"t":[...]}]
nlohmann::json to_json(const SymmetricPoint& e);   // same layout with key "e"
nlohmann::json to_json(const ThetaPoint& t);       // [{"edge":[i,j],"t":"p/q"}]
nlohmann::json to_json(const HeckeParams& p);      // {"u":[],"v":[],"f":[{"edge","values"}]}

ParameterPoint parameter_point_from_json(const nlohmann::json& j);
SymmetricPoint symmetric_point_from_json(const nlohmann::json& j);
ThetaPoint theta_point_from_json(const nlohmann::json& j);
HeckeParams hecke_params_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace coxflat
