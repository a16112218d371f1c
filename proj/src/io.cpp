#include "coxflat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace coxflat {

namespace {

std::vector<std::string> tokens_of(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  for (char& c : line)
    if (c == ',') c = ' ';
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::array<int, 2> json_edge(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw ParseError(0, "edge must be a pair of vertex indices");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Rational> json_rationals(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(0, "expected an array of \"p/q\" strings");
  std::vector<Rational> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(0, "rationals must be \"p/q\" strings");
    out.push_back(parse_rational(v.get<std::string>()));
  }
  return out;
}

nlohmann::json rationals_json(const std::vector<Rational>& vals) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& v : vals) out.push_back(rational_str(v));
  return out;
}

template <typename Point>
nlohmann::json point_json(const Point& p, const char* values_key) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [edge, vals] : p.entries) {
    nlohmann::json entry;
    entry["edge"] = {edge.first, edge.second};
    entry["m"] = static_cast<int>(vals.size());
    entry[values_key] = rationals_json(vals);
    out.push_back(std::move(entry));
  }
  return out;
}

template <typename Point>
Point point_from_json(const nlohmann::json& j, const char* values_key) {
  if (!j.is_array()) throw ParseError(0, "expected an array of edge entries");
  Point p;
  for (const auto& entry : j) {
    auto [i, k] = json_edge(entry.at("edge"));
    std::vector<Rational> vals = json_rationals(entry.at(values_key));
    if (entry.contains("m") && entry.at("m").get<int>() != static_cast<int>(vals.size()))
      throw ParseError(0, "entry \"m\" disagrees with the number of values");
    if (p.has_edge(i, k)) throw ParseError(0, "duplicate edge entry");
    p.set_edge(i, k, std::move(vals));
  }
  return p;
}

}  // namespace

CoxeterMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::vector<std::string> names;
  bool have_vertices = false;
  bool have_default = false;
  std::map<Edge, int> orders;

  auto vertex_of = [&](const std::string& tok, int ln) {
    for (std::size_t v = 0; v < names.size(); ++v)
      if (names[v] == tok) return static_cast<int>(v);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used == tok.size() && v >= 0 && v < static_cast<int>(names.size())) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(ln, "unknown vertex \"" + tok + "\"");
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;

    if (toks[0] == "vertices:" || (toks[0] == "vertices" && toks.size() > 1 && toks[1] == ":")) {
      if (have_vertices) throw ParseError(lineno, "duplicate vertices line");
      if (toks[0] == "vertices") toks.erase(toks.begin());
      toks.erase(toks.begin());
      if (toks.empty()) throw ParseError(lineno, "vertices line lists no names");
      names = toks;
      for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
          if (names[a] == names[b])
            throw ParseError(lineno, "duplicate vertex name \"" + names[a] + "\"");
      have_vertices = true;
      continue;
    }
    if (!have_vertices) throw ParseError(lineno, "expected a vertices: line first");

    if (toks[0] == "default") {
      if (toks.size() != 3 || toks[1] != "=" || toks[2] != "2")
        throw ParseError(lineno, "the only supported default is \"default = 2\"");
      have_default = true;
      continue;
    }

    if (toks.size() != 3)
      throw ParseError(lineno, "expected an entry of the form \"i j m\"");
    int i = vertex_of(toks[0], lineno);
    int j = vertex_of(toks[1], lineno);
    if (i == j) throw ParseError(lineno, "edge endpoints must differ");
    int m;
    if (toks[2] == "inf") {
      m = kInfiniteOrder;
    } else {
      try {
        std::size_t used = 0;
        m = std::stoi(toks[2], &used);
        if (used != toks[2].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(lineno, "order must be an integer or \"inf\"");
      }
      if (m < 2) throw ParseError(lineno, "order must be at least 2 or \"inf\"");
    }
    auto [it, inserted] = orders.emplace(edge_key(i, j), m);
    if (!inserted && it->second != m)
      throw ParseError(lineno, "conflicting orders for one pair");
  }

  if (!have_vertices) throw ParseError(lineno, "empty matrix file");
  const int rank = static_cast<int>(names.size());
  CoxeterMatrix out =
      have_default ? CoxeterMatrix::with_default(rank, 2) : CoxeterMatrix(rank);
  out.set_names(names);
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      auto it = orders.find({i, j});
      if (it == orders.end()) {
        if (!have_default)
          throw ParseError(lineno, "pair " + names[static_cast<std::size_t>(i)] + " " +
                                       names[static_cast<std::size_t>(j)] +
                                       " not listed and no \"default = 2\" set");
        continue;
      }
      out.set_order(i, j, it->second);
    }
  return out;
}

CoxeterMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

nlohmann::json to_json(const ParameterPoint& u) { return point_json(u, "t"); }
nlohmann::json to_json(const SymmetricPoint& e) { return point_json(e, "e"); }

nlohmann::json to_json(const ThetaPoint& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [edge, value] : t.entries) {
    nlohmann::json entry;
    entry["edge"] = {edge.first, edge.second};
    entry["t"] = rational_str(value);
    out.push_back(std::move(entry));
  }
  return out;
}

nlohmann::json to_json(const HeckeParams& p) {
  nlohmann::json out;
  out["u"] = rationals_json(p.u);
  out["v"] = rationals_json(p.v);
  out["f"] = nlohmann::json::array();
  for (const auto& [edge, vals] : p.f) {
    nlohmann::json entry;
    entry["edge"] = {edge.first, edge.second};
    entry["values"] = rationals_json(vals);
    out["f"].push_back(std::move(entry));
  }
  return out;
}

ParameterPoint parameter_point_from_json(const nlohmann::json& j) {
  return point_from_json<ParameterPoint>(j, "t");
}

SymmetricPoint symmetric_point_from_json(const nlohmann::json& j) {
  return point_from_json<SymmetricPoint>(j, "e");
}

ThetaPoint theta_point_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(0, "expected an array of edge entries");
  ThetaPoint t;
  for (const auto& entry : j) {
    auto [i, k] = json_edge(entry.at("edge"));
    const auto& v = entry.at("t");
    if (!v.is_string()) throw ParseError(0, "rationals must be \"p/q\" strings");
    if (t.has_edge(i, k)) throw ParseError(0, "duplicate edge entry");
    t.set(i, k, parse_rational(v.get<std::string>()));
  }
  return t;
}

HeckeParams hecke_params_from_json(const nlohmann::json& j) {
  HeckeParams p;
  p.u = json_rationals(j.at("u"));
  p.v = json_rationals(j.at("v"));
  if (j.contains("f"))
    for (const auto& entry : j.at("f")) {
      auto [i, k] = json_edge(entry.at("edge"));
      if (i >= k) throw ParseError(0, "f edges must be listed with i < j");
      if (p.f.count({i, k})) throw ParseError(0, "duplicate edge entry");
      p.f[{i, k}] = json_rationals(entry.at("values"));
    }
  return p;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return nlohmann::json::parse(in);
}

}  // namespace coxflat
