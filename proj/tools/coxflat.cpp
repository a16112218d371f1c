// Command-line front end: matrix/point loading, verdict reporting, and
// seeded batch sweeps over the rank-3 flat components.
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxflat/additive.hpp"
#include "coxflat/flatness.hpp"
#include "coxflat/hecke.hpp"
#include "coxflat/io.hpp"
#include "coxflat/series.hpp"

using namespace coxflat;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitOk = 0, kExitMismatch = 1, kExitUsage = 2;

struct ReportSink {
  std::string json_path;
  bool timings = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(json report, int code) const {
    report["version"] = kVersion;
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      report["timings"] = {{"total_ms", ms}};
    }
    std::cout << report.dump(2) << std::endl;
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "cannot write " << json_path << std::endl;
        return kExitUsage;
      }
      out << report.dump(2) << '\n';
    }
    return code;
  }
};

void add_report_flags(CLI::App* cmd, ReportSink& sink) {
  cmd->add_option("--json", sink.json_path, "also write the report to this file");
  cmd->add_flag("--timings", sink.timings,
                "include wall-clock timings (breaks byte-identical reports)");
}

json matrix_json(const CoxeterMatrix& m) {
  json out;
  out["rank"] = m.rank();
  out["orders"] = json::array();
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int mij = m.order(i, j);
      out["orders"].push_back(
          {{"edge", {i, j}}, {"m", order_is_finite(mij) ? json(mij) : json("inf")}});
    }
  return out;
}

json verdict_json(const GlobalVerdict& g) {
  json out;
  out["member"] = g.member;
  out["triangles"] = json::array();
  for (const TriangleReport& r : g.triangles) {
    json t;
    t["delta"] = r.delta;
    t["finite"] = r.finite;
    if (r.finite) {
      t["type"] = r.verdict.type.str();
      t["member"] = r.verdict.member;
      t["failed"] = r.verdict.failed;
    }
    out["triangles"].push_back(std::move(t));
  }
  return out;
}

json dimension_json(const Dimension& d) {
  switch (d.kind) {
    case Dimension::Finite:
      return {{"kind", "finite"}, {"value", d.value}};
    case Dimension::Infinite:
      return {{"kind", "infinite"}};
    default:
      return {{"kind", "unknown"}, {"lower_bound", d.value}};
  }
}

long group_order(const CoxeterMatrix& m) {
  long order = 0;
  for (long b : Coxeter(m).enumerate(Coxeter::kAll).growth.counts) order += b;
  return order;
}

int run_coxeter(const std::string& matrix_path, int max_length, const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  json report;
  report["command"] = "coxeter";
  report["inputs"] = {{"matrix", matrix_json(m)}};
  bool finite = is_finite(m);
  report["finite"] = finite;
  Coxeter group(m);
  Enumeration all = group.enumerate(finite ? Coxeter::kAll : max_length);
  report["growth"] = all.growth.counts;
  if (finite) {
    long order = 0;
    for (long b : all.growth.counts) order += b;
    report["group_order"] = order;
  }
  report["triangles"] = json::array();
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      for (int k = j + 1; k < m.rank(); ++k) {
        TriangleClass type = triangle_type(m, {i, j, k});
        report["triangles"].push_back(
            {{"delta", {i, j, k}}, {"type", type.str()}, {"finite", type.finite()}});
      }
  return sink.emit(std::move(report), kExitOk);
}

int run_flatness(const std::string& matrix_path, const std::string& point_path,
                 bool with_dim, long effort, const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  ParameterPoint u = parameter_point_from_json(load_json_file(point_path));
  check_point_shape(m, u);
  GlobalVerdict g = check_global_membership(m, u);
  json report;
  report["command"] = "flatness";
  report["inputs"] = {{"matrix", matrix_json(m)}, {"point", to_json(u)}};
  report["verdict"] = verdict_json(g);
  int code = kExitOk;
  if (with_dim) {
    if (!is_finite(m)) {
      std::cerr << "--dim requires a finite group" << std::endl;
      return kExitUsage;
    }
    FlatnessRun run = dim_A_plus(m, u, 0, effort);
    report["dimension"] = dimension_json(run.dim);
    report["dimension_upper"] = dimension_json(run.dim_upper);
    report["expected"] = run.expected;
    if (run.flat() || run.not_flat()) {
      report["flat"] = run.flat();
      if (run.flat() != g.member) code = kExitMismatch;
    } else {
      report["flat"] = nullptr;  // effort budget exhausted inconclusively
    }
  }
  return sink.emit(std::move(report), code);
}

int run_theta(const std::string& matrix_path, const std::string& point_path,
              const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  ThetaPoint t = theta_point_from_json(load_json_file(point_path));
  json report;
  report["command"] = "theta";
  report["inputs"] = {{"matrix", matrix_json(m)}, {"point", to_json(t)}};
  report["member"] = theta_membership(m, t);
  report["symmetric_chart"] = to_json(theta_to_symmetric(m, t));
  return sink.emit(std::move(report), kExitOk);
}

int run_twisted(const std::string& matrix_path, const std::string& point_path, int base,
                const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  ThetaPoint t = theta_point_from_json(load_json_file(point_path));
  json report;
  report["command"] = "twisted";
  report["inputs"] = {{"matrix", matrix_json(m)}, {"point", to_json(t)}, {"base", base}};
  if (!theta_membership(m, t)) {
    report["member"] = false;
    return sink.emit(std::move(report), kExitMismatch);
  }
  report["member"] = true;
  TwistedAlgebra alg = build_twisted_algebra(m, t);
  ThetaPoint recovered = eta(alg, base);
  report["eta"] = to_json(recovered);
  bool orbit = same_Z_orbit(m, t, recovered);
  report["eta_in_orbit"] = orbit;
  return sink.emit(std::move(report), orbit ? kExitOk : kExitMismatch);
}

int run_hecke(const std::string& matrix_path, const std::string& params_path, int draws,
              unsigned seed, const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  json report;
  report["command"] = "hecke";
  report["inputs"] = {{"matrix", matrix_json(m)}};
  report["runs"] = json::array();
  bool all_free = true;
  auto one = [&](const HeckeParams& p, json label) {
    validate_hecke_params(m, p);
    HeckeRun run = hecke_freeness_run(m, p);
    json r;
    r["params"] = to_json(p);
    r["label"] = std::move(label);
    r["dimension"] = dimension_json(run.dim);
    r["expected"] = run.expected;
    r["free"] = run.free_module();
    all_free = all_free && run.free_module();
    report["runs"].push_back(std::move(r));
  };
  if (!params_path.empty()) {
    one(hecke_params_from_json(load_json_file(params_path)), "file");
  } else {
    report["inputs"]["seed"] = seed;
    report["inputs"]["draws"] = draws;
    for (int d = 0; d < draws; ++d) one(random_hecke_params(m, seed + static_cast<unsigned>(d)), d);
  }
  report["all_free"] = all_free;
  return sink.emit(std::move(report), all_free ? kExitOk : kExitMismatch);
}

int run_additive_hilbert(const std::string& matrix_path, int n, int base,
                         const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  std::vector<long> computed = hilbert_A0plus(m, n, base);
  Coxeter group(m);
  Enumeration all = group.enumerate(is_finite(m) ? Coxeter::kAll : n);
  TruncatedSeries q = series_div_one_plus_z(TruncatedSeries::from_counts(all.growth.counts));
  std::vector<long> expected;
  for (int d = 0; d <= n; ++d) {
    Rational c = d <= q.order() ? q.coeffs[static_cast<std::size_t>(d)] : Rational(0);
    expected.push_back(static_cast<long>(c.get_num().get_si()));
  }
  json report;
  report["command"] = "additive hilbert";
  report["inputs"] = {{"matrix", matrix_json(m)}, {"N", n}, {"base", base}};
  report["computed"] = computed;
  report["expected"] = expected;
  bool match = computed == expected;
  report["match"] = match;
  return sink.emit(std::move(report), match ? kExitOk : kExitMismatch);
}

int run_additive_tau(const std::string& matrix_path, const std::string& tau_path,
                     int cap, int base, const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  std::map<Edge, std::vector<Rational>> tau;
  if (!tau_path.empty())
    for (const auto& entry : load_json_file(tau_path)) {
      auto e = entry.at("edge");
      tau[edge_key(e[0].get<int>(), e[1].get<int>())] = [&] {
        std::vector<Rational> roots;
        for (const auto& r : entry.at("roots")) roots.push_back(parse_rational(r.get<std::string>()));
        return roots;
      }();
    }
  Presentation pres = tau_presentation(m, tau, base);
  GroebnerResult gb = buchberger(pres, cap);
  json report;
  report["command"] = "additive tau";
  report["inputs"] = {{"matrix", matrix_json(m)}, {"cap", cap}, {"base", base}};
  report["complete"] = gb.status == GBStatus::Complete;
  report["word_counts"] = standard_word_counts(gb, pres.num_gens(), cap);
  report["dimension"] = dimension_json(dimension(gb, pres.num_gens()));
  return sink.emit(std::move(report), kExitOk);
}

int run_sweep(const std::string& matrix_path, const std::string& component, int draws,
              unsigned seed, bool parallel, const ReportSink& sink) {
  CoxeterMatrix m = load_matrix_file(matrix_path);
  if (m.rank() != 3) {
    std::cerr << "sweep requires a rank-3 matrix" << std::endl;
    return kExitUsage;
  }
  TriangleClass type = triangle_type(m, {0, 1, 2});
  if (!type.finite()) {
    std::cerr << "sweep requires a finite triangle type" << std::endl;
    return kExitUsage;
  }
  json report;
  report["command"] = "sweep";
  report["inputs"] = {{"matrix", matrix_json(m)},
                      {"component", component},
                      {"draws", draws},
                      {"seed", seed}};
  report["type"] = type.str();

  // One draw: a point plus whether its dimension run matched the expectation.
  auto draw_point = [&](unsigned s) -> ParameterPoint {
    if (component == "off") {
      for (unsigned probe = s;; probe += 1000) {
        ParameterPoint u = random_triangle_point(type, probe);
        if (!check_global_membership(m, u).member) return u;
      }
    }
    LocusComponent::Kind want =
        component == "spin" ? LocusComponent::Spin : LocusComponent::Group;
    for (const LocusComponent& c : lemma_components(type))
      if (c.kind == want) return sample_point(c, s);
    throw std::invalid_argument("type has no component \"" + component + "\"");
  };
  auto run_draw = [&](int d) -> std::pair<ParameterPoint, bool> {
    ParameterPoint u = draw_point(seed + static_cast<unsigned>(d));
    FlatnessRun run = dim_A_plus(m, u);
    bool pass = component == "off" ? (run.dim.kind == Dimension::Finite &&
                                      run.dim.value < run.expected)
                                   : run.flat();
    return {std::move(u), pass};
  };

  std::vector<std::pair<ParameterPoint, bool>> results(static_cast<std::size_t>(draws));
  if (parallel) {
    std::vector<std::future<std::pair<ParameterPoint, bool>>> jobs;
    for (int d = 0; d < draws; ++d)
      jobs.push_back(std::async(std::launch::async, run_draw, d));
    for (int d = 0; d < draws; ++d) results[static_cast<std::size_t>(d)] = jobs[static_cast<std::size_t>(d)].get();
  } else {
    for (int d = 0; d < draws; ++d) results[static_cast<std::size_t>(d)] = run_draw(d);
  }

  int passes = 0;
  report["failures"] = json::array();
  for (int d = 0; d < draws; ++d) {
    const auto& [u, pass] = results[static_cast<std::size_t>(d)];
    if (pass)
      ++passes;
    else
      report["failures"].push_back({{"draw", d}, {"point", to_json(u)}});
  }
  report["passes"] = passes;
  report["draws"] = draws;
  return sink.emit(std::move(report), passes == draws ? kExitOk : kExitMismatch);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed Coxeter even-subgroup algebras: membership, dimension, "
               "cocycle, Hecke, and graded checks"};
  app.require_subcommand(1);

  std::string matrix_path, point_path, params_path, tau_path, component = "group";
  int max_length = 8, base = 0, n = 6, draws = 5, cap = 12;
  unsigned seed = 1;
  bool with_dim = false, parallel = false;

  ReportSink sink;

  CLI::App* coxeter = app.add_subcommand("coxeter", "orders, growth, triangle types");
  coxeter->add_option("--matrix", matrix_path, "matrix file")->required();
  coxeter->add_option("--max-length", max_length, "enumeration cutoff when infinite");
  add_report_flags(coxeter, sink);

  CLI::App* flatness = app.add_subcommand("flatness", "global locus membership");
  flatness->add_option("--matrix", matrix_path, "matrix file")->required();
  flatness->add_option("--point", point_path, "parameter point JSON")->required();
  flatness->add_flag("--dim", with_dim, "confirm by dimension (finite groups)");
  add_report_flags(flatness, sink);

  CLI::App* theta = app.add_subcommand("theta", "multiplier-locus membership");
  theta->add_option("--matrix", matrix_path, "matrix file")->required();
  theta->add_option("--point", point_path, "theta point JSON")->required();
  add_report_flags(theta, sink);

  CLI::App* twisted = app.add_subcommand("twisted", "twisted algebra and weight recovery");
  twisted->add_option("--matrix", matrix_path, "matrix file")->required();
  twisted->add_option("--point", point_path, "theta point JSON")->required();
  twisted->add_option("--base", base, "base vertex");
  add_report_flags(twisted, sink);

  CLI::App* hecke = app.add_subcommand("hecke", "freeness of quadratic deformations");
  hecke->add_option("--matrix", matrix_path, "matrix file")->required();
  hecke->add_option("--params", params_path, "parameter JSON (otherwise random draws)");
  hecke->add_option("--draws", draws, "number of random draws");
  hecke->add_option("--seed", seed, "random seed");
  add_report_flags(hecke, sink);

  CLI::App* additive = app.add_subcommand("additive", "graded algebra checks");
  additive->require_subcommand(1);
  CLI::App* hilbert = additive->add_subcommand("hilbert", "graded dimensions vs growth");
  hilbert->add_option("--matrix", matrix_path, "matrix file")->required();
  hilbert->add_option("--N", n, "truncation degree")->required();
  hilbert->add_option("--base", base, "base vertex");
  add_report_flags(hilbert, sink);
  CLI::App* tau = additive->add_subcommand(
      "tau", "exploratory root deformation (no correctness claim)");
  tau->add_option("--matrix", matrix_path, "matrix file")->required();
  tau->add_option("--tau", tau_path, "roots JSON [{\"edge\":[i,j],\"roots\":[...]}]");
  tau->add_option("--cap", cap, "degree cap");
  tau->add_option("--base", base, "base vertex");
  add_report_flags(tau, sink);

  CLI::App* sweep = app.add_subcommand("sweep", "batch draws on a rank-3 component");
  sweep->add_option("--matrix", matrix_path, "rank-3 matrix file")->required();
  sweep->add_option("--component", component, "group | spin | off");
  sweep->add_option("--draws", draws, "number of draws");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_flag("--parallel", parallel, "run draws concurrently");
  add_report_flags(sweep, sink);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coxeter->parsed()) return run_coxeter(matrix_path, max_length, sink);
    if (flatness->parsed()) return run_flatness(matrix_path, point_path, with_dim, sink);
    if (theta->parsed()) return run_theta(matrix_path, point_path, sink);
    if (twisted->parsed()) return run_twisted(matrix_path, point_path, base, sink);
    if (hecke->parsed())
      return run_hecke(matrix_path, params_path, params_path.empty() ? draws : 0, seed, sink);
    if (hilbert->parsed()) return run_additive_hilbert(matrix_path, n, base, sink);
    if (tau->parsed()) return run_additive_tau(matrix_path, tau_path, cap, base, sink);
    if (sweep->parsed())
      return run_sweep(matrix_path, component, draws, seed, parallel, sink);
  } catch (const ParseError& e) {
    std::cerr << e.what() << std::endl;
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << std::endl;
    return kExitMismatch;
  }
  return kExitUsage;
}
