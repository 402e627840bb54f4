#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hilbfock/dsl.hpp"
#include "hilbfock/parallel.hpp"
#include "hilbfock/suites.hpp"

using namespace hilbfock;
using nlohmann::json;

namespace {

struct SurfaceChoice {
  SurfaceDatum datum;
  std::string desc;
};

SurfaceChoice load_surface(const std::string& path) {
  SurfaceChoice s;
  if (path.empty()) {
    SurfaceConfig cfg;
    cfg.mode = SurfaceMode::K3Chow;
    cfg.picard_rank = 1;
    cfg.picard_gram = {{Rat(2)}};
    cfg.b = 21;
    s.datum = make_surface(cfg);
    s.desc = "builtin k3-chow rho=1 <l,l>=2 b=21";
    return s;
  }
  s.datum = make_surface(load_surface_config(path));
  s.desc = path + (s.datum.mode == SurfaceMode::K3Chow ? " (k3-chow" : " (split");
  s.desc += ", rho=" + std::to_string(s.datum.picard_rank) + ", b=" + std::to_string(s.datum.b);
  if (s.datum.synthetic) s.desc += ", synthetic";
  s.desc += ")";
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_verify(const std::string& surface_path, const std::string& suites_arg,
               const std::string& output, const std::string& format, RunConfig cfg) {
  SurfaceChoice sc = load_surface(surface_path);
  std::vector<std::string> suites =
      suites_arg.empty() || suites_arg == "all" ? all_suites() : split_list(suites_arg);
  std::vector<VerificationCertificate> certs;
  for (auto& name : suites) {
    auto part = run_suite(name, cfg, sc.datum, sc.desc);
    certs.insert(certs.end(), part.begin(), part.end());
  }
  json report = make_report(certs, sc.desc);
  if (!output.empty()) {
    std::ofstream f(output);
    f << report.dump(2) << "\n";
  }
  size_t failed = report["summary"]["failed"].get<size_t>();
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (auto& c : report["certificates"])
      std::cout << (c["status"] == "pass" ? "PASS " : "FAIL ") << c["identity"].get<std::string>()
                << " " << c["params"].dump() << " [" << c["method"].get<std::string>() << ", "
                << c["millis"].get<long long>() << " ms]"
                << (c["status"] == "pass" || !c.contains("residual_terms") ||
                            c["residual_terms"].empty()
                        ? ""
                        : "  residual: " + c["residual_terms"][0].get<std::string>())
                << "\n";
    std::cout << "summary: " << report["summary"]["passed"] << "/" << report["summary"]["total"]
              << " passed\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_compute(const std::string& surface_path, const std::string& expr,
                const std::string& vector) {
  SurfaceChoice sc = load_surface(surface_path);
  auto ast = parse_operator_dsl(expr, sc.datum);
  FockVector v = vector.empty() ? vacuum() : parse_vector_dsl(vector, sc.datum);
  RadVector r = dsl_eval(*ast, rad_from(v), sc.datum);
  if (r.is_zero()) {
    std::cout << "0\n";
    return 0;
  }
  if (r.comps.size() == 1 && r.comps.count(1)) {
    std::cout << print_vector_dsl(r.comps.at(1), sc.datum) << "\n";
    return 0;
  }
  std::cout << r.str(sc.datum) << "\n";
  return 0;
}

int cmd_report(const std::vector<std::string>& paths, const std::string& output) {
  std::vector<json> reports;
  for (auto& p : paths) {
    std::ifstream f(p);
    if (!f) throw std::invalid_argument("cannot open report '" + p + "'");
    json j;
    try {
      f >> j;
    } catch (const std::exception& e) {
      throw std::invalid_argument("malformed certificate file '" + p + "': " + e.what());
    }
    reports.push_back(std::move(j));
  }
  json merged = merge_reports(reports);
  if (!output.empty()) {
    std::ofstream f(output);
    f << merged.dump(2) << "\n";
  } else {
    std::cout << merged.dump(2) << "\n";
  }
  return merged["summary"]["failed"].get<size_t>() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for Fock-space operator calculus on Hilbert schemes"};
  app.require_subcommand(1);

  std::string surface_path, suites_arg, output, format = "text";
  RunConfig cfg;
  int threads = 0;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--surface", surface_path, "surface configuration file");
  verify->add_option("--suite", suites_arg, "comma-separated suite list (default: all)");
  verify->add_option("--output", output, "write the JSON report here");
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--max-mode", cfg.max_mode, "mode bound for the quadratic suites");
  verify->add_option("--max-weight", cfg.max_weight, "evaluation weight bound");
  verify->add_option("--lqw-mode", cfg.lqw_mode, "mode bound for the W-algebra suites");
  verify->add_option("--lqw-weight", cfg.lqw_weight, "weight bound for the W-algebra suites");
  verify->add_option("--max-level", cfg.max_level, "Virasoro level bound");
  verify->add_option("--chern-degree", cfg.chern_degree, "series truncation degree");
  verify->add_option("--sp-n", cfg.sp_n, "matrix truncation rank");
  verify->add_option("--oracle-count", cfg.oracle_count, "randomized oracle instances");
  verify->add_option("--b", cfg.b, "transcendental rank for yin/gl/kimura");
  verify->add_option("--b-model", cfg.b_model, "split model rank for the kimura control");
  std::string b_list_arg;
  verify->add_option("--b-list", b_list_arg, "comma-separated charges for shapovalov");
  verify->add_option("--threads", threads, "worker threads (0 = auto)");

  std::string expr, vector_arg;
  auto* compute = app.add_subcommand("compute", "evaluate an operator expression on a vector");
  compute->add_option("--surface", surface_path, "surface configuration file");
  compute->add_option("--expr", expr, "operator DSL expression")->required();
  compute->add_option("--vector", vector_arg, "vector DSL expression (default: v)");

  std::vector<std::string> report_paths;
  auto* report = app.add_subcommand("report", "merge certificate reports");
  report->add_option("files", report_paths, "report files")->required();
  report->add_option("--output", output, "write the merged report here");

  CLI11_PARSE(app, argc, argv);

  try {
    thread_override() = threads;
    if (verify->parsed()) {
      for (auto& s : split_list(b_list_arg)) cfg.b_list.push_back(atoi(s.c_str()));
      return cmd_verify(surface_path, suites_arg, output, format, cfg);
    }
    if (compute->parsed()) return cmd_compute(surface_path, expr, vector_arg);
    if (report->parsed()) return cmd_report(report_paths, output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
