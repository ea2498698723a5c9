// ncalg: command-line front end for the noncommutative algebra toolkit.
//
// Exit status: 0 on a positive verdict, 1 on a negative one, 2 on usage,
// parse or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncalg/commands.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const ncalg::RunReport& report, const std::string& json_path) {
  if (json_path == "-") {
    std::cout << report.to_json().dump(2) << "\n";
    return;
  }
  std::cout << report.summary;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << report.to_json().dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting, PBW checks and Hilbert series for quadratic algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "Also write the JSON report to FILE ('-' for stdout only)");

  int n = 4;
  std::size_t max_degree = 8;
  auto* pn = app.add_subcommand("pn-check", "Orient P_n and check every degree-3 ambiguity");
  pn->add_option("--n", n, "Path length")->required()->check(CLI::Range(1, 64));
  pn->add_option("--max-degree", max_degree, "Degree bound for normal-word counts");

  std::size_t cap = 16;
  auto* hil = app.add_subcommand("hilbert", "Compare the Hilbert series routes for P_n");
  hil->add_option("--n", n, "Path length")->required()->check(CLI::Range(1, 64));
  hil->add_option("--cap", cap, "Series truncation degree");

  std::string graph_path;
  std::string mode_name = "commuting";
  auto* pgc = app.add_subcommand("pgc-order", "Search a vertex ordering and run the PBW check");
  pgc->add_option("--graph", graph_path, "Graph file")->required();
  pgc->add_option("--mode", mode_name, "Which graph the file describes")
      ->check(CLI::IsMember({"commuting", "noncommuting"}));

  std::string presentation_path;
  std::string order_text;
  std::size_t complete_cap = 6;
  auto* comp = app.add_subcommand("complete", "Bounded completion of a presentation");
  comp->add_option("--presentation", presentation_path, "Presentation file")->required();
  comp->add_option("--order", order_text, "Generator order, e.g. c>b>a")->required();
  comp->add_option("--cap", complete_cap, "Degree cap");

  int i = 1, j = 2, k = 3;
  auto* s3 = app.add_subcommand("s3", "S_3 orbit of the triple relation");
  s3->add_option("--i", i);
  s3->add_option("--j", j);
  s3->add_option("--k", k);

  int n_min = 1, n_max = 8;
  std::size_t report_cap = 10;
  auto* all = app.add_subcommand("report-all", "Every check over a range of n");
  all->add_option("--n-min", n_min);
  all->add_option("--n-max", n_max);
  all->add_option("--cap", report_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ncalg::RunReport report;
    if (*pn) {
      report = ncalg::cmd_pn_check(n, max_degree);
    } else if (*hil) {
      report = ncalg::cmd_hilbert(n, cap);
    } else if (*pgc) {
      auto mode = mode_name == "commuting" ? ncalg::GraphMode::commuting
                                           : ncalg::GraphMode::noncommuting;
      report = ncalg::cmd_pgc(slurp(graph_path), mode);
    } else if (*comp) {
      report = ncalg::cmd_complete(slurp(presentation_path), order_text, complete_cap);
    } else if (*s3) {
      report = ncalg::cmd_s3(i, j, k);
    } else {
      report = ncalg::cmd_report_all(n_min, n_max, report_cap);
    }
    emit(report, json_path);
    return report.ok ? 0 : 1;
  } catch (const ncalg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
