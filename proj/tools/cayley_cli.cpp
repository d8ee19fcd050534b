// Batch CLI: constructs the library's graph families, searches for new
// generator specs, verifies certificate files, reproduces the result tables,
// and exports edge lists.
//
// Exit codes: 0 success, 1 verification failure / nothing found,
//             2 invalid input, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cayley/cayley.hpp"

using namespace cayley;

namespace {

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::verification_failed:
    case errc::not_strongly_connected:
    case errc::uncovered_element:
    case errc::goodness_violation:
      return 1;
    case errc::budget_exceeded:
    case errc::search_space_exceeded:
      return 3;
    default:
      return 2;
  }
}

void print_report(const DiameterReport& rep, bool directed) {
  std::cout << "order " << rep.order << ", degree " << rep.degree << ", "
            << (directed ? "directed " : "") << "diameter " << rep.diameter << "\n";
  std::cout << "distance histogram:";
  for (std::size_t d = 0; d < rep.histogram.size(); ++d)
    std::cout << " " << d << ":" << rep.histogram[d];
  std::cout << "\n";
}

template <GroupLike G>
void export_graph(const CayleyGraph<G>& graph, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  require(out.good(), errc::invalid_input, "cannot open " + path);
  write_edge_list(graph, out);
  std::cout << "edge list written to " << path << "\n";
}

struct TableRow {
  bool directed;
  int k;
  std::size_t s;
  std::uint64_t n;
  const char* display;
};

const TableRow kTableRows[] = {
    {false, 3, 4, 12, "Z12"},
    {false, 3, 5, 24, "S4"},
    {false, 3, 6, 48, "(Z4xZ4):Z3"},
    {false, 3, 7, 72, "(Z2^2:Z9):Z2"},
    {false, 4, 3, 4, "Z4"},
    {false, 4, 4, 24, "S4"},
    {false, 4, 5, 60, "Z15:Z4"},
    {false, 5, 3, 6, "S3"},
    {false, 5, 4, 60, "A5"},
    {false, 6, 3, 12, "A4"},
    {false, 6, 4, 78, "Z2x(Z13:Z3)"},
    {false, 7, 3, 14, "D14"},
    {false, 7, 4, 168, "Z8x(Z7:Z3)"},
    {true, 3, 4, 48, "Z2xS4"},
    {true, 4, 3, 36, "Z3xA4"},
    {true, 5, 3, 120, "S5"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graph constructions for the degree-diameter problem"};
  app.require_subcommand(1);

  std::string family, cert_path, out_path, cert_out_path, group_text, exemplar, table_mode;
  int k = 0, k_max = 0;
  std::size_t s = 0;
  std::uint64_t n = 0;
  unsigned m = 2, p = 5;
  std::size_t degree = 0;
  bool directed = false, square = false, allow_adjacent = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed5eedULL;
  unsigned samples = 100;
  SearchBudgets budgets;

  auto* construct = app.add_subcommand("construct", "build a graph family and report its diameter");
  construct->add_option("--family", family, "heisenberg | semidirect | dihedral | abelian")
      ->required();
  construct->add_option("--p", p, "odd prime (heisenberg)");
  construct->add_option("--k", k, "diameter (dihedral)");
  construct->add_option("--m", m, "coordinate modulus");
  construct->add_option("--n", n, "cyclic modulus (abelian)");
  construct->add_option("--degree", degree, "pad the generating set to this degree");
  construct->add_flag("--square", square, "use the two-coordinate cover (abelian)");
  construct->add_option("--cert", cert_path, "instantiate from a certificate file (semidirect)");
  construct->add_option("--exemplar", exemplar, "built-in spec: diam6 | diam4 (semidirect)");
  construct->add_option("--out", out_path, "write the edge list here");
  construct->add_option("--cert-out", cert_out_path, "write the certificate here");

  auto* verify = app.add_subcommand("verify", "recheck a certificate file end to end");
  verify->add_option("--cert", cert_path, "certificate file")->required();
  verify->add_option("--m", m, "coordinate modulus to instantiate at");
  verify->add_option("--samples", samples, "replay samples per element");
  verify->add_option("--seed", seed, "seed for the replay sampling");

  auto* search_cmd = app.add_subcommand("search", "search for a generator spec");
  search_cmd->add_option("--k", k, "target diameter")->required();
  search_cmd->add_option("--s", s, "set size")->required();
  search_cmd->add_option("--n", n, "group order (walks the catalog)");
  search_cmd->add_option("--group", group_text, "search one group, e.g. cyclic(12)");
  search_cmd->add_flag("--directed", directed, "directed mode");
  search_cmd->add_option("--budget-groups", budgets.max_groups, "catalog groups to try");
  search_cmd->add_option("--budget-homs", budgets.max_homs, "homomorphisms per group");
  search_cmd->add_option("--budget-sets", budgets.max_sets, "covering sets per group");
  search_cmd->add_option("--budget-vectors", budgets.max_vector_families,
                         "vector families per candidate");
  search_cmd->add_flag("--allow-adjacent-inverses", allow_adjacent,
                       "experimental: drop the adjacency constraint");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_option("--out", out_path, "write the best certificate here");

  auto* coverage_cmd = app.add_subcommand("coverage", "dihedral good-string coverage");
  coverage_cmd->add_option("--k", k, "odd diameter >= 7")->required();
  coverage_cmd->add_option("--k-max", k_max, "sweep odd k up to this bound");
  coverage_cmd->add_option("--jobs", jobs, "worker threads");
  coverage_cmd->add_option("--out", out_path, "write the coverage certificate here");

  auto* table_cmd = app.add_subcommand("table", "print the known best-construction rows");
  table_cmd->add_option("--set", table_mode, "undirected | directed (default both)");
  table_cmd->add_option("--k", k, "only rows with this diameter");

  auto* bench = app.add_subcommand("bench", "timing report for the core operations");
  bench->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      if (family == "heisenberg") {
        if (degree != 0) {
          auto built = graph_for_degree(degree);
          std::cout << "largest usable prime p = " << built.p << "\n";
          auto rep = diameter(built.graph);
          print_report(rep, false);
          require(rep.diameter == 3, errc::verification_failed, "diameter is not 3");
          export_graph(built.graph, out_path);
          if (!cert_out_path.empty())
            write_json_file(heisenberg_certificate_to_json(built.genset, rep), cert_out_path);
        } else {
          auto group = std::make_shared<HeisenbergGroup>(p);
          HeisGenset set = diameter3_genset(p);
          CayleyGraph<HeisenbergGroup> graph{group, set.all, false};
          auto rep = diameter(graph);
          print_report(rep, false);
          require(rep.diameter == 3, errc::verification_failed, "diameter is not 3");
          export_graph(graph, out_path);
          if (!cert_out_path.empty())
            write_json_file(heisenberg_certificate_to_json(set, rep), cert_out_path);
        }
      } else if (family == "dihedral") {
        require(k != 0, errc::invalid_input, "dihedral needs --k");
        auto graph = build_dihedral_graph(
            k, m, degree ? std::optional<std::size_t>(degree) : std::nullopt);
        auto rep = diameter(graph);
        print_report(rep, false);
        require(rep.diameter == static_cast<std::uint32_t>(k), errc::verification_failed,
                "diameter does not equal k");
        export_graph(graph, out_path);
        if (!cert_out_path.empty()) {
          GoodStringTable table = coverage_table(k, jobs);
          write_json_file(dihedral_certificate_to_json(table, {m}), cert_out_path);
        }
      } else if (family == "abelian") {
        require(n != 0, errc::invalid_input, "abelian needs --n");
        if (square) {
          auto cover = znzn_cover(n);
          auto group = std::make_shared<TableGroup>(
              build_group("product(cyclic(" + std::to_string(n) + "),cyclic(" + std::to_string(n) +
                              "))",
                          n * n));
          std::vector<elem_t> gens;
          for (auto [a, b] : cover) gens.push_back(static_cast<elem_t>(a * n + b));
          CayleyGraph<TableGroup> graph{group, gens, false};
          auto rep = diameter(graph);
          print_report(rep, false);
          require(rep.diameter <= 3, errc::verification_failed, "diameter exceeds 3");
          export_graph(graph, out_path);
        } else {
          DigitCover cover = zn_cover(n);
          auto group = std::make_shared<CyclicGroup>(CyclicGroup{n});
          CayleyGraph<CyclicGroup> graph{group, cover.set, false};
          auto rep = diameter(graph);
          print_report(rep, false);
          require(rep.diameter <= 3, errc::verification_failed, "diameter exceeds 3");
          export_graph(graph, out_path);
        }
      } else if (family == "semidirect") {
        Certificate cert;
        if (!cert_path.empty()) {
          cert = certificate_from_json(read_json_file(cert_path));
        } else if (exemplar == "diam6") {
          cert = std::get<Certificate>(build_certificate(cyclic36_diameter6_spec()));
        } else if (exemplar == "diam4") {
          cert = std::get<Certificate>(build_certificate(sym4_diameter4_spec()));
        } else {
          fail(errc::invalid_input, "semidirect needs --cert or --exemplar diam6|diam4");
        }
        auto outcome = verify_certificate(cert, m, {.replay_samples = samples, .seed = seed});
        require(outcome.ok, errc::verification_failed, outcome.message);
        print_report(outcome.report, cert.spec.directed);
        auto graph = instantiate_graph(cert.spec, m);
        export_graph(graph, out_path);
        if (!cert_out_path.empty()) write_json_file(certificate_to_json(cert), cert_out_path);
      } else {
        fail(errc::invalid_input, "unknown family '" + family + "'");
      }
    } else if (verify->parsed()) {
      json j = read_json_file(cert_path);
      std::string kind = j.value("kind", "");
      VerifyOutcome outcome;
      bool dir = false;
      if (kind == "semidirect") {
        Certificate cert = certificate_from_json(j);
        dir = cert.spec.directed;
        outcome = verify_certificate(cert, m, {.replay_samples = samples, .seed = seed});
      } else if (kind == "dihedral") {
        outcome = verify_dihedral_certificate(dihedral_certificate_from_json(j), m);
      } else if (kind == "heisenberg") {
        outcome = verify_heisenberg_certificate(heisenberg_certificate_from_json(j));
      } else {
        fail(errc::invalid_input, "unknown certificate kind '" + kind + "'");
      }
      if (!outcome.ok) {
        std::cout << "FAIL: " << outcome.message << "\n";
        return 1;
      }
      std::cout << "certificate verifies\n";
      print_report(outcome.report, dir);
    } else if (search_cmd->parsed()) {
      SearchParams params;
      params.k = k;
      params.s = s;
      params.directed = directed;
      if (!group_text.empty()) params.group_text = group_text;
      if (n != 0) params.order = n;
      params.budgets = budgets;
      params.jobs = jobs;
      params.forbid_adjacent_inverse = !allow_adjacent;
      auto started = std::chrono::steady_clock::now();
      auto outcome = search(params);
      auto elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      std::cout << "groups tried: " << outcome.groups_tried
                << ", candidates tried: " << outcome.candidates_tried << " (" << elapsed
                << "s)\n";
      if (!outcome.best) {
        if (outcome.truncated) {
          std::cout << "budget exceeded before any certificate was found\n";
          return 3;
        }
        std::cout << "no certificate exists within this search space\n";
        return 1;
      }
      const Certificate& cert = *outcome.best;
      std::cout << "found certificate over " << cert.spec.group_spec_text << ", ratio "
                << cert.ratio.num << "/" << cert.ratio.den << " ~= " << cert.ratio.decimal5()
                << "\n";
      if (!out_path.empty()) {
        write_json_file(certificate_to_json(cert), out_path);
        std::cout << "certificate written to " << out_path << "\n";
      }
    } else if (coverage_cmd->parsed()) {
      int hi = k_max ? k_max : k;
      json all = json::array();
      for (int kk = k; kk <= hi; kk += 2) {
        auto started = std::chrono::steady_clock::now();
        GoodStringTable table = coverage_table(kk, jobs);
        auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::cout << "k=" << kk << ": all " << table.entries.size() << " elements covered ("
                  << elapsed << "s)\n";
        if (!out_path.empty()) all.push_back(dihedral_certificate_to_json(table, {}));
      }
      if (!out_path.empty()) write_json_file(all.size() == 1 ? all[0] : all, out_path);
    } else if (table_cmd->parsed()) {
      std::cout << "diameter | set size | order | group | ratio\n";
      for (const auto& row : kTableRows) {
        if (!table_mode.empty() && row.directed != (table_mode == "directed")) continue;
        if (k != 0 && row.k != k) continue;
        Ratio r = make_ratio(row.n, row.s, static_cast<unsigned>(row.k));
        std::cout << row.k << (row.directed ? " (directed)" : "") << " | " << row.s << " | "
                  << row.n << " | " << row.display << " | " << r.fraction_text(row.s, row.k)
                  << " ~= " << r.decimal5() << "\n";
      }
    } else if (bench->parsed()) {
      auto time_it = [](const char* name, auto&& fn) {
        auto started = std::chrono::steady_clock::now();
        fn();
        auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::cout << name << ": " << elapsed << "s\n";
      };
      time_it("diameter-6 certificate build",
              [] { build_certificate(cyclic36_diameter6_spec()); });
      time_it("diameter-6 graph at m=3 (order 26244)", [] {
        auto cert = std::get<Certificate>(build_certificate(cyclic36_diameter6_spec()));
        diameter(instantiate_graph(cert.spec, 3));
      });
      time_it("matrix-group family at p=11 (order 2662)", [] {
        auto group = std::make_shared<HeisenbergGroup>(11);
        diameter(CayleyGraph<HeisenbergGroup>{group, diameter3_genset(11).all, false});
      });
      time_it("dihedral coverage at k=101", [&] { coverage_table(101, jobs); });
      time_it("dihedral graph k=9, m=2 (order 9216)", [] { diameter(build_dihedral_graph(9, 2)); });
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
