#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "contmeas/chain.hpp"
#include "contmeas/golab.hpp"
#include "contmeas/graph_io.hpp"
#include "contmeas/parametrize.hpp"
#include "contmeas/partition.hpp"
#include "contmeas/path.hpp"
#include "contmeas/selftest.hpp"
#include "json.hpp"

namespace {

using contmeas::EmbeddedGraph;
using nlohmann::json;

// Numbers in reports always carry a decimal point or exponent.
std::string fmt_num(double v) {
  char b[64];
  std::snprintf(b, sizeof(b), "%.12g", v);
  std::string s = b;
  if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  return s;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

json polyline_json(const contmeas::PolylinePath& p) {
  json bps = json::array();
  for (const auto& k : p.breakpoints) bps.push_back(json::array({k.t, k.p}));
  return json{{"breakpoints", bps}};
}

json ledger_json(const contmeas::TraversalLedger& l) {
  json edges = json::array();
  for (size_t e = 0; e < l.forward.size(); ++e)
    edges.push_back({{"edge", e}, {"fwd", l.forward[e]}, {"bwd", l.backward[e]}});
  return json{{"edges", edges}};
}

std::vector<int> parse_n_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"measure-theoretic computations on embedded metric graphs"};
  app.require_subcommand(1);

  std::string graph_path, graph_path_b, out_path, scenario_name = "staircase";
  std::string n_csv = "2,4,8,16,32";
  double delta = 0.1, eps = 0.05, tol = 1e-9;
  uint64_t seed = 0;
  int from_edge = 0, to_edge = 0;
  double from_s = 0.0, to_s = 1.0;

  auto* c_h1 = app.add_subcommand("h1", "exact length of a graph");
  c_h1->add_option("graph", graph_path)->required();

  auto* c_hd = app.add_subcommand("hausdorff", "Hausdorff distance between eps-nets");
  c_hd->add_option("graph", graph_path)->required();
  c_hd->add_option("other", graph_path_b)->required();
  c_hd->add_option("--eps", eps);

  auto* c_ld = app.add_subcommand("ldelta", "certified lower bound for L_delta");
  c_ld->add_option("graph", graph_path)->required();
  c_ld->add_option("--delta", delta)->required();

  auto* c_geo = app.add_subcommand("geodesic", "shortest path between graph points");
  c_geo->add_option("graph", graph_path)->required();
  c_geo->add_option("--from-edge", from_edge);
  c_geo->add_option("--from-s", from_s);
  c_geo->add_option("--to-edge", to_edge);
  c_geo->add_option("--to-s", to_s);
  c_geo->add_option("--out", out_path);

  auto* c_par = app.add_subcommand("parametrize", "canonical double-cover path");
  c_par->add_option("graph", graph_path)->required();
  c_par->add_option("--out", out_path);

  auto* c_dz = app.add_subcommand("degzero", "degree-zero integral test of the double cover");
  c_dz->add_option("graph", graph_path)->required();
  c_dz->add_option("--seed", seed);
  c_dz->add_option("--tol", tol);

  auto* c_go = app.add_subcommand("golab", "semicontinuity scenario report");
  c_go->add_option("--scenario", scenario_name);
  c_go->add_option("--n", n_csv);
  c_go->add_option("--eps", eps);
  c_go->add_option("--out", out_path);

  auto* c_st = app.add_subcommand("selftest", "run the acceptance battery");
  c_st->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_h1->parsed()) {
      std::cout << fmt_num(contmeas::h1(contmeas::load_graph(graph_path))) << "\n";
    } else if (c_hd->parsed()) {
      auto a = contmeas::epsilon_net(contmeas::load_graph(graph_path), eps).coords();
      auto b = contmeas::epsilon_net(contmeas::load_graph(graph_path_b), eps).coords();
      std::cout << fmt_num(contmeas::hausdorff_distance(a, b)) << "\n";
    } else if (c_ld->parsed()) {
      EmbeddedGraph g = contmeas::load_graph(graph_path);
      std::cout << fmt_num(contmeas::l_delta_lower_bound(g, delta)) << "\n";
    } else if (c_geo->parsed()) {
      EmbeddedGraph g = contmeas::load_graph(graph_path);
      auto path = contmeas::geodesic(g, {from_edge, from_s}, {to_edge, to_s});
      emit(out_path, polyline_json(path).dump(2) + "\n");
      std::cout << "length=" << fmt_num(contmeas::path_length(path)) << "\n";
    } else if (c_par->parsed()) {
      EmbeddedGraph g = contmeas::load_graph(graph_path);
      auto res = contmeas::canonical_parametrization(g);
      json doc = polyline_json(res.path);
      doc["ledger"] = ledger_json(res.ledger)["edges"];
      emit(out_path, doc.dump(2) + "\n");
      const double len = contmeas::path_length(res.path);
      const double h = contmeas::h1(g);
      std::cout << "length=" << fmt_num(len) << " h1=" << fmt_num(h)
                << " ratio=" << fmt_num(len / h) << "\n";
    } else if (c_dz->parsed()) {
      EmbeddedGraph g = contmeas::load_graph(graph_path);
      auto res = contmeas::canonical_parametrization(g);
      auto dz = contmeas::degree_zero_test(res.path, seed, tol);
      std::cout << "degree_zero=" << (dz.zero ? "true" : "false")
                << " residual=" << fmt_num(dz.worst_residual)
                << " seed=" << seed << "\n";
    } else if (c_go->parsed()) {
      auto rep = contmeas::semicontinuity_report(contmeas::make_scenario(scenario_name),
                                                 parse_n_list(n_csv), eps);
      std::ostringstream os;
      os << "n,dH,h1\n";
      for (const auto& row : rep.rows)
        os << row.n << "," << fmt_num(row.d_hausdorff) << ","
           << fmt_num(row.h1_value) << "\n";
      json verdict{{"scenario", scenario_name},
                   {"holds", rep.holds},
                   {"h1_limit", rep.h1_limit},
                   {"liminf_estimate", rep.liminf_estimate},
                   {"eps", rep.net_eps},
                   {"tolerance", rep.tolerance}};
      os << verdict.dump(2) << "\n";
      emit(out_path, os.str());
    } else if (c_st->parsed()) {
      auto rep = contmeas::run_selftest(seed);
      std::cout << contmeas::format_selftest(rep);
      return rep.all_passed ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
