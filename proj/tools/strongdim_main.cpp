#include "strongdim/frame.hpp"
#include "strongdim/generate.hpp"
#include "strongdim/io.hpp"
#include "strongdim/resolver.hpp"
#include "strongdim/sr_graph.hpp"
#include "strongdim/vertex_cover.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitBudget = 4;

void print_summary(const strongdim::SolveSummary &s, bool json) {
  if (json) {
    std::cout << strongdim::to_json(s);
    return;
  }
  std::cout << "dimension: " << s.dimension << "\n";
  std::cout << "set:";
  for (const auto &label : s.resolving_set)
    std::cout << " " << label;
  std::cout << "\n";
  for (std::size_t i = 0; i < s.trace.size(); ++i)
    std::cout << "component " << i << ": class="
              << strongdim::to_string(s.trace[i].cls)
              << " mvc=" << s.trace[i].component_mvc
              << " chosen_j=" << s.trace[i].chosen_j << "\n";
}

int run(int argc, char **argv) {
  CLI::App app{"Strong metric dimension of connected graphs: exact solver, "
               "brute-force oracle, verification and export tools"};
  app.require_subcommand(1);

  std::string input, set_csv, components_csv, out_prefix = "instance";
  bool json = false;
  int count = 1;
  std::uint64_t seed = 0;

  auto *sdim = app.add_subcommand(
      "sdim", "Dimension and a minimum strong resolving set");
  sdim->add_option("input", input, "edge-list file")->required();
  sdim->add_flag("--json", json, "machine-readable output");

  auto *oracle = app.add_subcommand(
      "oracle", "Same answer via the brute-force vertex-cover oracle");
  oracle->add_option("input", input, "edge-list file")->required();
  oracle->add_flag("--json", json, "machine-readable output");

  auto *verify =
      app.add_subcommand("verify", "Check a candidate strong resolving set");
  verify->add_option("input", input, "edge-list file")->required();
  verify->add_option("--set", set_csv, "comma-separated vertex labels")
      ->required();

  auto *srgraph = app.add_subcommand(
      "srgraph", "DOT of the strong resolving graph (mutually maximally "
                 "distant pairs)");
  srgraph->add_option("input", input, "edge-list file")->required();

  auto *decompose =
      app.add_subcommand("decompose", "DOT of the decomposition tree");
  decompose->add_option("input", input, "edge-list file")->required();

  auto *generate =
      app.add_subcommand("generate", "Reproducible composed test instances");
  generate
      ->add_option("--components", components_csv,
                   "comma list of cycle:<n>, grid:<n>x<m>, cograph:<n>, "
                   "random:<n>")
      ->required();
  generate->add_option("--count", count, "number of instances");
  generate->add_option("--seed", seed, "base seed");
  generate->add_option("--out", out_prefix,
                       "output prefix; writes <prefix><i>.edges and "
                       "<prefix><i>.meta.json");

  CLI11_PARSE(app, argc, argv);

  auto split_csv = [](const std::string &csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(csv);
    while (std::getline(stream, item, ','))
      if (!item.empty())
        out.push_back(item);
    return out;
  };

  if (sdim->parsed()) {
    print_summary(strongdim::solve(strongdim::parse_edge_list_file(input)),
                  json);
    return 0;
  }
  if (oracle->parsed()) {
    strongdim::Graph g = strongdim::parse_edge_list_file(input);
    if (!strongdim::is_connected(g))
      throw strongdim::DisconnectedError();
    strongdim::Graph sr = strongdim::strong_resolving_graph(g);
    strongdim::CoverResult cover = strongdim::min_vertex_cover(sr);
    strongdim::SolveSummary s;
    s.dimension = cover.size;
    s.resolving_set = strongdim::labels_of(g, cover.vertices);
    print_summary(s, json);
    return 0;
  }
  if (verify->parsed()) {
    strongdim::Graph g = strongdim::parse_edge_list_file(input);
    if (!strongdim::is_connected(g))
      throw strongdim::DisconnectedError();
    std::vector<strongdim::VertexId> r;
    for (const auto &label : split_csv(set_csv))
      r.push_back(g.id_of(label)); // UnknownVertexError -> parse exit code
    std::pair<strongdim::VertexId, strongdim::VertexId> witness;
    if (strongdim::is_strong_resolving_set(g, r, &witness)) {
      std::cout << "OK\n";
      return 0;
    }
    std::cout << "FAIL: pair (" << g.label(witness.first) << ", "
              << g.label(witness.second) << ") is not strongly resolved\n";
    return 1;
  }
  if (srgraph->parsed()) {
    strongdim::Graph g = strongdim::parse_edge_list_file(input);
    if (!strongdim::is_connected(g))
      throw strongdim::DisconnectedError();
    std::cout << strongdim::to_dot(strongdim::strong_resolving_graph(g));
    return 0;
  }
  if (decompose->parsed()) {
    strongdim::Graph g = strongdim::parse_edge_list_file(input);
    std::cout << strongdim::to_dot(strongdim::build_decomposition_tree(g), g);
    return 0;
  }
  // generate
  std::vector<strongdim::ComponentSpec> specs;
  for (const auto &item : split_csv(components_csv))
    specs.push_back(strongdim::parse_component_spec(item));
  for (int i = 0; i < count; ++i) {
    strongdim::GeneratedInstance inst =
        strongdim::compose_components(specs, seed + static_cast<std::uint64_t>(i));
    nlohmann::json meta;
    meta["seed"] = seed + static_cast<std::uint64_t>(i);
    meta["parts"] = nlohmann::json::array();
    for (const auto &part : inst.parts)
      meta["parts"].push_back({{"class", part.cls},
                               {"attach", part.attach},
                               {"vertices", part.vertices}});
    std::string base = out_prefix + std::to_string(i);
    std::ofstream edges(base + ".edges");
    edges << strongdim::to_edge_list(inst.graph);
    std::ofstream sidecar(base + ".meta.json");
    sidecar << meta.dump(2) << "\n";
    if (!edges || !sidecar)
      throw strongdim::ParseError(0, "cannot write '" + base + "'");
    std::cout << base << ".edges\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const strongdim::BudgetExceededError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const strongdim::DisconnectedError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const strongdim::GraphError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
