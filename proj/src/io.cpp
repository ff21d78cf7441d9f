#include "strongdim/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace strongdim {

Graph parse_edge_list(std::istream &in) {
  Graph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a))
      continue; // blank
    if (a == "v") {
      if (!(tokens >> b) || (tokens >> extra))
        throw ParseError(lineno, "vertex declaration needs exactly one label");
      g.add_vertex(b);
      continue;
    }
    if (!(tokens >> b))
      throw ParseError(lineno, "edge needs two labels");
    if (tokens >> extra)
      throw ParseError(lineno, "unexpected token '" + extra + "'");
    try {
      g.add_edge(a, b);
    } catch (const SelfLoopError &e) {
      throw ParseError(lineno, e.what());
    }
  }
  return g;
}

Graph parse_edge_list_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  for (VertexId v : g.vertices_by_label())
    if (g.degree(v) == 0)
      out << "v " << g.label(v) << "\n";
  for (const auto &[a, b] : g.edge_list())
    out << a << " " << b << "\n";
  return out.str();
}

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string to_dot(const Graph &g) {
  std::ostringstream out;
  out << "graph {\n";
  for (VertexId v : g.vertices_by_label())
    out << "  " << quoted(g.label(v)) << ";\n";
  for (const auto &[a, b] : g.edge_list())
    out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const DecompositionTree &tree, const Graph &g) {
  std::ostringstream out;
  out << "graph {\n";
  for (std::size_t bi = 0; bi < tree.b_nodes.size(); ++bi) {
    const Graph &c = tree.b_nodes[bi].component;
    std::string members;
    for (VertexId v : c.vertices_by_label()) {
      if (!members.empty())
        members += " ";
      members += c.label(v);
    }
    out << "  b" << bi << " [shape=box, label=" << quoted(members) << "];\n";
  }
  for (std::size_t si = 0; si < tree.s_nodes.size(); ++si)
    out << "  s" << si << " [shape=circle, label="
        << quoted(g.label(tree.s_nodes[si].vertex)) << "];\n";
  for (std::size_t bi = 0; bi < tree.b_nodes.size(); ++bi)
    for (int si : tree.b_nodes[bi].s_adjacent)
      out << "  b" << bi << " -- s" << si << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const SolveSummary &summary) {
  nlohmann::json j;
  j["dimension"] = summary.dimension;
  j["set"] = summary.resolving_set;
  j["components"] = nlohmann::json::array();
  for (const auto &t : summary.trace)
    j["components"].push_back({{"class", to_string(t.cls)},
                               {"mvc", t.component_mvc},
                               {"chosen_j", t.chosen_j}});
  return j.dump(2) + "\n";
}

} // namespace strongdim
