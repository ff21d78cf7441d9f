#pragma once

#include "strongdim/decomposition.hpp"
#include "strongdim/frame.hpp"
#include "strongdim/graph.hpp"

#include <iosfwd>

namespace strongdim {

class ParseError : public GraphError {
public:
  ParseError(int line, const std::string &what)
      : GraphError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Edge-list text: one edge per line as two whitespace-separated labels,
/// `#` starts a comment, blank lines are skipped, and `v <label>` declares
/// an isolated-so-far vertex (the token `v` is reserved as a result).
Graph parse_edge_list(std::istream &in);
Graph parse_edge_list_file(const std::string &path); // ParseError on I/O too

/// Inverse of parse_edge_list: `v` lines for isolated vertices, then sorted
/// label pairs.
std::string to_edge_list(const Graph &g);

/// DOT rendering of g with every vertex present, including isolated ones.
std::string to_dot(const Graph &g);

/// DOT rendering of the decomposition tree: b-nodes as boxes listing their
/// member labels, s-nodes as circles.
std::string to_dot(const DecompositionTree &tree, const Graph &g);

/// The machine-readable report documented for the CLI:
/// {dimension, set, components:[{class, mvc, chosen_j}]}.
std::string to_json(const SolveSummary &summary);

} // namespace strongdim
