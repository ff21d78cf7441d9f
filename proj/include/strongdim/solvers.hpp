#pragma once

#include "strongdim/cotree.hpp"
#include "strongdim/graph.hpp"
#include "strongdim/vertex_cover.hpp"

#include <functional>
#include <map>
#include <optional>

namespace strongdim {

enum class ComponentClass { Cycle, Grid, Cograph, Generic };

std::string to_string(ComponentClass cls);

class NotACycleError : public GraphError {
public:
  NotACycleError() : GraphError("component is not a cycle") {}
};

class NotAGridError : public GraphError {
public:
  NotAGridError() : GraphError("component is not a grid") {}
};

class NoSolverError : public GraphError {
public:
  NoSolverError() : GraphError("no registered solver accepts the component") {}
};

/// What a component solver must answer for one biconnected component H:
/// |MVC(SR(H) \ W)| and, per query vertex q, |XVC(SR(H) \ W, MD(H,q) \ W)|,
/// with witness sets. W = `excluded` holds the separation vertices.
struct ComponentQuery {
  std::vector<VertexId> excluded;   // W, ids in the component
  std::vector<VertexId> md_queries; // may intersect W
};

struct ComponentAnswer {
  CoverResult mvc;
  std::map<VertexId, CoverResult> xvc; // query vertex -> witness cover
};

/// Grid coordinates: vertex id -> (row, col), 1-based, rows 1..n, cols 1..m.
struct GridCoords {
  int n = 0, m = 0;
  std::vector<std::pair<int, int>> coord;
  VertexId at(int i, int j) const { return index[(i - 1) * m + (j - 1)]; }
  std::vector<VertexId> index; // (i-1)*m+(j-1) -> vertex id
};

/// Coordinate assignment by double BFS from a corner; accepts exactly the
/// n x m grids with n,m >= 2.
std::optional<GridCoords> recognize_grid(const Graph &h);

/// Fixed-priority classification; C_4 counts as a cycle although grid and
/// co-graph solvers handle it too (all solvers are exact).
ComponentClass detect_class(const Graph &h);

ComponentAnswer cycle_solver(const Graph &h, const ComponentQuery &q);
ComponentAnswer grid_solver(const Graph &h, const ComponentQuery &q);
ComponentAnswer cograph_solver(const Graph &h, const ComponentQuery &q);
ComponentAnswer generic_solver(const Graph &h, const ComponentQuery &q);

struct RegisteredSolver {
  ComponentClass cls;
  std::function<bool(const Graph &)> detect;
  std::function<ComponentAnswer(const Graph &, const ComponentQuery &)> solve;
};
using SolverRegistry = std::vector<RegisteredSolver>;

/// Cycle, grid, co-graph, then the always-accepting generic fallback.
SolverRegistry default_registry();

/// Dispatches to the first solver whose detect accepts h. `used`, if given,
/// receives the class of the solver that answered.
ComponentAnswer solve_component(const Graph &h, const ComponentQuery &q,
                                const SolverRegistry &registry,
                                ComponentClass *used = nullptr);

} // namespace strongdim
