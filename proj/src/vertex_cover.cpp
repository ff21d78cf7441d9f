#include "strongdim/vertex_cover.hpp"

#include <algorithm>
#include <cstdlib>

namespace strongdim {

long long default_vc_budget() {
  static const long long value = [] {
    if (const char *env = std::getenv("STRONGDIM_VC_BUDGET")) {
      char *end = nullptr;
      long long parsed = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && parsed > 0)
        return parsed;
    }
    return 10'000'000LL;
  }();
  return value;
}

namespace {

class BranchAndBound {
public:
  BranchAndBound(const Graph &g, const VcOptions &opts)
      : g_(g), opts_(opts), active_(g.vertex_count(), 1),
        deg_(g.vertex_count(), 0), order_(g.vertices_by_label()) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      deg_[u] = g.degree(u);
  }

  CoverResult run() {
    dfs();
    std::sort(best_.begin(), best_.end());
    return CoverResult{best_, best_.size()};
  }

private:
  void deactivate(VertexId u, std::vector<VertexId> &log) {
    active_[u] = 0;
    for (VertexId v : g_.neighbors(u))
      if (active_[v])
        --deg_[v];
    log.push_back(u);
  }

  void take(VertexId u, std::vector<VertexId> &log) {
    current_.push_back(u);
    deactivate(u, log);
  }

  void undo(std::vector<VertexId> &log, std::size_t cover_mark) {
    while (!log.empty()) {
      VertexId u = log.back();
      log.pop_back();
      active_[u] = 1;
      for (VertexId v : g_.neighbors(u))
        if (active_[v])
          ++deg_[v];
    }
    current_.resize(cover_mark);
  }

  std::size_t matching_lower_bound() const {
    std::vector<char> used(active_.size(), 0);
    std::size_t matched = 0;
    for (VertexId u : order_) {
      if (!active_[u] || used[u])
        continue;
      for (VertexId v : g_.neighbors(u))
        if (active_[v] && !used[v]) {
          used[u] = used[v] = 1;
          ++matched;
          break;
        }
    }
    return matched;
  }

  void dfs() {
    if (++nodes_ > opts_.budget)
      throw BudgetExceededError(opts_.budget);
    std::vector<VertexId> log;
    const std::size_t mark = current_.size();

    // degree-0/1 reductions
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId u : order_) {
        if (!active_[u])
          continue;
        if (deg_[u] == 0) {
          deactivate(u, log);
          changed = true;
        } else if (deg_[u] == 1) {
          for (VertexId w : g_.neighbors(u))
            if (active_[w]) {
              take(w, log);
              break;
            }
          deactivate(u, log);
          changed = true;
        }
      }
    }

    bool edgeless = true;
    for (VertexId u = 0; u < g_.vertex_count() && edgeless; ++u)
      edgeless = !active_[u] || deg_[u] == 0;

    if (edgeless) {
      if (!have_best_ || current_.size() < best_.size()) {
        best_ = current_;
        have_best_ = true;
      }
    } else if (!have_best_ ||
               current_.size() + matching_lower_bound() < best_.size()) {
      // branch on a maximum-degree vertex, ties by smallest label
      VertexId pivot = -1;
      for (VertexId u : order_)
        if (active_[u] && (pivot == -1 || deg_[u] > deg_[pivot]))
          pivot = u;

      {
        std::vector<VertexId> blog;
        const std::size_t bmark = current_.size();
        take(pivot, blog);
        dfs();
        undo(blog, bmark);
      }
      {
        // pivot not in cover: all of its neighbors must be
        std::vector<VertexId> blog;
        const std::size_t bmark = current_.size();
        std::vector<VertexId> nbrs;
        for (VertexId v : g_.neighbors(pivot))
          if (active_[v])
            nbrs.push_back(v);
        deactivate(pivot, blog);
        for (VertexId v : nbrs)
          take(v, blog);
        dfs();
        undo(blog, bmark);
      }
    }

    undo(log, mark);
  }

  const Graph &g_;
  const VcOptions &opts_;
  std::vector<char> active_;
  std::vector<int> deg_;
  std::vector<VertexId> order_;
  std::vector<VertexId> current_, best_;
  bool have_best_ = false;
  long long nodes_ = 0;
};

} // namespace

CoverResult min_vertex_cover(const Graph &g, const VcOptions &opts) {
  return BranchAndBound(g, opts).run();
}

CoverResult min_vertex_cover_containing(const Graph &g,
                                        const std::vector<VertexId> &forced,
                                        const VcOptions &opts) {
  Graph residual = remove_vertices(g, forced);
  CoverResult inner = min_vertex_cover(residual, opts);
  CoverResult out;
  out.vertices = forced;
  for (VertexId u : inner.vertices)
    out.vertices.push_back(g.id_of(residual.label(u)));
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  out.size = out.vertices.size();
  return out;
}

bool is_vertex_cover(const Graph &g, const std::vector<VertexId> &cover) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId u : cover)
    in[u] = 1;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v && !in[u] && !in[v])
        return false;
  return true;
}

} // namespace strongdim
