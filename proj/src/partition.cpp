#include "contmeas/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace contmeas {

namespace {

// Subdivision of a graph into per-edge cells of equal length.
struct CellGrid {
  const EmbeddedGraph* g = nullptr;
  std::vector<int> cells_per_edge;
  std::vector<int> first_cell;  // per edge
  int total = 0;

  int edge_of(int cell) const {
    int e = static_cast<int>(std::upper_bound(first_cell.begin(), first_cell.end(),
                                              cell) -
                             first_cell.begin()) -
            1;
    return e;
  }
  std::pair<double, double> span(int cell) const {
    const int e = edge_of(cell);
    const int k = cell - first_cell[e];
    const double n = cells_per_edge[e];
    return {k / n, (k + 1) / n};
  }
  Point endpoint(int cell, bool high) const {
    const int e = edge_of(cell);
    auto [a, b] = span(cell);
    return point_at(*g, {e, high ? b : a});
  }
  double cell_length(int cell) const {
    const int e = edge_of(cell);
    return g->edge_length(e) / cells_per_edge[e];
  }
};

CellGrid make_grid(const EmbeddedGraph& g, double target) {
  CellGrid grid;
  grid.g = &g;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const double len = g.edge_length(static_cast<int>(e));
    grid.cells_per_edge.push_back(
        std::max(1, static_cast<int>(std::ceil(len / target))));
  }
  grid.first_cell.resize(g.edges.size());
  int acc = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    grid.first_cell[e] = acc;
    acc += grid.cells_per_edge[e];
  }
  grid.total = acc;
  return grid;
}

std::vector<std::vector<int>> cell_adjacency(const CellGrid& grid) {
  const auto& g = *grid.g;
  std::vector<std::vector<int>> vertex_end_cells(g.vertices.size());
  std::vector<std::vector<int>> adj(grid.total);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const int f = grid.first_cell[e], n = grid.cells_per_edge[e];
    for (int k = 0; k + 1 < n; ++k) {
      adj[f + k].push_back(f + k + 1);
      adj[f + k + 1].push_back(f + k);
    }
    vertex_end_cells[g.edges[e].first].push_back(f);
    vertex_end_cells[g.edges[e].second].push_back(f + n - 1);
  }
  for (const auto& group : vertex_end_cells)
    for (int a : group)
      for (int b : group)
        if (a != b) adj[a].push_back(b);
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return adj;
}

struct GrowingPiece {
  std::vector<int> cells;
  PointSet pts;  // cell endpoints, the diameter carriers
  double diameter = 0.0;
  double measure = 0.0;
};

double diameter_if_added(const GrowingPiece& piece, const Point& a, const Point& b) {
  double best = piece.diameter * piece.diameter;
  best = std::max(best, dist2(a, b));
  for (const auto& p : piece.pts) {
    best = std::max(best, dist2(p, a));
    best = std::max(best, dist2(p, b));
  }
  return std::sqrt(best);
}

void add_cell(GrowingPiece& piece, const CellGrid& grid, int cell) {
  const Point a = grid.endpoint(cell, false), b = grid.endpoint(cell, true);
  piece.diameter = diameter_if_added(piece, a, b);
  piece.pts.push_back(a);
  piece.pts.push_back(b);
  piece.cells.push_back(cell);
  piece.measure += grid.cell_length(cell);
}

// Greedy cover of all cells by connected pieces of diameter <= delta.
// steer_by_diameter selects the frontier cell whose addition yields the
// largest diameter (pieces stay stretched); otherwise plain BFS order.
std::vector<GrowingPiece> grow_pieces(const CellGrid& grid,
                                      const std::vector<std::vector<int>>& adj,
                                      double delta, bool steer_by_diameter) {
  std::vector<char> covered(grid.total, 0);
  std::vector<GrowingPiece> pieces;
  for (int seed = 0; seed < grid.total; ++seed) {
    if (covered[seed]) continue;
    GrowingPiece piece;
    add_cell(piece, grid, seed);
    covered[seed] = 1;
    std::set<int> frontier;
    std::vector<char> rejected(grid.total, 0);
    for (int nb : adj[seed])
      if (!covered[nb]) frontier.insert(nb);
    while (!frontier.empty()) {
      int pick = -1;
      if (steer_by_diameter) {
        double best = -1.0;
        for (int c : frontier) {
          const double d = diameter_if_added(piece, grid.endpoint(c, false),
                                             grid.endpoint(c, true));
          if (d <= delta + 1e-12 && d > best) {
            best = d;
            pick = c;
          }
        }
        if (pick < 0) break;
      } else {
        for (int c : frontier) {
          const double d = diameter_if_added(piece, grid.endpoint(c, false),
                                             grid.endpoint(c, true));
          if (d <= delta + 1e-12) {
            pick = c;
            break;
          }
          rejected[c] = 1;
        }
        if (pick < 0) break;
      }
      frontier.erase(pick);
      add_cell(piece, grid, pick);
      covered[pick] = 1;
      for (int nb : adj[pick])
        if (!covered[nb] && !rejected[nb]) frontier.insert(nb);
      if (!steer_by_diameter) {
        // drop frontier cells already marked unreachable
        for (auto it = frontier.begin(); it != frontier.end();)
          it = rejected[*it] ? frontier.erase(it) : std::next(it);
      }
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

double pieces_diameter_sum(const std::vector<GrowingPiece>& pieces) {
  double s = 0.0;
  for (const auto& p : pieces) s += p.diameter;
  return s;
}

GrowingPiece rebuild(const CellGrid& grid, const std::vector<int>& cells) {
  GrowingPiece p;
  for (int c : cells) add_cell(p, grid, c);
  return p;
}

bool connected_without(const std::vector<int>& cells, int removed,
                       const std::vector<std::vector<int>>& adj) {
  std::set<int> rest(cells.begin(), cells.end());
  rest.erase(removed);
  if (rest.empty()) return false;
  std::vector<int> stack{*rest.begin()};
  std::set<int> seen{*rest.begin()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (rest.count(v) && !seen.count(v)) {
        seen.insert(v);
        stack.push_back(v);
      }
  }
  return seen.size() == rest.size();
}

// Hill climbing on piece boundaries: move a cell to a neighboring piece
// when the total diameter sum strictly improves.
void refine_pieces(const CellGrid& grid, const std::vector<std::vector<int>>& adj,
                   double delta, std::vector<GrowingPiece>& pieces) {
  std::vector<int> owner(grid.total, -1);
  for (size_t i = 0; i < pieces.size(); ++i)
    for (int c : pieces[i].cells) owner[c] = static_cast<int>(i);
  for (int pass = 0; pass < 20; ++pass) {
    bool improved = false;
    for (int c = 0; c < grid.total; ++c) {
      const int from = owner[c];
      if (static_cast<int>(pieces[from].cells.size()) <= 1) continue;
      for (int nb : adj[c]) {
        const int to = owner[nb];
        if (to == from) continue;
        const double to_new = diameter_if_added(
            pieces[to], grid.endpoint(c, false), grid.endpoint(c, true));
        if (to_new > delta + 1e-12) continue;
        if (!connected_without(pieces[from].cells, c, adj)) continue;
        std::vector<int> from_cells = pieces[from].cells;
        from_cells.erase(std::find(from_cells.begin(), from_cells.end(), c));
        GrowingPiece from_new = rebuild(grid, from_cells);
        const double gain = (to_new + from_new.diameter) -
                            (pieces[to].diameter + pieces[from].diameter);
        if (gain > 1e-12) {
          std::vector<int> to_cells = pieces[to].cells;
          to_cells.push_back(c);
          pieces[to] = rebuild(grid, to_cells);
          pieces[from] = std::move(from_new);
          owner[c] = to;
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
}

DeltaPartition to_partition(const EmbeddedGraph& g, const CellGrid& grid,
                            const std::vector<GrowingPiece>& pieces, double delta) {
  DeltaPartition out;
  out.delta = delta;
  for (const auto& gp : pieces) {
    PartitionPiece piece;
    piece.parent = &g;
    piece.intervals.resize(g.edges.size());
    std::vector<int> cells = gp.cells;
    std::sort(cells.begin(), cells.end());
    for (int c : cells) {
      const int e = grid.edge_of(c);
      auto [a, b] = grid.span(c);
      auto& iv = piece.intervals[e];
      if (!iv.empty() && std::abs(iv.back().second - a) < 1e-15)
        iv.back().second = b;
      else
        iv.push_back({a, b});
    }
    piece.diameter = gp.diameter;
    piece.measure = gp.measure;
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

}  // namespace

DeltaPartition delta_partition(const EmbeddedGraph& g, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta_partition: delta must be > 0");
  require_valid(g);
  if (g.edges.empty()) return DeltaPartition{{}, delta};
  if (!is_connected(g))
    throw std::invalid_argument("delta_partition: apply per component");
  CellGrid grid = make_grid(g, delta / 8.0);
  auto adj = cell_adjacency(grid);
  auto pieces = grow_pieces(grid, adj, delta, /*steer_by_diameter=*/false);
  return to_partition(g, grid, pieces, delta);
}

double diameter_sum(const DeltaPartition& p) {
  double s = 0.0;
  for (const auto& piece : p.pieces) s += piece.diameter;
  return s;
}

double l_delta_lower_bound(const EmbeddedGraph& g, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be > 0");
  if (g.edges.empty()) return 0.0;
  CellGrid grid = make_grid(g, delta / 8.0);
  auto adj = cell_adjacency(grid);
  auto bfs = grow_pieces(grid, adj, delta, false);
  auto steered = grow_pieces(grid, adj, delta, true);
  double best = std::max(pieces_diameter_sum(bfs), pieces_diameter_sum(steered));
  refine_pieces(grid, adj, delta, steered);
  best = std::max(best, pieces_diameter_sum(steered));
  refine_pieces(grid, adj, delta, bfs);
  best = std::max(best, pieces_diameter_sum(bfs));
  return best;
}

namespace {

struct Oracle {
  const CellGrid* grid;
  const std::vector<std::vector<int>>* adj;
  double delta;
  std::vector<double> cell_diam;  // per-cell endpoint distance
  std::vector<char> used;         // covered or excluded
  double unused_diam = 0.0;       // sum of cell_diam over unused cells
  double best = 0.0;

  void mark(int c) {
    used[c] = 1;
    unused_diam -= cell_diam[c];
  }
  void unmark(int c) {
    used[c] = 0;
    unused_diam += cell_diam[c];
  }

  std::vector<char> seen;  // frontier bookkeeping of the piece enumeration

  void piece_search(int anchor, GrowingPiece& geom, double sum,
                    const std::vector<int>& ext);
  void family_search(double sum);
};

void Oracle::family_search(double sum) {
  int anchor = -1;
  for (int c = 0; c < grid->total; ++c)
    if (!used[c]) {
      anchor = c;
      break;
    }
  best = std::max(best, sum);
  if (anchor < 0) return;
  // bound: remaining cells contribute at most their own diameters; the
  // slack absorbs rounding across up to 64 summed terms
  if (sum + unused_diam <= best + 1e-13) return;
  // branch 1: some piece contains anchor (first, to raise the incumbent
  // early and sharpen the bound)
  GrowingPiece geom;
  add_cell(geom, *grid, anchor);
  if (geom.diameter <= delta + 1e-12) {
    mark(anchor);
    seen[anchor] = 1;
    std::vector<int> ext;
    for (int nb : (*adj)[anchor])
      if (!used[nb] && nb > anchor && !seen[nb]) {
        seen[nb] = 1;
        ext.push_back(nb);
      }
    piece_search(anchor, geom, sum, ext);
    for (int nb : ext) seen[nb] = 0;
    seen[anchor] = 0;
    unmark(anchor);
  }
  // branch 2: anchor never used
  mark(anchor);
  family_search(sum);
  unmark(anchor);
}

// Ordered connected-subset enumeration: each admissible piece containing
// the anchor is generated exactly once (extension-list scheme; a cell's
// exclusive new neighbors are appended behind the remaining candidates).
void Oracle::piece_search(int anchor, GrowingPiece& geom, double sum,
                          const std::vector<int>& ext) {
  family_search(sum + geom.diameter);  // close the piece here
  for (size_t i = 0; i < ext.size(); ++i) {
    const int v = ext[i];
    if (used[v]) continue;
    GrowingPiece extended = geom;
    add_cell(extended, *grid, v);
    if (extended.diameter > delta + 1e-12) continue;
    std::vector<int> next(ext.begin() + i + 1, ext.end());
    std::vector<int> added;
    for (int nb : (*adj)[v])
      if (!used[nb] && nb > anchor && !seen[nb]) {
        seen[nb] = 1;
        added.push_back(nb);
        next.push_back(nb);
      }
    mark(v);
    piece_search(anchor, extended, sum, next);
    unmark(v);
    for (int nb : added) seen[nb] = 0;
  }
}

}  // namespace

double l_delta_bruteforce(const EmbeddedGraph& g, double delta, int resolution) {
  if (!(delta > 0) || resolution < 1)
    throw std::invalid_argument("l_delta_bruteforce: bad parameters");
  if (g.edges.empty()) return 0.0;
  CellGrid grid;
  grid.g = &g;
  for (size_t e = 0; e < g.edges.size(); ++e)
    grid.cells_per_edge.push_back(resolution);
  grid.first_cell.resize(g.edges.size());
  int acc = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    grid.first_cell[e] = acc;
    acc += resolution;
  }
  grid.total = acc;
  if (grid.total > 64)
    throw std::invalid_argument("l_delta_bruteforce: oracle limited to desk scale");
  auto adj = cell_adjacency(grid);
  Oracle oracle;
  oracle.grid = &grid;
  oracle.adj = &adj;
  oracle.delta = delta;
  oracle.used.assign(grid.total, 0);
  oracle.seen.assign(grid.total, 0);
  // Cells are straight, so the per-cell diameter equals the endpoint
  // distance; summing those (not nominal lengths) makes the bound tight
  // enough that the all-singletons descent saturates it exactly.
  oracle.cell_diam.resize(grid.total);
  for (int c = 0; c < grid.total; ++c) {
    oracle.cell_diam[c] = dist(grid.endpoint(c, false), grid.endpoint(c, true));
    oracle.unused_diam += oracle.cell_diam[c];
  }
  oracle.family_search(0.0);
  return oracle.best;
}

}  // namespace contmeas
