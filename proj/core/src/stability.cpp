#include "tileforge/stability.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace tileforge {

int bond_strength(const Assembly& a, const Tileset& ts, const Coord& c,
                  Dir d) {
  TypeId t = a.at(c);
  TypeId u = a.at(c.step(d));
  if (t == kNoType || u == kNoType) return 0;
  const Glue& g = ts[t].glue(d);
  const Glue& h = ts[u].glue(opposite(d));
  return glues_bind(g, h) ? g.strength : 0;
}

namespace {

struct Graph {
  std::vector<Coord> coords;
  std::unordered_map<Coord, int, CoordHash> index;
  // adjacency as (neighbor, weight)
  std::vector<std::vector<std::pair<int, int>>> adj;
};

Graph binding_graph(const Assembly& a, const Tileset& ts) {
  Graph g;
  g.coords.reserve(a.size());
  for (const auto& [c, _] : a.tiles()) {
    g.index.emplace(c, static_cast<int>(g.coords.size()));
    g.coords.push_back(c);
  }
  g.adj.resize(g.coords.size());
  for (size_t i = 0; i < g.coords.size(); ++i) {
    for (Dir d : {Dir::N, Dir::E}) {
      Coord m = g.coords[i].step(d);
      auto it = g.index.find(m);
      if (it == g.index.end()) continue;
      int w = bond_strength(a, ts, g.coords[i], d);
      if (w > 0) {
        g.adj[i].push_back({it->second, w});
        g.adj[it->second].push_back({static_cast<int>(i), w});
      }
    }
  }
  return g;
}

bool graph_connected(const Graph& g) {
  if (g.coords.empty()) return false;
  std::vector<char> seen(g.coords.size(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  size_t n = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++n;
    for (auto [u, w] : g.adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        q.push_back(u);
      }
  }
  return n == g.coords.size();
}

// Any strength-1 bridge yields a cut of weight 1.
bool has_weak_bridge(const Graph& g) {
  size_t n = g.coords.size();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<size_t> child_it(n, 0);
  int timer = 0;
  bool weak = false;
  for (size_t root = 0; root < n && !weak; ++root) {
    if (disc[root] != -1) continue;
    std::vector<int> stack{static_cast<int>(root)};
    disc[root] = low[root] = timer++;
    while (!stack.empty() && !weak) {
      int v = stack.back();
      if (child_it[v] < g.adj[v].size()) {
        auto [u, w] = g.adj[v][child_it[v]++];
        if (disc[u] == -1) {
          parent[u] = v;
          disc[u] = low[u] = timer++;
          stack.push_back(u);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        } else {
          // Parallel edges to the parent make it a non-bridge; count them.
          int cnt = 0;
          for (auto [x, _] : g.adj[v])
            if (x == parent[v]) ++cnt;
          if (cnt > 1) low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) {
            // bridge p-v; find its weight
            for (auto [u, w] : g.adj[p])
              if (u == v && w < 2) weak = true;
          }
        }
      }
    }
  }
  return weak;
}

}  // namespace

int64_t min_cut_stoer_wagner(const Assembly& a, const Tileset& ts) {
  Graph g = binding_graph(a, ts);
  size_t n = g.coords.size();
  if (n < 2) throw Error("min cut needs at least 2 tiles");
  std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (auto [j, wt] : g.adj[i]) w[i][j] = wt;
  std::vector<int> vert(n);
  for (size_t i = 0; i < n; ++i) vert[i] = static_cast<int>(i);
  int64_t best = std::numeric_limits<int64_t>::max();
  while (vert.size() > 1) {
    size_t m = vert.size();
    std::vector<int64_t> wsum(m, 0);
    std::vector<char> in(m, 0);
    int prev = -1, sel = -1;
    for (size_t k = 0; k < m; ++k) {
      prev = sel;
      sel = -1;
      for (size_t i = 0; i < m; ++i)
        if (!in[i] && (sel == -1 || wsum[i] > wsum[sel]))
          sel = static_cast<int>(i);
      in[sel] = 1;
      for (size_t i = 0; i < m; ++i)
        if (!in[i]) wsum[i] += w[vert[sel]][vert[i]];
    }
    best = std::min(best, wsum[sel]);
    // merge the last-added vertex into the one added before it
    int keep = vert[prev], gone = vert[sel];
    for (size_t i = 0; i < m; ++i) {
      int v = vert[i];
      if (v == keep || v == gone) continue;
      w[keep][v] += w[gone][v];
      w[v][keep] += w[v][gone];
    }
    vert.erase(vert.begin() + sel);
  }
  return best;
}

bool is_tau_stable(const Assembly& a, const Tileset& ts, int tau) {
  if (a.empty()) throw Error("is_tau_stable: empty assembly");
  if (a.size() == 1) return true;
  if (tau <= 0) return true;
  Graph g = binding_graph(a, ts);
  if (!graph_connected(g)) return false;
  if (tau == 1) return true;
  if (tau == 2) return !has_weak_bridge(g);
  return min_cut_stoer_wagner(a, ts) >= tau;
}

}  // namespace tileforge
