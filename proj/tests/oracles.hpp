#pragma once
// Independent re-implementations of the library's core judgments, written
// against the definitions rather than the library code, so the tests can
// cross-check both sides. Deliberately naive: brute-force scans, recursive
// enumeration, Edmonds-Karp max-flow.

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tilesim/core.hpp"
#include "tilesim/dynamics.hpp"

namespace oracles {

using namespace tilesim;

struct SideInfo {
  int glue = 0;
  const Geometry* geometry = nullptr;
  bool internal = false;
};

inline SideInfo side_info(const TileSystem& sys, int tile, int part, Dir d) {
  const TileType& t = sys.tile(tile);
  if (const auto* sq = std::get_if<SquareTileType>(&t))
    return {sq->glue[int(d)], nullptr, false};
  if (const auto* ge = std::get_if<GeometricTileType>(&t))
    return {ge->side[int(d)].glue, &ge->side[int(d)].geometry, false};
  const auto& du = std::get<DupleTileType>(t);
  const int g = du.glue[part][int(d)];
  if (g < 0) return {0, nullptr, true};
  return {g, nullptr, false};
}

inline bool geometry_clash(const Geometry& a, const Geometry& b) {
  for (int i = 1; i <= a.length(); ++i)
    if (a.bump(i) && b.bump(a.length() + 1 - i)) return true;
  return false;
}

// Cells an instance of `tile` would occupy when anchored at `p`.
inline std::vector<std::pair<Pos, int>> instance_cells(const TileSystem& sys,
                                                       int tile, Pos p) {
  std::vector<std::pair<Pos, int>> out{{p, 0}};
  const TileType& t = sys.tile(tile);
  if (const auto* du = std::get_if<DupleTileType>(&t)) {
    const Pos off = du->second_cell_offset();
    out.push_back({Pos{p.x + off.x, p.y + off.y}, 1});
  }
  return out;
}

// First-principles attachability: all target cells empty, no geometry clash
// with any occupied neighbor, summed bond strength >= temperature.
inline bool oracle_attachable(const TileSystem& sys, const Assembly& a,
                              int tile, Pos anchor) {
  const auto cells = instance_cells(sys, tile, anchor);
  for (const auto& [p, part] : cells)
    if (a.occupied(p)) return false;
  auto is_own = [&](Pos p) {
    for (const auto& [q, part] : cells)
      if (q == p) return true;
    return false;
  };
  Strength total = 0;
  for (const auto& [p, part] : cells) {
    for (Dir d : all_dirs) {
      const Pos n = step(p, d);
      if (is_own(n)) continue;
      const auto& amap = a.cells();
      auto it = amap.find(n);
      if (it == amap.end()) continue;
      const SideInfo mine = side_info(sys, tile, part, d);
      const SideInfo theirs =
          side_info(sys, it->second.tile, it->second.part, opposite(d));
      if (mine.internal || theirs.internal) continue;
      if (mine.geometry != nullptr && theirs.geometry != nullptr &&
          geometry_clash(*mine.geometry, *theirs.geometry))
        return false;
      total += sys.glues.strength(mine.glue, theirs.glue);
    }
  }
  return total >= sys.temperature;
}

// Every attachable (tile, anchor) pair, found by scanning a halo around the
// occupied cells wide enough to cover duple second cells.
inline std::vector<Attachment> oracle_frontier(const TileSystem& sys,
                                               const Assembly& a) {
  std::set<Pos> candidates;
  for (const auto& [p, cell] : a.cells()) {
    for (int dx = -2; dx <= 2; ++dx)
      for (int dy = -2; dy <= 2; ++dy)
        candidates.insert(Pos{p.x + dx, p.y + dy});
  }
  std::vector<Attachment> out;
  for (const Pos& p : candidates)
    for (int t = 0; t < static_cast<int>(sys.tiles.size()); ++t)
      if (oracle_attachable(sys, a, t, p)) out.push_back(Attachment{t, p});
  std::sort(out.begin(), out.end(), [](const Attachment& l, const Attachment& r) {
    if (l.anchor.y != r.anchor.y) return l.anchor.y < r.anchor.y;
    if (l.anchor.x != r.anchor.x) return l.anchor.x < r.anchor.x;
    return l.tile < r.tile;
  });
  return out;
}

// Recursive producible-set enumeration (depth-first, so visit order differs
// from the library's breadth-first exploration).
inline void oracle_enumerate(const TileSystem& sys, const Assembly& a,
                             std::size_t max_tiles,
                             std::map<std::string, Assembly>& seen) {
  if (!seen.emplace(a.canonical_key(), a).second) return;
  if (a.tile_count() >= max_tiles) return;
  for (const Attachment& at : oracle_frontier(sys, a)) {
    Assembly b = a;
    b.place(sys, at.tile, at.anchor);
    oracle_enumerate(sys, b, max_tiles, seen);
  }
}

inline std::vector<Assembly> oracle_producible(const TileSystem& sys,
                                               std::size_t max_tiles) {
  std::map<std::string, Assembly> seen;
  oracle_enumerate(sys, sys.seed, max_tiles, seen);
  std::vector<Assembly> out;
  for (auto& [key, a] : seen) out.push_back(a);
  return out;
}

// Undirected global min cut by fixing vertex 0 and running Edmonds-Karp to
// every other vertex. Parallel edges accumulate capacity.
inline long long oracle_min_cut(int n,
                                const std::vector<std::array<int, 3>>& edges) {
  if (n <= 1) return -1;  // no cut exists
  std::vector<std::vector<long long>> base(
      static_cast<std::size_t>(n), std::vector<long long>(n, 0));
  for (const auto& e : edges) {
    base[e[0]][e[1]] += e[2];
    base[e[1]][e[0]] += e[2];
  }
  long long best = -1;
  for (int t = 1; t < n; ++t) {
    auto cap = base;
    long long flow = 0;
    for (;;) {
      std::vector<int> prev(static_cast<std::size_t>(n), -1);
      std::deque<int> q{0};
      prev[0] = 0;
      while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (int v = 0; v < n; ++v)
          if (prev[v] < 0 && cap[u][v] > 0) {
            prev[v] = u;
            q.push_back(v);
          }
      }
      if (prev[t] < 0) break;
      long long aug = -1;
      for (int v = t; v != 0; v = prev[v]) {
        const long long c = cap[prev[v]][v];
        aug = aug < 0 ? c : std::min(aug, c);
      }
      for (int v = t; v != 0; v = prev[v]) {
        cap[prev[v]][v] -= aug;
        cap[v][prev[v]] += aug;
      }
      flow += aug;
    }
    if (best < 0 || flow < best) best = flow;
  }
  return best;
}

// Binding edges recomputed from raw cells: positive-strength glue contacts
// between different instances (geometry-incompatible contacts bond nothing).
inline std::vector<std::array<int, 3>> oracle_binding_edges(
    const TileSystem& sys, const Assembly& a, std::vector<int>& vertex_of) {
  std::map<int, int> vertex;
  for (const auto& [id, inst] : a.instances()) {
    const int v = static_cast<int>(vertex.size());
    vertex[id] = v;
  }
  vertex_of.clear();
  for (const auto& [id, inst] : a.instances()) vertex_of.push_back(id);
  std::vector<std::array<int, 3>> edges;
  for (const auto& [p, cell] : a.cells()) {
    for (Dir d : {Dir::north, Dir::east}) {
      const Pos n = step(p, d);
      auto it = a.cells().find(n);
      if (it == a.cells().end()) continue;
      if (it->second.instance == cell.instance) continue;
      const SideInfo mine = side_info(sys, cell.tile, cell.part, d);
      const SideInfo theirs =
          side_info(sys, it->second.tile, it->second.part, opposite(d));
      if (mine.internal || theirs.internal) continue;
      if (mine.geometry != nullptr && theirs.geometry != nullptr &&
          geometry_clash(*mine.geometry, *theirs.geometry))
        continue;
      const Strength s = sys.glues.strength(mine.glue, theirs.glue);
      if (s > 0)
        edges.push_back({vertex[cell.instance], vertex[it->second.instance], s});
    }
  }
  return edges;
}

inline bool oracle_tau_stable(const TileSystem& sys, const Assembly& a) {
  if (a.tile_count() <= 1) return true;
  std::vector<int> vertex_of;
  const auto edges = oracle_binding_edges(sys, a, vertex_of);
  const long long cut =
      oracle_min_cut(static_cast<int>(a.tile_count()), edges);
  return cut >= sys.temperature;
}

}  // namespace oracles
