#include "tilesim/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tilesim {

std::vector<std::pair<Pos, std::uint8_t>> attachment_cells(const TileSystem& sys,
                                                           const Attachment& at) {
  std::vector<std::pair<Pos, std::uint8_t>> cells{{at.anchor, 0}};
  const TileType& t = sys.tile(at.tile);
  if (const auto* d = std::get_if<DupleTileType>(&t)) {
    Pos off = d->second_cell_offset();
    cells.push_back({{at.anchor.x + off.x, at.anchor.y + off.y}, 1});
  }
  return cells;
}

namespace {

std::optional<Face> attachment_face(const TileSystem& sys, const Attachment& at,
                                    std::uint8_t part, Dir d) {
  const TileType& t = sys.tile(at.tile);
  if (const auto* sq = std::get_if<SquareTileType>(&t))
    return Face{sq->glue[int(d)], nullptr};
  if (const auto* ge = std::get_if<GeometricTileType>(&t))
    return Face{ge->side[int(d)].glue, &ge->side[int(d)].geometry};
  const auto& du = std::get<DupleTileType>(t);
  if (du.internal_dir(part, d)) return std::nullopt;
  return Face{du.glue[part][int(d)], nullptr};
}

struct Contact {
  bool blocked = false;   // geometric incompatibility on some abutting pair
  Strength bonds = 0;
};

Contact contact(const TileSystem& sys, const Assembly& a, const Attachment& at,
                const std::vector<std::pair<Pos, std::uint8_t>>& cells) {
  Contact c;
  for (const auto& [p, part] : cells) {
    for (Dir d : all_dirs) {
      Pos q = step(p, d);
      bool own = std::any_of(cells.begin(), cells.end(),
                             [&](const auto& pc) { return pc.first == q; });
      if (own) continue;
      auto other = facing(sys, a, q, opposite(d));
      if (!other) continue;
      auto mine = attachment_face(sys, at, part, d);
      if (!mine) continue;
      if (mine->geometry && other->geometry &&
          !geometry_compatible(*mine->geometry, *other->geometry)) {
        c.blocked = true;
        return c;
      }
      c.bonds += sys.glues.strength(mine->glue, other->glue);
    }
  }
  return c;
}

}  // namespace

Strength attachment_strength(const TileSystem& sys, const Assembly& a,
                             const Attachment& at) {
  if (at.tile < 0 || at.tile >= static_cast<int>(sys.tiles.size())) return 0;
  auto cells = attachment_cells(sys, at);
  for (const auto& [p, part] : cells)
    if (a.occupied(p)) return 0;
  Contact c = contact(sys, a, at, cells);
  return c.blocked ? 0 : c.bonds;
}

bool attachable(const TileSystem& sys, const Assembly& a, const Attachment& at) {
  return attachment_strength(sys, a, at) >= sys.temperature;
}

std::vector<Attachment> frontier(const TileSystem& sys, const Assembly& a) {
  std::vector<Attachment> out;
  if (a.cell_count() == 0) return out;
  std::set<Pos> halo;
  for (const auto& [p, c] : a.cells())
    for (Dir d : all_dirs) {
      Pos q = step(p, d);
      if (!a.occupied(q)) halo.insert(q);
    }
  std::set<Attachment> seen;
  for (Pos cell : halo) {
    for (int t = 0; t < static_cast<int>(sys.tiles.size()); ++t) {
      std::vector<Pos> anchors{cell};
      if (const auto* d = std::get_if<DupleTileType>(&sys.tile(t))) {
        Pos off = d->second_cell_offset();
        anchors.push_back({cell.x - off.x, cell.y - off.y});
      }
      for (Pos anchor : anchors) {
        Attachment at{t, anchor};
        if (seen.count(at)) continue;
        seen.insert(at);
        if (attachable(sys, a, at)) out.push_back(at);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Attachment& a, const Attachment& b) {
    return std::tuple(a.anchor.y, a.anchor.x, a.tile) <
           std::tuple(b.anchor.y, b.anchor.x, b.tile);
  });
  return out;
}

Assembly attach(const TileSystem& sys, const Assembly& a, const Attachment& at) {
  if (!attachable(sys, a, at)) {
    std::ostringstream os;
    os << "illegal attachment of tile " << at.tile << " at (" << at.anchor.x
       << "," << at.anchor.y << ")";
    throw Error(ErrorCode::attachment, os.str());
  }
  Assembly grown = a;
  grown.place(sys, at.tile, at.anchor);
  return grown;
}

namespace {

Attachment pick(const std::vector<Attachment>& f, SequencePolicy policy,
                std::mt19937_64& rng) {
  switch (policy) {
    case SequencePolicy::lex:
      return f.front();  // frontier() already sorts by (y, x, tile)
    case SequencePolicy::lowest_y_first: {
      int ymin = f.front().anchor.y;  // sorted ascending by y
      std::vector<Attachment> lows;
      for (const auto& at : f)
        if (at.anchor.y == ymin) lows.push_back(at);
      return lows[rng() % lows.size()];
    }
    case SequencePolicy::random:
      return f[rng() % f.size()];
  }
  throw Error(ErrorCode::internal, "bad policy");
}

}  // namespace

RunResult run(const TileSystem& sys, SequencePolicy policy,
              std::size_t max_tiles, std::uint64_t rng_seed) {
  if (max_tiles < sys.seed.tile_count())
    throw Error(ErrorCode::attachment, "max_tiles smaller than the seed");
  RunResult r;
  r.assembly = sys.seed;
  std::mt19937_64 rng(rng_seed);
  while (r.assembly.tile_count() < max_tiles) {
    auto f = frontier(sys, r.assembly);
    if (f.empty()) {
      r.reached_terminal = true;
      return r;
    }
    Attachment at = pick(f, policy, rng);
    r.assembly = attach(sys, r.assembly, at);
    r.sequence.attachments.push_back(at);
  }
  r.reached_terminal = frontier(sys, r.assembly).empty();
  return r;
}

Assembly replay(const TileSystem& sys, const AssemblySequence& seq) {
  Assembly a = sys.seed;
  for (const auto& at : seq.attachments) a = attach(sys, a, at);
  return a;
}

int ExplorationGraph::find(const Assembly& a) const {
  auto it = index.find(a.canonical_key());
  return it == index.end() ? -1 : it->second;
}

AssemblySequence ExplorationGraph::sequence_to(int node) const {
  AssemblySequence seq;
  std::vector<Attachment> rev;
  for (int cur = node; cur >= 0 && nodes[cur].parent >= 0;
       cur = nodes[cur].parent)
    rev.push_back(nodes[cur].via);
  seq.attachments.assign(rev.rbegin(), rev.rend());
  return seq;
}

ExplorationGraph explore(const TileSystem& sys, std::size_t max_tiles,
                         const ExplorationLimits& limits) {
  ExplorationGraph g;
  if (sys.seed.tile_count() > max_tiles) return g;
  g.nodes.push_back({sys.seed, -1, {}, {}, false, false});
  g.index.emplace(sys.seed.canonical_key(), 0);
  std::deque<int> work{0};
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    // nodes may reallocate while children are appended; copy what we need
    Assembly current = g.nodes[id].assembly;
    auto f = frontier(sys, current);
    if (f.empty()) {
      g.nodes[id].terminal = true;
      continue;
    }
    if (current.tile_count() >= max_tiles) {
      g.nodes[id].at_bound = true;
      g.truncated = true;
      continue;
    }
    for (const auto& at : f) {
      Assembly child = current;
      child.place(sys, at.tile, at.anchor);
      std::string key = child.canonical_key();
      auto it = g.index.find(key);
      int cid;
      if (it == g.index.end()) {
        if (g.nodes.size() >= limits.max_states)
          throw ResourceLimitError(
              "producible-set exploration exceeded the state limit",
              g.nodes.size());
        cid = static_cast<int>(g.nodes.size());
        g.nodes.push_back({std::move(child), id, at, {}, false, false});
        g.index.emplace(std::move(key), cid);
        work.push_back(cid);
      } else {
        cid = it->second;
      }
      g.nodes[id].succ.push_back(cid);
    }
  }
  return g;
}

std::vector<Assembly> enumerate_producible(const TileSystem& sys,
                                           std::size_t max_tiles,
                                           const ExplorationLimits& limits) {
  ExplorationGraph g = explore(sys, max_tiles, limits);
  std::vector<Assembly> out;
  out.reserve(g.nodes.size());
  for (auto& n : g.nodes) out.push_back(n.assembly);
  std::sort(out.begin(), out.end(), [](const Assembly& a, const Assembly& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

TerminalSet enumerate_terminal(const TileSystem& sys, std::size_t max_tiles,
                               const ExplorationLimits& limits) {
  ExplorationGraph g = explore(sys, max_tiles, limits);
  TerminalSet ts;
  ts.truncated = g.truncated;
  for (auto& n : g.nodes)
    if (n.terminal) ts.assemblies.push_back(n.assembly);
  std::sort(ts.assemblies.begin(), ts.assemblies.end(),
            [](const Assembly& a, const Assembly& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return ts;
}

BoundedVerdict is_directed(const TileSystem& sys, std::size_t max_tiles,
                           const ExplorationLimits& limits) {
  ExplorationGraph g = explore(sys, max_tiles, limits);
  BoundedVerdict v;
  v.truncated = g.truncated;
  int terminals = 0;
  for (auto& n : g.nodes)
    if (n.terminal) ++terminals;
  if (terminals > 1) {
    v.holds = false;
    v.detail = "multiple terminal assemblies within the bound";
    return v;
  }
  std::map<Pos, std::pair<int, std::uint8_t>> overlay;
  for (auto& n : g.nodes) {
    for (const auto& [p, c] : n.assembly.cells()) {
      auto [it, fresh] = overlay.try_emplace(p, c.tile, c.part);
      if (!fresh && (it->second.first != c.tile || it->second.second != c.part)) {
        v.holds = false;
        std::ostringstream os;
        os << "producible assemblies disagree at (" << p.x << "," << p.y << ")";
        v.detail = os.str();
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

BoundedVerdict is_sass(const TileSystem& sys, std::size_t max_tiles,
                       const ExplorationLimits& limits) {
  BoundedVerdict v;
  // Single-frontier growth is a chain, so follow it directly instead of
  // building the exploration graph. The state guard still applies: the chain
  // is one state per tile.
  Assembly a = sys.seed;
  std::size_t states = 1;
  while (true) {
    if (states > limits.max_states)
      throw ResourceLimitError("state guard tripped while following the chain",
                               states);
    ++states;
    auto f = frontier(sys, a);
    if (f.size() > 1) {
      v.holds = false;
      std::ostringstream os;
      os << "frontier has " << f.size() << " entries at "
         << a.tile_count() << " tiles";
      v.detail = os.str();
      return v;
    }
    if (f.empty()) {
      v.holds = true;
      return v;
    }
    if (a.tile_count() >= max_tiles) {
      v.holds = true;
      v.truncated = true;
      return v;
    }
    a = attach(sys, a, f.front());
  }
}

BoundedVerdict is_zigzag(const TileSystem& sys, std::size_t max_tiles,
                         const ExplorationLimits& limits) {
  BoundedVerdict v = is_sass(sys, max_tiles, limits);
  if (!v.holds) {
    v.detail = "not single-frontier: " + v.detail;
    return v;
  }
  Assembly a = sys.seed;
  std::optional<int> prev_y;
  while (a.tile_count() <= max_tiles) {
    auto f = frontier(sys, a);
    if (f.empty()) return v;
    int y = f.front().anchor.y;
    if (prev_y && y < *prev_y) {
      v.holds = false;
      std::ostringstream os;
      os << "frontier dropped from y=" << *prev_y << " to y=" << y;
      v.detail = os.str();
      return v;
    }
    prev_y = y;
    if (a.tile_count() >= max_tiles) {
      v.truncated = true;
      return v;
    }
    a = attach(sys, a, f.front());
  }
  return v;
}

}  // namespace tilesim
