#include "tilesim/windows.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tilesim {

namespace {

bool adjacent(Pos a, Pos b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

std::pair<Pos, Pos> normalized(const WindowEdge& e) {
  return e.a < e.b ? std::pair{e.a, e.b} : std::pair{e.b, e.a};
}

}  // namespace

Window Window::vertical(int x, int y_lo, int y_hi) {
  if (y_lo > y_hi) {
    throw Error(ErrorCode::window, "vertical window has an empty row range");
  }
  Window w;
  w.vertical_x = x;
  w.anchor = Pos{x, y_lo};
  for (int y = y_lo; y <= y_hi; ++y) {
    w.edges.push_back({Pos{x - 1, y}, Pos{x, y}});
  }
  return w;
}

Window Window::from_edges(std::vector<WindowEdge> edges, Pos anchor) {
  for (const auto& e : edges) {
    if (!adjacent(e.a, e.b)) {
      throw Error(ErrorCode::window, "window edge cells are not adjacent");
    }
  }
  Window w;
  w.edges = std::move(edges);
  w.anchor = anchor;
  return w;
}

Window Window::translated(Pos offset) const {
  Window w;
  w.edges.reserve(edges.size());
  for (const auto& e : edges) {
    w.edges.push_back({Pos{e.a.x + offset.x, e.a.y + offset.y},
                       Pos{e.b.x + offset.x, e.b.y + offset.y}});
  }
  w.anchor = Pos{anchor.x + offset.x, anchor.y + offset.y};
  if (vertical_x) w.vertical_x = *vertical_x + offset.x;
  return w;
}

bool is_valid_cut(const Window& w, const Assembly& assembly) {
  if (assembly.cell_count() == 0) return true;
  auto [lo, hi] = assembly.bounding_box();
  lo.x -= 1;
  lo.y -= 1;
  hi.x += 1;
  hi.y += 1;
  auto in_region = [&](Pos p) {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  };

  std::set<std::pair<Pos, Pos>> cut;
  std::map<Pos, int> color;
  std::deque<Pos> queue;
  for (const auto& e : w.edges) {
    cut.insert(normalized(e));
    if (!in_region(e.a) || !in_region(e.b)) continue;
    for (auto [p, side] : {std::pair{e.a, 0}, std::pair{e.b, 1}}) {
      auto [it, inserted] = color.emplace(p, side);
      if (!inserted && it->second != side) return false;
      if (inserted) queue.push_back(p);
    }
  }

  while (!queue.empty()) {
    Pos p = queue.front();
    queue.pop_front();
    for (Dir d : all_dirs) {
      Pos q = step(p, d);
      if (!in_region(q)) continue;
      if (cut.count(normalized({p, q}))) continue;  // colors differ by design
      auto [it, inserted] = color.emplace(q, color[p]);
      if (!inserted && it->second != color[p]) return false;
      if (inserted) queue.push_back(q);
    }
  }
  return true;
}

WindowMovie record_movie(const TileSystem& sys, const AssemblySequence& seq,
                         const Window& w) {
  std::map<std::pair<Pos, Pos>, std::size_t> edge_index;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    edge_index[normalized(w.edges[i])] = i;
  }

  WindowMovie movie;
  Assembly a = sys.seed;
  for (std::size_t s = 0; s < seq.attachments.size(); ++s) {
    const Attachment& at = seq.attachments[s];
    auto cells = attachment_cells(sys, at);
    for (const auto& [p, part] : cells) {
      for (Dir d : all_dirs) {
        Pos q = step(p, d);
        bool own = std::any_of(cells.begin(), cells.end(),
                               [&](const auto& pc) { return pc.first == q; });
        if (own) continue;
        auto it = edge_index.find(normalized({p, q}));
        if (it == edge_index.end()) continue;
        const WindowEdge& edge = w.edges[it->second];

        GlueEvent ev;
        ev.step = static_cast<int>(s);
        ev.edge = edge;
        ev.placed_on_a = (p == edge.a);

        // The placed tile's face toward the cut. Duple-internal sides carry
        // no glue and produce no event.
        std::optional<Face> mine;
        const TileType& t = sys.tile(at.tile);
        if (const auto* sq = std::get_if<SquareTileType>(&t)) {
          mine = Face{sq->glue[int(d)], nullptr};
        } else if (const auto* ge = std::get_if<GeometricTileType>(&t)) {
          mine = Face{ge->side[int(d)].glue, &ge->side[int(d)].geometry};
        } else {
          const auto& du = std::get<DupleTileType>(t);
          if (!du.internal_dir(part, d))
            mine = Face{du.glue[part][int(d)], nullptr};
        }
        if (!mine) continue;

        auto other = facing(sys, a, q, opposite(d));
        int og = other ? other->glue : 0;
        Strength strength = 0;
        if (other) {
          bool compatible = !mine->geometry || !other->geometry ||
                            geometry_compatible(*mine->geometry, *other->geometry);
          if (compatible) strength = sys.glues.strength(mine->glue, og);
        }
        ev.glue_a = ev.placed_on_a ? mine->glue : og;
        ev.glue_b = ev.placed_on_a ? og : mine->glue;
        ev.strength = strength;
        movie.events.push_back(ev);
      }
    }
    a = attach(sys, a, at);
  }
  return movie;
}

WindowMovie bond_forming_submovie(const WindowMovie& m) {
  WindowMovie out;
  for (const auto& ev : m.events) {
    if (ev.strength > 0) out.events.push_back(ev);
  }
  return out;
}

bool movies_identical(const WindowMovie& m1, const WindowMovie& m2, Pos offset) {
  if (m1.events.size() != m2.events.size()) return false;
  for (std::size_t i = 0; i < m1.events.size(); ++i) {
    const GlueEvent& e1 = m1.events[i];
    const GlueEvent& e2 = m2.events[i];
    if (Pos{e1.edge.a.x + offset.x, e1.edge.a.y + offset.y} != e2.edge.a ||
        Pos{e1.edge.b.x + offset.x, e1.edge.b.y + offset.y} != e2.edge.b) {
      return false;
    }
    if (e1.glue_a != e2.glue_a || e1.glue_b != e2.glue_b ||
        e1.strength != e2.strength || e1.placed_on_a != e2.placed_on_a) {
      return false;
    }
  }
  return true;
}

std::optional<RepeatResult> find_repeat(const TileSystem& sys,
                                        const AssemblySequence& seq,
                                        const std::vector<Window>& windows) {
  std::vector<WindowMovie> movies;
  movies.reserve(windows.size());
  for (const auto& w : windows) {
    movies.push_back(bond_forming_submovie(record_movie(sys, seq, w)));
  }
  for (std::size_t i = 0; i < windows.size(); ++i) {
    for (std::size_t j = i + 1; j < windows.size(); ++j) {
      Pos offset{windows[j].anchor.x - windows[i].anchor.x,
                 windows[j].anchor.y - windows[i].anchor.y};
      if (movies_identical(movies[i], movies[j], offset)) {
        return RepeatResult{i, j, offset};
      }
    }
  }
  return std::nullopt;
}

namespace {

// -1: every covered cell on side A; +1: every cell on side B.
int side_of(const TileSystem& sys, const Window& w, const Attachment& at) {
  if (!w.vertical_x) {
    throw Error(ErrorCode::window, "splicing requires vertical windows");
  }
  auto cells = attachment_cells(sys, at);
  bool any_a = false, any_b = false;
  for (const auto& [p, part] : cells) {
    (p.x < *w.vertical_x ? any_a : any_b) = true;
  }
  if (any_a && any_b) {
    throw Error(ErrorCode::window, "attachment straddles the window");
  }
  return any_a ? -1 : 1;
}

Attachment translated(const Attachment& at, Pos offset, int times) {
  return Attachment{at.tile, Pos{at.anchor.x + offset.x * times,
                                 at.anchor.y + offset.y * times}};
}

SpliceResult replay_spliced(const TileSystem& sys, AssemblySequence seq) {
  SpliceResult r;
  try {
    r.assembly = replay(sys, seq);
  } catch (const Error& e) {
    throw Error(ErrorCode::window,
                std::string("spliced sequence fails to replay: ") + e.what());
  }
  r.sequence = std::move(seq);
  return r;
}

}  // namespace

SpliceResult splice_pump_down(const TileSystem& sys, const AssemblySequence& seq,
                              const Window& w0, const Window& w1, Pos offset) {
  AssemblySequence out;
  for (const Attachment& at : seq.attachments) {
    if (side_of(sys, w0, at) < 0) {
      out.attachments.push_back(at);
    } else if (side_of(sys, w1, at) > 0) {
      out.attachments.push_back(translated(at, offset, -1));
    }
  }
  return replay_spliced(sys, std::move(out));
}

SpliceResult splice_pump_up(const TileSystem& sys, const AssemblySequence& seq,
                            const Window& w0, const Window& w1, Pos offset,
                            int extra_copies) {
  if (extra_copies < 0) {
    throw Error(ErrorCode::window, "extra_copies must be non-negative");
  }
  // Partition by position: left of w0, between, right of w1. The between
  // segment is repeated, each copy shifted one offset further; the right
  // remainder shifts past the final copy.
  AssemblySequence left, mid, right;
  for (const Attachment& at : seq.attachments) {
    if (side_of(sys, w0, at) < 0) {
      left.attachments.push_back(at);
    } else if (side_of(sys, w1, at) < 0) {
      mid.attachments.push_back(at);
    } else {
      right.attachments.push_back(at);
    }
  }
  AssemblySequence out = std::move(left);
  for (int c = 0; c <= extra_copies; ++c) {
    for (const Attachment& at : mid.attachments) {
      out.attachments.push_back(translated(at, offset, c));
    }
  }
  for (const Attachment& at : right.attachments) {
    out.attachments.push_back(translated(at, offset, extra_copies));
  }
  return replay_spliced(sys, std::move(out));
}

PumpingBound pumping_bound(std::uint64_t glue_types, std::uint64_t scale) {
  const std::uint64_t positions = 6 * scale;
  BigUint budget =
      BigUint::pow(BigUint{glue_types + 1}, positions) * BigUint::factorial(positions) +
      BigUint{1};
  PumpingBound b;
  b.iteration = BigUint{3} * budget + BigUint{2};
  b.movie_budget = std::move(budget);
  return b;
}

}  // namespace tilesim
