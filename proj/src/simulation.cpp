#include "tilesim/simulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tilesim {

namespace {

std::string pos_text(Pos p) {
  std::ostringstream os;
  os << '(' << p.x << ',' << p.y << ')';
  return os.str();
}

// Floor division / modulo for block decomposition of negative coordinates.
int fdiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int fmod_pos(int a, int b) { return a - fdiv(a, b) * b; }

}  // namespace

TileMapRepresentation::TileMapRepresentation(std::vector<int> target_of)
    : target_of_(std::move(target_of)) {}

MappedAssembly TileMapRepresentation::map_assembly(const TileSystem& simulator,
                                                   const TileSystem& simulated,
                                                   const Assembly& alpha) const {
  MappedAssembly out;
  for (const auto& [id, inst] : alpha.instances()) {
    if (inst.tile < 0 || inst.tile >= static_cast<int>(target_of_.size()) ||
        target_of_[static_cast<std::size_t>(inst.tile)] < 0) {
      out.conflicts.push_back("simulator tile " + tile_name(simulator.tile(inst.tile)) +
                              " has no image tile");
      continue;
    }
    const int target = target_of_[static_cast<std::size_t>(inst.tile)];
    if (is_duple(simulated.tile(target))) {
      out.conflicts.push_back("cell map cannot target the two-cell tile " +
                              tile_name(simulated.tile(target)));
      continue;
    }
    if (out.image.occupied(inst.anchor)) {
      out.conflicts.push_back("image cell " + pos_text(inst.anchor) + " claimed twice");
      continue;
    }
    out.image.place(simulated, target, inst.anchor);
  }
  return out;
}

DupleHalfRepresentation::DupleHalfRepresentation(std::vector<HalfInfo> info)
    : info_(std::move(info)) {}

MappedAssembly DupleHalfRepresentation::map_assembly(
    const TileSystem& simulator, const TileSystem& simulated,
    const Assembly& alpha) const {
  MappedAssembly out;
  struct Claim {
    int target;
    Pos anchor;
    std::vector<Pos> cells;
  };
  std::vector<Claim> claims;

  for (const auto& [id, inst] : alpha.instances()) {
    if (inst.tile < 0 || inst.tile >= static_cast<int>(info_.size()) ||
        info_[static_cast<std::size_t>(inst.tile)].target < 0) {
      out.conflicts.push_back("simulator tile " + tile_name(simulator.tile(inst.tile)) +
                              " has no image tile");
      continue;
    }
    const HalfInfo& hi = info_[static_cast<std::size_t>(inst.tile)];
    if (!hi.half) {
      claims.push_back({hi.target, inst.anchor, {inst.anchor}});
      continue;
    }
    const auto& dup = std::get<DupleTileType>(simulated.tile(hi.target));
    const Pos off = dup.second_cell_offset();
    const Pos duple_anchor =
        hi.part == 0 ? inst.anchor
                     : Pos{inst.anchor.x - off.x, inst.anchor.y - off.y};
    const Pos partner_cell =
        hi.part == 0 ? Pos{duple_anchor.x + off.x, duple_anchor.y + off.y}
                     : duple_anchor;

    const CellEntry* partner = alpha.at(partner_cell);
    bool mated = false;
    if (partner != nullptr) {
      const HalfInfo& pi = info_[static_cast<std::size_t>(partner->tile)];
      mated = pi.half && pi.target == hi.target && pi.part == 1 - hi.part;
      if (!mated) {
        out.conflicts.push_back(
            "half tile " + tile_name(simulator.tile(inst.tile)) + " at " +
            pos_text(inst.anchor) + " abuts a non-partner at " +
            pos_text(partner_cell));
        continue;
      }
    }
    if (mated && hi.part == 1) continue;  // the part-0 mate claims the pair
    claims.push_back({hi.target,
                      duple_anchor,
                      {duple_anchor, Pos{duple_anchor.x + off.x, duple_anchor.y + off.y}}});
  }

  std::set<Pos> used;
  for (const Claim& c : claims) {
    bool overlap = false;
    for (Pos p : c.cells) {
      if (used.count(p)) {
        out.conflicts.push_back("image footprints overlap at " + pos_text(p));
        overlap = true;
        break;
      }
    }
    if (overlap) continue;
    for (Pos p : c.cells) used.insert(p);
    out.image.place(simulated, c.target, c.anchor);
  }
  return out;
}

BlockTableRepresentation::BlockTableRepresentation(
    int scale, int region, std::map<std::string, int> pattern_to_tile)
    : scale_(scale), region_(region), patterns_(std::move(pattern_to_tile)) {
  if (scale_ < 1 || region_ < 0) {
    throw Error(ErrorCode::schema, "block table needs scale >= 1, region >= 0");
  }
}

std::string BlockTableRepresentation::block_pattern(const Assembly& a, Pos block,
                                                    int scale, int region) {
  const int stride = scale + region;
  const Pos origin{block.x * stride, block.y * stride};
  std::ostringstream os;
  for (int dy = 0; dy < scale; ++dy) {
    for (int dx = 0; dx < scale; ++dx) {
      const CellEntry* c = a.at(Pos{origin.x + dx, origin.y + dy});
      if (c != nullptr) os << dx << ',' << dy << ':' << c->tile << ';';
    }
  }
  return os.str();
}

MappedAssembly BlockTableRepresentation::map_assembly(const TileSystem&,
                                                      const TileSystem& simulated,
                                                      const Assembly& alpha) const {
  MappedAssembly out;
  const int stride = scale_ + region_;
  std::set<Pos> blocks;
  for (const auto& [p, c] : alpha.cells()) {
    if (fmod_pos(p.x, stride) >= scale_ || fmod_pos(p.y, stride) >= scale_) {
      continue;  // geometry-region strip
    }
    blocks.insert(Pos{fdiv(p.x, stride), fdiv(p.y, stride)});
  }
  for (Pos b : blocks) {
    auto it = patterns_.find(block_pattern(alpha, b, scale_, region_));
    if (it == patterns_.end()) continue;  // unresolved: empty image, fuzz rules
    if (is_duple(simulated.tile(it->second))) {
      out.conflicts.push_back("block table cannot target the two-cell tile " +
                              tile_name(simulated.tile(it->second)));
      continue;
    }
    out.image.place(simulated, it->second, b);
  }
  return out;
}

std::size_t BlockTableRepresentation::source_bound_for(std::size_t k) const {
  const std::size_t m2 =
      static_cast<std::size_t>(scale_) * static_cast<std::size_t>(scale_);
  return m2 * k + 4 * m2 * (k + 1);  // resolved blocks plus a fuzz allowance
}

TileMapRepresentation representation_for(const CompiledAtam& c) {
  std::vector<int> target_of;
  target_of.reserve(c.rep.by_variant.size());
  for (const auto& v : c.rep.by_variant) target_of.push_back(v.source_tile);
  return TileMapRepresentation(std::move(target_of));
}

DupleHalfRepresentation representation_for(const CompiledDatam& c) {
  std::vector<DupleHalfRepresentation::HalfInfo> info;
  info.reserve(c.rep.by_variant.size());
  for (const auto& v : c.rep.by_variant) {
    info.push_back({v.source_tile, v.half, v.part});
  }
  return DupleHalfRepresentation(std::move(info));
}

CleanResult maps_cleanly(const Representation& rep, const TileSystem&,
                         const Assembly& alpha, const MappedAssembly& mapped) {
  const int stride = rep.scale() + rep.region_thickness();
  std::set<Pos> blocks;
  for (const auto& [p, c] : alpha.cells()) {
    if (fmod_pos(p.x, stride) >= rep.scale() ||
        fmod_pos(p.y, stride) >= rep.scale()) {
      continue;  // geometry-region strips are exempt from the fuzz rule
    }
    blocks.insert(Pos{fdiv(p.x, stride), fdiv(p.y, stride)});
  }
  if (blocks.size() <= 1) return {};  // a lone (seed) block may be unresolved
  for (Pos b : blocks) {
    if (mapped.image.occupied(b)) continue;
    bool adjacent = false;
    for (Dir d : all_dirs) {
      if (mapped.image.occupied(step(b, d))) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) {
      return {false, "tiles in block " + pos_text(b) +
                         " map to empty space not adjacent to the image"};
    }
  }
  return {};
}

namespace {

// Identifies the single instance present in `bigger` but not `smaller`, if
// the two assemblies differ by exactly one instance; nullopt otherwise.
std::optional<Attachment> single_step_difference(const TileSystem& sys,
                                                 const Assembly& smaller,
                                                 const Assembly& bigger) {
  if (bigger.tile_count() != smaller.tile_count() + 1) return std::nullopt;
  std::optional<Attachment> added;
  std::set<int> extra_instances;
  for (const auto& [p, c] : bigger.cells()) {
    const CellEntry* other = smaller.at(p);
    if (other == nullptr) {
      extra_instances.insert(c.instance);
      continue;
    }
    if (other->tile != c.tile || other->part != c.part) return std::nullopt;
  }
  if (extra_instances.size() != 1) return std::nullopt;
  if (bigger.cell_count() !=
      smaller.cell_count() +
          (is_duple(sys.tile(bigger.instances().at(*extra_instances.begin()).tile))
               ? 2u
               : 1u)) {
    return std::nullopt;
  }
  const InstanceEntry& inst = bigger.instances().at(*extra_instances.begin());
  return Attachment{inst.tile, inst.anchor};
}

bool reachable(const ExplorationGraph& g, int from, int to) {
  if (from == to) return true;
  std::deque<int> queue{from};
  std::set<int> seen{from};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.nodes[static_cast<std::size_t>(u)].succ) {
      if (v == to) return true;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return false;
}

std::string brief_key(const Assembly& a) {
  std::string k = a.canonical_key();
  if (k.size() > 160) {
    k.resize(157);
    k += "...";
  }
  return k;
}

}  // namespace

SimulationReport check_simulation(const TileSystem& simulator,
                                  const TileSystem& simulated,
                                  const Representation& rep,
                                  std::size_t target_scope,
                                  const ExplorationLimits& limits) {
  SimulationReport r;
  r.target_scope = target_scope;
  r.source_bound = rep.source_bound_for(target_scope);
  const std::size_t img_bound = rep.image_bound_for(r.source_bound);

  ExplorationGraph tg = explore(simulated, std::max(img_bound, target_scope), limits);
  ExplorationGraph sg = explore(simulator, r.source_bound, limits);
  r.target_states = tg.nodes.size();
  r.source_states = sg.nodes.size();
  const bool beyond_bounds = tg.truncated || sg.truncated;

  // Apply R* to every simulator state; find each image among the simulated
  // system's producible assemblies.
  constexpr int kBadMapping = -2;
  constexpr int kNotProducible = -3;
  std::vector<int> image_node(sg.nodes.size(), kBadMapping);
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    MappedAssembly mapped =
        rep.map_assembly(simulator, simulated, sg.nodes[i].assembly);
    if (!mapped.ok()) {
      if (r.clean.holds) {
        r.clean.holds = false;
        r.clean.witness = "representation undefined on a producible assembly: " +
                          mapped.conflicts.front() + " [state " +
                          brief_key(sg.nodes[i].assembly) + "]";
      }
      continue;
    }
    CleanResult cr = maps_cleanly(rep, simulator, sg.nodes[i].assembly, mapped);
    if (!cr.clean && r.clean.holds) {
      r.clean.holds = false;
      r.clean.witness =
          cr.detail + " [state " + brief_key(sg.nodes[i].assembly) + "]";
    }
    const int t_id = tg.find(mapped.image);
    if (t_id < 0) {
      image_node[i] = kNotProducible;
      if (r.productions.holds) {
        r.productions.holds = false;
        r.productions.witness =
            "simulator reaches an image outside the simulated system's "
            "producible set: " +
            brief_key(mapped.image);
      }
      continue;
    }
    image_node[i] = t_id;
  }

  // Production equality, scoped to images of at most target_scope tiles.
  std::vector<char> image_seen(tg.nodes.size(), 0);
  std::vector<char> terminal_image(tg.nodes.size(), 0);
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    if (image_node[i] < 0) continue;
    image_seen[static_cast<std::size_t>(image_node[i])] = 1;
    if (sg.nodes[i].terminal) {
      terminal_image[static_cast<std::size_t>(image_node[i])] = 1;
    }
  }
  for (std::size_t j = 0; j < tg.nodes.size(); ++j) {
    if (tg.nodes[j].assembly.tile_count() > target_scope) continue;
    if (!image_seen[j] && r.productions.holds) {
      r.productions.holds = false;
      r.productions.truncated = beyond_bounds;
      r.productions.witness =
          "producible simulated assembly has no simulator preimage: " +
          brief_key(tg.nodes[j].assembly);
    }
    if (tg.nodes[j].terminal && !terminal_image[j] && r.terminals.holds) {
      r.terminals.holds = false;
      r.terminals.truncated = beyond_bounds;
      r.terminals.witness =
          "terminal simulated assembly is not the image of any terminal "
          "simulator assembly: " +
          brief_key(tg.nodes[j].assembly);
    }
  }
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    if (!sg.nodes[i].terminal || image_node[i] < 0) continue;
    const auto& t_node = tg.nodes[static_cast<std::size_t>(image_node[i])];
    if (t_node.terminal) continue;
    if (t_node.at_bound) {
      r.terminals.truncated = true;  // image may or may not grow further
      continue;
    }
    if (r.terminals.holds) {
      r.terminals.holds = false;
      r.terminals.witness =
          "terminal simulator assembly maps to a growable image: " +
          brief_key(sg.nodes[i].assembly);
    }
  }

  // Follows: every simulator attachment maps to a (possibly trivial)
  // simulated-system reachability step between the two images.
  for (std::size_t u = 0; u < sg.nodes.size() && r.follows.holds; ++u) {
    if (image_node[u] < 0) continue;
    for (int v : sg.nodes[u].succ) {
      const int iu = image_node[u];
      const int iv = image_node[static_cast<std::size_t>(v)];
      if (iv < 0) continue;  // already reported via clean/productions
      if (iu == iv) continue;
      const Assembly& img_u = tg.nodes[static_cast<std::size_t>(iu)].assembly;
      const Assembly& img_v = tg.nodes[static_cast<std::size_t>(iv)].assembly;
      if (auto at = single_step_difference(simulated, img_u, img_v)) {
        if (attachable(simulated, img_u, *at)) continue;
      }
      if (reachable(tg, iu, iv)) continue;
      r.follows.holds = false;
      r.follows.witness =
          "simulator step " + brief_key(sg.nodes[u].assembly) + " -> " +
          brief_key(sg.nodes[static_cast<std::size_t>(v)].assembly) +
          " maps to an unreachable simulated step";
      break;
    }
  }

  // Models: for every simulated step a -> b within scope, every simulator
  // state whose image is a must be able to reach some state whose image is
  // b. Computed with one reachable-image bitset per simulator state, filled
  // bottom-up over the exploration DAG (attachments strictly grow assemblies,
  // so descending tile count is a reverse topological order).
  std::vector<int> bitpos(tg.nodes.size(), -1);
  int width = 0;
  for (std::size_t j = 0; j < tg.nodes.size(); ++j) {
    if (tg.nodes[j].assembly.tile_count() <= target_scope) bitpos[j] = width++;
  }
  const std::size_t words = static_cast<std::size_t>((width + 63) / 64);
  if (words > 0 && sg.nodes.size() * words > (std::size_t{1} << 26)) {  // 512MB
    throw ResourceLimitError("reachable-image table would exceed memory budget",
                             sg.nodes.size());
  }
  std::vector<std::uint64_t> bits(sg.nodes.size() * words, 0);
  auto row = [&](std::size_t i) { return bits.data() + i * words; };

  std::vector<std::size_t> order(sg.nodes.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sg.nodes[a].assembly.tile_count() > sg.nodes[b].assembly.tile_count();
  });
  for (std::size_t u : order) {
    std::uint64_t* ru = row(u);
    if (image_node[u] >= 0) {
      const int bp = bitpos[static_cast<std::size_t>(image_node[u])];
      if (bp >= 0) ru[bp / 64] |= std::uint64_t{1} << (bp % 64);
    }
    for (int v : sg.nodes[u].succ) {
      const std::uint64_t* rv = row(static_cast<std::size_t>(v));
      for (std::size_t w = 0; w < words; ++w) ru[w] |= rv[w];
    }
  }

  std::unordered_map<int, std::vector<std::size_t>> preimages;
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    if (image_node[i] >= 0) preimages[image_node[i]].push_back(i);
  }
  for (std::size_t a = 0; a < tg.nodes.size() && r.models.holds; ++a) {
    if (bitpos[a] < 0) continue;
    auto pre = preimages.find(static_cast<int>(a));
    if (pre == preimages.end()) continue;  // reported by the productions clause
    for (int b : tg.nodes[a].succ) {
      const int bp = bitpos[static_cast<std::size_t>(b)];
      if (bp < 0) continue;  // beyond scope
      for (std::size_t u : pre->second) {
        if (row(u)[bp / 64] & (std::uint64_t{1} << (bp % 64))) continue;
        r.models.holds = false;
        r.models.witness =
            "simulated step towards " +
            brief_key(tg.nodes[static_cast<std::size_t>(b)].assembly) +
            " cannot be realized from simulator state " +
            brief_key(sg.nodes[u].assembly);
        break;
      }
      if (!r.models.holds) break;
    }
  }

  if (beyond_bounds) {
    // Bounded verdicts above are exact for the stated scopes; flag that the
    // systems keep growing so the unbounded claim remains open.
    for (ClauseVerdict* cv :
         {&r.productions, &r.terminals, &r.clean, &r.follows, &r.models}) {
      cv->truncated = true;
    }
  }
  return r;
}

std::string block_at(const Assembly& a, const Representation& rep, int x,
                     int y) {
  return BlockTableRepresentation::block_pattern(a, Pos{x, y}, rep.scale(),
                                                 rep.region_thickness());
}

MappedAssembly rep_star(const Representation& rep, const TileSystem& simulator,
                        const TileSystem& simulated, const Assembly& alpha) {
  return rep.map_assembly(simulator, simulated, alpha);
}

namespace {

// "dx,dy:tile;" entries of a block pattern as a set for subsumption tests.
std::set<std::string> pattern_entries(const std::string& pattern) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start < pattern.size()) {
    const std::size_t semi = pattern.find(';', start);
    if (semi == std::string::npos) break;
    out.insert(pattern.substr(start, semi - start));
    start = semi + 1;
  }
  return out;
}

}  // namespace

CleanResult validate_representation(const Representation& rep) {
  const auto* table = dynamic_cast<const BlockTableRepresentation*>(&rep);
  if (table == nullptr) return {};  // cell/half maps: one tile per pattern
  std::vector<std::pair<std::set<std::string>, int>> rows;
  rows.reserve(table->table().size());
  for (const auto& [pattern, tile] : table->table()) {
    rows.emplace_back(pattern_entries(pattern), tile);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j || rows[i].second == rows[j].second) continue;
      if (std::includes(rows[j].first.begin(), rows[j].first.end(),
                        rows[i].first.begin(), rows[i].first.end())) {
        CleanResult r;
        r.clean = false;
        r.detail = "pattern resolving to tile " +
                   std::to_string(rows[i].second) +
                   " extends to a pattern resolving to tile " +
                   std::to_string(rows[j].second);
        return r;
      }
    }
  }
  return {};
}

ProductionsVerdict check_equivalent_productions(const TileSystem& simulator,
                                                const TileSystem& simulated,
                                                const Representation& rep,
                                                std::size_t target_scope,
                                                const ExplorationLimits& limits) {
  const SimulationReport r =
      check_simulation(simulator, simulated, rep, target_scope, limits);
  return ProductionsVerdict{r.productions, r.terminals, r.clean};
}

ClauseVerdict check_follows(const TileSystem& simulator,
                            const TileSystem& simulated,
                            const Representation& rep,
                            std::size_t target_scope,
                            const ExplorationLimits& limits) {
  return check_simulation(simulator, simulated, rep, target_scope, limits)
      .follows;
}

ClauseVerdict check_models(const TileSystem& simulator,
                           const TileSystem& simulated,
                           const Representation& rep, std::size_t target_scope,
                           const ExplorationLimits& limits) {
  return check_simulation(simulator, simulated, rep, target_scope, limits)
      .models;
}

}  // namespace tilesim
