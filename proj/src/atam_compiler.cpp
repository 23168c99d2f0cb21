#include "tilesim/atam_compiler.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tilesim {

const Geometry& GlueGeometryTable::of(int glue, bool beta_version) const {
  if (glue < 0 || glue >= static_cast<int>(alpha.size())) {
    throw Error(ErrorCode::invalid_glue, "glue id out of range for geometry table");
  }
  return beta_version ? beta[static_cast<std::size_t>(glue)]
                      : alpha[static_cast<std::size_t>(glue)];
}

namespace {

// Absolute 1-based positions of the four domains in a length-4n geometry.
int alpha1_pos(int /*n*/, int i) { return i; }
int beta1_pos(int n, int i) { return n + i; }
int beta2_pos(int n, int j) { return 3 * n + 1 - j; }
int alpha2_pos(int n, int j) { return 4 * n + 1 - j; }

}  // namespace

GlueGeometryTable build_glue_geometries(const GlueFunction& glues) {
  GlueGeometryTable t;
  const int n = glues.size() - 1;
  t.glue_count = n;
  const int len = 4 * n;
  t.alpha.assign(static_cast<std::size_t>(n) + 1, Geometry::zeros(len));
  t.beta.assign(static_cast<std::size_t>(n) + 1, Geometry::zeros(len));

  // Null glue: no identity bump, full blocking domain. A null side collides
  // with every version of every real glue and with the other null version,
  // so compiled tiles only ever abut across intentionally matched sides.
  for (int j = 1; j <= n; ++j) {
    t.alpha[0].set_bump(alpha2_pos(n, j));
    t.beta[0].set_bump(beta2_pos(n, j));
  }

  for (int i = 1; i <= n; ++i) {
    auto& a = t.alpha[static_cast<std::size_t>(i)];
    auto& b = t.beta[static_cast<std::size_t>(i)];
    a.set_bump(alpha1_pos(n, i));
    b.set_bump(beta1_pos(n, i));
    for (int j = 1; j <= n; ++j) {
      if (glues.strength(i, j) == 0) {
        a.set_bump(alpha2_pos(n, j));
        b.set_bump(beta2_pos(n, j));
      }
    }
  }
  return t;
}

int VariantMap::variant_id(int source_tile, std::uint8_t versions) const {
  for (std::size_t v = 0; v < by_variant.size(); ++v) {
    if (by_variant[v].source_tile == source_tile &&
        by_variant[v].versions == versions) {
      return static_cast<int>(v);
    }
  }
  return -1;
}

int VariantMap::source_of(int variant) const {
  if (variant < 0 || variant >= static_cast<int>(by_variant.size())) return -1;
  return by_variant[static_cast<std::size_t>(variant)].source_tile;
}

void compile_tile_variants(CompiledAtam& out, const TileSystem& source,
                           int source_tile) {
  const auto& src = std::get<SquareTileType>(source.tiles[static_cast<std::size_t>(source_tile)]);
  for (std::uint8_t v = 0; v < 16; ++v) {
    GeometricTileType g;
    std::ostringstream name;
    name << src.name << '.';
    for (Dir d : all_dirs) {
      const bool beta_version = (v >> static_cast<int>(d)) & 1;
      name << (beta_version ? 'b' : 'a');
      const int sg = src.glue[static_cast<std::size_t>(d)];
      auto& side = g.side[static_cast<std::size_t>(d)];
      side.geometry = out.table.of(sg, beta_version);
      side.glue = sg == 0 ? 0 : (beta_version ? out.glue_beta : out.glue_alpha);
    }
    g.name = name.str();
    out.system.tiles.emplace_back(std::move(g));
    out.rep.by_variant.push_back({source_tile, v});
  }
}

Assembly compile_seed(const CompiledAtam& out, const TileSystem& source) {
  // Start with the all-alpha variant of every seed tile, then repair
  // interior edges. Cells are visited in map order; for each occupied
  // neighbor to the east/north, a collision is fixed by switching the
  // neighbor's facing side to its beta version. Opposite-version sides are
  // always compatible and each side faces exactly one interior edge, so a
  // single pass suffices and the flip can never invalidate an earlier edge.
  struct SeedCell {
    int variant;
    std::uint8_t versions;
    int source_tile;
  };
  std::map<Pos, SeedCell> grid;
  for (const auto& [id, inst] : source.seed.instances()) {
    SeedCell c;
    c.source_tile = inst.tile;
    c.versions = 0;
    c.variant = out.rep.variant_id(inst.tile, 0);
    grid[inst.anchor] = c;
  }

  auto side_geometry = [&](const SeedCell& c, Dir d) -> const Geometry& {
    const auto& g = std::get<GeometricTileType>(
        out.system.tiles[static_cast<std::size_t>(c.variant)]);
    return g.side[static_cast<std::size_t>(d)].geometry;
  };

  for (auto& [p, cell] : grid) {
    for (Dir d : {Dir::east, Dir::north}) {
      auto it = grid.find(step(p, d));
      if (it == grid.end()) continue;
      SeedCell& other = it->second;
      if (geometry_compatible(side_geometry(cell, d),
                              side_geometry(other, opposite(d)))) {
        continue;
      }
      const std::uint8_t flipped =
          other.versions | static_cast<std::uint8_t>(1 << static_cast<int>(opposite(d)));
      const int cand = out.rep.variant_id(other.source_tile, flipped);
      SeedCell trial{cand, flipped, other.source_tile};
      if (geometry_compatible(side_geometry(cell, d),
                              side_geometry(trial, opposite(d)))) {
        other = trial;
      }
    }
  }

  Assembly seed;
  for (const auto& [p, cell] : grid) {
    seed.place(out.system, cell.variant, p);
  }
  return seed;
}

CompiledAtam compile_atam_system(const TileSystem& source) {
  if (source.model != Model::atam) {
    throw Error(ErrorCode::unsupported_input,
                "geometry compilation requires a square-tile source system");
  }
  if (source.temperature != 1) {
    throw Error(ErrorCode::unsupported_input,
                "geometry compilation requires temperature 1");
  }
  source.validate();

  CompiledAtam out;
  out.table = build_glue_geometries(source.glues);
  out.system.model = Model::gtam;
  out.system.temperature = 1;
  out.system.geometry_length = out.table.length();
  out.system.glues = GlueFunction::diagonal({0, 1, 1});
  out.system.glue_names = {"null", "alpha", "beta"};

  for (int tid = 0; tid < static_cast<int>(source.tiles.size()); ++tid) {
    compile_tile_variants(out, source, tid);
  }
  out.system.seed = compile_seed(out, source);
  out.system.validate();
  return out;
}

}  // namespace tilesim
