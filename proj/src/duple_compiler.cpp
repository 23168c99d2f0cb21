#include "tilesim/duple_compiler.hpp"

#include <map>
#include <sstream>

namespace tilesim {

namespace {

// 1-based absolute bump positions within a length 4k+2 geometry.
int normal_flag_pos(int) { return 1; }
int alpha1_pos(int, int i) { return 1 + i; }
int beta1_pos(int k, int i) { return 1 + k + i; }
int beta2_pos(int k, int j) { return 3 * k + 2 - j; }
int alpha2_pos(int k, int j) { return 4 * k + 2 - j; }
int duple_flag_pos(int k) { return 4 * k + 2; }

}  // namespace

const Geometry& DupleGeometryTable::of(int glue, bool beta_version) const {
  if (glue < 0 || glue >= static_cast<int>(alpha.size())) {
    throw Error(ErrorCode::invalid_glue, "glue id out of range for geometry table");
  }
  return beta_version ? beta[static_cast<std::size_t>(glue)]
                      : alpha[static_cast<std::size_t>(glue)];
}

DupleGeometryTable build_duple_geometries(const GlueFunction& glues,
                                          int duple_count) {
  DupleGeometryTable t;
  t.glue_count = glues.size() - 1;
  t.duple_count = duple_count;
  t.domain = std::max(t.glue_count, t.duple_count);
  const int k = t.domain;
  const int len = t.length();

  t.alpha.assign(static_cast<std::size_t>(t.glue_count) + 1, Geometry::zeros(len));
  t.beta.assign(static_cast<std::size_t>(t.glue_count) + 1, Geometry::zeros(len));
  t.lambda.assign(static_cast<std::size_t>(duple_count) + 1, Geometry::zeros(len));

  // Null glue: just the normal-tile flag, so it is compatible with every
  // normal-side geometry and never blocks a placement on its own.
  t.alpha[0].set_bump(normal_flag_pos(k));
  t.beta[0] = t.alpha[0];

  for (int i = 1; i <= t.glue_count; ++i) {
    auto& a = t.alpha[static_cast<std::size_t>(i)];
    auto& b = t.beta[static_cast<std::size_t>(i)];
    a.set_bump(normal_flag_pos(k));
    b.set_bump(normal_flag_pos(k));
    a.set_bump(alpha1_pos(k, i));
    b.set_bump(beta1_pos(k, i));
    for (int j = 1; j <= k; ++j) {
      const bool binds = j <= t.glue_count && glues.strength(i, j) > 0;
      if (!binds) {
        a.set_bump(alpha2_pos(k, j));
        b.set_bump(beta2_pos(k, j));
      }
    }
  }

  for (int d = 1; d <= duple_count; ++d) {
    auto& l = t.lambda[static_cast<std::size_t>(d)];
    l.set_bump(duple_flag_pos(k));
    l.set_bump(alpha1_pos(k, d));
    for (int j = 1; j <= k; ++j) {
      if (j != d) l.set_bump(alpha2_pos(k, j));
    }
  }
  return t;
}

int DupleVariantMap::variant_id(int source_tile, bool half, int part,
                                std::uint8_t versions) const {
  for (std::size_t v = 0; v < by_variant.size(); ++v) {
    const auto& info = by_variant[v];
    if (info.source_tile == source_tile && info.half == half &&
        info.part == part && info.versions == versions) {
      return static_cast<int>(v);
    }
  }
  return -1;
}

namespace {

void append_square_variants(CompiledDatam& out, const TileSystem& source,
                            int source_tile) {
  const auto& src =
      std::get<SquareTileType>(source.tiles[static_cast<std::size_t>(source_tile)]);
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
    out.rep.by_variant.push_back({source_tile, false, 0, v});
  }
}

void append_half_variants(CompiledDatam& out, const TileSystem& source,
                          int source_tile, int duple_index, int part) {
  const auto& src =
      std::get<DupleTileType>(source.tiles[static_cast<std::size_t>(source_tile)]);
  const bool horizontal = src.orientation == DupleOrientation::horizontal;
  const Dir inner = horizontal ? Dir::east : Dir::north;
  const Dir center = part == 0 ? inner : opposite(inner);
  const char* role =
      part == 0 ? (horizontal ? ":W" : ":S") : (horizontal ? ":E" : ":N");
  for (std::uint8_t v = 0; v < 16; ++v) {
    if ((v >> static_cast<int>(center)) & 1) continue;  // center has no beta
    GeometricTileType g;
    std::ostringstream name;
    name << src.name << role << '.';
    for (Dir d : all_dirs) {
      auto& side = g.side[static_cast<std::size_t>(d)];
      if (d == center) {
        name << 'c';
        side.geometry = out.table.lambda[static_cast<std::size_t>(duple_index)];
        side.glue = out.glue_alpha;
        continue;
      }
      const bool beta_version = (v >> static_cast<int>(d)) & 1;
      name << (beta_version ? 'b' : 'a');
      const int sg = src.glue[static_cast<std::size_t>(part)][static_cast<std::size_t>(d)];
      side.geometry = out.table.of(sg, beta_version);
      side.glue = sg == 0 ? 0 : (beta_version ? out.glue_beta : out.glue_alpha);
    }
    g.name = name.str();
    out.system.tiles.emplace_back(std::move(g));
    out.rep.by_variant.push_back(
        {source_tile, true, part, static_cast<std::uint8_t>(v)});
  }
}

}  // namespace

CompiledDatam compile_datam_system(const TileSystem& source) {
  if (source.model != Model::datam) {
    throw Error(ErrorCode::unsupported_input,
                "duple compilation requires a square-and-duple source system");
  }
  if (source.temperature != 1) {
    throw Error(ErrorCode::unsupported_input,
                "duple compilation requires temperature 1");
  }
  source.validate();

  CompiledDatam out;
  out.duple_index.assign(source.tiles.size(), 0);
  int duple_count = 0;
  for (std::size_t tid = 0; tid < source.tiles.size(); ++tid) {
    if (is_duple(source.tiles[tid])) out.duple_index[tid] = ++duple_count;
  }

  out.table = build_duple_geometries(source.glues, duple_count);
  out.system.model = Model::gtam;
  out.system.temperature = 1;
  out.system.geometry_length = out.table.length();
  out.system.glues = GlueFunction::diagonal({0, 1, 1});
  out.system.glue_names = {"null", "alpha", "beta"};

  for (int tid = 0; tid < static_cast<int>(source.tiles.size()); ++tid) {
    if (is_duple(source.tiles[static_cast<std::size_t>(tid)])) {
      append_half_variants(out, source, tid, out.duple_index[static_cast<std::size_t>(tid)], 0);
      append_half_variants(out, source, tid, out.duple_index[static_cast<std::size_t>(tid)], 1);
    } else {
      append_square_variants(out, source, tid);
    }
  }

  // Seed: all-alpha variants (duples become their two half tiles), then the
  // same one-pass mismatch repair as the square-tile compiler. Interior
  // duple sides are always compatible with their partner and are never
  // candidates for a flip.
  struct SeedCell {
    int variant;
    std::uint8_t versions;
    int source_tile;
    bool half;
    int part;
  };
  std::map<Pos, SeedCell> grid;
  for (const auto& [id, inst] : source.seed.instances()) {
    const auto& tile = source.tiles[static_cast<std::size_t>(inst.tile)];
    if (is_duple(tile)) {
      const auto& dup = std::get<DupleTileType>(tile);
      grid[inst.anchor] = {out.rep.variant_id(inst.tile, true, 0, 0), 0,
                           inst.tile, true, 0};
      const Pos off = dup.second_cell_offset();
      Pos partner{inst.anchor.x + off.x, inst.anchor.y + off.y};
      grid[partner] = {out.rep.variant_id(inst.tile, true, 1, 0), 0, inst.tile,
                       true, 1};
    } else {
      grid[inst.anchor] = {out.rep.variant_id(inst.tile, false, 0, 0), 0,
                           inst.tile, false, 0};
    }
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
      const int cand =
          out.rep.variant_id(other.source_tile, other.half, other.part, flipped);
      if (cand < 0) continue;  // interior duple side: no beta version exists
      SeedCell trial = other;
      trial.variant = cand;
      trial.versions = flipped;
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
  out.system.seed = seed;
  out.system.validate();
  return out;
}

}  // namespace tilesim
