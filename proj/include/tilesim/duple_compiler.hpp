#pragma once
// Compiles a temperature-1 system with square and duple (2x1 / 1x2) tiles
// and a diagonal glue function into a geometric system. Side geometries have
// length 4k + 2 where k = max(glue count, duple type count): a normal-tile
// flag at the first position, the four alpha/beta domains of width k, and a
// duple flag at the last position. The two flags land on each other when
// sides abut, so duple-interior sides can never pair with normal sides.
// Each duple type gets a dedicated interior geometry that is compatible
// only with itself, making the two halves of a duple find each other and
// blocking distinct duple types from fusing.

#include <vector>

#include "tilesim/core.hpp"

namespace tilesim {

struct DupleGeometryTable {
  int domain = 0;       // k, the width of each of the four inner domains
  int glue_count = 0;   // real glues in the source, excluding null
  int duple_count = 0;  // duple tile types in the source
  std::vector<Geometry> alpha;   // index = glue id; [0] is the flag-only null
  std::vector<Geometry> beta;    // beta[0] == alpha[0]
  std::vector<Geometry> lambda;  // index = duple index 1..duple_count

  int length() const { return 4 * domain + 2; }
  const Geometry& of(int glue, bool beta_version) const;
};

DupleGeometryTable build_duple_geometries(const GlueFunction& glues,
                                          int duple_count);

struct DupleVariantInfo {
  int source_tile = -1;     // tile id in the source system
  bool half = false;        // one cell of a duple rather than a square
  int part = 0;             // 0 = anchor cell, 1 = partner cell
  std::uint8_t versions = 0;  // per-side version bits, center bit always 0
};

struct DupleVariantMap {
  std::vector<DupleVariantInfo> by_variant;  // index = compiled tile id
  int variant_id(int source_tile, bool half, int part,
                 std::uint8_t versions) const;
};

struct CompiledDatam {
  TileSystem system;  // geometric, temperature 1, glues {null, alpha, beta}
  DupleVariantMap rep;
  DupleGeometryTable table;
  std::vector<int> duple_index;  // source tile id -> duple index (0 if square)
  int glue_alpha = 1;
  int glue_beta = 2;
};

// Squares compile to 16 side-version variants exactly as in the square-tile
// compiler. Each duple compiles to two single-cell tile families of 8
// variants each; the side where the halves meet always carries the duple's
// interior geometry with the alpha glue.
CompiledDatam compile_datam_system(const TileSystem& source);

}  // namespace tilesim
