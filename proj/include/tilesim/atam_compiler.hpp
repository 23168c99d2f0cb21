#pragma once
// Compiles a temperature-1 square-tile system with a flexible glue function
// into a geometric system with exactly two positive glues. Each source glue
// is encoded as a side geometry in two interchangeable versions (alpha and
// beta); bumps block exactly the non-binding glue pairs, and opposite
// versions never block each other.

#include <vector>

#include "tilesim/core.hpp"

namespace tilesim {

// Side geometries for source glues 0..n (0 is the null glue). Length 4n with
// four domains: [alpha1 | beta1 | beta2 | alpha2]. alpha1/beta1 positions are
// counted left to right, beta2/alpha2 right to left, so that abutting sides
// pair identity domains against blocking domains.
struct GlueGeometryTable {
  int glue_count = 0;  // real glues, excluding null
  std::vector<Geometry> alpha;  // index = glue id (0 = null)
  std::vector<Geometry> beta;

  int length() const { return 4 * glue_count; }
  const Geometry& of(int glue, bool beta_version) const;
};

// For glue i >= 1: alpha version has the identity bump at alpha1 position i
// and blocking bumps at alpha2 positions {j : strength(i, j) == 0}; the beta
// version mirrors this in the beta domains. The null glue has an empty
// identity domain and a full blocking domain in its version's slots.
GlueGeometryTable build_glue_geometries(const GlueFunction& glues);

// Version vector for one compiled tile: bit per side (Dir order), 0 = alpha.
struct VariantInfo {
  int source_tile = -1;
  std::uint8_t versions = 0;
};

struct VariantMap {
  std::vector<VariantInfo> by_variant;  // index = compiled tile id
  int variant_id(int source_tile, std::uint8_t versions) const;
  int source_of(int variant) const;
};

struct CompiledAtam {
  TileSystem system;   // geometric, temperature 1, glues {null, alpha, beta}
  VariantMap rep;
  GlueGeometryTable table;
  int glue_alpha = 1;
  int glue_beta = 2;
};

// All 16 alpha/beta side-version variants of one source tile, appended to
// `out.system.tiles` in version order 0..15.
void compile_tile_variants(CompiledAtam& out, const TileSystem& source,
                           int source_tile);

// Seed tiles start as all-alpha variants; every interior edge whose sides
// collide is then fixed by flipping the lexicographically second tile's
// facing side to beta. Each side faces at most one interior edge, so one
// pass terminates.
Assembly compile_seed(const CompiledAtam& out, const TileSystem& source);

// Whole-system translation. Requires a temperature-1 square-tile source.
CompiledAtam compile_atam_system(const TileSystem& source);

}  // namespace tilesim
