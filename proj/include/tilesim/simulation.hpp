#pragma once
// Bounded verification that one tile system simulates another under a block
// representation: equivalent productions (image-set equality, terminal
// correspondence, clean mapping), the simulated system following the
// simulator, and the simulator modeling every choice the simulated system
// can make. All checks exhaustively enumerate both systems' producible
// assemblies up to explicit tile-count bounds and report truncation instead
// of guessing beyond them.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tilesim/atam_compiler.hpp"
#include "tilesim/core.hpp"
#include "tilesim/duple_compiler.hpp"
#include "tilesim/dynamics.hpp"

namespace tilesim {

// Result of applying the assembly representation function R* to one
// simulator assembly. `conflicts` is non-empty when the mapping is not a
// well-formed assembly (e.g. two committed duple footprints overlap); the
// image is then best-effort and the simulation check fails with a witness.
struct MappedAssembly {
  Assembly image;
  std::vector<std::string> conflicts;
  bool ok() const { return conflicts.empty(); }
};

// Block representation from simulator tiles to simulated tiles. Blocks are
// scale x scale cells; a geometric simulated system may additionally have
// inter-block strips of `region_thickness` cells (cells there belong to no
// block). The simulator cell for block coordinate q starts at
// q * (scale + region_thickness).
class Representation {
 public:
  virtual ~Representation() = default;
  virtual int scale() const = 0;
  virtual int region_thickness() const = 0;
  virtual MappedAssembly map_assembly(const TileSystem& simulator,
                                      const TileSystem& simulated,
                                      const Assembly& alpha) const = 0;
  // Simulator tile budget sufficient to realize any simulated assembly of
  // `target_tiles` tiles (including allowed fuzz).
  virtual std::size_t source_bound_for(std::size_t target_tiles) const = 0;
  // Largest image size any simulator assembly of `source_tiles` tiles can map to.
  virtual std::size_t image_bound_for(std::size_t source_tiles) const = 0;
};

// Scale-1 cell-by-cell map: simulator tile id -> simulated tile id. Every
// simulator tile must map (no fuzz). This is the representation emitted by
// the square-tile-to-geometry compiler.
class TileMapRepresentation final : public Representation {
 public:
  explicit TileMapRepresentation(std::vector<int> target_of);
  int scale() const override { return 1; }
  int region_thickness() const override { return 0; }
  MappedAssembly map_assembly(const TileSystem&, const TileSystem&,
                              const Assembly&) const override;
  std::size_t source_bound_for(std::size_t k) const override { return k; }
  std::size_t image_bound_for(std::size_t s) const override { return s; }
  const std::vector<int>& table() const { return target_of_; }

 private:
  std::vector<int> target_of_;
};

// Scale-1 map where some simulator tiles are halves of simulated duples.
// A complete adjacent pair of halves maps to one duple instance; a lone half
// maps to the full duple footprint it has committed to (the partner cell is
// claimed even though still empty in the simulator). Two lone halves
// claiming the same cell make the image undefined and are reported as
// conflicts.
class DupleHalfRepresentation final : public Representation {
 public:
  struct HalfInfo {
    int target = -1;   // simulated tile id
    bool half = false; // true when the simulator tile is one duple cell
    int part = 0;      // 0 = duple anchor cell, 1 = partner cell
  };

  explicit DupleHalfRepresentation(std::vector<HalfInfo> info);
  int scale() const override { return 1; }
  int region_thickness() const override { return 0; }
  MappedAssembly map_assembly(const TileSystem&, const TileSystem&,
                              const Assembly&) const override;
  std::size_t source_bound_for(std::size_t k) const override { return 2 * k; }
  std::size_t image_bound_for(std::size_t s) const override { return s; }
  const std::vector<HalfInfo>& table() const { return info_; }

 private:
  std::vector<HalfInfo> info_;
};

// General m-block lookup: the canonical pattern of each non-empty block
// resolves to a simulated tile; unresolved non-empty blocks represent empty
// space and fall under the fuzz rules. Only square/geometric simulated
// systems are supported (a block maps to at most one single-cell tile).
class BlockTableRepresentation final : public Representation {
 public:
  BlockTableRepresentation(int scale, int region,
                           std::map<std::string, int> pattern_to_tile);
  int scale() const override { return scale_; }
  int region_thickness() const override { return region_; }
  MappedAssembly map_assembly(const TileSystem&, const TileSystem&,
                              const Assembly&) const override;
  std::size_t source_bound_for(std::size_t k) const override;
  std::size_t image_bound_for(std::size_t s) const override { return s; }
  const std::map<std::string, int>& table() const { return patterns_; }

  // Canonical text for the tiles inside one block: semicolon-joined
  // "dx,dy:tile" entries in cell order, empty cells omitted.
  static std::string block_pattern(const Assembly& a, Pos block, int scale,
                                   int region);

 private:
  int scale_ = 1;
  int region_ = 0;
  std::map<std::string, int> patterns_;
};

// Representations induced by the two compilers.
TileMapRepresentation representation_for(const CompiledAtam& c);
DupleHalfRepresentation representation_for(const CompiledDatam& c);

struct CleanResult {
  bool clean = true;
  std::string detail;
};

// Fuzz discipline: every block holding simulator tiles either resolves to a
// simulated tile or is edge-adjacent to a block that does. Cells inside
// geometry-region strips are exempt, as is an assembly occupying a single
// block (an unresolved seed block).
CleanResult maps_cleanly(const Representation& rep, const TileSystem& simulator,
                         const Assembly& alpha, const MappedAssembly& mapped);

struct ClauseVerdict {
  bool holds = true;
  bool truncated = false;  // bound reached before the clause was decidable
  std::string witness;     // first counterexample, empty when holds
};

struct SimulationReport {
  std::size_t target_scope = 0;   // simulated-side tile bound k
  std::size_t source_bound = 0;   // simulator-side tile bound used
  std::size_t source_states = 0;  // producible simulator assemblies visited
  std::size_t target_states = 0;
  ClauseVerdict productions;  // image set == producible set (scoped to k)
  ClauseVerdict terminals;    // terminal image set == terminal set (scoped)
  ClauseVerdict clean;        // R* defined + fuzz discipline on every state
  ClauseVerdict follows;      // each simulator step maps to a reachable step
  ClauseVerdict models;       // every simulated step reachable from every preimage
  bool simulates() const {
    return productions.holds && terminals.holds && clean.holds &&
           follows.holds && models.holds;
  }
  bool inconclusive() const {
    return productions.truncated || terminals.truncated || clean.truncated ||
           follows.truncated || models.truncated;
  }
};

// Runs all clauses with the simulated system enumerated to `target_scope`
// tiles and the simulator to rep.source_bound_for(target_scope). Throws
// ResourceLimitError when enumeration exceeds limits.max_states.
SimulationReport check_simulation(const TileSystem& simulator,
                                  const TileSystem& simulated,
                                  const Representation& rep,
                                  std::size_t target_scope,
                                  const ExplorationLimits& limits = {});

// The block pattern of `a` at block coordinate (x, y) under the
// representation's scale and region thickness (empty string = empty block).
std::string block_at(const Assembly& a, const Representation& rep, int x,
                     int y);

// Assembly representation function R*: the simulated-side image of `alpha`.
MappedAssembly rep_star(const Representation& rep, const TileSystem& simulator,
                        const TileSystem& simulated, const Assembly& alpha);

// Validity scan: no block pattern that extends another pattern in the table
// may resolve to a different tile. Cell-map and half-map representations are
// valid by construction.
CleanResult validate_representation(const Representation& rep);

// Single-definition entry points. Each runs the same bounded exploration as
// check_simulation and projects the verdicts it is responsible for.
struct ProductionsVerdict {
  ClauseVerdict productions;  // image set == producible set
  ClauseVerdict terminals;    // terminal images == terminal set
  ClauseVerdict clean;        // fuzz discipline on every simulator state
  bool holds() const {
    return productions.holds && terminals.holds && clean.holds;
  }
  bool truncated() const {
    return productions.truncated || terminals.truncated || clean.truncated;
  }
};

ProductionsVerdict check_equivalent_productions(
    const TileSystem& simulator, const TileSystem& simulated,
    const Representation& rep, std::size_t target_scope,
    const ExplorationLimits& limits = {});

ClauseVerdict check_follows(const TileSystem& simulator,
                            const TileSystem& simulated,
                            const Representation& rep,
                            std::size_t target_scope,
                            const ExplorationLimits& limits = {});

ClauseVerdict check_models(const TileSystem& simulator,
                           const TileSystem& simulated,
                           const Representation& rep,
                           std::size_t target_scope,
                           const ExplorationLimits& limits = {});

}  // namespace tilesim
