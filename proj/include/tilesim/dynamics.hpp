#pragma once
// Growth dynamics: single-tile/duple attachment, frontiers, deterministic and
// random assembly sequences, and bounded exhaustive exploration of the
// producible set.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "tilesim/core.hpp"

namespace tilesim {

struct Attachment {
  int tile = -1;
  Pos anchor;
  friend auto operator<=>(const Attachment&, const Attachment&) = default;
};

struct AssemblySequence {
  std::vector<Attachment> attachments;  // applied in order after the seed
};

enum class SequencePolicy { lex, lowest_y_first, random };

// Cells an attachment covers, with the part index occupying each: the
// anchor, plus the partner cell for duples.
std::vector<std::pair<Pos, std::uint8_t>> attachment_cells(const TileSystem& sys,
                                                           const Attachment& at);

// Attachment legality at temperature sys.temperature:
//  - all covered cells empty;
//  - geometric model: every abutting side pair geometry-compatible;
//  - total bond strength across abutting, positively-binding side pairs
//    (geometric: compatible pairs only) >= temperature.
bool attachable(const TileSystem& sys, const Assembly& a, const Attachment& at);

// Bond strength the attachment would form (geometric incompatibility or an
// occupied cell yields 0 and attachable() is false).
Strength attachment_strength(const TileSystem& sys, const Assembly& a,
                             const Attachment& at);

// All legal attachments, sorted by (anchor.y, anchor.x, tile id). Candidate
// anchors are scanned next to the existing tiles, which covers every legal
// attachment because each one must form at least one bond.
std::vector<Attachment> frontier(const TileSystem& sys, const Assembly& a);

// Applies one attachment, returning the grown assembly.
// Throws ErrorCode::attachment if illegal.
Assembly attach(const TileSystem& sys, const Assembly& a, const Attachment& at);

struct RunResult {
  Assembly assembly;
  AssemblySequence sequence;
  bool reached_terminal = false;
};

// Grows from the seed until the frontier empties or max_tiles instances are
// placed. `rng_seed` only matters for SequencePolicy::random.
RunResult run(const TileSystem& sys, SequencePolicy policy,
              std::size_t max_tiles, std::uint64_t rng_seed = 0);

// Replays a recorded sequence from the seed, validating each step.
Assembly replay(const TileSystem& sys, const AssemblySequence& seq);

struct ExplorationLimits {
  std::size_t max_states = 2'000'000;
};

// Bounded breadth-first exploration of the producible set, deduplicated by
// canonical form. Stores one witness parent per state plus all outgoing
// edges so that callers can rebuild sequences and reason about reachability.
struct ExplorationGraph {
  struct Node {
    Assembly assembly;
    int parent = -1;           // witness predecessor (-1 for the seed)
    Attachment via;            // attachment that produced it from parent
    std::vector<int> succ;     // successors within the bound
    bool terminal = false;     // frontier empty (true terminality)
    bool at_bound = false;     // tile count == bound and frontier non-empty
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;  // canonical key -> node
  bool truncated = false;  // some state at the bound still had a frontier

  int find(const Assembly& a) const;
  AssemblySequence sequence_to(int node) const;
};

ExplorationGraph explore(const TileSystem& sys, std::size_t max_tiles,
                         const ExplorationLimits& limits = {});

// Canonical producible assemblies with at most max_tiles instances.
// Throws ResourceLimitError when the state guard trips.
std::vector<Assembly> enumerate_producible(
    const TileSystem& sys, std::size_t max_tiles,
    const ExplorationLimits& limits = {});

struct TerminalSet {
  std::vector<Assembly> assemblies;
  bool truncated = false;  // growth continued past the bound somewhere
};

TerminalSet enumerate_terminal(const TileSystem& sys, std::size_t max_tiles,
                               const ExplorationLimits& limits = {});

struct BoundedVerdict {
  bool holds = false;
  bool truncated = false;
  std::string detail;
};

// At most one terminal assembly within the bound and all producible
// assemblies pairwise agree wherever their domains overlap.
BoundedVerdict is_directed(const TileSystem& sys, std::size_t max_tiles,
                           const ExplorationLimits& limits = {});

// Every producible assembly within the bound has at most one frontier entry.
BoundedVerdict is_sass(const TileSystem& sys, std::size_t max_tiles,
                       const ExplorationLimits& limits = {});

// Single-frontier growth whose frontier y-coordinate never decreases.
BoundedVerdict is_zigzag(const TileSystem& sys, std::size_t max_tiles,
                         const ExplorationLimits& limits = {});

}  // namespace tilesim
