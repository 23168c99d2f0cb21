#pragma once
// Window analysis: cuts of the lattice, glue-placement movies recorded along
// a cut during an assembly sequence, detection of repeated movies among a
// family of cuts, and sequence splicing (pumping a repeated segment up or
// down). Also the closed-form bound on how tall a structure must grow before
// two cuts with identical movies are guaranteed.

#include <optional>
#include <vector>

#include "tilesim/bigint.hpp"
#include "tilesim/core.hpp"
#include "tilesim/dynamics.hpp"

namespace tilesim {

// One lattice edge crossed by a cut; `a` lies on side A, `b` on side B.
struct WindowEdge {
  Pos a;
  Pos b;
  friend auto operator<=>(const WindowEdge&, const WindowEdge&) = default;
};

struct Window {
  std::vector<WindowEdge> edges;
  Pos anchor{0, 0};               // reference point for cut-to-cut offsets
  std::optional<int> vertical_x;  // set when side A is exactly {p : p.x < x}

  // Vertical line between columns x-1 and x, spanning rows y_lo..y_hi.
  static Window vertical(int x, int y_lo, int y_hi);
  // Arbitrary (possibly jagged) cut from explicit oriented edges.
  static Window from_edges(std::vector<WindowEdge> edges, Pos anchor);
  Window translated(Pos offset) const;
};

// True when the window's edges, restricted to the assembly's bounding box
// inflated by one cell, two-color that region consistently (every listed
// edge straddles the colors; no unlisted adjacency does).
bool is_valid_cut(const Window& w, const Assembly& assembly);

// One tile placement that presented a side across the cut. A tile landing
// next to a still-empty cell records its glue with the other side absent
// (glue 0, strength 0); when the across cell is occupied the event carries
// both glues and their effective bond strength.
struct GlueEvent {
  int step = 0;  // index into the assembly sequence
  WindowEdge edge;
  int glue_a = 0;
  int glue_b = 0;
  Strength strength = 0;
  bool placed_on_a = false;  // the placed tile occupies the side-A cell
  friend bool operator==(const GlueEvent&, const GlueEvent&) = default;
};

struct WindowMovie {
  std::vector<GlueEvent> events;
};

// Replays `seq` from the system's seed and records every glue presentation
// across the window, in placement order. Seed tiles predate the sequence and
// generate no events. Throws on an illegal sequence.
WindowMovie record_movie(const TileSystem& sys, const AssemblySequence& seq,
                         const Window& w);

// Events that formed a positive-strength bond.
WindowMovie bond_forming_submovie(const WindowMovie& m);

// True when the two movies present the same glues on the same relative
// edges, in the same order and direction, with `offset` mapping the first
// movie's edges onto the second's. Absolute step indices are ignored.
bool movies_identical(const WindowMovie& m1, const WindowMovie& m2, Pos offset);

struct RepeatResult {
  std::size_t first = 0;
  std::size_t second = 0;
  Pos offset{0, 0};
};

// First (lexicographically by index pair) pair of windows whose bond-forming
// submovies are identical under the windows' anchor offset.
std::optional<RepeatResult> find_repeat(const TileSystem& sys,
                                        const AssemblySequence& seq,
                                        const std::vector<Window>& windows);

struct SpliceResult {
  AssemblySequence sequence;
  Assembly assembly;
};

// Removes the segment between two vertical windows with identical movies:
// keeps the steps on side A of w0 followed by the steps on side B of w1
// translated back by -offset. The result is validated by replay; an illegal
// step or a tile straddling a window raises a window error.
SpliceResult splice_pump_down(const TileSystem& sys, const AssemblySequence& seq,
                              const Window& w0, const Window& w1, Pos offset);

// Repeats the segment between the windows `extra_copies` additional times,
// translating each copy (and the side-B remainder) forward by the offset.
SpliceResult splice_pump_up(const TileSystem& sys, const AssemblySequence& seq,
                            const Window& w0, const Window& w1, Pos offset,
                            int extra_copies);

// How tall a column must be so that two of its cross-cuts are guaranteed to
// carry identical movies, for a simulator with `glue_types` glues at scale
// factor `scale`: movie_budget = (g+1)^(6m) * (6m)! + 1 exceeds the number
// of distinct movies over a cut of at most 6m glue positions, and iteration
// = 3 * movie_budget + 2 rows guarantee a repeat among every-third cuts.
struct PumpingBound {
  BigUint movie_budget;
  BigUint iteration;
};

PumpingBound pumping_bound(std::uint64_t glue_types, std::uint64_t scale);

}  // namespace tilesim
