#pragma once
// Ready-made witness systems: the five-tile mismatch square, the flexible
// glue fixture, the planter/decremenber single-sequence system, a zig-zag
// binary counter, the geometric arm/cup system, the duple blocking scenario,
// and a period-3 line for window analysis. The infinite systems are built as
// finite truncations sized by the caller.

#include "tilesim/core.hpp"
#include "tilesim/dynamics.hpp"

namespace tilesim {

// Default sizes for the parameterized constructors. All counts are >= 1;
// larger values grow the finite truncations.
struct GalleryParams {
  int planter_iterations = 2;  // counters for values 4 .. 4+iterations-1
  int arm_cup_periods = 1;     // complete arm/cup pairs before the rows stop
  int counter_width = 2;       // zig-zag counter bit width
};

// Five square tiles S, U, R, A, B over self-binding glues cyan, orange,
// green, red, blue at temperature 1. Both corners of the 2x2 square compete:
// the last attachment always leaves one mismatched internal edge, so there
// are exactly two terminal assemblies and the system is not directed.
TileSystem mismatch_square_system();

// Four glues with the flexible (non-diagonal) strength table used as the
// geometry-compiler fixture, plus a three-tile east-growing line that
// exercises two flexible bindings: seed side glue 1 binds glue 2, and glue 3
// binds itself.
TileSystem flexible_glue_demo();

// Temperature-2 single-assembly-sequence system. A one-tile-high planter row
// grows east; for each iteration i (value b = 4+i) it lifts a decrementing
// binary counter that counts b down to zero in 2b rows, caps it, drops a
// green column on the counter's east flank until the planter blocks it,
// places one yellow tile by two-glue cooperation and one red tile, then
// hands growth back down to the planter for the next iteration. The last red
// tile carries no handoff glue, so growth stops after `iterations` counters.
TileSystem planter_sass(int iterations);

// Temperature-2 zig-zag binary counter of the given bit width that counts
// from zero until the carry leaves the top bit, then caps. Each value takes
// one increment row (west to east) and one copy row (east to west); growth
// never descends, so is_zigzag holds.
TileSystem zigzag_counter(int width);

// Temperature-1 geometric system: from a nine-tile-high seed column, a top
// row grows east dropping a three-tile arm (grey, grey, green) at every
// tenth column starting at the eighth, and a bottom row grows east raising a
// cup under each arm (stem, seven-cell floor, two-cell walls). The five
// center locations between the wall tops admit tile A from the west wall, D
// from the east wall, B east of A, C west of D, and X under the green arm
// tip; X's west/east geometries collide with B's east and C's west, so X
// excludes B and C and vice versa. Both rows stop after `periods` pairs.
TileSystem arm_cup_system(int periods);

// Replayable attachment order growing `periods` complete arm/cup pairs of
// arm_cup_system(periods) with all five-location center rows left empty.
AssemblySequence arm_cup_precenter(int periods);

// Center-row cells of period `index` (0-based) of arm_cup_system: the
// locations of a, b, x, c, d in that order.
std::array<Pos, 5> arm_cup_center_cells(int index);

// Duple system of the blocking scenario: a red seed grows one tile east; a
// horizontal duple over the seed competes for its second cell with a blue
// tile grown from the east tile. Whichever attaches first excludes the
// other, giving two terminal assemblies.
TileSystem duple_blocking_demo();

// Temperature-1 line growing east with side glues repeating with period 3
// after the seed; window movies across vertical cuts repeat with offset 3,
// which makes the line pump-eligible for the window-splicing operations.
TileSystem periodic_line_system();

}  // namespace tilesim
