#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "tilesim/dynamics.hpp"
#include "tilesim/gallery.hpp"

using namespace tilesim;

namespace {

// A tiny geometric system where glue-wise identical tiles differ only in
// whether their bumps collide with the seed's east side.
TileSystem blocking_gtam() {
  TileSystem sys;
  sys.model = Model::gtam;
  sys.temperature = 1;
  sys.glues = GlueFunction::diagonal({0, 1});
  sys.glue_names = {"null", "g"};
  sys.geometry_length = 2;
  auto tile = [&](const char* name, const char* east_bits,
                  const char* west_bits) {
    GeometricTileType t;
    t.name = name;
    for (auto& s : t.side) s.geometry = Geometry::zeros(2);
    t.side[int(Dir::east)] = {1, Geometry::from_string(east_bits)};
    t.side[int(Dir::west)] = {1, Geometry::from_string(west_bits)};
    return t;
  };
  // Abutting sides overlay mirrored: east position p faces west position
  // L + 1 - p, so the seed's east bump at 1 faces west position 2.
  sys.tiles.push_back(tile("seed", "10", "00"));  // east bump at 1
  sys.tiles.push_back(tile("ok", "00", "10"));    // west bump at 1: no clash
  sys.tiles.push_back(tile("bad", "00", "01"));   // west bump at 2 vs seed's 1
  sys.seed.place(sys, 0, Pos{0, 0});
  sys.validate();
  return sys;
}

std::set<std::string> key_set(const std::vector<Assembly>& v) {
  std::set<std::string> out;
  for (const auto& a : v) out.insert(a.canonical_key());
  return out;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("frontier respects geometric blocking") {
  const TileSystem sys = blocking_gtam();
  const auto f = frontier(sys, sys.seed);
  // "ok" east of the seed and fresh "seed"/"ok"/"bad" growth west etc. are
  // constrained by glue g on east/west sides only.
  bool saw_ok = false;
  for (const auto& at : f) {
    CHECK(oracles::oracle_attachable(sys, sys.seed, at.tile, at.anchor));
    if (at.tile == 1 && at.anchor == Pos{1, 0}) saw_ok = true;
    CHECK_FALSE((at.tile == 2 && at.anchor == Pos{1, 0}));  // bump clash
  }
  CHECK(saw_ok);
  CHECK(attachable(sys, sys.seed, Attachment{1, Pos{1, 0}}));
  CHECK_FALSE(attachable(sys, sys.seed, Attachment{2, Pos{1, 0}}));
}

TEST_CASE("frontier equals the brute-force oracle on random square systems") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 25) {
    TileSystem sys = corpus::random_atam(rng);
    if (!corpus::exploration_fits(sys, 5, 20'000)) continue;
    ++checked;
    for (const Assembly& a : enumerate_producible(sys, 5)) {
      const auto lib = frontier(sys, a);
      const auto oracle = oracles::oracle_frontier(sys, a);
      REQUIRE(lib.size() == oracle.size());
      for (std::size_t i = 0; i < lib.size(); ++i) {
        CHECK(lib[i].tile == oracle[i].tile);
        CHECK(lib[i].anchor == oracle[i].anchor);
      }
    }
  }
}

TEST_CASE("frontier equals the brute-force oracle on random duple systems") {
  std::mt19937 rng(5150);
  int checked = 0;
  while (checked < 15) {
    TileSystem sys = corpus::random_datam(rng);
    if (!corpus::exploration_fits(sys, 5, 20'000)) continue;
    ++checked;
    for (const Assembly& a : enumerate_producible(sys, 5)) {
      const auto lib = frontier(sys, a);
      const auto oracle = oracles::oracle_frontier(sys, a);
      REQUIRE(lib.size() == oracle.size());
      for (std::size_t i = 0; i < lib.size(); ++i) {
        CHECK(lib[i].tile == oracle[i].tile);
        CHECK(lib[i].anchor == oracle[i].anchor);
      }
    }
  }
}

TEST_CASE("attach validates and extends; replay reproduces runs") {
  const TileSystem sys = mismatch_square_system();
  const RunResult r = run(sys, SequencePolicy::lex, 16);
  CHECK(r.reached_terminal);
  CHECK(r.assembly.tile_count() == 4);
  const Assembly replayed = replay(sys, r.sequence);
  CHECK(replayed == r.assembly);

  // illegal attachment: detached position
  CHECK_THROWS_AS(attach(sys, sys.seed, Attachment{1, Pos{5, 5}}), Error);
}

TEST_CASE("lex runs are deterministic and policy-faithful") {
  const TileSystem sys = mismatch_square_system();
  const RunResult a = run(sys, SequencePolicy::lex, 10);
  const RunResult b = run(sys, SequencePolicy::lex, 10);
  CHECK(a.assembly.canonical_key() == b.assembly.canonical_key());
  REQUIRE(a.sequence.attachments.size() == b.sequence.attachments.size());
  // each lex step picks the least (y, x, tile) frontier entry
  Assembly cur = sys.seed;
  for (const Attachment& at : a.sequence.attachments) {
    const auto f = frontier(sys, cur);
    REQUIRE_FALSE(f.empty());
    CHECK(f.front().tile == at.tile);
    CHECK(f.front().anchor == at.anchor);
    cur = attach(sys, cur, at);
  }
}

TEST_CASE("random policy is deterministic per rng seed") {
  const TileSystem sys = mismatch_square_system();
  const RunResult a = run(sys, SequencePolicy::random, 10, 99);
  const RunResult b = run(sys, SequencePolicy::random, 10, 99);
  CHECK(a.assembly.canonical_key() == b.assembly.canonical_key());
}

TEST_CASE("exploration equals the recursive oracle") {
  std::mt19937 rng(31337);
  int atam_checked = 0, datam_checked = 0;
  while (atam_checked < 20) {
    TileSystem sys = corpus::random_atam(rng);
    if (!corpus::exploration_fits(sys, 6, 50'000)) continue;
    ++atam_checked;
    CHECK(key_set(enumerate_producible(sys, 6)) ==
          key_set(oracles::oracle_producible(sys, 6)));
  }
  while (datam_checked < 10) {
    TileSystem sys = corpus::random_datam(rng);
    if (!corpus::exploration_fits(sys, 6, 50'000)) continue;
    ++datam_checked;
    CHECK(key_set(enumerate_producible(sys, 6)) ==
          key_set(oracles::oracle_producible(sys, 6)));
  }
}

TEST_CASE("terminal enumeration and truncation flags") {
  const TileSystem square = mismatch_square_system();
  const TerminalSet t = enumerate_terminal(square, 8);
  CHECK_FALSE(t.truncated);
  CHECK(t.assemblies.size() == 2);
  for (const Assembly& a : t.assemblies) {
    CHECK(a.tile_count() == 4);
    CHECK(oracles::oracle_frontier(square, a).empty());
  }

  const TileSystem line = periodic_line_system();
  const TerminalSet open_ended = enumerate_terminal(line, 5);
  CHECK(open_ended.truncated);
  CHECK(open_ended.assemblies.empty());
}

TEST_CASE("exploration graph stores witness sequences and edges") {
  const TileSystem sys = mismatch_square_system();
  const ExplorationGraph g = explore(sys, 8);
  CHECK(g.nodes.size() == 8);  // producibles of the mismatch square
  CHECK_FALSE(g.truncated);
  for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
    const Assembly rebuilt = replay(sys, g.sequence_to(i));
    CHECK(rebuilt == g.nodes[i].assembly);
    CHECK(g.find(g.nodes[i].assembly) == i);
    const bool truly_terminal = frontier(sys, g.nodes[i].assembly).empty();
    CHECK(g.nodes[i].terminal == truly_terminal);
  }
}

TEST_CASE("directedness verdicts") {
  CHECK_FALSE(is_directed(mismatch_square_system(), 8).holds);
  CHECK(is_directed(flexible_glue_demo(), 8).holds);
  const BoundedVerdict line = is_directed(periodic_line_system(), 5);
  CHECK(line.holds);
  CHECK(line.truncated);
}

TEST_CASE("single-frontier and zigzag classifications") {
  const TileSystem line = periodic_line_system();
  CHECK(is_sass(line, 6).holds);
  const TileSystem square = mismatch_square_system();
  CHECK_FALSE(is_sass(square, 8).holds);

  const TileSystem zz = zigzag_counter(1);
  CHECK(is_zigzag(zz, 64).holds);
  CHECK(is_sass(zz, 64).holds);
}

TEST_CASE("lowest-y policy stays on the bottom row while it can") {
  const TileSystem line = periodic_line_system();  // only y = 0 ever grows
  const RunResult r = run(line, SequencePolicy::lowest_y_first, 12, 7);
  for (const Attachment& at : r.sequence.attachments) CHECK(at.anchor.y == 0);
  CHECK(r.assembly.tile_count() == 12);
}

}  // TEST_SUITE
