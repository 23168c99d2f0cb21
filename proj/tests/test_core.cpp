#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tilesim/core.hpp"

using namespace tilesim;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;  // sentinel: "did not throw"
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("diagonal glue function binds equal ids only") {
  const GlueFunction g = GlueFunction::diagonal({0, 1, 2});
  CHECK(g.size() == 3);
  CHECK(g.is_diagonal());
  CHECK(g.strength(1, 1) == 1);
  CHECK(g.strength(2, 2) == 2);
  CHECK(g.strength(1, 2) == 0);
  CHECK(g.strength(0, 0) == 0);
}

TEST_CASE("symmetric glue function supports flexible binding") {
  const GlueFunction g = GlueFunction::symmetric({
      {0, 0, 0},
      {0, 0, 2},
      {0, 2, 1},
  });
  CHECK_FALSE(g.is_diagonal());
  CHECK(g.strength(1, 2) == 2);
  CHECK(g.strength(2, 1) == 2);
  CHECK(g.strength(1, 1) == 0);
  CHECK(g.strength(2, 2) == 1);
}

TEST_CASE("glue table validation errors") {
  CHECK(code_of([] {
          GlueFunction::symmetric({{0, 0}, {0, 0}, {0, 0}});
        }) == ErrorCode::invalid_glue);  // not square
  CHECK(code_of([] {
          GlueFunction::symmetric({{0, 0, 0}, {0, 0, 1}, {0, 2, 0}});
        }) == ErrorCode::invalid_glue);  // not symmetric
  CHECK(code_of([] {
          GlueFunction::symmetric({{0, 1}, {1, 0}});
        }) == ErrorCode::invalid_glue);  // null glue must stay null
  CHECK(code_of([] {
          GlueFunction::diagonal({0, -1});
        }) == ErrorCode::invalid_glue);
}

TEST_CASE("geometry bit strings") {
  const Geometry g = Geometry::from_string("10110");
  CHECK(g.length() == 5);
  CHECK(g.bump(1));
  CHECK_FALSE(g.bump(2));
  CHECK(g.bump(3));
  CHECK(g.bump(4));
  CHECK_FALSE(g.bump(5));
  CHECK(g.to_string() == "10110");
  CHECK(Geometry::zeros(4).empty_domain());
  CHECK_FALSE(g.empty_domain());

  Geometry z = Geometry::zeros(3);
  z.set_bump(2);
  CHECK(z.to_string() == "010");
  CHECK(code_of([] { Geometry::from_string("01a"); }) ==
        ErrorCode::geometry_size);
}

TEST_CASE("geometry compatibility is overlap-freeness under reversal") {
  // positions i and L+1-i overlap when two sides abut
  const Geometry a = Geometry::from_string("1000");
  const Geometry b = Geometry::from_string("0001");
  CHECK_FALSE(geometry_compatible(a, b));  // 1 vs 4 overlap
  CHECK(geometry_compatible(a, a));        // 1 vs 4: a has no bump at 4
  const Geometry c = Geometry::from_string("0100");
  CHECK(geometry_compatible(a, c));
  CHECK_FALSE(geometry_compatible(c, Geometry::from_string("0010")));
  CHECK(code_of([] {
          geometry_compatible(Geometry::zeros(3), Geometry::zeros(4));
        }) == ErrorCode::geometry_size);
}

TEST_CASE("geometry compatibility matches the brute-force oracle") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len(1, 9);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const int L = len(rng);
    std::string sa, sb;
    for (int i = 0; i < L; ++i) {
      sa += static_cast<char>('0' + bit(rng));
      sb += static_cast<char>('0' + bit(rng));
    }
    const Geometry a = Geometry::from_string(sa);
    const Geometry b = Geometry::from_string(sb);
    CHECK(geometry_compatible(a, b) == !oracles::geometry_clash(a, b));
    CHECK(geometry_compatible(a, b) == geometry_compatible(b, a));
  }
}

TEST_CASE("tile system validation rejects model mismatches") {
  TileSystem sys;
  sys.model = Model::gtam;
  sys.temperature = 1;
  sys.glues = GlueFunction::diagonal({0, 1});
  sys.glue_names = {"null", "a"};
  sys.geometry_length = 2;
  SquareTileType sq;
  sq.name = "sq";
  sq.glue = {1, 0, 0, 0};
  sys.tiles.push_back(sq);
  CHECK(code_of([&] { sys.validate(); }) == ErrorCode::unsupported_input);

  sys.model = Model::atam;
  GeometricTileType ge;
  ge.name = "ge";
  for (auto& s : ge.side) s.geometry = Geometry::zeros(2);
  sys.tiles[0] = ge;
  CHECK(code_of([&] { sys.validate(); }) == ErrorCode::unsupported_input);

  // wrong geometry length inside a geometric system
  sys.model = Model::gtam;
  sys.geometry_length = 3;
  CHECK(code_of([&] { sys.validate(); }) == ErrorCode::geometry_size);
}

TEST_CASE("unstable seeds are rejected with the attachment code") {
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 2;
  sys.glues = GlueFunction::diagonal({0, 1});
  sys.glue_names = {"null", "weak"};
  SquareTileType a;
  a.name = "a";
  a.glue = {0, 1, 0, 0};
  SquareTileType b;
  b.name = "b";
  b.glue = {0, 0, 0, 1};
  sys.tiles = {a, b};
  sys.seed.place(sys, 0, Pos{0, 0});
  sys.seed.place(sys, 1, Pos{1, 0});  // single strength-1 bond at tau 2
  CHECK(code_of([&] { sys.validate(); }) == ErrorCode::attachment);

  sys.temperature = 1;
  CHECK_NOTHROW(sys.validate());
}

TEST_CASE("stability: singletons, chains, disconnected pieces") {
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 2;
  sys.glues = GlueFunction::diagonal({0, 1, 2});
  sys.glue_names = {"null", "weak", "strong"};
  SquareTileType t;
  t.name = "t";
  t.glue = {0, 2, 0, 2};  // strong east/west
  sys.tiles = {t};
  sys.seed.place(sys, 0, Pos{0, 0});
  sys.validate();

  Assembly single = sys.seed;
  CHECK(is_tau_stable(sys, single, 2));
  CHECK(oracles::oracle_tau_stable(sys, single));

  Assembly chain = single;
  chain.place(sys, 0, Pos{1, 0});
  chain.place(sys, 0, Pos{2, 0});
  CHECK(is_tau_stable(sys, chain, 2));
  CHECK(oracles::oracle_tau_stable(sys, chain));

  Assembly split = single;
  split.place(sys, 0, Pos{2, 0});  // not adjacent: zero-weight cut
  CHECK_FALSE(is_tau_stable(sys, split, 2));
  CHECK_FALSE(oracles::oracle_tau_stable(sys, split));
  CHECK_FALSE(is_tau_stable(sys, split, 1));
}

TEST_CASE("global min cut agrees with the max-flow oracle") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> nodes(2, 7);
  std::uniform_int_distribution<int> weight(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = nodes(rng);
    std::vector<BindingEdge> edges;
    std::vector<std::array<int, 3>> oracle_edges;
    std::uniform_int_distribution<int> pickv(0, n - 1);
    const int m = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int e = 0; e < m; ++e) {
      const int u = pickv(rng);
      const int v = pickv(rng);
      if (u == v) continue;
      const int w = weight(rng);
      edges.push_back(BindingEdge{u, v, w});
      oracle_edges.push_back({u, v, w});
    }
    const auto lib = global_min_cut(n, edges);
    REQUIRE(lib.has_value());
    CHECK(*lib == oracles::oracle_min_cut(n, oracle_edges));
  }
  CHECK_FALSE(global_min_cut(1, {}).has_value());
}

TEST_CASE("assembly bookkeeping: cells, instances, canonical keys") {
  TileSystem sys;
  sys.model = Model::datam;
  sys.temperature = 1;
  sys.glues = GlueFunction::diagonal({0, 1});
  sys.glue_names = {"null", "g"};
  SquareTileType s;
  s.name = "s";
  s.glue = {1, 1, 1, 1};
  sys.tiles.push_back(s);
  sys.tiles.push_back(DupleTileType::horizontal("d", 1, 1, 1, 1, 1, 1));
  sys.seed.place(sys, 0, Pos{0, 0});
  sys.validate();

  Assembly a = sys.seed;
  a.place(sys, 1, Pos{0, 1});
  CHECK(a.tile_count() == 2);
  CHECK(a.cell_count() == 3);
  CHECK(a.occupied(Pos{0, 1}));
  CHECK(a.occupied(Pos{1, 1}));  // duple partner cell
  CHECK(a.at(Pos{1, 1})->part == 1);
  CHECK(a.at(Pos{0, 1})->part == 0);
  CHECK(a.at(Pos{0, 1})->instance == a.at(Pos{1, 1})->instance);

  Assembly b = sys.seed;
  b.place(sys, 1, Pos{0, 1});
  CHECK(a == b);
  CHECK(a.canonical_key() == b.canonical_key());
  const auto [lo, hi] = a.bounding_box();
  CHECK(lo == Pos{0, 0});
  CHECK(hi == Pos{1, 1});
}

TEST_CASE("facing reports sides and hides duple-internal edges") {
  TileSystem sys;
  sys.model = Model::datam;
  sys.temperature = 1;
  sys.glues = GlueFunction::diagonal({0, 1, 2});
  sys.glue_names = {"null", "a", "b"};
  sys.tiles.push_back(DupleTileType::horizontal("d", 1, 2, 1, 2, 1, 2));
  sys.seed.place(sys, 0, Pos{0, 0});
  sys.validate();
  const Assembly& a = sys.seed;
  REQUIRE(facing(sys, a, Pos{0, 0}, Dir::west).has_value());
  CHECK(facing(sys, a, Pos{0, 0}, Dir::west)->glue == 1);
  CHECK(facing(sys, a, Pos{0, 0}, Dir::north)->glue == 2);
  CHECK_FALSE(facing(sys, a, Pos{0, 0}, Dir::east).has_value());  // internal
  CHECK_FALSE(facing(sys, a, Pos{1, 0}, Dir::west).has_value());  // internal
  CHECK(facing(sys, a, Pos{1, 0}, Dir::east)->glue == 2);
  CHECK_FALSE(facing(sys, a, Pos{2, 0}, Dir::west).has_value());  // empty cell
}

}  // TEST_SUITE
