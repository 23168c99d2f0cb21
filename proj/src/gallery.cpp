#include "tilesim/gallery.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace tilesim {

namespace {

// Accumulates a diagonal glue table: id 0 stays the null glue.
class GlueBook {
 public:
  int add(const std::string& name, Strength s) {
    names_.push_back(name);
    strengths_.push_back(s);
    return static_cast<int>(names_.size()) - 1;
  }
  void install(TileSystem& sys) const {
    sys.glues = GlueFunction::diagonal(strengths_);
    sys.glue_names = names_;
  }

 private:
  std::vector<std::string> names_{"null"};
  std::vector<Strength> strengths_{0};
};

SquareTileType square(std::string name, int n, int e, int s, int w) {
  SquareTileType t;
  t.name = std::move(name);
  t.glue[int(Dir::north)] = n;
  t.glue[int(Dir::east)] = e;
  t.glue[int(Dir::south)] = s;
  t.glue[int(Dir::west)] = w;
  return t;
}

GeometricTileType geo(std::string name, GeometricSide n, GeometricSide e,
                      GeometricSide s, GeometricSide w) {
  GeometricTileType t;
  t.name = std::move(name);
  t.side[int(Dir::north)] = std::move(n);
  t.side[int(Dir::east)] = std::move(e);
  t.side[int(Dir::south)] = std::move(s);
  t.side[int(Dir::west)] = std::move(w);
  return t;
}

std::string idx(const std::string& base, int i) {
  std::ostringstream os;
  os << base << i;
  return os.str();
}

int bit_width(int v) {
  int w = 0;
  while (v > 0) {
    ++w;
    v >>= 1;
  }
  return w == 0 ? 1 : w;
}

}  // namespace

TileSystem mismatch_square_system() {
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 1;
  GlueBook g;
  const int cyan = g.add("cyan", 1);
  const int orange = g.add("orange", 1);
  const int green = g.add("green", 1);
  const int red = g.add("red", 1);
  const int blue = g.add("blue", 1);
  g.install(sys);
  sys.tiles.push_back(square("S", cyan, orange, 0, 0));
  sys.tiles.push_back(square("U", 0, red, cyan, 0));
  sys.tiles.push_back(square("R", green, 0, 0, orange));
  sys.tiles.push_back(square("A", 0, 0, green, blue));
  sys.tiles.push_back(square("B", 0, 0, blue, red));
  sys.seed.place(sys, sys.tile_id("S"), Pos{0, 0});
  sys.validate();
  return sys;
}

TileSystem flexible_glue_demo() {
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 1;
  // Flexible table: g1-g2 and g1-g4 bind across labels; g2, g3 and g4 also
  // bind themselves; g1 does not bind itself.
  sys.glues = GlueFunction::symmetric({
      {0, 0, 0, 0, 0},
      {0, 0, 1, 0, 1},
      {0, 1, 1, 0, 0},
      {0, 0, 0, 1, 0},
      {0, 1, 0, 0, 1},
  });
  sys.glue_names = {"null", "g1", "g2", "g3", "g4"};
  sys.tiles.push_back(square("F0", 0, 1, 0, 0));  // east g1
  sys.tiles.push_back(square("F1", 0, 3, 0, 2));  // west g2 binds g1
  sys.tiles.push_back(square("F2", 0, 0, 0, 3));  // west g3 binds itself
  sys.seed.place(sys, sys.tile_id("F0"), Pos{0, 0});
  sys.validate();
  return sys;
}

TileSystem planter_sass(int iterations) {
  if (iterations < 1)
    throw Error(ErrorCode::unsupported_input,
                "planter_sass needs at least one iteration");
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 2;
  GlueBook book;

  // --- shared counter vocabulary ---------------------------------------
  // Bit rows speak two alphabets: bL/b/bM (read by decrement rows, written
  // by the planter top row and by copy rows) and dL/d/dM (written by
  // decrement rows, read by copy rows). The L/M markers let the end tiles
  // of a row know when to hand over to the side spines.
  int bL[2], bm[2], bM[2], dL[2], dm[2], dM[2];
  for (int v = 0; v < 2; ++v) {
    bL[v] = book.add(idx("bL:", v), 1);
    bm[v] = book.add(idx("b:", v), 1);
    bM[v] = book.add(idx("bM:", v), 1);
    dL[v] = book.add(idx("dL:", v), 1);
    dm[v] = book.add(idx("d:", v), 1);
    dM[v] = book.add(idx("dM:", v), 1);
  }
  const int ds = book.add("ds", 1);    // decrement row entry: borrow pending
  const int dB = book.add("dB", 1);    // borrow still pending
  const int dD = book.add("dD", 1);    // borrow settled
  const int cs = book.add("cs", 1);    // copy row entry: all zero so far
  const int cZ = book.add("cZ", 1);
  const int cN = book.add("cN", 1);
  const int wstart = book.add("wstart", 2);
  const int dend = book.add("dend", 2);
  const int te = book.add("te", 2);
  const int capbase = book.add("capbase", 1);
  const int ctn = book.add("ct:n", 2);
  const int ctz = book.add("ct:z", 2);
  const int ct2 = book.add("ct2", 2);
  const int capA = book.add("capA", 2);
  const int cap = book.add("cap", 1);
  const int cape1 = book.add("cape1", 2);
  const int cape2 = book.add("cape2", 2);
  const int cape3 = book.add("cape3", 2);
  const int grnstart = book.add("grnstart", 2);
  const int grn = book.add("grn", 2);
  const int grnE = book.add("grnE", 1);

  // --- per-iteration planter plumbing -----------------------------------
  std::vector<std::vector<int>> pb(iterations), pt(iterations);
  std::vector<int> pu(iterations), pcoop(iterations), yred(iterations),
      dh(iterations), dh2(iterations);
  for (int i = 0; i < iterations; ++i) {
    const int width = bit_width(4 + i);
    for (int k = 0; k <= width + 6; ++k)
      pb[i].push_back(book.add("pb:" + std::to_string(i) + ":" +
                               std::to_string(k), 2));
    for (int k = 0; k <= width + 5; ++k)
      pt[i].push_back(book.add("pt:" + std::to_string(i) + ":" +
                               std::to_string(k), 2));
    pu[i] = book.add(idx("pu:", i), 2);
    pcoop[i] = book.add(idx("pcoop:", i), 1);
    yred[i] = book.add(idx("yred:", i), 2);
    dh[i] = book.add(idx("dh:", i), 2);
    dh2[i] = book.add(idx("dh2:", i), 2);
  }
  book.install(sys);

  auto add = [&sys](SquareTileType t) { sys.tiles.push_back(std::move(t)); };

  // Shared decrement/copy machinery, reused by every counter.
  add(square("spine.w0", 0, ds, wstart, 0));
  for (int v = 0; v < 2; ++v) {
    // Subtract one at the lowest bit: 1 settles the borrow, 0 keeps it.
    add(square(idx("dec.L.", v), dL[1 - v], v == 1 ? dD : dB, bL[v], ds));
    for (int st = 0; st < 2; ++st) {  // 0 = borrow pending, 1 = settled
      const int out = st == 0 ? 1 - v : v;
      const int east = (st == 0 && v == 0) ? dB : dD;
      const char* stname = st == 0 ? "B" : "D";
      add(square("dec.m." + std::to_string(v) + "." + stname, dm[out], east,
                 bm[v], st == 0 ? dB : dD));
      add(square("dec.M." + std::to_string(v) + "." + stname, dM[out], dend,
                 bM[v], st == 0 ? dB : dD));
    }
  }
  add(square("spine.e1", te, 0, 0, dend));
  add(square("spine.e2", capbase, 0, te, cs));
  for (int v = 0; v < 2; ++v) {
    add(square(idx("chk.M.", v), bM[v], cs, dM[v], v == 0 ? cZ : cN));
    for (int st = 0; st < 2; ++st) {  // 0 = all zero so far, 1 = nonzero seen
      const int in = st == 0 ? cZ : cN;
      const int zeroish = (st == 0 && v == 0) ? 1 : 0;
      const char* stname = st == 0 ? "Z" : "N";
      add(square("chk.m." + std::to_string(v) + "." + stname, bm[v], in,
                 dm[v], zeroish ? cZ : cN));
      add(square("chk.L." + std::to_string(v) + "." + stname, bL[v], in,
                 dL[v], zeroish ? ctz : ctn));
    }
  }
  add(square("spine.w1n", ct2, ctn, 0, 0));
  add(square("spine.w2", 0, ds, ct2, 0));
  add(square("spine.w1z", capA, ctz, 0, 0));
  add(square("cap.w", 0, cap, capA, 0));
  add(square("cap.L", 0, cap, bL[0], cap));
  add(square("cap.m", 0, cap, bm[0], cap));
  add(square("cap.M", 0, cap, bM[0], cap));
  add(square("cap.e0", 0, cape1, capbase, cap));
  add(square("cap.e1", 0, cape2, 0, cape1));
  add(square("cap.e2", 0, cape3, 0, cape2));
  add(square("cap.e3", 0, grnstart, 0, cape3));
  add(square("green.top", 0, 0, grn, grnstart));
  add(square("green", grn, grnE, grn, 0));

  // Per-iteration planter rows and the yellow/red handoff.
  for (int i = 0; i < iterations; ++i) {
    const int width = bit_width(4 + i);
    const int value = 4 + i;
    const int len = width + 7;  // bottom row cells: launcher .. east end
    for (int k = 0; k < len; ++k) {
      add(square("pb." + std::to_string(i) + "." + std::to_string(k),
                 k == len - 1 ? pu[i] : 0, k == len - 1 ? 0 : pb[i][k + 1], 0,
                 pb[i][k]));
    }
    add(square(idx("pt.turn.", i), pcoop[i], 0, pu[i], pt[i][0]));
    // Top row tiles indexed from the turn tile westward; relative column
    // r = len-2-k counts from the launcher (r = 0) east.
    for (int k = 0; k <= len - 2; ++k) {
      const int r = len - 2 - k;
      int north = 0;
      if (r == 0) {
        north = wstart;
      } else if (r >= 1 && r <= width) {
        const int bit = (value >> (r - 1)) & 1;
        north = r == 1 ? bL[bit] : (r == width ? bM[bit] : bm[bit]);
      }
      add(square("pt." + std::to_string(i) + "." + std::to_string(k), north,
                 pt[i][k], 0, k == len - 2 ? 0 : pt[i][k + 1]));
    }
    add(square(idx("yellow.", i), 0, yred[i], pcoop[i], grnE));
    add(square(idx("red.", i), 0, 0,
               i + 1 < iterations ? dh[i] : 0, yred[i]));
    if (i + 1 < iterations) {
      add(square(idx("drop1.", i), dh[i], 0, dh2[i], 0));
      add(square(idx("drop2.", i), dh2[i], pb[i + 1][0], 0, 0));
    }
  }
  sys.tiles.push_back(square("seed", 0, pb[0][0], 0, 0));
  sys.seed.place(sys, sys.tile_id("seed"), Pos{0, 0});
  sys.validate();
  return sys;
}

TileSystem zigzag_counter(int width) {
  if (width < 1)
    throw Error(ErrorCode::unsupported_input,
                "zigzag_counter needs width >= 1");
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 2;
  GlueBook book;

  // r* feeds increment rows (written by the seed row and copy rows); i*
  // feeds copy rows (written by increment rows). For width 1 the low and
  // high bit coincide and use the combined rC/iC alphabet.
  int rL[2], rm[2], rM[2], iL[2], im[2], iM[2], rC[2], iC[2];
  for (int v = 0; v < 2; ++v) {
    rL[v] = book.add(idx("rL:", v), 1);
    rm[v] = book.add(idx("r:", v), 1);
    rM[v] = book.add(idx("rM:", v), 1);
    iL[v] = book.add(idx("iL:", v), 1);
    im[v] = book.add(idx("i:", v), 1);
    iM[v] = book.add(idx("iM:", v), 1);
    rC[v] = book.add(idx("rC:", v), 1);
    iC[v] = book.add(idx("iC:", v), 1);
  }
  const int inc = book.add("inc", 1);  // increment row entry: carry pending
  const int ic = book.add("ic", 1);
  const int in = book.add("in", 1);
  const int iend_n = book.add("iend:n", 2);
  const int iend_c = book.add("iend:c", 2);  // carry out: stop counting
  const int ie2 = book.add("ie2", 2);
  const int rs = book.add("rs", 1);
  const int rk = book.add("rk", 1);
  const int rw = book.add("rw", 2);
  const int rw2 = book.add("rw2", 2);
  const int iw = book.add("iw", 2);
  std::vector<int> sd;
  for (int k = 0; k <= width; ++k) sd.push_back(book.add(idx("sd:", k), 2));
  book.install(sys);

  auto add = [&sys](SquareTileType t) { sys.tiles.push_back(std::move(t)); };

  add(square("seed.w", iw, sd[0], 0, 0));
  for (int j = 0; j < width; ++j) {
    const int north = width == 1 ? rC[0]
                      : (j == 0 ? rL[0] : (j == width - 1 ? rM[0] : rm[0]));
    add(square(idx("seed.", j), north, sd[j + 1], 0, sd[j]));
  }
  add(square("seed.e", 0, 0, 0, sd[width]));

  add(square("spine.iw", 0, inc, iw, 0));
  if (width == 1) {
    add(square("inc.C.0", iC[1], iend_n, rC[0], inc));
    add(square("inc.C.1", iC[0], iend_c, rC[1], inc));
    for (int v = 0; v < 2; ++v)
      add(square(idx("cpy.C.", v), rC[v], rs, iC[v], rw));
  } else {
    for (int v = 0; v < 2; ++v) {
      add(square(idx("inc.L.", v), iL[1 - v], v == 0 ? in : ic, rL[v], inc));
      for (int st = 0; st < 2; ++st) {  // 0 = carry pending, 1 = settled
        const int out = st == 0 ? 1 - v : v;
        const int east = (st == 0 && v == 1) ? ic : in;
        const char* stname = st == 0 ? "c" : "n";
        add(square("inc.m." + std::to_string(v) + "." + stname, im[out],
                   east, rm[v], st == 0 ? ic : in));
        add(square("inc.M." + std::to_string(v) + "." + stname, iM[out],
                   (st == 0 && v == 1) ? iend_c : iend_n, rM[v],
                   st == 0 ? ic : in));
      }
      add(square(idx("cpy.M.", v), rM[v], rs, iM[v], rk));
      add(square(idx("cpy.m.", v), rm[v], rk, im[v], rk));
      add(square(idx("cpy.L.", v), rL[v], rk, iL[v], rw));
    }
  }
  add(square("spine.ie1", ie2, 0, 0, iend_n));
  add(square("spine.ie2", 0, 0, ie2, rs));
  add(square("spine.cap", 0, 0, 0, iend_c));
  add(square("spine.rw1", rw2, rw, 0, 0));
  add(square("spine.rw2", 0, inc, rw2, 0));

  for (int j = -1; j <= width; ++j) {
    const char* name = j < 0 ? "seed.w" : (j == width ? "seed.e" : nullptr);
    const int tile = name != nullptr
                         ? sys.tile_id(name)
                         : sys.tile_id(idx("seed.", j));
    sys.seed.place(sys, tile, Pos{j, 0});
  }
  sys.validate();
  return sys;
}

namespace {

constexpr int kArmPeriod = 10;
constexpr int kArmOffset = 8;

GeometricSide plain(int glue) { return GeometricSide{glue, Geometry::zeros(2)}; }

GeometricSide bumped(const char* bits) {
  return GeometricSide{0, Geometry::from_string(bits)};
}

}  // namespace

TileSystem arm_cup_system(int periods) {
  if (periods < 1)
    throw Error(ErrorCode::unsupported_input,
                "arm_cup_system needs at least one period");
  TileSystem sys;
  sys.model = Model::gtam;
  sys.temperature = 1;
  sys.geometry_length = 2;
  GlueBook book;
  const int cols = kArmPeriod * periods;

  int up[5], dn[5];
  for (int k = 1; k <= 4; ++k) {
    up[k] = book.add(idx("u:", k), 1);
    dn[k] = book.add(idx("d:", k), 1);
  }
  std::vector<int> t(cols + 1), b(cols + 1);
  for (int x = 1; x <= cols; ++x) {
    t[x] = book.add(idx("t:", x), 1);
    b[x] = book.add(idx("b:", x), 1);
  }
  const int arm1 = book.add("arm1", 1);
  const int arm2 = book.add("arm2", 1);
  const int arm3 = book.add("arm3", 1);
  const int gx = book.add("gx", 1);
  const int cs1 = book.add("cs1", 1);
  const int cs2 = book.add("cs2", 1);
  int fw[4], fe[4];
  for (int j = 1; j <= 3; ++j) {
    fw[j] = book.add(idx("fw:", j), 1);
    fe[j] = book.add(idx("fe:", j), 1);
  }
  const int ww1 = book.add("ww1", 1);
  const int ww2 = book.add("ww2", 1);
  const int we1 = book.add("we1", 1);
  const int we2 = book.add("we2", 1);
  const int ga = book.add("ga", 1);
  const int gab = book.add("gab", 1);
  const int gd = book.add("gd", 1);
  const int gdc = book.add("gdc", 1);
  book.install(sys);

  auto add = [&sys](GeometricTileType t2) {
    sys.tiles.push_back(std::move(t2));
  };
  const GeometricSide none = plain(0);

  add(geo("seed", plain(up[1]), none, plain(dn[1]), none));
  for (int k = 1; k <= 4; ++k) {
    add(geo(idx("up.", k), k < 4 ? plain(up[k + 1]) : none,
            k == 4 ? plain(t[1]) : none, plain(up[k]), none));
    add(geo(idx("dn.", k), plain(dn[k]), k == 4 ? plain(b[1]) : none,
            k < 4 ? plain(dn[k + 1]) : none, none));
  }
  for (int x = 1; x <= cols; ++x) {
    const bool drop = x % kArmPeriod == kArmOffset;
    add(geo(idx("top.", x), none, x < cols ? plain(t[x + 1]) : none,
            drop ? plain(arm1) : none, plain(t[x])));
    add(geo(idx("bot.", x), drop ? plain(cs1) : none,
            x < cols ? plain(b[x + 1]) : none, none, plain(b[x])));
  }
  add(geo("grey1", plain(arm1), none, plain(arm2), none));
  add(geo("grey2", plain(arm2), none, plain(arm3), none));
  add(geo("green", plain(arm3), none, plain(gx), none));
  add(geo("stem", plain(cs2), none, plain(cs1), none));
  add(geo("floor.c", none, plain(fe[1]), plain(cs2), plain(fw[1])));
  for (int j = 1; j <= 3; ++j) {
    add(geo(idx("floor.w", j), j == 3 ? plain(ww1) : none,
            plain(fw[j]), none, j < 3 ? plain(fw[j + 1]) : none));
    add(geo(idx("floor.e", j), j == 3 ? plain(we1) : none,
            j < 3 ? plain(fe[j + 1]) : none, none, plain(fe[j])));
  }
  add(geo("wall.w1", plain(ww2), none, plain(ww1), none));
  add(geo("wall.w2", none, plain(ga), plain(ww2), none));
  add(geo("wall.e1", plain(we2), none, plain(we1), none));
  add(geo("wall.e2", none, none, plain(we2), plain(gd)));
  add(geo("A", none, plain(gab), none, plain(ga)));
  add(geo("B", none, bumped("01"), none, plain(gab)));
  add(geo("D", none, plain(gd), none, plain(gdc)));
  add(geo("C", none, plain(gdc), none, bumped("01")));
  // X's bumps collide with B's east and C's west (position i meets L+1-i);
  // the bump placement keeps every other side pairing compatible, including
  // B against C and X against itself.
  add(geo("X", plain(gx), bumped("10"), none, bumped("10")));

  sys.seed.place(sys, sys.tile_id("seed"), Pos{0, 0});
  sys.validate();
  return sys;
}

std::array<Pos, 5> arm_cup_center_cells(int index) {
  const int xc = kArmPeriod * index + kArmOffset;
  return {Pos{xc - 2, 0}, Pos{xc - 1, 0}, Pos{xc, 0}, Pos{xc + 1, 0},
          Pos{xc + 2, 0}};
}

AssemblySequence arm_cup_precenter(int periods) {
  const TileSystem sys = arm_cup_system(periods);
  AssemblySequence seq;
  auto at = [&](const std::string& name, int x, int y) {
    seq.attachments.push_back(Attachment{sys.tile_id(name), Pos{x, y}});
  };
  const int cols = kArmPeriod * periods;
  for (int k = 1; k <= 4; ++k) at(idx("up.", k), 0, k);
  for (int x = 1; x <= cols; ++x) {
    at(idx("top.", x), x, 4);
    if (x % kArmPeriod == kArmOffset) {
      at("grey1", x, 3);
      at("grey2", x, 2);
      at("green", x, 1);
    }
  }
  for (int k = 1; k <= 4; ++k) at(idx("dn.", k), 0, -k);
  for (int x = 1; x <= cols; ++x) {
    at(idx("bot.", x), x, -4);
    if (x % kArmPeriod == kArmOffset) {
      at("stem", x, -3);
      at("floor.c", x, -2);
      for (int j = 1; j <= 3; ++j) at(idx("floor.w", j), x - j, -2);
      at("wall.w1", x - 3, -1);
      at("wall.w2", x - 3, 0);
      for (int j = 1; j <= 3; ++j) at(idx("floor.e", j), x + j, -2);
      at("wall.e1", x + 3, -1);
      at("wall.e2", x + 3, 0);
    }
  }
  return seq;
}

TileSystem duple_blocking_demo() {
  TileSystem sys;
  sys.model = Model::datam;
  sys.temperature = 1;
  GlueBook book;
  const int east = book.add("east", 1);
  const int dup = book.add("dup", 1);
  const int blue = book.add("blue", 1);
  book.install(sys);
  sys.tiles.push_back(square("R0", dup, east, 0, 0));
  sys.tiles.push_back(square("R1", blue, 0, 0, east));
  sys.tiles.push_back(
      DupleTileType::horizontal("Dup", 0, 0, dup, 0, 0, 0));
  sys.tiles.push_back(square("Blue", 0, 0, blue, 0));
  sys.seed.place(sys, sys.tile_id("R0"), Pos{0, 0});
  sys.validate();
  return sys;
}

TileSystem periodic_line_system() {
  TileSystem sys;
  sys.model = Model::atam;
  sys.temperature = 1;
  GlueBook book;
  const int e0 = book.add("e0", 1);
  const int e1 = book.add("e1", 1);
  const int e2 = book.add("e2", 1);
  book.install(sys);
  sys.tiles.push_back(square("P.seed", 0, e0, 0, 0));
  sys.tiles.push_back(square("P.1", 0, e1, 0, e0));
  sys.tiles.push_back(square("P.2", 0, e2, 0, e1));
  sys.tiles.push_back(square("P.0", 0, e0, 0, e2));
  sys.seed.place(sys, sys.tile_id("P.seed"), Pos{0, 0});
  sys.validate();
  return sys;
}

}  // namespace tilesim
