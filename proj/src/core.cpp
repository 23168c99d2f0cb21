#include "tilesim/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace tilesim {

Pos step(Pos p, Dir d) {
  switch (d) {
    case Dir::north: return {p.x, p.y + 1};
    case Dir::east: return {p.x + 1, p.y};
    case Dir::south: return {p.x, p.y - 1};
    case Dir::west: return {p.x - 1, p.y};
  }
  throw Error(ErrorCode::internal, "bad direction");
}

Dir opposite(Dir d) {
  switch (d) {
    case Dir::north: return Dir::south;
    case Dir::east: return Dir::west;
    case Dir::south: return Dir::north;
    case Dir::west: return Dir::east;
  }
  throw Error(ErrorCode::internal, "bad direction");
}

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::north: return "north";
    case Dir::east: return "east";
    case Dir::south: return "south";
    case Dir::west: return "west";
  }
  return "?";
}

GlueFunction GlueFunction::symmetric(std::vector<std::vector<Strength>> matrix) {
  GlueFunction g;
  g.size_ = static_cast<int>(matrix.size());
  if (g.size_ == 0)
    throw Error(ErrorCode::invalid_glue, "glue table must be non-empty");
  g.m_.assign(static_cast<std::size_t>(g.size_) * g.size_, 0);
  for (int i = 0; i < g.size_; ++i) {
    if (static_cast<int>(matrix[i].size()) != g.size_)
      throw Error(ErrorCode::invalid_glue, "glue table must be square");
    for (int j = 0; j < g.size_; ++j) {
      Strength s = matrix[i][j];
      if (s < 0)
        throw Error(ErrorCode::invalid_glue, "glue strengths must be >= 0");
      if (matrix[j][i] != s)
        throw Error(ErrorCode::invalid_glue, "glue table must be symmetric");
      if ((i == 0 || j == 0) && s != 0)
        throw Error(ErrorCode::invalid_glue, "null glue must have strength 0");
      g.m_[static_cast<std::size_t>(i) * g.size_ + j] = s;
    }
  }
  return g;
}

GlueFunction GlueFunction::diagonal(std::vector<Strength> self) {
  int n = static_cast<int>(self.size());
  std::vector<std::vector<Strength>> matrix(n, std::vector<Strength>(n, 0));
  for (int i = 0; i < n; ++i) matrix[i][i] = self[i];
  if (n > 0) matrix[0][0] = 0;
  return symmetric(std::move(matrix));
}

Strength GlueFunction::strength(int a, int b) const {
  if (a < 0 || b < 0 || a >= size_ || b >= size_)
    throw Error(ErrorCode::invalid_glue, "glue id out of range");
  return m_[static_cast<std::size_t>(a) * size_ + b];
}

bool GlueFunction::is_diagonal() const {
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (i != j && m_[static_cast<std::size_t>(i) * size_ + j] != 0)
        return false;
  return true;
}

Geometry Geometry::zeros(int length) {
  if (length < 0) throw Error(ErrorCode::geometry_size, "negative length");
  Geometry g;
  g.bits_.assign(static_cast<std::size_t>(length), 0);
  return g;
}

Geometry Geometry::from_string(const std::string& bits) {
  Geometry g;
  g.bits_.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::geometry_size, "geometry string must be 0/1");
    g.bits_.push_back(c == '1');
  }
  return g;
}

bool Geometry::bump(int i) const {
  if (i < 1 || i > length())
    throw Error(ErrorCode::geometry_size, "geometry position out of range");
  return bits_[static_cast<std::size_t>(i - 1)] != 0;
}

void Geometry::set_bump(int i, bool v) {
  if (i < 1 || i > length())
    throw Error(ErrorCode::geometry_size, "geometry position out of range");
  bits_[static_cast<std::size_t>(i - 1)] = v ? 1 : 0;
}

bool Geometry::empty_domain() const {
  return std::all_of(bits_.begin(), bits_.end(),
                     [](std::uint8_t b) { return b == 0; });
}

std::string Geometry::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool geometry_compatible(const Geometry& a, const Geometry& b) {
  int len = a.length();
  if (len != b.length())
    throw Error(ErrorCode::geometry_size, "geometry lengths differ");
  for (int i = 1; i <= len; ++i)
    if (a.bump(i) && b.bump(len + 1 - i)) return false;
  return true;
}

DupleTileType DupleTileType::horizontal(std::string name, int w, int n_west,
                                        int s_west, int n_east, int s_east,
                                        int e) {
  DupleTileType t;
  t.name = std::move(name);
  t.orientation = DupleOrientation::horizontal;
  t.glue[0] = {n_west, -1, s_west, w};
  t.glue[1] = {n_east, e, s_east, -1};
  return t;
}

DupleTileType DupleTileType::vertical(std::string name, int s, int w_lower,
                                      int e_lower, int w_upper, int e_upper,
                                      int n) {
  DupleTileType t;
  t.name = std::move(name);
  t.orientation = DupleOrientation::vertical;
  t.glue[0] = {-1, e_lower, s, w_lower};
  t.glue[1] = {n, e_upper, -1, w_upper};
  return t;
}

Pos DupleTileType::second_cell_offset() const {
  return orientation == DupleOrientation::horizontal ? Pos{1, 0} : Pos{0, 1};
}

const std::string& tile_name(const TileType& t) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; },
                    t);
}

bool is_duple(const TileType& t) {
  return std::holds_alternative<DupleTileType>(t);
}

const CellEntry* Assembly::at(Pos p) const {
  auto it = cells_.find(p);
  return it == cells_.end() ? nullptr : &it->second;
}

void Assembly::place(const TileSystem& sys, int tile, Pos anchor) {
  if (tile < 0 || tile >= static_cast<int>(sys.tiles.size()))
    throw Error(ErrorCode::attachment, "tile id out of range");
  int inst = next_instance_++;
  const TileType& t = sys.tiles[static_cast<std::size_t>(tile)];
  std::vector<std::pair<Pos, std::uint8_t>> spots{{anchor, 0}};
  if (const auto* d = std::get_if<DupleTileType>(&t)) {
    Pos off = d->second_cell_offset();
    spots.push_back({{anchor.x + off.x, anchor.y + off.y}, 1});
  }
  for (auto& [p, part] : spots)
    if (occupied(p))
      throw Error(ErrorCode::attachment, "cell already occupied");
  for (auto& [p, part] : spots) cells_[p] = CellEntry{tile, inst, part};
  instances_[inst] = InstanceEntry{tile, anchor};
}

std::string Assembly::canonical_key() const {
  std::ostringstream os;
  for (const auto& [p, c] : cells_)
    os << p.x << ',' << p.y << ':' << c.tile << '.' << int(c.part) << ';';
  return os.str();
}

std::pair<Pos, Pos> Assembly::bounding_box() const {
  if (cells_.empty())
    throw Error(ErrorCode::internal, "bounding box of empty assembly");
  Pos lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  Pos hi{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
  for (const auto& [p, c] : cells_) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

int TileSystem::add_glue(const std::string& name) {
  if (glue_names.empty()) glue_names.push_back("null");
  for (std::size_t i = 0; i < glue_names.size(); ++i)
    if (glue_names[i] == name) return static_cast<int>(i);
  glue_names.push_back(name);
  return static_cast<int>(glue_names.size()) - 1;
}

int TileSystem::tile_id(const std::string& name) const {
  for (std::size_t i = 0; i < tiles.size(); ++i)
    if (tile_name(tiles[i]) == name) return static_cast<int>(i);
  return -1;
}

const TileType& TileSystem::tile(int id) const {
  if (id < 0 || id >= static_cast<int>(tiles.size()))
    throw Error(ErrorCode::internal, "tile id out of range");
  return tiles[static_cast<std::size_t>(id)];
}

int TileSystem::find_glue(const std::string& name) const {
  for (std::size_t i = 0; i < glue_names.size(); ++i)
    if (glue_names[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

void check_glue_id(const TileSystem& sys, int g, const std::string& where) {
  if (g < 0 || g >= sys.glues.size())
    throw Error(ErrorCode::invalid_glue, "glue id out of range in " + where);
}

}  // namespace

void TileSystem::validate() const {
  if (temperature < 1)
    throw Error(ErrorCode::unsupported_input, "temperature must be >= 1");
  if (!glue_names.empty() &&
      static_cast<int>(glue_names.size()) != glues.size())
    throw Error(ErrorCode::invalid_glue, "glue name table size mismatch");
  for (const auto& t : tiles) {
    if (std::holds_alternative<SquareTileType>(t)) {
      if (model == Model::gtam)
        throw Error(ErrorCode::unsupported_input,
                    "square tiles not allowed in geometric systems");
      for (int g : std::get<SquareTileType>(t).glue)
        check_glue_id(*this, g, tile_name(t));
    } else if (std::holds_alternative<GeometricTileType>(t)) {
      if (model != Model::gtam)
        throw Error(ErrorCode::unsupported_input,
                    "geometric tiles only allowed in geometric systems");
      for (const auto& s : std::get<GeometricTileType>(t).side) {
        check_glue_id(*this, s.glue, tile_name(t));
        if (s.geometry.length() != geometry_length)
          throw Error(ErrorCode::geometry_size,
                      "geometry length mismatch in " + tile_name(t));
      }
    } else {
      if (model != Model::datam)
        throw Error(ErrorCode::unsupported_input,
                    "duple tiles only allowed in duple systems");
      const auto& d = std::get<DupleTileType>(t);
      for (int part = 0; part < 2; ++part)
        for (Dir dir : all_dirs)
          if (!d.internal_dir(part, dir))
            check_glue_id(*this, d.glue[part][int(dir)], tile_name(t));
    }
  }
  if (model == Model::gtam || model == Model::datam) {
    if (!glues.is_diagonal())
      throw Error(ErrorCode::invalid_glue,
                  "geometric and duple systems require a diagonal glue table");
  }
  for (const auto& [id, inst] : seed.instances())
    if (inst.tile < 0 || inst.tile >= static_cast<int>(tiles.size()))
      throw Error(ErrorCode::schema, "seed references unknown tile");
  if (seed.tile_count() > 0 && !is_tau_stable(*this, seed, temperature))
    throw Error(ErrorCode::attachment, "seed assembly is not stable");
}

std::optional<Face> facing(const TileSystem& sys, const Assembly& a, Pos p,
                           Dir d) {
  const CellEntry* c = a.at(p);
  if (!c) return std::nullopt;
  const TileType& t = sys.tile(c->tile);
  if (const auto* sq = std::get_if<SquareTileType>(&t))
    return Face{sq->glue[int(d)], nullptr};
  if (const auto* ge = std::get_if<GeometricTileType>(&t))
    return Face{ge->side[int(d)].glue, &ge->side[int(d)].geometry};
  const auto& du = std::get<DupleTileType>(t);
  if (du.internal_dir(c->part, d)) return std::nullopt;
  return Face{du.glue[c->part][int(d)], nullptr};
}

Strength glue_strength(const GlueFunction& g, int a, int b) {
  return g.strength(a, b);
}

BindingGraph binding_graph(const TileSystem& sys, const Assembly& a) {
  BindingGraph g;
  std::map<int, int> vertex_of;
  for (const auto& [id, inst] : a.instances()) {
    vertex_of[id] = static_cast<int>(g.instances.size());
    g.instances.push_back(id);
  }
  std::map<std::pair<int, int>, Strength> acc;
  for (const auto& [p, c] : a.cells()) {
    for (Dir d : {Dir::east, Dir::north}) {
      Pos q = step(p, d);
      const CellEntry* n = a.at(q);
      if (!n || n->instance == c.instance) continue;
      auto f1 = facing(sys, a, p, d);
      auto f2 = facing(sys, a, q, opposite(d));
      if (!f1 || !f2) continue;
      Strength s = sys.glues.strength(f1->glue, f2->glue);
      if (s <= 0) continue;
      if (f1->geometry && f2->geometry &&
          !geometry_compatible(*f1->geometry, *f2->geometry))
        continue;
      int u = vertex_of[c.instance], v = vertex_of[n->instance];
      if (u > v) std::swap(u, v);
      acc[{u, v}] += s;
    }
  }
  for (const auto& [uv, w] : acc) g.edges.push_back({uv.first, uv.second, w});
  return g;
}

std::optional<long long> global_min_cut(int n,
                                        const std::vector<BindingEdge>& edges) {
  if (n < 2) return std::nullopt;
  std::vector<std::vector<long long>> w(
      static_cast<std::size_t>(n), std::vector<long long>(n, 0));
  for (const auto& e : edges) {
    w[e.u][e.v] += e.weight;
    w[e.v][e.u] += e.weight;
  }
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  while (active.size() > 1) {
    std::vector<long long> conn(active.size(), 0);
    std::vector<bool> added(active.size(), false);
    int prev = -1, last = -1;
    for (std::size_t it = 0; it < active.size(); ++it) {
      int sel = -1;
      for (std::size_t i = 0; i < active.size(); ++i)
        if (!added[i] && (sel < 0 || conn[i] > conn[sel]))
          sel = static_cast<int>(i);
      added[sel] = true;
      prev = last;
      last = sel;
      if (it + 1 == active.size()) {
        best = std::min(best, conn[sel]);
        break;
      }
      for (std::size_t i = 0; i < active.size(); ++i)
        if (!added[i]) conn[i] += w[active[sel]][active[i]];
    }
    // merge last into prev
    int a = active[prev], b = active[last];
    for (int v : active) {
      if (v == a || v == b) continue;
      w[a][v] += w[b][v];
      w[v][a] += w[v][b];
    }
    active.erase(active.begin() + last);
  }
  return best;
}

bool is_tau_stable(const TileSystem& sys, const Assembly& a, int tau) {
  if (a.tile_count() <= 1) return true;
  BindingGraph g = binding_graph(sys, a);
  auto cut = global_min_cut(static_cast<int>(g.instances.size()), g.edges);
  return cut.has_value() && *cut >= tau;
}

}  // namespace tilesim
