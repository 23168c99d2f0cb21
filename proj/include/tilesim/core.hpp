#pragma once
// Core domain types shared by the square, geometric and duple tile models:
// glue functions, side geometries, tile types, assemblies and stability.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tilesim {

enum class ErrorCode {
  invalid_glue,
  geometry_size,
  attachment,
  resource_limit,
  unsupported_input,
  window,
  parse,
  schema,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Thrown by enumeration guards; carries how far the search got.
class ResourceLimitError : public Error {
public:
  ResourceLimitError(const std::string& msg, std::size_t partial_count)
      : Error(ErrorCode::resource_limit, msg), partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

private:
  std::size_t partial_count_;
};

enum class Model { atam, gtam, datam };

enum class Dir : int { north = 0, east = 1, south = 2, west = 3 };

constexpr std::array<Dir, 4> all_dirs = {Dir::north, Dir::east, Dir::south,
                                         Dir::west};

struct Pos {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

Pos step(Pos p, Dir d);
Dir opposite(Dir d);
const char* dir_name(Dir d);

using Strength = int;

// Symmetric strength table over glue ids 0..size-1. Id 0 is the null glue
// and has strength 0 against everything. "Flexible" means the table may have
// positive off-diagonal entries; a diagonal table only binds equal ids.
class GlueFunction {
public:
  static GlueFunction symmetric(std::vector<std::vector<Strength>> matrix);
  static GlueFunction diagonal(std::vector<Strength> self_strengths);

  int size() const { return size_; }
  Strength strength(int a, int b) const;
  bool is_diagonal() const;

private:
  GlueFunction() = default;
  int size_ = 0;
  std::vector<Strength> m_;  // row-major size_*size_
};

// Bit vector of bump positions along one tile side, positions 1..length.
// Two abutting sides overlap position i against position length+1-i, so
// compatibility is: no i with g1[i] and g2[length+1-i] both set.
class Geometry {
public:
  Geometry() = default;
  static Geometry zeros(int length);
  static Geometry from_string(const std::string& bits);

  int length() const { return static_cast<int>(bits_.size()); }
  bool bump(int i) const;   // 1-based
  void set_bump(int i, bool v = true);
  bool empty_domain() const;
  std::string to_string() const;

  friend auto operator<=>(const Geometry&, const Geometry&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

// True iff the two geometries can abut without overlapping bumps.
// Throws ErrorCode::geometry_size on length mismatch.
bool geometry_compatible(const Geometry& a, const Geometry& b);

struct SquareTileType {
  std::string name;
  std::array<int, 4> glue{0, 0, 0, 0};  // indexed by Dir
};

struct GeometricSide {
  int glue = 0;
  Geometry geometry;
};

struct GeometricTileType {
  std::string name;
  std::array<GeometricSide, 4> side;  // indexed by Dir
};

enum class DupleOrientation { horizontal, vertical };

// A duple occupies two cells: part 0 at the anchor, part 1 one step east
// (horizontal) or north (vertical). The edge between the parts is internal
// and carries no glue. Exterior glues are stored per part per direction;
// internal directions hold -1.
struct DupleTileType {
  std::string name;
  DupleOrientation orientation = DupleOrientation::horizontal;
  std::array<std::array<int, 4>, 2> glue;  // [part][Dir], -1 = internal

  static DupleTileType horizontal(std::string name, int w, int n_west,
                                  int s_west, int n_east, int s_east, int e);
  static DupleTileType vertical(std::string name, int s, int w_lower,
                                int e_lower, int w_upper, int e_upper, int n);
  Pos second_cell_offset() const;
  bool internal_dir(int part, Dir d) const { return glue[part][int(d)] < 0; }
};

using TileType = std::variant<SquareTileType, GeometricTileType, DupleTileType>;

const std::string& tile_name(const TileType& t);
bool is_duple(const TileType& t);

struct CellEntry {
  int tile = -1;      // tile type id
  int instance = -1;  // instance id within the assembly
  std::uint8_t part = 0;
};

struct InstanceEntry {
  int tile = -1;
  Pos anchor;
};

class TileSystem;

// Immutable-by-convention placement map. attach() in dynamics returns a new
// value. Canonical form is the cell map ordered by (x, y) with tile ids and
// part markers; instance ids are bookkeeping and excluded from equality.
class Assembly {
public:
  bool occupied(Pos p) const { return cells_.find(p) != cells_.end(); }
  const CellEntry* at(Pos p) const;
  const std::map<Pos, CellEntry>& cells() const { return cells_; }
  const std::map<int, InstanceEntry>& instances() const { return instances_; }
  std::size_t tile_count() const { return instances_.size(); }
  std::size_t cell_count() const { return cells_.size(); }

  // Places one instance of `tile` (square, geometric or duple) at `anchor`.
  // Purely structural: no glue checks, but cells must be free.
  void place(const TileSystem& sys, int tile, Pos anchor);

  std::string canonical_key() const;
  std::pair<Pos, Pos> bounding_box() const;  // min, max; requires non-empty

  friend bool operator==(const Assembly& a, const Assembly& b) {
    return a.canonical_key() == b.canonical_key();
  }

private:
  std::map<Pos, CellEntry> cells_;
  std::map<int, InstanceEntry> instances_;
  int next_instance_ = 0;
};

class TileSystem {
public:
  Model model = Model::atam;
  int temperature = 1;
  GlueFunction glues = GlueFunction::diagonal({0});
  std::vector<std::string> glue_names;  // index = glue id; [0] = "null"
  std::vector<TileType> tiles;
  Assembly seed;
  int geometry_length = 0;  // gtam only

  int add_glue(const std::string& name);  // for builders; diagonal tables only
  int tile_id(const std::string& name) const;  // -1 if absent
  const TileType& tile(int id) const;
  int find_glue(const std::string& name) const;  // -1 if absent

  // Checks model/tile-kind consistency, glue ids, geometry lengths,
  // diagonal-table requirements and seed stability.
  void validate() const;
};

// What the occupant of `p` presents toward `d`: glue id plus geometry for
// geometric tiles. nullopt if `p` is empty or the side is duple-internal.
struct Face {
  int glue = 0;
  const Geometry* geometry = nullptr;  // null unless geometric
};
std::optional<Face> facing(const TileSystem& sys, const Assembly& a, Pos p,
                           Dir d);

Strength glue_strength(const GlueFunction& g, int a, int b);

struct BindingEdge {
  int u = 0, v = 0;  // instance ids
  Strength weight = 0;
};

struct BindingGraph {
  std::vector<int> instances;  // vertex index -> instance id
  std::vector<BindingEdge> edges;  // weights summed over abutting cell pairs
};

// Instance-level graph of positive-strength bonds. In the geometric model a
// bond forms only across compatible geometries.
BindingGraph binding_graph(const TileSystem& sys, const Assembly& a);

// Every cut of the binding graph has total strength >= tau. Singletons are
// stable; disconnected assemblies are not (a zero cut exists).
bool is_tau_stable(const TileSystem& sys, const Assembly& a, int tau);

// Global minimum cut weight of an undirected weighted graph (Stoer-Wagner).
// Returns nullopt for graphs with fewer than 2 vertices.
std::optional<long long> global_min_cut(int n,
                                        const std::vector<BindingEdge>& edges);

}  // namespace tilesim
