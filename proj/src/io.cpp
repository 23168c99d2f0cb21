#include "tilesim/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <variant>

namespace tilesim {

namespace {

constexpr const char* kSystemFormat = "tilesim-system/1";
constexpr const char* kAssemblyFormat = "tilesim-assembly/1";
constexpr const char* kTraceFormat = "tilesim-trace/1";
constexpr const char* kRepFormat = "tilesim-rep/1";

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::schema, path + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, "missing field '" + std::string(key) + "'");
  return *it;
}

std::string need_string(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_string()) schema_error(path + "." + key, "expected a string");
  return v.get<std::string>();
}

int need_int(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_number_integer()) schema_error(path + "." + key, "expected an integer");
  return v.get<int>();
}

const Json& need_array(const Json& j, const char* key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_array()) schema_error(path + "." + key, "expected an array");
  return v;
}

void check_format(const Json& doc, const char* expect, const std::string& path) {
  if (need_string(doc, "format", path) != expect)
    schema_error(path + ".format", std::string("expected \"") + expect + "\"");
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok) schema_error(path + "." + it.key(), "unknown field");
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw Error(ErrorCode::parse, "document is not valid JSON");
  return doc;
}

// --- glue helpers -----------------------------------------------------------

const std::string& glue_name_of(const TileSystem& sys, int id,
                                const char* what) {
  if (id < 0 || id >= static_cast<int>(sys.glue_names.size()))
    throw Error(ErrorCode::internal,
                std::string("unnamed glue id in ") + what);
  return sys.glue_names[static_cast<std::size_t>(id)];
}

int lookup_glue(const TileSystem& sys, const Json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected a glue name");
  const std::string name = v.get<std::string>();
  const int id = sys.find_glue(name);
  if (id < 0) schema_error(path, "unknown glue '" + name + "'");
  return id;
}

int side_glue(const TileSystem& sys, const Json& cell, const char* key,
              const std::string& path) {
  auto it = cell.find(key);
  if (it == cell.end()) return 0;
  return lookup_glue(sys, *it, path + "." + key);
}

// Canonical side order used by every writer.
constexpr std::array<Dir, 4> kSideOrder{Dir::north, Dir::east, Dir::south,
                                        Dir::west};

// --- tile serialization -----------------------------------------------------

Json square_to_json(const TileSystem& sys, const SquareTileType& t) {
  Json j;
  j["kind"] = "square";
  j["name"] = t.name;
  for (Dir d : kSideOrder)
    j[dir_name(d)] = glue_name_of(sys, t.glue[int(d)], "square tile");
  return j;
}

Json geometric_to_json(const TileSystem& sys, const GeometricTileType& t) {
  Json j;
  j["kind"] = "geometric";
  j["name"] = t.name;
  for (Dir d : kSideOrder) {
    const GeometricSide& s = t.side[int(d)];
    Json side;
    side["glue"] = glue_name_of(sys, s.glue, "geometric tile");
    side["geometry"] = s.geometry.to_string();
    j[dir_name(d)] = std::move(side);
  }
  return j;
}

Json duple_to_json(const TileSystem& sys, const DupleTileType& t) {
  Json j;
  j["kind"] = "duple";
  j["name"] = t.name;
  const bool horiz = t.orientation == DupleOrientation::horizontal;
  j["orientation"] = horiz ? "horizontal" : "vertical";
  auto cell = [&](int part, std::initializer_list<Dir> dirs) {
    Json c;
    for (Dir d : dirs)
      c[dir_name(d)] = glue_name_of(sys, t.glue[part][int(d)], "duple tile");
    return c;
  };
  if (horiz) {
    j["west_cell"] = cell(0, {Dir::north, Dir::south, Dir::west});
    j["east_cell"] = cell(1, {Dir::north, Dir::east, Dir::south});
  } else {
    j["lower_cell"] = cell(0, {Dir::east, Dir::south, Dir::west});
    j["upper_cell"] = cell(1, {Dir::north, Dir::east, Dir::west});
  }
  return j;
}

SquareTileType square_from_json(const TileSystem& sys, const Json& j,
                                const std::string& path) {
  reject_unknown_keys(j, {"kind", "name", "north", "east", "south", "west"},
                      path);
  SquareTileType t;
  t.name = need_string(j, "name", path);
  for (Dir d : kSideOrder)
    t.glue[int(d)] = side_glue(sys, j, dir_name(d), path);
  return t;
}

GeometricTileType geometric_from_json(const TileSystem& sys, const Json& j,
                                      const std::string& path) {
  reject_unknown_keys(j, {"kind", "name", "north", "east", "south", "west"},
                      path);
  GeometricTileType t;
  t.name = need_string(j, "name", path);
  for (Dir d : kSideOrder) {
    const std::string side_path = path + "." + dir_name(d);
    const Json& side = need(j, dir_name(d), path);
    if (!side.is_object()) schema_error(side_path, "expected an object");
    reject_unknown_keys(side, {"glue", "geometry"}, side_path);
    GeometricSide s;
    s.glue = lookup_glue(sys, need(side, "glue", side_path), side_path + ".glue");
    const Json& geom = need(side, "geometry", side_path);
    if (!geom.is_string()) schema_error(side_path + ".geometry", "expected a string");
    const std::string bits = geom.get<std::string>();
    for (char c : bits)
      if (c != '0' && c != '1')
        schema_error(side_path + ".geometry", "expected a string of 0/1");
    if (static_cast<int>(bits.size()) != sys.geometry_length)
      throw Error(ErrorCode::geometry_size,
                  side_path + ".geometry: expected " +
                      std::to_string(sys.geometry_length) + " bits, got " +
                      std::to_string(bits.size()));
    s.geometry = Geometry::from_string(bits);
    t.side[int(d)] = std::move(s);
  }
  return t;
}

DupleTileType duple_from_json(const TileSystem& sys, const Json& j,
                              const std::string& path) {
  const std::string orient = need_string(j, "orientation", path);
  const std::string name = need_string(j, "name", path);
  auto cell = [&](const char* key) -> const Json& {
    const Json& c = need(j, key, path);
    if (!c.is_object()) schema_error(path + "." + key, "expected an object");
    return c;
  };
  if (orient == "horizontal") {
    reject_unknown_keys(j, {"kind", "name", "orientation", "west_cell",
                            "east_cell"}, path);
    const Json& w = cell("west_cell");
    const Json& e = cell("east_cell");
    reject_unknown_keys(w, {"north", "south", "west"}, path + ".west_cell");
    reject_unknown_keys(e, {"north", "east", "south"}, path + ".east_cell");
    const std::string wp = path + ".west_cell";
    const std::string ep = path + ".east_cell";
    return DupleTileType::horizontal(
        name, side_glue(sys, w, "west", wp), side_glue(sys, w, "north", wp),
        side_glue(sys, w, "south", wp), side_glue(sys, e, "north", ep),
        side_glue(sys, e, "south", ep), side_glue(sys, e, "east", ep));
  }
  if (orient == "vertical") {
    reject_unknown_keys(j, {"kind", "name", "orientation", "lower_cell",
                            "upper_cell"}, path);
    const Json& lo = cell("lower_cell");
    const Json& up = cell("upper_cell");
    reject_unknown_keys(lo, {"east", "south", "west"}, path + ".lower_cell");
    reject_unknown_keys(up, {"north", "east", "west"}, path + ".upper_cell");
    const std::string lp = path + ".lower_cell";
    const std::string up_path = path + ".upper_cell";
    return DupleTileType::vertical(
        name, side_glue(sys, lo, "south", lp), side_glue(sys, lo, "west", lp),
        side_glue(sys, lo, "east", lp), side_glue(sys, up, "west", up_path),
        side_glue(sys, up, "east", up_path),
        side_glue(sys, up, "north", up_path));
  }
  schema_error(path + ".orientation", "expected \"horizontal\" or \"vertical\"");
}

Json instances_to_json(const TileSystem& sys, const Assembly& a) {
  Json arr = Json::array();
  for (const auto& [id, inst] : a.instances()) {
    Json e;
    e["tile"] = tile_name(sys.tile(inst.tile));
    e["x"] = inst.anchor.x;
    e["y"] = inst.anchor.y;
    arr.push_back(std::move(e));
  }
  return arr;
}

Assembly instances_from_json(const TileSystem& sys, const Json& arr,
                             const std::string& path) {
  Assembly a;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Json& e = arr[i];
    if (!e.is_object()) schema_error(p, "expected an object");
    reject_unknown_keys(e, {"tile", "x", "y"}, p);
    const std::string name = need_string(e, "tile", p);
    const int tile = sys.tile_id(name);
    if (tile < 0) schema_error(p + ".tile", "unknown tile '" + name + "'");
    const Pos anchor{need_int(e, "x", p), need_int(e, "y", p)};
    for (const auto& [cell, part] : attachment_cells(sys, Attachment{tile, anchor}))
      if (a.occupied(cell))
        schema_error(p, "placement overlaps an earlier tile");
    a.place(sys, tile, anchor);
  }
  return a;
}

}  // namespace

// --- systems ----------------------------------------------------------------

Json system_to_json(const TileSystem& sys) {
  Json doc;
  doc["format"] = kSystemFormat;
  switch (sys.model) {
    case Model::atam: doc["model"] = "atam"; break;
    case Model::gtam: doc["model"] = "gtam"; break;
    case Model::datam: doc["model"] = "datam"; break;
  }
  doc["temperature"] = sys.temperature;
  Json glues;
  glues["names"] = sys.glue_names;
  if (sys.glues.is_diagonal()) {
    Json s = Json::array();
    for (int i = 0; i < sys.glues.size(); ++i)
      s.push_back(sys.glues.strength(i, i));
    glues["strengths"] = std::move(s);
  } else {
    Json m = Json::array();
    for (int i = 0; i < sys.glues.size(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < sys.glues.size(); ++j)
        row.push_back(sys.glues.strength(i, j));
      m.push_back(std::move(row));
    }
    glues["matrix"] = std::move(m);
  }
  doc["glues"] = std::move(glues);
  if (sys.model == Model::gtam) doc["geometry_length"] = sys.geometry_length;
  Json tiles = Json::array();
  for (const TileType& t : sys.tiles) {
    if (std::holds_alternative<SquareTileType>(t))
      tiles.push_back(square_to_json(sys, std::get<SquareTileType>(t)));
    else if (std::holds_alternative<GeometricTileType>(t))
      tiles.push_back(geometric_to_json(sys, std::get<GeometricTileType>(t)));
    else
      tiles.push_back(duple_to_json(sys, std::get<DupleTileType>(t)));
  }
  doc["tiles"] = std::move(tiles);
  doc["seed"] = instances_to_json(sys, sys.seed);
  return doc;
}

TileSystem system_from_json(const Json& doc) {
  const std::string path = "$";
  if (!doc.is_object()) schema_error(path, "expected an object");
  check_format(doc, kSystemFormat, path);
  reject_unknown_keys(doc, {"format", "model", "temperature", "glues",
                            "geometry_length", "tiles", "seed"}, path);
  TileSystem sys;
  const std::string model = need_string(doc, "model", path);
  if (model == "atam") sys.model = Model::atam;
  else if (model == "gtam") sys.model = Model::gtam;
  else if (model == "datam") sys.model = Model::datam;
  else schema_error(path + ".model", "expected \"atam\", \"gtam\" or \"datam\"");
  sys.temperature = need_int(doc, "temperature", path);
  if (sys.temperature < 1)
    schema_error(path + ".temperature", "expected a positive integer");

  const Json& glues = need(doc, "glues", path);
  if (!glues.is_object()) schema_error(path + ".glues", "expected an object");
  reject_unknown_keys(glues, {"names", "strengths", "matrix"}, path + ".glues");
  const Json& names = need_array(glues, "names", path + ".glues");
  std::vector<std::string> glue_names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].is_string())
      schema_error(path + ".glues.names[" + std::to_string(i) + "]",
                   "expected a string");
    glue_names.push_back(names[i].get<std::string>());
  }
  if (glue_names.empty() || glue_names[0] != "null")
    schema_error(path + ".glues.names", "first glue must be \"null\"");
  const bool has_strengths = glues.contains("strengths");
  const bool has_matrix = glues.contains("matrix");
  if (has_strengths == has_matrix)
    schema_error(path + ".glues",
                 "expected exactly one of 'strengths' or 'matrix'");
  if (has_strengths) {
    const Json& s = need_array(glues, "strengths", path + ".glues");
    if (s.size() != glue_names.size())
      schema_error(path + ".glues.strengths",
                   "expected one entry per glue name");
    std::vector<Strength> diag;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_number_integer() || s[i].get<int>() < 0)
        schema_error(path + ".glues.strengths[" + std::to_string(i) + "]",
                     "expected a non-negative integer");
      diag.push_back(s[i].get<Strength>());
    }
    if (diag[0] != 0)
      schema_error(path + ".glues.strengths[0]", "null glue must be 0");
    sys.glues = GlueFunction::diagonal(diag);
  } else {
    const Json& m = need_array(glues, "matrix", path + ".glues");
    if (m.size() != glue_names.size())
      schema_error(path + ".glues.matrix", "expected one row per glue name");
    std::vector<std::vector<Strength>> matrix(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string rp = path + ".glues.matrix[" + std::to_string(i) + "]";
      if (!m[i].is_array() || m[i].size() != glue_names.size())
        schema_error(rp, "expected one entry per glue name");
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (!m[i][j].is_number_integer() || m[i][j].get<int>() < 0)
          schema_error(rp + "[" + std::to_string(j) + "]",
                       "expected a non-negative integer");
        matrix[i].push_back(m[i][j].get<Strength>());
      }
    }
    for (std::size_t i = 0; i < matrix.size(); ++i)
      for (std::size_t j = i + 1; j < matrix.size(); ++j)
        if (matrix[i][j] != matrix[j][i])
          throw Error(ErrorCode::invalid_glue,
                      path + ".glues.matrix[" + std::to_string(j) + "][" +
                          std::to_string(i) + "]: matrix is not symmetric");
    sys.glues = GlueFunction::symmetric(matrix);
  }
  sys.glue_names = std::move(glue_names);

  if (doc.contains("geometry_length")) {
    if (sys.model != Model::gtam)
      schema_error(path + ".geometry_length",
                   "only geometric systems carry side geometry");
    sys.geometry_length = need_int(doc, "geometry_length", path);
    if (sys.geometry_length < 1)
      schema_error(path + ".geometry_length", "expected a positive integer");
  } else if (sys.model == Model::gtam) {
    schema_error(path, "missing field 'geometry_length'");
  }

  const Json& tiles = need_array(doc, "tiles", path);
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string tp = path + ".tiles[" + std::to_string(i) + "]";
    const Json& t = tiles[i];
    if (!t.is_object()) schema_error(tp, "expected an object");
    const std::string kind = need_string(t, "kind", tp);
    if (kind == "square") sys.tiles.push_back(square_from_json(sys, t, tp));
    else if (kind == "geometric")
      sys.tiles.push_back(geometric_from_json(sys, t, tp));
    else if (kind == "duple") sys.tiles.push_back(duple_from_json(sys, t, tp));
    else schema_error(tp + ".kind", "expected \"square\", \"geometric\" or \"duple\"");
    const std::string& name = tile_name(sys.tiles.back());
    if (name.empty()) schema_error(tp + ".name", "expected a non-empty name");
    for (std::size_t j = 0; j + 1 < sys.tiles.size(); ++j)
      if (tile_name(sys.tiles[j]) == name)
        schema_error(tp + ".name", "duplicate tile name '" + name + "'");
  }

  sys.seed = instances_from_json(sys, need_array(doc, "seed", path),
                                 path + ".seed");
  sys.validate();
  return sys;
}

std::string write_system(const TileSystem& sys) { return dump(system_to_json(sys)); }

TileSystem read_system(const std::string& text) {
  return system_from_json(parse_text(text));
}

// --- assemblies --------------------------------------------------------------

Json assembly_to_json(const TileSystem& sys, const Assembly& a) {
  Json doc;
  doc["format"] = kAssemblyFormat;
  doc["system"] = system_to_json(sys);
  doc["instances"] = instances_to_json(sys, a);
  return doc;
}

std::pair<TileSystem, Assembly> assembly_from_json(const Json& doc) {
  const std::string path = "$";
  if (!doc.is_object()) schema_error(path, "expected an object");
  check_format(doc, kAssemblyFormat, path);
  reject_unknown_keys(doc, {"format", "system", "instances"}, path);
  TileSystem sys = system_from_json(need(doc, "system", path));
  Assembly a = instances_from_json(sys, need_array(doc, "instances", path),
                                   path + ".instances");
  return {std::move(sys), std::move(a)};
}

std::string write_assembly(const TileSystem& sys, const Assembly& a) {
  return dump(assembly_to_json(sys, a));
}

std::pair<TileSystem, Assembly> read_assembly(const std::string& text) {
  return assembly_from_json(parse_text(text));
}

// --- traces -------------------------------------------------------------------

Json trace_to_json(const TileSystem& sys, const AssemblySequence& seq) {
  Json doc;
  doc["format"] = kTraceFormat;
  Json arr = Json::array();
  for (const Attachment& at : seq.attachments) {
    Json e;
    e["tile"] = tile_name(sys.tile(at.tile));
    e["x"] = at.anchor.x;
    e["y"] = at.anchor.y;
    arr.push_back(std::move(e));
  }
  doc["attachments"] = std::move(arr);
  return doc;
}

AssemblySequence trace_from_json(const Json& doc, const TileSystem& sys) {
  const std::string path = "$";
  if (!doc.is_object()) schema_error(path, "expected an object");
  check_format(doc, kTraceFormat, path);
  reject_unknown_keys(doc, {"format", "attachments"}, path);
  const Json& arr = need_array(doc, "attachments", path);
  AssemblySequence seq;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + ".attachments[" + std::to_string(i) + "]";
    const Json& e = arr[i];
    if (!e.is_object()) schema_error(p, "expected an object");
    reject_unknown_keys(e, {"tile", "x", "y"}, p);
    const std::string name = need_string(e, "tile", p);
    const int tile = sys.tile_id(name);
    if (tile < 0) schema_error(p + ".tile", "unknown tile '" + name + "'");
    seq.attachments.push_back(
        Attachment{tile, Pos{need_int(e, "x", p), need_int(e, "y", p)}});
  }
  return seq;
}

std::string write_trace(const TileSystem& sys, const AssemblySequence& seq) {
  return dump(trace_to_json(sys, seq));
}

AssemblySequence read_trace(const std::string& text, const TileSystem& sys) {
  return trace_from_json(parse_text(text), sys);
}

// --- representations -----------------------------------------------------------

Json representation_to_json(const Representation& rep,
                            const TileSystem& simulator,
                            const TileSystem& simulated) {
  Json doc;
  doc["format"] = kRepFormat;
  auto target_name = [&](int id) -> Json {
    if (id < 0) return nullptr;
    return tile_name(simulated.tile(id));
  };
  if (const auto* tm = dynamic_cast<const TileMapRepresentation*>(&rep)) {
    doc["kind"] = "tile-map";
    Json arr = Json::array();
    for (std::size_t i = 0; i < tm->table().size(); ++i) {
      Json e;
      e["from"] = tile_name(simulator.tile(static_cast<int>(i)));
      e["to"] = target_name(tm->table()[i]);
      arr.push_back(std::move(e));
    }
    doc["map"] = std::move(arr);
    return doc;
  }
  if (const auto* dh = dynamic_cast<const DupleHalfRepresentation*>(&rep)) {
    doc["kind"] = "duple-halves";
    Json arr = Json::array();
    for (std::size_t i = 0; i < dh->table().size(); ++i) {
      const auto& info = dh->table()[i];
      Json e;
      e["from"] = tile_name(simulator.tile(static_cast<int>(i)));
      e["to"] = target_name(info.target);
      e["half"] = info.half;
      e["part"] = info.part;
      arr.push_back(std::move(e));
    }
    doc["map"] = std::move(arr);
    return doc;
  }
  if (const auto* bt = dynamic_cast<const BlockTableRepresentation*>(&rep)) {
    doc["kind"] = "block-table";
    doc["scale"] = bt->scale();
    doc["region"] = bt->region_thickness();
    Json arr = Json::array();
    for (const auto& [pattern, tile] : bt->table()) {
      Json e;
      e["pattern"] = pattern;
      e["tile"] = target_name(tile);
      arr.push_back(std::move(e));
    }
    doc["entries"] = std::move(arr);
    return doc;
  }
  throw Error(ErrorCode::unsupported_input,
              "cannot serialize this representation kind");
}

std::unique_ptr<Representation> representation_from_json(
    const Json& doc, const TileSystem& simulator, const TileSystem& simulated) {
  const std::string path = "$";
  if (!doc.is_object()) schema_error(path, "expected an object");
  check_format(doc, kRepFormat, path);
  const std::string kind = need_string(doc, "kind", path);
  auto target_id = [&](const Json& v, const std::string& p) -> int {
    if (v.is_null()) return -1;
    if (!v.is_string()) schema_error(p, "expected a tile name or null");
    const int id = simulated.tile_id(v.get<std::string>());
    if (id < 0) schema_error(p, "unknown tile '" + v.get<std::string>() + "'");
    return id;
  };
  auto source_index = [&](const Json& e, const std::string& p) -> std::size_t {
    const std::string name = need_string(e, "from", p);
    const int id = simulator.tile_id(name);
    if (id < 0) schema_error(p + ".from", "unknown tile '" + name + "'");
    return static_cast<std::size_t>(id);
  };
  if (kind == "tile-map") {
    reject_unknown_keys(doc, {"format", "kind", "map"}, path);
    const Json& arr = need_array(doc, "map", path);
    std::vector<int> table(simulator.tiles.size(), -1);
    std::vector<bool> seen(simulator.tiles.size(), false);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".map[" + std::to_string(i) + "]";
      if (!arr[i].is_object()) schema_error(p, "expected an object");
      reject_unknown_keys(arr[i], {"from", "to"}, p);
      const std::size_t s = source_index(arr[i], p);
      if (seen[s]) schema_error(p + ".from", "duplicate entry");
      seen[s] = true;
      table[s] = target_id(need(arr[i], "to", p), p + ".to");
    }
    for (std::size_t s = 0; s < seen.size(); ++s)
      if (!seen[s])
        schema_error(path + ".map", "no entry for tile '" +
                                        tile_name(simulator.tile(
                                            static_cast<int>(s))) + "'");
    return std::make_unique<TileMapRepresentation>(std::move(table));
  }
  if (kind == "duple-halves") {
    reject_unknown_keys(doc, {"format", "kind", "map"}, path);
    const Json& arr = need_array(doc, "map", path);
    std::vector<DupleHalfRepresentation::HalfInfo> table(simulator.tiles.size());
    std::vector<bool> seen(simulator.tiles.size(), false);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".map[" + std::to_string(i) + "]";
      if (!arr[i].is_object()) schema_error(p, "expected an object");
      reject_unknown_keys(arr[i], {"from", "to", "half", "part"}, p);
      const std::size_t s = source_index(arr[i], p);
      if (seen[s]) schema_error(p + ".from", "duplicate entry");
      seen[s] = true;
      DupleHalfRepresentation::HalfInfo info;
      info.target = target_id(need(arr[i], "to", p), p + ".to");
      const Json& half = need(arr[i], "half", p);
      if (!half.is_boolean()) schema_error(p + ".half", "expected a boolean");
      info.half = half.get<bool>();
      info.part = need_int(arr[i], "part", p);
      if (info.part != 0 && info.part != 1)
        schema_error(p + ".part", "expected 0 or 1");
      table[s] = info;
    }
    for (std::size_t s = 0; s < seen.size(); ++s)
      if (!seen[s])
        schema_error(path + ".map", "no entry for tile '" +
                                        tile_name(simulator.tile(
                                            static_cast<int>(s))) + "'");
    return std::make_unique<DupleHalfRepresentation>(std::move(table));
  }
  if (kind == "block-table") {
    reject_unknown_keys(doc, {"format", "kind", "scale", "region", "entries"},
                        path);
    const int scale = need_int(doc, "scale", path);
    const int region = need_int(doc, "region", path);
    if (scale < 1) schema_error(path + ".scale", "expected a positive integer");
    if (region < 0)
      schema_error(path + ".region", "expected a non-negative integer");
    const Json& arr = need_array(doc, "entries", path);
    std::map<std::string, int> table;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".entries[" + std::to_string(i) + "]";
      if (!arr[i].is_object()) schema_error(p, "expected an object");
      reject_unknown_keys(arr[i], {"pattern", "tile"}, p);
      const std::string pattern = need_string(arr[i], "pattern", p);
      if (table.count(pattern)) schema_error(p + ".pattern", "duplicate pattern");
      table[pattern] = target_id(need(arr[i], "tile", p), p + ".tile");
    }
    return std::make_unique<BlockTableRepresentation>(scale, region,
                                                      std::move(table));
  }
  schema_error(path + ".kind",
               "expected \"tile-map\", \"duple-halves\" or \"block-table\"");
}

std::string write_representation(const Representation& rep,
                                 const TileSystem& simulator,
                                 const TileSystem& simulated) {
  return dump(representation_to_json(rep, simulator, simulated));
}

std::unique_ptr<Representation> read_representation(
    const std::string& text, const TileSystem& simulator,
    const TileSystem& simulated) {
  return representation_from_json(parse_text(text), simulator, simulated);
}

// --- digests and files -----------------------------------------------------------

std::string assembly_digest(const Assembly& a) {
  const std::string key = a.canonical_key();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xF);
  return os.str();
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spew_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse, "cannot write file: " + path);
  out << text;
}

}  // namespace tilesim
