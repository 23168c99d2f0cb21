#pragma once
// JSON documents for tile systems, assemblies, attachment traces and block
// representations. Writing is canonical (stable key order, two-space
// indent, trailing newline), so write(read(text)) == text for any document
// this module produced. Parse errors carry the JSON path of the offending
// field and a distinct error code per failure class: malformed documents and
// missing/ill-typed fields report `schema`, a non-symmetric glue matrix
// reports `invalid_glue`, a geometry string of the wrong length reports
// `geometry_size`, and a seed that is not stable at the declared temperature
// reports `attachment`.

#include <memory>
#include <string>

#include "json.hpp"
#include "tilesim/core.hpp"
#include "tilesim/dynamics.hpp"
#include "tilesim/simulation.hpp"

namespace tilesim {

using Json = nlohmann::ordered_json;

// --- tile systems ---------------------------------------------------------
Json system_to_json(const TileSystem& sys);
TileSystem system_from_json(const Json& doc);
std::string write_system(const TileSystem& sys);
TileSystem read_system(const std::string& text);
inline TileSystem parse_system(const std::string& text) {
  return read_system(text);
}
inline std::string serialize_system(const TileSystem& sys) {
  return write_system(sys);
}

// --- assemblies (system embedded so the document stands alone) ------------
Json assembly_to_json(const TileSystem& sys, const Assembly& a);
std::pair<TileSystem, Assembly> assembly_from_json(const Json& doc);
std::string write_assembly(const TileSystem& sys, const Assembly& a);
std::pair<TileSystem, Assembly> read_assembly(const std::string& text);

// --- attachment traces (interpreted against a separately loaded system) ---
Json trace_to_json(const TileSystem& sys, const AssemblySequence& seq);
AssemblySequence trace_from_json(const Json& doc, const TileSystem& sys);
std::string write_trace(const TileSystem& sys, const AssemblySequence& seq);
AssemblySequence read_trace(const std::string& text, const TileSystem& sys);

// --- block representations -------------------------------------------------
Json representation_to_json(const Representation& rep,
                            const TileSystem& simulator,
                            const TileSystem& simulated);
std::unique_ptr<Representation> representation_from_json(
    const Json& doc, const TileSystem& simulator, const TileSystem& simulated);
std::string write_representation(const Representation& rep,
                                 const TileSystem& simulator,
                                 const TileSystem& simulated);
std::unique_ptr<Representation> read_representation(
    const std::string& text, const TileSystem& simulator,
    const TileSystem& simulated);

// Stable content digest of an assembly (FNV-1a over the canonical key).
// Two runs replaying the same trace yield the same digest.
std::string assembly_digest(const Assembly& a);

// Convenience file helpers used by the command-line driver.
std::string slurp_file(const std::string& path);
void spew_file(const std::string& path, const std::string& text);

}  // namespace tilesim
