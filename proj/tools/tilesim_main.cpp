// Command-line workbench for the tile self-assembly library: compile square
// or duple systems to geometric ones, grow and enumerate assemblies, check
// bounded simulation claims, analyze window movies, render pictures, and
// evaluate the movie-counting bound.
//
// Exit codes: 0 success; 1 unreadable files or malformed flags; 2 invalid or
// unsupported input documents; check-sim additionally uses 3 (definite
// failure, witness in the report) and 4 (inconclusive: bound reached first).

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tilesim/atam_compiler.hpp"
#include "tilesim/core.hpp"
#include "tilesim/duple_compiler.hpp"
#include "tilesim/dynamics.hpp"
#include "tilesim/io.hpp"
#include "tilesim/render.hpp"
#include "tilesim/simulation.hpp"
#include "tilesim/windows.hpp"

namespace {

using namespace tilesim;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse: return 1;
    case ErrorCode::resource_limit: return 4;
    default: return 2;
  }
}

Json verdict_json(const ClauseVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["truncated"] = v.truncated;
  j["witness"] = v.witness;
  return j;
}

struct CutSpec {
  int x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
};

// SPEC syntax: vertical:XLO..XHI:YLO..YHI — one vertical window between
// columns x-1 and x for every x in [XLO, XHI], spanning rows YLO..YHI.
CutSpec parse_cuts(const std::string& spec) {
  auto fail = [&]() -> void {
    throw Error(ErrorCode::schema,
                "--cuts expects vertical:XLO..XHI:YLO..YHI, got '" + spec + "'");
  };
  auto parse_range = [&](const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) fail();
    try {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
      fail();
    }
    if (lo > hi) fail();
  };
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos || spec.substr(0, c1) != "vertical") fail();
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) fail();
  CutSpec out;
  parse_range(spec.substr(c1 + 1, c2 - c1 - 1), out.x_lo, out.x_hi);
  parse_range(spec.substr(c2 + 1), out.y_lo, out.y_hi);
  return out;
}

int cmd_compile(const std::string& from, const std::string& in,
                const std::string& out, const std::string& rep_out) {
  const TileSystem source = read_system(slurp_file(in));
  if (from == "atam") {
    const CompiledAtam c = compile_atam_system(source);
    spew_file(out, write_system(c.system));
    if (!rep_out.empty()) {
      const TileMapRepresentation rep = representation_for(c);
      spew_file(rep_out, write_representation(rep, c.system, source));
    }
  } else {
    const CompiledDatam c = compile_datam_system(source);
    spew_file(out, write_system(c.system));
    if (!rep_out.empty()) {
      const DupleHalfRepresentation rep = representation_for(c);
      spew_file(rep_out, write_representation(rep, c.system, source));
    }
  }
  return 0;
}

int cmd_run(const std::string& in, const std::string& policy,
            std::uint64_t seed, std::size_t max_tiles,
            const std::string& trace_out) {
  const TileSystem sys = read_system(slurp_file(in));
  SequencePolicy p = SequencePolicy::lex;
  if (policy == "lex") p = SequencePolicy::lex;
  else if (policy == "lowy") p = SequencePolicy::lowest_y_first;
  else if (policy == "random") p = SequencePolicy::random;
  else
    throw Error(ErrorCode::schema,
                "--policy expects lex, lowy or random, got '" + policy + "'");
  const RunResult r = run(sys, p, max_tiles, seed);
  if (!trace_out.empty()) spew_file(trace_out, write_trace(sys, r.sequence));
  std::cout << write_assembly(sys, r.assembly);
  return 0;
}

int cmd_enumerate(const std::string& in, std::size_t max_tiles,
                  bool terminal_only) {
  const TileSystem sys = read_system(slurp_file(in));
  std::vector<Assembly> assemblies;
  bool truncated = false;
  if (terminal_only) {
    TerminalSet t = enumerate_terminal(sys, max_tiles);
    assemblies = std::move(t.assemblies);
    truncated = t.truncated;
  } else {
    const ExplorationGraph g = explore(sys, max_tiles);
    for (const auto& node : g.nodes) assemblies.push_back(node.assembly);
    truncated = g.truncated;
  }
  std::vector<std::pair<std::string, const Assembly*>> order;
  order.reserve(assemblies.size());
  for (const Assembly& a : assemblies) order.emplace_back(a.canonical_key(), &a);
  std::sort(order.begin(), order.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  Json doc;
  doc["format"] = "tilesim-enumeration/1";
  doc["count"] = order.size();
  doc["truncated"] = truncated;
  Json arr = Json::array();
  for (const auto& [key, a] : order) {
    Json e;
    e["tiles"] = a->tile_count();
    e["instances"] = assembly_to_json(sys, *a)["instances"];
    arr.push_back(std::move(e));
  }
  doc["assemblies"] = std::move(arr);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_check_sim(const std::string& sim_path, const std::string& orig_path,
                  const std::string& rep_path, std::size_t bound) {
  const TileSystem simulator = read_system(slurp_file(sim_path));
  const TileSystem simulated = read_system(slurp_file(orig_path));
  const auto rep = read_representation(slurp_file(rep_path), simulator, simulated);
  SimulationReport report;
  try {
    report = check_simulation(simulator, simulated, *rep, bound);
  } catch (const ResourceLimitError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 4;
  }
  Json doc;
  doc["format"] = "tilesim-report/1";
  doc["target_scope"] = report.target_scope;
  doc["source_bound"] = report.source_bound;
  doc["source_states"] = report.source_states;
  doc["target_states"] = report.target_states;
  Json clauses;
  clauses["productions"] = verdict_json(report.productions);
  clauses["terminals"] = verdict_json(report.terminals);
  clauses["clean"] = verdict_json(report.clean);
  clauses["follows"] = verdict_json(report.follows);
  clauses["models"] = verdict_json(report.models);
  doc["clauses"] = std::move(clauses);
  doc["simulates"] = report.simulates();
  doc["inconclusive"] = report.inconclusive();
  std::cout << doc.dump(2) << "\n";
  if (!report.simulates()) return 3;
  if (report.inconclusive()) return 4;
  return 0;
}

int cmd_analyze_windows(const std::string& in, const std::string& trace_path,
                        const std::string& cuts, const std::string& pump) {
  const TileSystem sys = read_system(slurp_file(in));
  const AssemblySequence seq = read_trace(slurp_file(trace_path), sys);
  const CutSpec spec = parse_cuts(cuts);
  std::vector<Window> windows;
  for (int x = spec.x_lo; x <= spec.x_hi; ++x)
    windows.push_back(Window::vertical(x, spec.y_lo, spec.y_hi));

  Json doc;
  doc["format"] = "tilesim-windows/1";
  Json warr = Json::array();
  for (const Window& w : windows) {
    const WindowMovie m = record_movie(sys, seq, w);
    Json e;
    e["x"] = *w.vertical_x;
    e["events"] = m.events.size();
    e["bond_events"] = bond_forming_submovie(m).events.size();
    warr.push_back(std::move(e));
  }
  doc["windows"] = std::move(warr);

  const auto repeat = find_repeat(sys, seq, windows);
  if (repeat) {
    Json r;
    r["first"] = repeat->first;
    r["second"] = repeat->second;
    r["offset_x"] = repeat->offset.x;
    r["offset_y"] = repeat->offset.y;
    doc["repeat"] = std::move(r);
  } else {
    doc["repeat"] = nullptr;
  }

  if (!pump.empty()) {
    if (!repeat)
      throw Error(ErrorCode::window, "no repeated movie found; cannot pump");
    const Window& w0 = windows[repeat->first];
    const Window& w1 = windows[repeat->second];
    SpliceResult spliced;
    if (pump == "down") {
      spliced = splice_pump_down(sys, seq, w0, w1, repeat->offset);
    } else if (pump.rfind("up:", 0) == 0) {
      int copies = 0;
      try {
        copies = std::stoi(pump.substr(3));
      } catch (const std::exception&) {
        throw Error(ErrorCode::schema, "--pump expects down or up:N");
      }
      if (copies < 1) throw Error(ErrorCode::schema, "--pump up:N needs N >= 1");
      spliced = splice_pump_up(sys, seq, w0, w1, repeat->offset, copies);
    } else {
      throw Error(ErrorCode::schema,
                  "--pump expects down or up:N, got '" + pump + "'");
    }
    Json p;
    p["mode"] = pump;
    p["tiles"] = spliced.assembly.tile_count();
    p["digest"] = assembly_digest(spliced.assembly);
    doc["pump"] = std::move(p);
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_render(const std::string& in, const std::string& format,
               const std::string& out) {
  const Json doc = [&] {
    Json d = Json::parse(slurp_file(in), nullptr, false);
    if (d.is_discarded())
      throw Error(ErrorCode::parse, "document is not valid JSON");
    return d;
  }();
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
    throw Error(ErrorCode::schema, "$.format: missing document format");
  const std::string fmt = doc["format"].get<std::string>();
  TileSystem sys;
  Assembly a;
  if (fmt == "tilesim-system/1") {
    sys = system_from_json(doc);
    a = sys.seed;
  } else if (fmt == "tilesim-assembly/1") {
    auto pair = assembly_from_json(doc);
    sys = std::move(pair.first);
    a = std::move(pair.second);
  } else {
    throw Error(ErrorCode::schema,
                "$.format: expected a system or assembly document");
  }
  if (format == "svg") spew_file(out, render_svg(sys, a));
  else if (format == "ascii") spew_file(out, render_ascii(sys, a));
  else
    throw Error(ErrorCode::schema,
                "--format expects svg or ascii, got '" + format + "'");
  return 0;
}

int cmd_pump_bound(std::uint64_t glues, std::uint64_t scale) {
  const PumpingBound b = pumping_bound(glues, scale);
  std::cout << "B=" << b.movie_budget.to_string()
            << " n=" << b.iteration.to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tile self-assembly workbench"};
  app.require_subcommand(1);
  int rc = 0;

  auto* compile = app.add_subcommand(
      "compile", "Compile a square or duple system into a geometric one");
  std::string c_from, c_in, c_out, c_rep;
  compile->add_option("--from", c_from, "source model: atam or datam")
      ->required()
      ->check(CLI::IsMember({"atam", "datam"}));
  std::string c_to = "gtam";
  compile->add_option("--to", c_to, "target model (gtam)")
      ->check(CLI::IsMember({"gtam"}));
  compile->add_option("IN", c_in, "input system document")->required();
  compile->add_option("OUT", c_out, "output system document")->required();
  compile->add_option("--rep", c_rep, "also write the block representation");
  compile->callback([&] { rc = cmd_compile(c_from, c_in, c_out, c_rep); });

  auto* runc = app.add_subcommand("run", "Grow one assembly sequence");
  std::string r_in, r_policy = "lex", r_trace;
  std::uint64_t r_seed = 0;
  std::size_t r_max = 0;
  runc->add_option("IN", r_in, "input system document")->required();
  runc->add_option("--policy", r_policy, "lex, lowy or random");
  runc->add_option("--seed", r_seed, "random policy seed");
  runc->add_option("--max-tiles", r_max, "stop after this many tiles")
      ->required();
  runc->add_option("--trace", r_trace, "write the attachment sequence here");
  runc->callback([&] { rc = cmd_run(r_in, r_policy, r_seed, r_max, r_trace); });

  auto* enumc = app.add_subcommand(
      "enumerate", "Enumerate bounded producible or terminal assemblies");
  std::string e_in;
  std::size_t e_max = 0;
  bool e_terminal = false;
  enumc->add_option("IN", e_in, "input system document")->required();
  enumc->add_option("--max-tiles", e_max, "tile-count bound")->required();
  enumc->add_flag("--terminal-only", e_terminal, "only terminal assemblies");
  enumc->callback([&] { rc = cmd_enumerate(e_in, e_max, e_terminal); });

  auto* checkc = app.add_subcommand(
      "check-sim", "Check that SIM simulates ORIG under a representation");
  std::string k_sim, k_orig, k_rep;
  std::size_t k_bound = 0;
  checkc->add_option("SIM", k_sim, "simulator system document")->required();
  checkc->add_option("ORIG", k_orig, "simulated system document")->required();
  checkc->add_option("--rep", k_rep, "representation document")->required();
  checkc->add_option("--bound", k_bound, "simulated-side tile bound")
      ->required();
  checkc->callback([&] { rc = cmd_check_sim(k_sim, k_orig, k_rep, k_bound); });

  auto* windowsc = app.add_subcommand(
      "analyze-windows", "Record window movies and splice repeats");
  std::string w_in, w_trace, w_cuts, w_pump;
  windowsc->add_option("IN", w_in, "input system document")->required();
  windowsc->add_option("--trace", w_trace, "attachment trace to replay")
      ->required();
  windowsc
      ->add_option("--cuts", w_cuts,
                   "cut family, e.g. vertical:5..50:-4..4")
      ->required();
  windowsc->add_option("--pump", w_pump, "down or up:N");
  windowsc->callback(
      [&] { rc = cmd_analyze_windows(w_in, w_trace, w_cuts, w_pump); });

  auto* renderc = app.add_subcommand(
      "render", "Draw a system seed or assembly as svg or ascii");
  std::string d_in, d_format, d_out;
  renderc->add_option("IN", d_in, "system or assembly document")->required();
  renderc->add_option("--format", d_format, "svg or ascii")->required();
  renderc->add_option("-o,--output", d_out, "output file")->required();
  renderc->callback([&] { rc = cmd_render(d_in, d_format, d_out); });

  auto* pumpc = app.add_subcommand(
      "pump-bound", "Movie-counting bound for a glue count and scale");
  std::uint64_t p_glues = 0, p_scale = 1;
  pumpc->add_option("--glues", p_glues, "number of positive glue types")
      ->required();
  pumpc->add_option("--scale", p_scale, "block scale factor")->required();
  pumpc->callback([&] { rc = cmd_pump_bound(p_glues, p_scale); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
