// End-to-end checks of the command-line driver: every subcommand is invoked
// as a child process against documents generated on the spot, and exit codes
// plus machine-readable output are verified. Arguments: path to the CLI
// binary, scratch directory.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"
#include "tilesim/atam_compiler.hpp"
#include "tilesim/gallery.hpp"
#include "tilesim/io.hpp"
#include "tilesim/simulation.hpp"

namespace {

using tilesim::Json;

int checks_run = 0;
int checks_failed = 0;

void expect(bool ok, const std::string& what) {
  ++checks_run;
  if (!ok) {
    ++checks_failed;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "FAIL: cannot spawn: " << cmd << "\n";
    ++checks_run;
    ++checks_failed;
    return r;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string q(const std::string& path) { return "\"" + path + "\""; }

Json parse_or_null(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  return doc.is_discarded() ? Json() : doc;
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_checks <tilesim-binary> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = q(argv[1]);
  const std::filesystem::path scratch = argv[2];
  std::filesystem::create_directories(scratch);
  const auto path = [&](const std::string& name) {
    return (scratch / name).string();
  };

  using namespace tilesim;
  spew_file(path("mismatch.json"), write_system(mismatch_square_system()));
  spew_file(path("line.json"), write_system(periodic_line_system()));
  spew_file(path("duple.json"), write_system(duple_blocking_demo()));
  spew_file(path("bad.json"), "{\"format\": \"nope\"}\n");
  spew_file(path("notjson.json"), "this is not json\n");

  // --- flags and failure exit codes ----------------------------------------
  {
    const CmdResult r = run_cmd(cli + " pump-bound --glues 1 --scale 1");
    expect(r.code == 0, "pump-bound exits 0");
    expect(r.out == "B=46081 n=138245\n",
           "pump-bound prints the exact bound, got: " + r.out);
  }
  expect(run_cmd(cli + " --help").code == 0, "--help exits 0");
  expect(run_cmd(cli + " pump-bound --glues 1 --scale 1 --bogus").code == 1,
         "unknown flag exits 1");
  expect(run_cmd(cli + " run").code == 1, "missing required options exit 1");
  expect(run_cmd(cli + " run " + q(path("absent.json")) + " --max-tiles 3").code == 1,
         "unreadable input exits 1");
  expect(run_cmd(cli + " run " + q(path("notjson.json")) + " --max-tiles 3").code == 1,
         "malformed JSON exits 1");
  expect(run_cmd(cli + " run " + q(path("bad.json")) + " --max-tiles 3").code == 2,
         "invalid document exits 2");
  expect(run_cmd(cli + " run " + q(path("mismatch.json")) +
                 " --max-tiles 3 --policy bogus").code == 2,
         "unknown policy exits 2");

  // --- run ------------------------------------------------------------------
  {
    const CmdResult r =
        run_cmd(cli + " run " + q(path("mismatch.json")) +
                " --max-tiles 4 --policy lex --trace " + q(path("mm_trace.json")));
    expect(r.code == 0, "run exits 0");
    const Json doc = parse_or_null(r.out);
    expect(doc.value("format", "") == "tilesim-assembly/1",
           "run prints an assembly document");
    expect(doc.contains("instances") && doc["instances"].size() == 4,
           "run grows four tiles");
    std::ofstream(path("mm_assembly.json")) << r.out;
    expect(std::filesystem::exists(path("mm_trace.json")), "run writes the trace");
  }

  // --- enumerate --------------------------------------------------------------
  {
    const CmdResult r = run_cmd(cli + " enumerate " + q(path("mismatch.json")) +
                                " --max-tiles 4 --terminal-only");
    expect(r.code == 0, "enumerate exits 0");
    const Json doc = parse_or_null(r.out);
    expect(doc.value("count", 0) == 2, "two terminal assemblies");
    expect(doc.value("truncated", true) == false, "enumeration not truncated");
    bool all_four = doc.contains("assemblies");
    for (const Json& e : doc.value("assemblies", Json::array())) {
      all_four = all_four && e.value("tiles", 0) == 4;
    }
    expect(all_four, "every terminal assembly has four tiles");
  }
  {
    const CmdResult r =
        run_cmd(cli + " enumerate " + q(path("mismatch.json")) + " --max-tiles 4");
    const Json doc = parse_or_null(r.out);
    expect(r.code == 0 && doc.value("count", 0) == 8,
           "eight producible assemblies in total");
  }

  // --- compile + check-sim ----------------------------------------------------
  {
    const CmdResult r = run_cmd(
        cli + " compile --from atam --to gtam " + q(path("mismatch.json")) + " " +
        q(path("mm_compiled.json")) + " --rep " + q(path("mm_rep.json")));
    expect(r.code == 0, "compile exits 0");
    const TileSystem compiled = read_system(slurp_file(path("mm_compiled.json")));
    expect(compiled.model == Model::gtam, "compiled system is geometric");
    expect(compiled.tiles.size() == 16 * mismatch_square_system().tiles.size(),
           "sixteen variants per tile");
  }
  {
    const CmdResult r = run_cmd(cli + " check-sim " + q(path("mm_compiled.json")) +
                                " " + q(path("mismatch.json")) + " --rep " +
                                q(path("mm_rep.json")) + " --bound 4");
    expect(r.code == 0, "check-sim passes on the compiled system");
    const Json doc = parse_or_null(r.out);
    expect(doc.value("simulates", false) == true, "report says simulates");
    expect(doc.value("inconclusive", true) == false, "report is conclusive");
  }
  {
    Json rep = parse_or_null(slurp_file(path("mm_rep.json")));
    for (Json& e : rep["map"]) {
      if (e["to"] == "A") e["to"] = "B";
      else if (e["to"] == "B") e["to"] = "A";
    }
    spew_file(path("mm_rep_bad.json"), rep.dump(2) + "\n");
    const CmdResult r = run_cmd(cli + " check-sim " + q(path("mm_compiled.json")) +
                                " " + q(path("mismatch.json")) + " --rep " +
                                q(path("mm_rep_bad.json")) + " --bound 4");
    expect(r.code == 3, "check-sim fails with exit 3 on a swapped map");
    const Json doc = parse_or_null(r.out);
    expect(doc["clauses"]["productions"].value("holds", true) == false,
           "swapped map breaks the productions clause");
  }
  {
    const CmdResult r = run_cmd(
        cli + " compile --from datam --to gtam " + q(path("duple.json")) + " " +
        q(path("dp_compiled.json")) + " --rep " + q(path("dp_rep.json")));
    expect(r.code == 0, "duple compile exits 0");
    const CmdResult k = run_cmd(cli + " check-sim " + q(path("dp_compiled.json")) +
                                " " + q(path("duple.json")) + " --rep " +
                                q(path("dp_rep.json")) + " --bound 3");
    expect(k.code == 0, "compiled duple system simulates its source");
  }
  {
    // Identity self-simulation of an endless line is exact up to the bound
    // but cannot settle the unbounded claim: exit 4 flags the truncation.
    const TileSystem line = periodic_line_system();
    std::vector<int> identity(line.tiles.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = int(i);
    const TileMapRepresentation rep{std::move(identity)};
    spew_file(path("line_rep.json"), write_representation(rep, line, line));
    const CmdResult r = run_cmd(cli + " check-sim " + q(path("line.json")) + " " +
                                q(path("line.json")) + " --rep " +
                                q(path("line_rep.json")) + " --bound 5");
    expect(r.code == 4, "truncated-but-clean check exits 4");
    const Json doc = parse_or_null(r.out);
    expect(doc.value("simulates", false) == true &&
               doc.value("inconclusive", false) == true,
           "report is positive but inconclusive");
  }

  // --- analyze-windows ---------------------------------------------------------
  {
    const CmdResult r =
        run_cmd(cli + " run " + q(path("line.json")) +
                " --max-tiles 100 --trace " + q(path("line_trace.json")));
    expect(r.code == 0, "line run exits 0");
  }
  const std::string analyze = cli + " analyze-windows " + q(path("line.json")) +
                              " --trace " + q(path("line_trace.json")) +
                              " --cuts vertical:5..50:-2..2";
  {
    const CmdResult r = run_cmd(analyze);
    expect(r.code == 0, "analyze-windows exits 0");
    const Json doc = parse_or_null(r.out);
    expect(doc.contains("windows") && doc["windows"].size() == 46,
           "one window per requested column");
    expect(doc["windows"][0].value("events", 0) == 2 &&
               doc["windows"][0].value("bond_events", 0) == 1,
           "first window records two events, one bond");
    expect(doc["repeat"].value("first", -1) == 0 &&
               doc["repeat"].value("second", -1) == 3 &&
               doc["repeat"].value("offset_x", 0) == 3,
           "repeat found three columns apart");
  }
  {
    const Json doc = parse_or_null(run_cmd(analyze + " --pump down").out);
    expect(doc["pump"].value("tiles", 0) == 97, "pumping down leaves 97 tiles");
  }
  {
    const Json doc = parse_or_null(run_cmd(analyze + " --pump up:2").out);
    expect(doc["pump"].value("tiles", 0) == 106, "pumping up twice gives 106 tiles");
  }
  expect(run_cmd(analyze + " --pump up:0").code == 2, "up:0 exits 2");
  expect(run_cmd(cli + " analyze-windows " + q(path("line.json")) + " --trace " +
                 q(path("line_trace.json")) + " --cuts horizontal:1..2:3..4")
                 .code == 2,
         "unsupported cut family exits 2");

  // --- render --------------------------------------------------------------------
  {
    const CmdResult r = run_cmd(cli + " render " + q(path("mm_assembly.json")) +
                                " --format svg -o " + q(path("mm.svg")));
    expect(r.code == 0, "render svg exits 0");
    const std::string svg = slurp_file(path("mm.svg"));
    expect(svg.rfind("<svg", 0) == 0, "svg output starts with <svg");
    expect(svg.find("</svg>") != std::string::npos, "svg output is closed");
    expect(count_substr(svg, "class=\"tile\"") == 4, "one rect per tile");
  }
  {
    const CmdResult r = run_cmd(cli + " render " + q(path("mismatch.json")) +
                                " --format ascii -o " + q(path("mm.txt")));
    expect(r.code == 0, "render ascii exits 0");
    expect(!slurp_file(path("mm.txt")).empty(), "ascii output is non-empty");
  }
  expect(run_cmd(cli + " render " + q(path("mm_assembly.json")) +
                 " --format bogus -o " + q(path("mm.bogus"))).code == 2,
         "unknown render format exits 2");

  std::cout << "cli checks: " << checks_run << " run, " << checks_failed
            << " failed\n";
  return checks_failed == 0 ? 0 : 1;
}
