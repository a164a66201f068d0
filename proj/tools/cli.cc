// Copyright 2026 The gridmp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gridmp/constructions.h"
#include "gridmp/grid.h"
#include "gridmp/matching.h"
#include "gridmp/preclusion.h"
#include "gridmp/report.h"

namespace gridmp::cli {
namespace {

struct CommonFlags {
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  int jobs = 0;
  bool timing = false;
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void AddCommon(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--budget", flags.budget,
                  "Largest C(|E|, k) subset count to search (env "
                  "GRIDMP_BUDGET; default 1e8)");
  cmd->add_option("--jobs", flags.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--timing", flags.timing,
                "Include runtime_ms in reports (breaks byte-identical output)");
}

std::uint64_t ResolveBudget(const CommonFlags& flags) {
  if (flags.budget) return *flags.budget;
  if (const char* env = std::getenv("GRIDMP_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("GRIDMP_BUDGET is not an unsigned integer: " +
                       std::string(s));
    }
    return value;
  }
  return kDefaultBudget;
}

SearchOptions ToSearch(const CommonFlags& flags) {
  SearchOptions o;
  o.budget = ResolveBudget(flags);
  o.threads = flags.jobs;
  return o;
}

void Emit(std::ostream& out, Json report) { out << report.dump(2) << "\n"; }

// ---------------------------------------------------------------- mp

struct MpFlags {
  CommonFlags common;
  std::string dims;
  bool enumerate = false;
  bool classify = false;
};

int RunMp(const MpFlags& f, std::ostream& out, std::ostream& err) {
  const Clock clock;
  const Grid grid = Grid::Build(ParseDims(f.dims));
  const SearchOptions opts = ToSearch(f.common);
  MpResult r;
  try {
    r = VerifyGrid(grid, opts);
  } catch (const SearchIncomplete& e) {
    err << "mp: " << e.what() << " (mp >= " << e.lower_bound() << ")\n";
    if (f.common.format == "json") {
      Json body;
      body["dims"] = grid.FormatDims();
      body["budget"] = opts.budget;
      body["error"] = e.what();
      body["mp_lower_bound"] = e.lower_bound();
      Emit(out, Envelope("mp", body));
    }
    return kBudget;
  }
  const Detail detail = f.enumerate  ? Detail::kSets
                        : f.classify ? Detail::kClasses
                                     : Detail::kSummary;
  if (f.common.format == "json") {
    Json body;
    body["budget"] = opts.budget;
    body["result"] = ToJson(grid, r, detail);
    if (f.common.timing) body["runtime_ms"] = clock.ms();
    Emit(out, Envelope("mp", body));
  } else if (f.common.format == "csv") {
    out << CsvHeader() << ToCsv(grid, r, detail);
  } else {
    out << ToText(grid, r, detail);
    if (f.common.timing) out << "runtime_ms=" << clock.ms() << "\n";
  }
  return r.prediction_match ? kOk : kMismatch;
}

// ---------------------------------------------------------------- construct

struct ConstructFlags {
  CommonFlags common;
  std::string kind;
  std::string dims;
  std::optional<int> position;
  std::optional<std::string> uncover;
  std::optional<std::string> edge;
  std::string faults;
};

std::vector<EdgeId> ParseEdgeList(const Grid& grid, const std::string& text) {
  std::vector<EdgeId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(grid.ParseEdge(item));
  }
  return out;
}

const std::string& Require(const std::optional<std::string>& v,
                           const char* flag, const std::string& kind) {
  if (!v) throw UsageError(kind + " requires " + flag);
  return *v;
}

int RunConstruct(const ConstructFlags& f, std::ostream& out) {
  const Clock clock;
  const Grid grid = Grid::Build(ParseDims(f.dims));
  Matching m;
  std::vector<VertexId> expected_uncovered;
  std::optional<EdgeId> avoid;
  FaultSet faults;

  if (f.kind == "pm") {
    if (!grid.even_order()) {
      throw ConstructionError("grid " + grid.FormatDims() + " has odd order");
    }
    m = f.position ? CanonicalPm(grid, *f.position) : DefaultPm(grid);
  } else if (f.kind == "apm-alleven" || f.kind == "apm-evensum") {
    const VertexId u =
        grid.ParseVertex(Require(f.uncover, "--uncover", f.kind));
    m = f.kind == "apm-alleven" ? ApmAllEven(grid, u) : ApmEvenSum(grid, u);
    expected_uncovered = {u};
  } else if (f.kind == "apm-avoid") {
    const EdgeId e = grid.ParseEdge(Require(f.edge, "--edge", f.kind));
    auto r = ApmAvoidingEdge(grid, e);
    m = std::move(r.matching);
    expected_uncovered = {r.uncovered};
    avoid = e;
  } else {  // pm-minus-vertex
    const VertexId u =
        grid.ParseVertex(Require(f.uncover, "--uncover", f.kind));
    faults = FaultSet(ParseEdgeList(grid, f.faults));
    auto r = PmOfVertexDeleted(grid, u, faults);
    if (!r) throw ConstructionError("no perfect matching of (G - u) - F found");
    m = std::move(*r);
    expected_uncovered = {u};
  }

  const std::vector<VertexId> uncovered = UncoveredVertices(grid, m);
  const bool is_matching = IsMatching(grid, m.edges());
  const bool coverage = uncovered == expected_uncovered;
  bool avoids = true;
  if (avoid) avoids = !m.contains(*avoid);
  for (EdgeId e : faults) avoids = avoids && !m.contains(e);
  const bool pass = is_matching && coverage && avoids;

  auto vertex_list = [&](const std::vector<VertexId>& vs) {
    Json a = Json::array();
    for (VertexId v : vs) a.push_back(grid.FormatVertex(v));
    return a;
  };

  if (f.common.format == "json") {
    Json body;
    body["kind"] = f.kind;
    body["dims"] = grid.FormatDims();
    body["size"] = m.size();
    body["edges"] = EdgeList(grid, m.edges());
    body["uncovered"] = vertex_list(uncovered);
    body["self_check"] = {{"is_matching", is_matching},
                          {"coverage", coverage},
                          {"avoids", avoids},
                          {"pass", pass}};
    if (f.common.timing) body["runtime_ms"] = clock.ms();
    Emit(out, Envelope("construct", body));
  } else if (f.common.format == "csv") {
    out << "kind,dims,size,uncovered,self_check,edges\n";
    std::string unc;
    for (VertexId v : uncovered) unc += (unc.empty() ? "" : ";") + grid.FormatVertex(v);
    out << f.kind << ",\"" << grid.FormatDims() << "\"," << m.size() << ",\""
        << unc << "\"," << (pass ? "pass" : "fail") << ",\""
        << EdgeListText(grid, m.edges()) << "\"\n";
  } else {
    out << f.kind << " on " << grid.FormatDims() << ": " << m.size()
        << " edges, uncovered={";
    for (std::size_t i = 0; i < uncovered.size(); ++i) {
      out << (i ? " " : "") << grid.FormatVertex(uncovered[i]);
    }
    out << "}, self-check " << (pass ? "pass" : "FAIL") << "\n";
    for (EdgeId e : m) out << "  " << grid.FormatEdge(e) << "\n";
  }
  return pass ? kOk : kMismatch;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  CommonFlags common;
  std::optional<std::string> dims;
  std::optional<std::string> family;
};

int RunVerify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  const Clock clock;
  std::vector<std::vector<int>> family;
  if (f.dims) {
    family.push_back(ParseDims(*f.dims));
  } else {
    std::ifstream in(*f.family);
    if (!in) throw UsageError("cannot open family file " + *f.family);
    family = ParseFamily(in);
  }
  const SearchOptions opts = ToSearch(f.common);

  std::vector<SweepEntry> entries;
  if (family.size() == 1) {
    // One grid: spend the threads inside the subset search instead.
    SweepEntry e;
    e.dims = family[0];
    try {
      const Grid g = Grid::Build(family[0]);
      e.result = VerifyGrid(g, opts);
    } catch (const BudgetExceeded& ex) {
      e.error = ex.what();
      e.budget_exceeded = true;
    } catch (const GridError&) {
      throw;
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    entries.push_back(std::move(e));
  } else {
    entries = Sweep(family, opts);
  }

  int matched = 0, mismatched = 0, skipped = 0, errors = 0;
  Json results = Json::array();
  std::ostringstream rows;
  for (const SweepEntry& e : entries) {
    std::string dims_text;
    for (std::size_t i = 0; i < e.dims.size(); ++i) {
      dims_text += (i ? "," : "") + std::to_string(e.dims[i]);
    }
    if (e.result) {
      const Grid g = Grid::Build(e.dims);
      e.result->prediction_match ? ++matched : ++mismatched;
      if (f.common.format == "json") {
        results.push_back(ToJson(g, *e.result, Detail::kSummary));
      } else if (f.common.format == "csv") {
        rows << ToCsv(g, *e.result, Detail::kSummary);
      } else {
        rows << ToText(g, *e.result, Detail::kSummary);
      }
      continue;
    }
    e.budget_exceeded ? ++skipped : ++errors;
    err << "verify " << dims_text << ": " << e.error << "\n";
    if (f.common.format == "json") {
      results.push_back({{"dims", dims_text},
                         {"skipped", e.budget_exceeded},
                         {"error", e.error}});
    } else if (f.common.format == "csv") {
      rows << "\"" << dims_text << "\",,,,,,\""
           << (e.budget_exceeded ? "skipped" : "error") << "\",\n";
    } else {
      rows << "grid " << dims_text << ": "
           << (e.budget_exceeded ? "SKIPPED " : "ERROR ") << e.error << "\n";
    }
  }

  const int total = static_cast<int>(entries.size());
  if (f.common.format == "json") {
    Json body;
    body["budget"] = opts.budget;
    body["results"] = results;
    body["summary"] = {{"total", total},
                       {"matched", matched},
                       {"mismatched", mismatched},
                       {"skipped", skipped},
                       {"errors", errors}};
    if (f.common.timing) body["runtime_ms"] = clock.ms();
    Emit(out, Envelope("verify", body));
  } else {
    if (f.common.format == "csv") out << CsvHeader();
    out << rows.str();
    if (f.common.format == "text") {
      out << "total=" << total << " matched=" << matched
          << " mismatched=" << mismatched << " skipped=" << skipped
          << " errors=" << errors << "\n";
      if (f.common.timing) out << "runtime_ms=" << clock.ms() << "\n";
    }
  }
  if (mismatched > 0) return kMismatch;
  if (errors > 0) return kUsage;
  if (skipped > 0) return kBudget;
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Matching preclusion of n-grid graphs", "gridmp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  MpFlags mp;
  auto* mp_cmd = app.add_subcommand(
      "mp", "Brute-force mp(G) and compare with the closed form");
  mp_cmd->add_option("--dims", mp.dims, "Grid dimensions, e.g. 6,3")
      ->required();
  mp_cmd->add_flag("--enumerate", mp.enumerate,
                   "List every optimal set with its class");
  mp_cmd->add_flag("--classify", mp.classify, "Classify the optimal sets");
  AddCommon(mp_cmd, mp.common);

  ConstructFlags cons;
  auto* cons_cmd =
      app.add_subcommand("construct", "Build an explicit (almost) perfect matching");
  cons_cmd->add_option("kind", cons.kind, "Construction")
      ->required()
      ->check(CLI::IsMember(
          {"pm", "apm-alleven", "apm-evensum", "apm-avoid", "pm-minus-vertex"}));
  cons_cmd->add_option("--dims", cons.dims, "Grid dimensions")->required();
  cons_cmd->add_option("--position", cons.position, "Position for pm");
  cons_cmd->add_option("--uncover", cons.uncover,
                       "Vertex to leave uncovered / delete, e.g. 1,1");
  cons_cmd->add_option("--edge", cons.edge, "Edge to avoid, e.g. 0,0|1,0");
  cons_cmd->add_option("--faults", cons.faults,
                       "Fault edges for pm-minus-vertex, ';'-separated");
  AddCommon(cons_cmd, cons.common);

  VerifyFlags ver;
  auto* ver_cmd =
      app.add_subcommand("verify", "Check the predictions on one grid or a family");
  auto* dims_opt = ver_cmd->add_option("--dims", ver.dims, "Grid dimensions");
  auto* fam_opt = ver_cmd->add_option(
      "--family", ver.family, "File with one dims string per line");
  dims_opt->excludes(fam_opt);
  fam_opt->excludes(dims_opt);
  AddCommon(ver_cmd, ver.common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (ver_cmd->parsed() && !ver.dims && !ver.family) {
      throw CLI::RequiredError("--dims or --family");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (mp_cmd->parsed()) return RunMp(mp, out, err);
    if (cons_cmd->parsed()) return RunConstruct(cons, out);
    return RunVerify(ver, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    // GridError, ConstructionError and friends.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gridmp::cli
