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

#include "gridmp/report.h"

#include <algorithm>
#include <sstream>

namespace gridmp {
namespace {

std::string Quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* KindName(SetClass::Kind kind) {
  switch (kind) {
    case SetClass::Kind::kTrivialAtVertex:
      return "TrivialAtVertex";
    case SetClass::Kind::kSpecialTwoGrid:
      return "SpecialTwoGrid";
    case SetClass::Kind::kOther:
      return "Other";
  }
  return "Other";
}

}  // namespace

Json EdgeList(const Grid& grid, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (EdgeId e : sorted) out.push_back(grid.FormatEdge(e));
  return out;
}

std::string EdgeListText(const Grid& grid, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (EdgeId e : sorted) {
    if (!out.empty()) out += ';';
    out += grid.FormatEdge(e);
  }
  return out;
}

std::string ClassTag(const Grid& grid, const SetClass& c) {
  switch (c.kind) {
    case SetClass::Kind::kTrivialAtVertex:
      return "TrivialAtVertex(" + grid.FormatVertex(c.vertex) + ")";
    case SetClass::Kind::kSpecialTwoGrid:
      return "SpecialTwoGrid(u0=" + std::to_string(c.u0) +
             ",axis=" + std::to_string(c.axis) + ")";
    case SetClass::Kind::kOther:
      break;
  }
  return "Other";
}

Json ToJson(const Grid& grid, const MpResult& r, Detail detail) {
  Json j;
  j["dims"] = grid.FormatDims();
  j["mp"] = r.mp;
  j["predicted_mp"] = r.predicted_mp;
  j["prediction_match"] = r.prediction_match;
  j["super_matched"] = r.super_matched;
  j["optimal_set_count"] = r.optimal_sets.size();
  if (detail != Detail::kSummary) {
    Json counts;
    for (auto kind : {SetClass::Kind::kTrivialAtVertex,
                      SetClass::Kind::kSpecialTwoGrid,
                      SetClass::Kind::kOther}) {
      counts[KindName(kind)] = std::count_if(
          r.classifications.begin(), r.classifications.end(),
          [&](const SetClass& c) { return c.kind == kind; });
    }
    j["class_counts"] = counts;
    Json sets = Json::array();
    for (std::size_t i = 0; i < r.optimal_sets.size(); ++i) {
      Json entry;
      entry["class"] = ClassTag(grid, r.classifications[i]);
      if (detail == Detail::kSets) {
        entry["edges"] = EdgeList(grid, r.optimal_sets[i].edges());
      }
      sets.push_back(std::move(entry));
    }
    j["optimal_sets"] = sets;
  }
  j["mismatches"] = r.mismatches;
  return j;
}

Json Envelope(const std::string& command, Json body) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = command;
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::string CsvHeader() {
  return "dims,mp,predicted_mp,prediction_match,super_matched,set_index,class,"
         "edges\n";
}

std::string ToCsv(const Grid& grid, const MpResult& r, Detail detail) {
  std::ostringstream out;
  const std::string prefix =
      Quote(grid.FormatDims()) + "," + std::to_string(r.mp) + "," +
      std::to_string(r.predicted_mp) + "," +
      (r.prediction_match ? "true" : "false") + "," +
      (r.super_matched ? "true" : "false") + ",";
  if (detail == Detail::kSummary || r.optimal_sets.empty()) {
    out << prefix << ",,\n";
    return out.str();
  }
  for (std::size_t i = 0; i < r.optimal_sets.size(); ++i) {
    out << prefix << i << "," << Quote(ClassTag(grid, r.classifications[i]))
        << ","
        << (detail == Detail::kSets
                ? Quote(EdgeListText(grid, r.optimal_sets[i].edges()))
                : std::string())
        << "\n";
  }
  return out.str();
}

std::string ToText(const Grid& grid, const MpResult& r, Detail detail) {
  std::ostringstream out;
  out << "grid " << grid.FormatDims() << ": mp=" << r.mp
      << " predicted=" << r.predicted_mp
      << " match=" << (r.prediction_match ? "yes" : "NO")
      << " super_matched=" << (r.super_matched ? "yes" : "no")
      << " optimal_sets=" << r.optimal_sets.size() << "\n";
  if (detail != Detail::kSummary) {
    for (std::size_t i = 0; i < r.optimal_sets.size(); ++i) {
      out << "  [" << i << "] " << ClassTag(grid, r.classifications[i]);
      if (detail == Detail::kSets) {
        out << ": " << EdgeListText(grid, r.optimal_sets[i].edges());
      }
      out << "\n";
    }
  }
  for (const auto& m : r.mismatches) out << "  mismatch: " << m << "\n";
  return out.str();
}

}  // namespace gridmp
