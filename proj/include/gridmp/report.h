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

// Serialization of results in the gridmp/1 report schema.

#ifndef GRIDMP_REPORT_H_
#define GRIDMP_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gridmp/grid.h"
#include "gridmp/matching.h"
#include "gridmp/preclusion.h"

namespace gridmp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gridmp/1";
inline constexpr const char* kVersion = "1.0.0";

// Sorted canonical edge strings, e.g. ["0,0|1,0", ...].
Json EdgeList(const Grid& grid, std::span<const EdgeId> edges);
std::string EdgeListText(const Grid& grid, std::span<const EdgeId> edges);

std::string ClassTag(const Grid& grid, const SetClass& c);

enum class Detail {
  kSummary,  // counts and flags only
  kClasses,  // plus per-set classification
  kSets,     // plus per-set edge lists
};

Json ToJson(const Grid& grid, const MpResult& result, Detail detail);

// Top-level envelope shared by every command.
Json Envelope(const std::string& command, Json body);

// One row per optimal set (or one row with empty set columns when there are
// none or sets were not requested).
std::string CsvHeader();
std::string ToCsv(const Grid& grid, const MpResult& result, Detail detail);

std::string ToText(const Grid& grid, const MpResult& result, Detail detail);

}  // namespace gridmp

#endif  // GRIDMP_REPORT_H_
