// Copyright 2026 The bdprop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef BDPROP_TOOLS_RUN_RECORD_H_
#define BDPROP_TOOLS_RUN_RECORD_H_

#include <chrono>
#include <string>

#include "json.hpp"

namespace bdprop::tools {

using Json = nlohmann::ordered_json;

// Wall-clock values go under "timestamp" only; everything else in a record is
// a function of the inputs and the seed.
class Stopwatch {
 public:
  Stopwatch();
  double Seconds() const;
  Json Timestamp() const;  // {"started_utc", "wall_time_s"}

 private:
  std::chrono::system_clock::time_point wall_start_;
  std::chrono::steady_clock::time_point start_;
};

// Flat CSV over an array of objects; columns are the union of keys in order of
// first appearance, arrays are joined with ';'.
std::string ToCsv(const Json& rows);

// Writes to path, or stdout when path is empty. Throws std::runtime_error.
void WriteOutput(const std::string& path, const std::string& text);

std::string Render(const Json& record, const Json& rows, const std::string& format);

}  // namespace bdprop::tools

#endif  // BDPROP_TOOLS_RUN_RECORD_H_
