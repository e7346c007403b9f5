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

#ifndef BDPROP_GRAPH_IO_H_
#define BDPROP_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "bdprop/graph.h"

namespace bdprop {

// Text form: first line "N d", then one line per vertex listing its neighbor
// ids separated by spaces (an empty line is an isolated vertex). A document
// whose first non-space character is '{' is read as
// {"n": N, "d": d, "adj": [[...], ...]}.
// Throws std::invalid_argument on malformed input.
BoundedDegreeGraph ParseGraph(std::string_view text);
BoundedDegreeGraph ReadGraphFile(const std::string& path);

std::string FormatGraphText(const BoundedDegreeGraph& g);
std::string FormatGraphJson(const BoundedDegreeGraph& g);

}  // namespace bdprop

#endif  // BDPROP_GRAPH_IO_H_
