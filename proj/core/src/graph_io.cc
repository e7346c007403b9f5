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

#include "bdprop/graph_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace bdprop {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::vector<uint64_t> ParseInts(std::string_view line, size_t line_no) {
  std::vector<uint64_t> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw std::invalid_argument("graph text: bad integer on line " +
                                  std::to_string(line_no));
    }
    out.push_back(value);
    i = static_cast<size_t>(ptr - line.data());
  }
  return out;
}

BoundedDegreeGraph ParseJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
  try {
    const uint64_t n = j.at("n").get<uint64_t>();
    const uint64_t d = j.at("d").get<uint64_t>();
    const auto& rows = j.at("adj");
    if (!rows.is_array() || rows.size() != n) {
      throw std::invalid_argument("graph json: adj must have n rows");
    }
    std::vector<std::vector<Vertex>> adj(n);
    for (size_t v = 0; v < n; ++v) {
      for (const auto& u : rows[v]) {
        uint64_t id = u.get<uint64_t>();
        if (id >= n) throw std::invalid_argument("graph json: id out of range");
        adj[v].push_back(static_cast<Vertex>(id));
      }
    }
    return BoundedDegreeGraph(static_cast<uint32_t>(d), adj);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
}

}  // namespace

BoundedDegreeGraph ParseGraph(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw std::invalid_argument("graph: empty input");
  }
  if (text[first] == '{') return ParseJson(text);

  auto lines = SplitLines(text);
  auto header = ParseInts(lines[0], 1);
  if (header.size() != 2) {
    throw std::invalid_argument("graph text: first line must be \"N d\"");
  }
  const uint64_t n = header[0];
  const uint64_t d = header[1];
  if (n >= kBottom || d > kBottom) {
    throw std::invalid_argument("graph text: N or d too large");
  }
  if (lines.size() < n + 1) {
    throw std::invalid_argument("graph text: expected " + std::to_string(n) +
                                " adjacency lines, got " +
                                std::to_string(lines.size() - 1));
  }
  for (size_t i = n + 1; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") != std::string_view::npos) {
      throw std::invalid_argument("graph text: trailing content on line " +
                                  std::to_string(i + 1));
    }
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (size_t v = 0; v < n; ++v) {
    for (uint64_t id : ParseInts(lines[v + 1], v + 2)) {
      if (id >= n) {
        throw std::invalid_argument("graph text: id " + std::to_string(id) +
                                    " out of range on line " +
                                    std::to_string(v + 2));
      }
      adj[v].push_back(static_cast<Vertex>(id));
    }
  }
  return BoundedDegreeGraph(static_cast<uint32_t>(d), adj);
}

BoundedDegreeGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseGraph(ss.str());
}

std::string FormatGraphText(const BoundedDegreeGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.degree_bound()) + "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool first = true;
    for (auto* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p) {
      if (!first) out += ' ';
      out += std::to_string(*p);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string FormatGraphJson(const BoundedDegreeGraph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  j["d"] = g.degree_bound();
  j["adj"] = g.adjacency();
  return j.dump();
}

}  // namespace bdprop
