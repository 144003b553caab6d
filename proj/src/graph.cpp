// Copyright 2026 The ggt Authors
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

#include "ggt/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ggt/error.hpp"
#include "ggt/path.hpp"

namespace ggt {

bool is_valid_name(std::string_view name) {
  if (name.empty() || name == "-") return false;
  for (char c : name) {
    if (static_cast<unsigned char>(c) <= ' ') return false;
    switch (c) {
      case '.': case '#': case '@': case '\\': case ',':
      case '|': case '+': case '(': case ')':
        return false;
      default:
        break;
    }
  }
  return true;
}

GraphPtr Graph::create(std::string name, std::vector<std::string> vertices,
                       const std::vector<EdgeDecl>& edges,
                       const std::vector<EdgeDecl>& families) {
  auto malformed = [](const std::string& what) {
    return Error(ErrorCode::kMalformedGraph, what);
  };
  if (vertices.empty()) throw malformed("graph has no vertices");
  std::set<std::string, std::less<>> names;
  for (const std::string& v : vertices) {
    if (!is_valid_name(v)) throw malformed("invalid vertex name '" + v + "'");
    if (!names.insert(v).second) throw malformed("duplicate name '" + v + "'");
  }
  auto graph = std::shared_ptr<Graph>(new Graph());
  graph->name_ = std::move(name);
  std::sort(vertices.begin(), vertices.end());
  graph->vertices_ = std::move(vertices);
  for (VertexId v = 0; v < graph->vertices_.size(); ++v) {
    graph->vertex_index_.emplace(graph->vertices_[v], v);
  }
  auto add = [&](const EdgeDecl& d, bool family) {
    if (!is_valid_name(d.name)) throw malformed("invalid edge name '" + d.name + "'");
    if (!names.insert(d.name).second) throw malformed("duplicate name '" + d.name + "'");
    auto s = graph->find_vertex(d.source);
    auto r = graph->find_vertex(d.range);
    if (!s) throw malformed("edge '" + d.name + "' has unknown source '" + d.source + "'");
    if (!r) throw malformed("edge '" + d.name + "' has unknown range '" + d.range + "'");
    graph->slots_.push_back(EdgeSlot{d.name, *s, *r, family});
  };
  for (const EdgeDecl& d : edges) add(d, false);
  for (const EdgeDecl& d : families) add(d, true);
  std::sort(graph->slots_.begin(), graph->slots_.end(),
            [](const EdgeSlot& a, const EdgeSlot& b) { return a.name < b.name; });
  const size_t n = graph->vertices_.size();
  graph->out_slots_.assign(n, {});
  graph->in_slots_.assign(n, {});
  graph->emits_family_.assign(n, false);
  for (uint32_t s = 0; s < graph->slots_.size(); ++s) {
    const EdgeSlot& slot = graph->slots_[s];
    graph->slot_index_.emplace(slot.name, s);
    graph->out_slots_[slot.source].push_back(s);
    graph->in_slots_[slot.range].push_back(s);
    if (slot.family) graph->emits_family_[slot.source] = true;
  }
  return graph;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorCode::kInvalidArgument, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::optional<uint32_t> Graph::find_slot(std::string_view name) const {
  auto it = slot_index_.find(name);
  if (it == slot_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Edge> Graph::find_edge(std::string_view name) const {
  const size_t hash = name.find('#');
  if (hash == std::string_view::npos) {
    auto s = find_slot(name);
    if (!s || slots_[*s].family) return std::nullopt;
    return Edge{*s, 0};
  }
  auto s = find_slot(name.substr(0, hash));
  if (!s || !slots_[*s].family) return std::nullopt;
  std::string_view digits = name.substr(hash + 1);
  if (digits.empty() || digits.front() == '0') return std::nullopt;
  uint64_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k == 0) {
    return std::nullopt;
  }
  return Edge{*s, k};
}

std::string Graph::edge_name(const Edge& e) const {
  const EdgeSlot& s = slots_[e.slot];
  if (!s.family) return s.name;
  return s.name + "#" + std::to_string(e.member);
}

bool Graph::is_valid(const Edge& e) const {
  if (e.slot >= slots_.size()) return false;
  return slots_[e.slot].family ? e.member >= 1 : e.member == 0;
}

std::vector<Edge> Graph::concrete_out_edges(VertexId v) const {
  std::vector<Edge> out;
  for (uint32_t s : out_slots_[v]) {
    if (!slots_[s].family) out.push_back(Edge{s, 0});
  }
  return out;
}

std::optional<size_t> Graph::edge_count(VertexId v, VertexId w) const {
  size_t count = 0;
  for (uint32_t s : out_slots_[v]) {
    if (slots_[s].range != w) continue;
    if (slots_[s].family) return std::nullopt;
    ++count;
  }
  return count;
}

std::optional<Edge> Graph::least_member(uint32_t slot, const std::set<Edge>& avoid) const {
  if (!slots_[slot].family) {
    Edge e{slot, 0};
    if (avoid.count(e)) return std::nullopt;
    return e;
  }
  for (uint64_t k = 1;; ++k) {
    Edge e{slot, k};
    if (!avoid.count(e)) return e;
  }
}

std::optional<Edge> Graph::least_edge(VertexId v, VertexId w,
                                      const std::set<Edge>& avoid) const {
  for (uint32_t s : out_slots_[v]) {
    if (slots_[s].range != w) continue;
    if (auto e = least_member(s, avoid)) return e;
  }
  return std::nullopt;
}

std::vector<EdgeDecl> Graph::edge_decls() const {
  std::vector<EdgeDecl> out;
  for (const EdgeSlot& s : slots_) {
    if (!s.family) out.push_back({s.name, vertices_[s.source], vertices_[s.range]});
  }
  return out;
}

std::vector<EdgeDecl> Graph::family_decls() const {
  std::vector<EdgeDecl> out;
  for (const EdgeSlot& s : slots_) {
    if (s.family) out.push_back({s.name, vertices_[s.source], vertices_[s.range]});
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (name_ != other.name_ || vertices_ != other.vertices_) return false;
  if (slots_.size() != other.slots_.size()) return false;
  for (size_t i = 0; i < slots_.size(); ++i) {
    const EdgeSlot& a = slots_[i];
    const EdgeSlot& b = other.slots_[i];
    if (a.name != b.name || a.source != b.source || a.range != b.range ||
        a.family != b.family) {
      return false;
    }
  }
  return true;
}

Path Path::from_edges(const Graph& g, VertexId base, std::vector<Edge> edges) {
  Path p = Path::at(base);
  p.edges.reserve(edges.size());
  for (const Edge& e : edges) p = p.extended(g, e);
  return p;
}

Path Path::extended(const Graph& g, const Edge& e) const {
  if (!g.is_valid(e)) throw Error(ErrorCode::kInvalidPath, "invalid edge");
  if (g.source(e) != end) {
    throw Error(ErrorCode::kInvalidPath, "edge " + g.edge_name(e) +
                                             " does not start at " + g.vertex_name(end));
  }
  Path p = *this;
  p.edges.push_back(e);
  p.end = g.range(e);
  return p;
}

Path Path::concat(const Path& tail) const {
  if (tail.base != end) throw Error(ErrorCode::kInvalidPath, "paths not composable");
  Path p = *this;
  p.edges.insert(p.edges.end(), tail.edges.begin(), tail.edges.end());
  p.end = tail.end;
  return p;
}

Path Path::prefix(size_t n, const Graph& g) const {
  if (n >= edges.size()) return *this;
  Path p{base, n == 0 ? base : g.range(edges[n - 1]),
         std::vector<Edge>(edges.begin(), edges.begin() + static_cast<long>(n))};
  return p;
}

Path Path::suffix_from(size_t n, const Graph& g) const {
  if (n == 0) return *this;
  if (n > edges.size()) throw Error(ErrorCode::kInvalidPath, "suffix beyond path end");
  Path p{g.range(edges[n - 1]), end,
         std::vector<Edge>(edges.begin() + static_cast<long>(n), edges.end())};
  return p;
}

bool Path::is_prefix_of(const Path& other) const {
  if (base != other.base || edges.size() > other.edges.size()) return false;
  return std::equal(edges.begin(), edges.end(), other.edges.begin());
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = edges.size() <=> other.edges.size(); c != 0) return c;
  if (auto c = edges <=> other.edges; c != 0) return c;
  return base <=> other.base;
}

bool paths_disjoint(const Path& a, const Path& b) {
  return !a.is_prefix_of(b) && !b.is_prefix_of(a);
}

}  // namespace ggt
