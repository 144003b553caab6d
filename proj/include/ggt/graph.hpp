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

// Directed graphs with finitely many vertices whose edges are either concrete
// or come in countably infinite families. A family `L` from v to w stands for
// the edges L#1, L#2, ...; members are produced on demand, never stored.

#ifndef GGT_GRAPH_HPP_
#define GGT_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ggt {

using VertexId = uint32_t;

// An edge is a slot (a concrete edge or a family) plus a member index, which
// is 0 for concrete edges and >= 1 for family members. Slots are numbered in
// name order, so the derived ordering is the name order with family members
// compared numerically.
struct Edge {
  uint32_t slot = 0;
  uint64_t member = 0;

  auto operator<=>(const Edge&) const = default;
};

struct EdgeSlot {
  std::string name;
  VertexId source = 0;
  VertexId range = 0;
  bool family = false;
};

struct EdgeDecl {
  std::string name;
  std::string source;
  std::string range;
};

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

class Graph {
 public:
  // Validates names and endpoints; throws MalformedGraph.
  static GraphPtr create(std::string name, std::vector<std::string> vertices,
                         const std::vector<EdgeDecl>& edges,
                         const std::vector<EdgeDecl>& families);

  const std::string& name() const { return name_; }

  size_t num_vertices() const { return vertices_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_[v]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws InvalidArgument

  size_t num_slots() const { return slots_.size(); }
  const EdgeSlot& slot(uint32_t s) const { return slots_[s]; }
  std::optional<uint32_t> find_slot(std::string_view name) const;

  // Accepts `e` for concrete edges and `L#k` (k >= 1) for family members.
  std::optional<Edge> find_edge(std::string_view name) const;
  std::string edge_name(const Edge& e) const;
  bool is_valid(const Edge& e) const;

  VertexId source(const Edge& e) const { return slots_[e.slot].source; }
  VertexId range(const Edge& e) const { return slots_[e.slot].range; }

  // Slots emitted by v, in name order.
  const std::vector<uint32_t>& out_slots(VertexId v) const { return out_slots_[v]; }
  // Concrete edges emitted by v (all of vE^1 when v is regular).
  std::vector<Edge> concrete_out_edges(VertexId v) const;
  // Concrete edges and family slots arriving at v.
  const std::vector<uint32_t>& in_slots(VertexId v) const { return in_slots_[v]; }

  bool is_sink(VertexId v) const { return out_slots_[v].empty(); }
  bool is_infinite_emitter(VertexId v) const { return emits_family_[v]; }
  bool is_singular(VertexId v) const { return is_sink(v) || is_infinite_emitter(v); }
  bool is_regular(VertexId v) const { return !is_singular(v); }
  bool is_source(VertexId v) const { return in_slots_[v].empty(); }

  // Number of concrete edges from v to w, or nullopt when a family connects
  // them (infinitely many edges).
  std::optional<size_t> edge_count(VertexId v, VertexId w) const;

  // The least edge from v to w that is not in `avoid`, if any.
  std::optional<Edge> least_edge(VertexId v, VertexId w,
                                 const std::set<Edge>& avoid = {}) const;
  // The least edge of the slot not in `avoid` (concrete slots may have none).
  std::optional<Edge> least_member(uint32_t slot, const std::set<Edge>& avoid = {}) const;

  std::vector<EdgeDecl> edge_decls() const;
  std::vector<EdgeDecl> family_decls() const;
  const std::vector<std::string>& vertex_names() const { return vertices_; }

  // Value equality: same name, vertices, edges and families.
  bool operator==(const Graph& other) const;

 private:
  Graph() = default;

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<EdgeSlot> slots_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, uint32_t, std::less<>> slot_index_;
  std::vector<std::vector<uint32_t>> out_slots_;
  std::vector<std::vector<uint32_t>> in_slots_;
  std::vector<bool> emits_family_;
};

// Returns true when `name` may be used for a vertex, edge or family.
bool is_valid_name(std::string_view name);

}  // namespace ggt

#endif  // GGT_GRAPH_HPP_
