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

#include "ggt/graphcore.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt {

namespace {

std::vector<std::vector<VertexId>> successors(const Graph& g) {
  std::vector<std::vector<VertexId>> succ(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (uint32_t s : g.out_slots(v)) succ[v].push_back(g.slot(s).range);
    std::sort(succ[v].begin(), succ[v].end());
    succ[v].erase(std::unique(succ[v].begin(), succ[v].end()), succ[v].end());
  }
  return succ;
}

// Returns a cycle (as a vertex list) inside the subgraph induced on `keep`,
// or an empty list when that subgraph is acyclic.
std::vector<VertexId> find_cycle(const std::vector<std::vector<VertexId>>& succ,
                                 const std::vector<bool>& keep) {
  const size_t n = succ.size();
  enum Color { kWhite, kGrey, kBlack };
  std::vector<Color> color(n, kWhite);
  std::vector<VertexId> parent(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (!keep[root] || color[root] != kWhite) continue;
    // Iterative DFS with explicit successor cursors.
    std::vector<std::pair<VertexId, size_t>> stack{{root, 0}};
    color[root] = kGrey;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == succ[v].size()) {
        color[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const VertexId w = succ[v][i++];
      if (!keep[w]) continue;
      if (color[w] == kGrey) {
        std::vector<VertexId> cycle{w};
        for (auto it = stack.rbegin(); it != stack.rend() && it->first != w; ++it) {
          cycle.push_back(it->first);
        }
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[w] == kWhite) {
        color[w] = kGrey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

std::string vertex_list(const Graph& g, const std::vector<VertexId>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += " -> ";
    out += g.vertex_name(vs[i]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<bool>> reachability(const Graph& g) {
  const size_t n = g.num_vertices();
  const auto succ = successors(g);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v) {
    std::deque<VertexId> queue{v};
    reach[v][v] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : succ[u]) {
        if (!reach[v][w]) {
          reach[v][w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return reach;
}

std::vector<VertexId> cyclic_component(const Graph& g, VertexId v) {
  const auto reach = reachability(g);
  std::vector<VertexId> comp;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (reach[v][u] && reach[u][v]) comp.push_back(u);
  }
  if (comp.size() == 1) {
    bool self_loop = false;
    for (uint32_t s : g.out_slots(v)) self_loop |= g.slot(s).range == v;
    if (!self_loop) comp.clear();
  }
  return comp;
}

CriteriaReport validate(const Graph& g) {
  CriteriaReport rep;
  const size_t n = g.num_vertices();
  const auto succ = successors(g);
  const auto reach = reachability(g);

  rep.no_sinks = true;
  rep.no_sources = true;
  for (VertexId v = 0; v < n; ++v) {
    if (g.is_sink(v) && rep.no_sinks) {
      rep.no_sinks = false;
      rep.witnesses["no_sinks"] = "sink " + g.vertex_name(v);
    }
    if (g.is_source(v) && rep.no_sources) {
      rep.no_sources = false;
      rep.witnesses["no_sources"] = "source " + g.vertex_name(v);
    }
  }

  // A cycle without exits runs through vertices that emit exactly one edge.
  std::vector<bool> single(n, false);
  for (VertexId v = 0; v < n; ++v) {
    single[v] = g.out_slots(v).size() == 1 && !g.slot(g.out_slots(v)[0]).family;
  }
  const auto no_exit = find_cycle(succ, single);
  rep.condition_L = no_exit.empty();
  if (!rep.condition_L) {
    rep.witnesses["condition_L"] = "cycle without exit " + vertex_list(g, no_exit);
  }

  // Every infinite path revisits a vertex, so an infinite path avoiding all
  // vertices reachable from v exists iff the unreachable part has a cycle.
  rep.cofinal = true;
  for (VertexId v = 0; v < n && rep.cofinal; ++v) {
    std::vector<bool> unreachable(n);
    for (VertexId u = 0; u < n; ++u) unreachable[u] = !reach[v][u];
    const auto cycle = find_cycle(succ, unreachable);
    if (!cycle.empty()) {
      rep.cofinal = false;
      rep.witnesses["cofinal"] = "cycle " + vertex_list(g, cycle) +
                                 " is not reachable from " + g.vertex_name(v);
    }
  }

  rep.reaches_all_infinite_emitters = true;
  for (VertexId v = 0; v < n && rep.reaches_all_infinite_emitters; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (g.is_infinite_emitter(w) && !reach[v][w]) {
        rep.reaches_all_infinite_emitters = false;
        rep.witnesses["reaches_all_infinite_emitters"] =
            g.vertex_name(v) + " does not reach " + g.vertex_name(w);
        break;
      }
    }
  }

  rep.strongly_connected = true;
  for (VertexId v = 0; v < n && rep.strongly_connected; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (!reach[v][w]) {
        rep.strongly_connected = false;
        rep.witnesses["strongly_connected"] =
            g.vertex_name(v) + " does not reach " + g.vertex_name(w);
        break;
      }
    }
  }

  rep.ah_criteria = rep.no_sinks && rep.cofinal && rep.condition_L &&
                    rep.reaches_all_infinite_emitters;
  if (!rep.ah_criteria) rep.witnesses["ah_criteria"] = "a defining clause fails";

  rep.lemma81_hypotheses = false;
  if (rep.strongly_connected) {
    for (VertexId w = 0; w < n && !rep.lemma81_hypotheses; ++w) {
      if (!g.is_infinite_emitter(w)) continue;
      std::optional<uint32_t> loop_family;
      std::vector<bool> hit(n, false);
      for (uint32_t s : g.out_slots(w)) {
        hit[g.slot(s).range] = true;
        if (g.slot(s).family && g.slot(s).range == w && !loop_family) loop_family = s;
      }
      if (loop_family && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
        rep.lemma81_hypotheses = true;
        rep.lemma81_emitter = w;
        rep.lemma81_loop_family = loop_family;
      }
    }
  }
  if (!rep.lemma81_hypotheses) {
    rep.witnesses["lemma81_hypotheses"] =
        rep.strongly_connected
            ? "no infinite emitter with a loop family and an edge to every vertex"
            : "graph is not strongly connected";
  }
  return rep;
}

std::string CriteriaReport::to_string() const {
  std::ostringstream out;
  auto line = [&](const char* name, bool value) {
    out << name << " = " << (value ? "true" : "false");
    auto it = witnesses.find(name);
    if (!value && it != witnesses.end()) out << "  (" << it->second << ")";
    out << "\n";
  };
  line("no_sinks", no_sinks);
  line("no_sources", no_sources);
  line("condition_L", condition_L);
  line("cofinal", cofinal);
  line("reaches_all_infinite_emitters", reaches_all_infinite_emitters);
  line("strongly_connected", strongly_connected);
  line("ah_criteria", ah_criteria);
  line("lemma81_hypotheses", lemma81_hypotheses);
  return out.str();
}

GraphPtr move_t(const Graph& g, VertexId w) {
  if (!g.is_infinite_emitter(w)) {
    throw Error(ErrorCode::kNotInfiniteEmitter, g.vertex_name(w) + " is not an infinite emitter");
  }
  if (!validate(g).strongly_connected) {
    throw Error(ErrorCode::kNotStronglyConnected, "move (T) needs a strongly connected graph");
  }
  std::set<std::string> taken(g.vertex_names().begin(), g.vertex_names().end());
  for (uint32_t s = 0; s < g.num_slots(); ++s) taken.insert(g.slot(s).name);
  auto families = g.family_decls();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::string base = g.vertex_name(w) + "_to_" + g.vertex_name(v);
    std::string name = base;
    for (int k = 2; taken.count(name); ++k) name = base + "_" + std::to_string(k);
    taken.insert(name);
    families.push_back({name, g.vertex_name(w), g.vertex_name(v)});
  }
  return Graph::create(g.name(), g.vertex_names(), g.edge_decls(), families);
}

GraphPtr move_s(const Graph& g, VertexId v) {
  if (!g.is_source(v) || g.is_infinite_emitter(v)) {
    throw Error(ErrorCode::kNotARegularSource, g.vertex_name(v) + " is not a regular source");
  }
  const std::string& gone = g.vertex_name(v);
  std::vector<std::string> vertices;
  for (const std::string& name : g.vertex_names()) {
    if (name != gone) vertices.push_back(name);
  }
  if (vertices.empty()) {
    throw Error(ErrorCode::kNotARegularSource, "cannot remove the only vertex");
  }
  auto keep = [&](const std::vector<EdgeDecl>& decls) {
    std::vector<EdgeDecl> out;
    for (const EdgeDecl& d : decls) {
      if (d.source != gone) out.push_back(d);
    }
    return out;
  };
  return Graph::create(g.name(), vertices, keep(g.edge_decls()), keep(g.family_decls()));
}

namespace {

// True when some member of the slot survives `avoid`.
bool slot_available(const Graph& g, uint32_t s, const std::set<Edge>& avoid) {
  return g.slot(s).family || !avoid.count(Edge{s, 0});
}

}  // namespace

std::optional<Path> find_path(const Graph& g, VertexId from, VertexId to,
                              std::optional<size_t> length, const std::set<Edge>& avoid) {
  const size_t n = g.num_vertices();
  Path path = Path::at(from);
  if (length) {
    const size_t L = *length;
    // can[k][u]: some path of exactly k edges runs from u to `to`.
    std::vector<std::vector<bool>> can(L + 1, std::vector<bool>(n, false));
    can[0][to] = true;
    for (size_t k = 1; k <= L; ++k) {
      for (VertexId u = 0; u < n; ++u) {
        for (uint32_t s : g.out_slots(u)) {
          if (slot_available(g, s, avoid) && can[k - 1][g.slot(s).range]) {
            can[k][u] = true;
            break;
          }
        }
      }
    }
    if (!can[L][from]) return std::nullopt;
    for (size_t k = L; k > 0; --k) {
      for (uint32_t s : g.out_slots(path.end)) {
        if (slot_available(g, s, avoid) && can[k - 1][g.slot(s).range]) {
          path = path.extended(g, *g.least_member(s, avoid));
          break;
        }
      }
    }
    return path;
  }
  // Distances to `to` along available slots, by reverse breadth-first search.
  constexpr size_t kInf = std::numeric_limits<size_t>::max();
  std::vector<size_t> dist(n, kInf);
  dist[to] = 0;
  std::deque<VertexId> queue{to};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (uint32_t s : g.in_slots(u)) {
      const VertexId p = g.slot(s).source;
      if (slot_available(g, s, avoid) && dist[p] == kInf) {
        dist[p] = dist[u] + 1;
        queue.push_back(p);
      }
    }
  }
  if (dist[from] == kInf) return std::nullopt;
  while (path.end != to) {
    for (uint32_t s : g.out_slots(path.end)) {
      const VertexId r = g.slot(s).range;
      if (slot_available(g, s, avoid) && dist[r] != kInf && dist[r] + 1 == dist[path.end]) {
        path = path.extended(g, *g.least_member(s, avoid));
        break;
      }
    }
  }
  return path;
}

std::optional<Path> find_path_into(const Graph& g, VertexId to, size_t length) {
  std::optional<Path> best;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto p = find_path(g, u, to, length);
    if (p && (!best || *p < *best)) best = std::move(p);
  }
  return best;
}

std::optional<Path> least_cycle(const Graph& g, VertexId v, const std::set<Edge>& avoid_first) {
  std::optional<Path> best;
  for (uint32_t s : g.out_slots(v)) {
    auto e = g.least_member(s, avoid_first);
    if (!e) continue;
    auto rest = find_path(g, g.range(*e), v);
    if (!rest) continue;
    Path candidate = Path::at(v).extended(g, *e).concat(*rest);
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return best;
}

std::pair<Path, Path> two_disjoint_cycles(const Graph& g, VertexId v,
                                          const std::set<Edge>& avoid_first) {
  auto first = least_cycle(g, v, avoid_first);
  if (!first) {
    throw Error(ErrorCode::kNoDisjointCycles, "no cycle at " + g.vertex_name(v));
  }
  std::optional<Path> best;
  // Leave the first cycle at some position and return to v as fast as possible.
  for (size_t i = 0; i < first->length(); ++i) {
    const Path head = first->prefix(i, g);
    std::set<Edge> avoid{first->edges[i]};
    if (i == 0) avoid.insert(avoid_first.begin(), avoid_first.end());
    for (uint32_t s : g.out_slots(head.end)) {
      auto e = g.least_member(s, avoid);
      if (!e) continue;
      auto rest = find_path(g, g.range(*e), v);
      if (!rest) continue;
      Path candidate = head.extended(g, *e).concat(*rest);
      if (!best || candidate < *best) best = std::move(candidate);
    }
  }
  if (!best) {
    throw Error(ErrorCode::kNoDisjointCycles,
                "only powers of a single cycle return to " + g.vertex_name(v));
  }
  return {*first, *best};
}

}  // namespace ggt
