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

#include "ggt/text.hpp"

#include <sstream>

#include "ggt/error.hpp"

namespace ggt {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::kParseError, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Lines with comments removed, paired with 1-based line numbers; blank lines
// are skipped.
std::vector<std::pair<size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<size_t, std::string>> out;
  size_t number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++number;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, std::string(line));
  }
  return out;
}

std::string at_line(size_t n) { return "line " + std::to_string(n) + ": "; }

Edge parse_edge(const Graph& g, std::string_view name) {
  auto e = g.find_edge(trim(name));
  if (!e) throw parse_error("unknown edge '" + std::string(trim(name)) + "'");
  return *e;
}

std::vector<Edge> parse_edge_list(const Graph& g, std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<Edge> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_edge(g, part));
  return out;
}

std::string format_edge_list(const Graph& g, const std::vector<Edge>& es) {
  if (es.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < es.size(); ++i) {
    if (i) out += ",";
    out += g.edge_name(es[i]);
  }
  return out;
}

}  // namespace

GraphPtr parse_graph(std::string_view text, const std::string& fallback_name) {
  std::string name = fallback_name;
  bool named = false;
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges, families;
  for (const auto& [n, line] : content_lines(text)) {
    auto w = words(line);
    const std::string& kind = w[0];
    if (kind == "graph" && w.size() == 2) {
      if (named) throw parse_error(at_line(n) + "second graph line");
      name = w[1];
      named = true;
    } else if (kind == "vertex" && w.size() == 2) {
      vertices.push_back(w[1]);
    } else if (kind == "edge" && w.size() == 4) {
      edges.push_back({w[1], w[2], w[3]});
    } else if (kind == "iedges" && w.size() == 4) {
      families.push_back({w[1], w[2], w[3]});
    } else {
      throw parse_error(at_line(n) + "cannot read '" + line + "'");
    }
  }
  if (!is_valid_name(name)) throw parse_error("invalid graph name '" + name + "'");
  return Graph::create(name, vertices, edges, families);
}

std::string format_graph(const Graph& g) {
  std::string out = "graph " + g.name() + "\n";
  for (const std::string& v : g.vertex_names()) out += "vertex " + v + "\n";
  for (const EdgeDecl& d : g.edge_decls()) {
    out += "edge " + d.name + " " + d.source + " " + d.range + "\n";
  }
  for (const EdgeDecl& d : g.family_decls()) {
    out += "iedges " + d.name + " " + d.source + " " + d.range + "\n";
  }
  return out;
}

Path parse_path(const Graph& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw parse_error("empty path");
  if (text.front() == '@') {
    auto v = g.find_vertex(trim(text.substr(1)));
    if (!v) throw parse_error("unknown vertex in '" + std::string(text) + "'");
    return Path::at(*v);
  }
  std::vector<Edge> edges;
  for (std::string_view part : split(text, '.')) edges.push_back(parse_edge(g, part));
  return Path::from_edges(g, g.source(edges.front()), edges);
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.empty()) return "@" + g.vertex_name(p.base);
  std::string out;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += g.edge_name(p.edges[i]);
  }
  return out;
}

Piece parse_piece(const Graph& g, std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.substr(0, 2) != "Z(" || text.back() != ')') {
    throw parse_error("expected Z(...) but found '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(2, text.size() - 3);
  const size_t slash = inner.find('\\');
  Path mu = parse_path(g, inner.substr(0, slash));
  std::vector<Edge> f;
  if (slash != std::string_view::npos) f = parse_edge_list(g, inner.substr(slash + 1));
  return make_piece(g, std::move(mu), std::move(f));
}

std::string format_piece(const Graph& g, const Piece& p) {
  std::string out = "Z(" + format_path(g, p.mu);
  if (!p.punctures.empty()) out += " \\ " + format_edge_list(g, p.punctures);
  return out + ")";
}

Clopen parse_clopen(const GraphPtr& g, std::string_view text) {
  text = trim(text);
  if (text == "0") return Clopen(g);
  std::vector<Piece> ps;
  for (std::string_view part : split(text, '+')) ps.push_back(parse_piece(*g, part));
  return Clopen::from_pieces(g, ps);
}

std::string format_pieces(const Graph& g, const std::vector<Piece>& ps) {
  if (ps.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += " + ";
    out += format_piece(g, ps[i]);
  }
  return out;
}

std::string format_clopen(const Clopen& c) { return format_pieces(*c.graph(), c.pieces()); }

BoundaryPoint parse_point(const Graph& g, std::string_view text) {
  text = trim(text);
  const size_t open = text.find('(');
  if (open == std::string_view::npos) return BoundaryPoint::make(g, parse_path(g, text), std::nullopt);
  if (text.back() != ')') throw parse_error("unterminated cycle in '" + std::string(text) + "'");
  Path prefix = parse_path(g, text.substr(0, open));
  Path cycle = parse_path(g, text.substr(open + 1, text.size() - open - 2));
  return BoundaryPoint::make(g, std::move(prefix), std::move(cycle));
}

std::string format_point(const Graph& g, const BoundaryPoint& x) {
  std::string out = format_path(g, x.prefix);
  if (x.cycle) out += "(" + format_path(g, *x.cycle) + ")";
  return out;
}

namespace {

NamedElement parse_element_lines(const GraphPtr& g,
                                 const std::vector<std::pair<size_t, std::string>>& lines,
                                 size_t& pos) {
  if (pos >= lines.size()) throw parse_error("missing element header");
  const auto& [hn, header] = lines[pos];
  auto w = words(header);
  if (w.size() != 4 || w[0] != "element" || w[2] != "over") {
    throw parse_error(at_line(hn) + "expected 'element <name> over <graph>'");
  }
  if (w[3] != g->name()) {
    throw Error(ErrorCode::kGraphMismatch,
                at_line(hn) + "element is over '" + w[3] + "' but the graph is '" + g->name() + "'");
  }
  NamedElement out{w[1], {}};
  std::vector<Block> blocks;
  for (++pos; pos < lines.size(); ++pos) {
    const auto& [n, line] = lines[pos];
    if (line.rfind("block", 0) != 0) break;
    auto parts = split(std::string_view(line).substr(5), '|');
    if (parts.size() != 3) throw parse_error(at_line(n) + "expected 'block <mu> | <F> | <nu>'");
    try {
      Path mu = parse_path(*g, parts[0]);
      Path nu = parse_path(*g, parts[2]);
      blocks.push_back(make_block(*g, std::move(mu), parse_edge_list(*g, parts[1]), std::move(nu)));
    } catch (const Error& e) {
      throw Error(e.code(), at_line(n) + e.what());
    }
  }
  out.element = validate_element(Element(g, std::move(blocks)));
  return out;
}

}  // namespace

NamedElement parse_element(const GraphPtr& g, std::string_view text) {
  auto lines = content_lines(text);
  size_t pos = 0;
  NamedElement out = parse_element_lines(g, lines, pos);
  if (pos != lines.size()) throw parse_error(at_line(lines[pos].first) + "unexpected content");
  return out;
}

std::string format_block(const Graph& g, const Block& b) {
  return "block " + format_path(g, b.mu) + " | " + format_edge_list(g, b.punctures) + " | " +
         format_path(g, b.nu);
}

std::string format_element(const std::string& name, const Element& e) {
  const Graph& g = *e.graph();
  std::string out = "element " + name + " over " + g.name() + "\n";
  for (const Block& b : e.blocks()) out += format_block(g, b) + "\n";
  return out;
}

FactorizationFile parse_factorization(const GraphPtr& g, std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw parse_error("empty factorization file");
  FactorizationFile out;
  size_t count = 0;
  {
    auto w = words(lines[0].second);
    if (w.size() != 4 || w[0] != "product-of" || w[2] != "transpositions," ||
        (w[3] != "certified=true" && w[3] != "certified=false")) {
      throw parse_error(at_line(lines[0].first) +
                        "expected 'product-of <n> transpositions, certified=<bool>'");
    }
    try {
      count = std::stoul(w[1]);
    } catch (const std::exception&) {
      throw parse_error(at_line(lines[0].first) + "bad transposition count");
    }
    out.certified = w[3] == "certified=true";
  }
  size_t pos = 1;
  while (pos < lines.size()) out.transpositions.push_back(parse_element_lines(g, lines, pos));
  if (out.transpositions.size() != count) {
    throw parse_error("header announces " + std::to_string(count) + " transpositions, found " +
                      std::to_string(out.transpositions.size()));
  }
  return out;
}

std::string format_factorization(const FactorizationFile& f) {
  std::string out = "product-of " + std::to_string(f.transpositions.size()) +
                    " transpositions, certified=" + (f.certified ? "true" : "false") + "\n";
  for (const NamedElement& t : f.transpositions) out += format_element(t.name, t.element);
  return out;
}

}  // namespace ggt
