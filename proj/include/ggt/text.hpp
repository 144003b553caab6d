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

// Line-oriented text formats. Every parser has a matching printer and
// parse(print(x)) == x.
//
//   graph file:    [graph <name>] / vertex <v> / edge <e> <s> <r> / iedges <L> <s> <r>
//   path:          @v  or  e1.e2.e3  (family members as L#k)
//   piece:         Z(<path>)  or  Z(<path> \ f1,f2)
//   clopen:        piece + piece + ...   or  0 for the empty set
//   element file:  element <name> over <graph> / block <mu> | <punctures or -> | <nu>
//   factorization: product-of <n> transpositions, certified=<bool>, then n
//                  element sections
//
// Text after a '#' that starts a line or follows whitespace is a comment.

#ifndef GGT_TEXT_HPP_
#define GGT_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ggt/fullgroup.hpp"
#include "ggt/graph.hpp"
#include "ggt/path.hpp"
#include "ggt/pathspace.hpp"

namespace ggt {

// `fallback_name` names the graph when no `graph` line is present.
GraphPtr parse_graph(std::string_view text, const std::string& fallback_name);
std::string format_graph(const Graph& g);

Path parse_path(const Graph& g, std::string_view text);
std::string format_path(const Graph& g, const Path& p);

Piece parse_piece(const Graph& g, std::string_view text);
std::string format_piece(const Graph& g, const Piece& p);

Clopen parse_clopen(const GraphPtr& g, std::string_view text);
std::string format_clopen(const Clopen& c);
std::string format_pieces(const Graph& g, const std::vector<Piece>& ps);

// Point syntax: <prefix> for a finite path, or <prefix> ( <cycle> ) for the
// prefix followed by the cycle repeated forever.
BoundaryPoint parse_point(const Graph& g, std::string_view text);
std::string format_point(const Graph& g, const BoundaryPoint& x);

struct NamedElement {
  std::string name;
  Element element;
};

// "block <mu> | <punctures or -> | <nu>".
std::string format_block(const Graph& g, const Block& b);

// Throws GraphMismatch when the header names a different graph.
NamedElement parse_element(const GraphPtr& g, std::string_view text);
std::string format_element(const std::string& name, const Element& e);

struct FactorizationFile {
  bool certified = false;
  std::vector<NamedElement> transpositions;
};

FactorizationFile parse_factorization(const GraphPtr& g, std::string_view text);
std::string format_factorization(const FactorizationFile& f);

}  // namespace ggt

#endif  // GGT_TEXT_HPP_
