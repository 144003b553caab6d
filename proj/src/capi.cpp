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

#include "ggt/ggt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ggt/classgroups.hpp"
#include "ggt/error.hpp"
#include "ggt/factor.hpp"
#include "ggt/fullgroup.hpp"
#include "ggt/graphcore.hpp"
#include "ggt/text.hpp"

struct ggt_graph {
  ggt::GraphPtr graph;
};

struct ggt_element {
  ggt::NamedElement value;
};

struct ggt_factorization {
  ggt::GraphPtr graph;
  ggt::FactorizationFile value;
};

namespace {

thread_local std::string last_name;
thread_local std::string last_message;

ggt_status fail(ggt_status s, const char* name, const std::string& message) {
  last_name = name;
  last_message = message;
  return s;
}

ggt_status usage(const char* what) { return fail(GGT_USAGE, "InvalidArgument", what); }

// Runs fn, translating exceptions into statuses.
template <typename Fn>
ggt_status guarded(Fn&& fn) {
  last_name.clear();
  last_message.clear();
  try {
    fn();
    return GGT_OK;
  } catch (const ggt::Error& e) {
    ggt_status s = GGT_INVALID;
    if (ggt::is_mathematical_refusal(e.code())) s = GGT_REFUSED;
    if (e.code() == ggt::ErrorCode::kInternal) s = GGT_INTERNAL;
    return fail(s, e.name(), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GGT_INTERNAL, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(GGT_INTERNAL, "Internal", e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ggt_element* wrap(std::string name, ggt::Element e) {
  return new ggt_element{ggt::NamedElement{std::move(name), std::move(e)}};
}

}  // namespace

extern "C" {

const char* ggt_last_error_name(void) { return last_name.c_str(); }
const char* ggt_last_error_message(void) { return last_message.c_str(); }

void ggt_string_free(char* s) { std::free(s); }

ggt_status ggt_graph_parse(const char* text, const char* fallback_name, ggt_graph** out) {
  if (text == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    *out = new ggt_graph{ggt::parse_graph(text, fallback_name ? fallback_name : "graph")};
  });
}

void ggt_graph_free(ggt_graph* g) { delete g; }

ggt_status ggt_graph_format(const ggt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = dup(ggt::format_graph(*g->graph)); });
}

ggt_status ggt_graph_name(const ggt_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = dup(g->graph->name()); });
}

ggt_status ggt_graph_check(const ggt_graph* g, char** report) {
  if (g == nullptr || report == nullptr) return usage("null argument");
  return guarded([&] { *report = dup(ggt::validate(*g->graph).to_string()); });
}

ggt_status ggt_graph_homology(const ggt_graph* g, char** report) {
  if (g == nullptr || report == nullptr) return usage("null argument");
  return guarded([&] {
    const ggt::Graph& gr = *g->graph;
    const ggt::HomologyReport r =
        ggt::validate(gr).ah_criteria ? ggt::abelianization_report(gr) : ggt::homology(gr);
    *report = dup(r.to_string(gr));
  });
}

ggt_status ggt_graph_move_t(const ggt_graph* g, const char* vertex, ggt_graph** out) {
  if (g == nullptr || vertex == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    *out = new ggt_graph{ggt::move_t(*g->graph, g->graph->vertex(vertex))};
  });
}

ggt_status ggt_graph_move_s(const ggt_graph* g, const char* vertex, ggt_graph** out) {
  if (g == nullptr || vertex == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    *out = new ggt_graph{ggt::move_s(*g->graph, g->graph->vertex(vertex))};
  });
}

ggt_status ggt_graph_double(const ggt_graph* g, const char* clopen, char** report) {
  if (g == nullptr || clopen == nullptr || report == nullptr) return usage("null argument");
  return guarded([&] {
    const ggt::Clopen a = ggt::parse_clopen(g->graph, clopen);
    const auto [u, v] = ggt::doubling_bisections(g->graph, a);
    std::string text = "U\n";
    for (const ggt::Block& b : u) text += ggt::format_block(*g->graph, b) + "\n";
    text += "V\n";
    for (const ggt::Block& b : v) text += ggt::format_block(*g->graph, b) + "\n";
    *report = dup(text);
  });
}

ggt_status ggt_element_parse(const ggt_graph* g, const char* text, ggt_element** out) {
  if (g == nullptr || text == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = new ggt_element{ggt::parse_element(g->graph, text)}; });
}

void ggt_element_free(ggt_element* e) { delete e; }

ggt_status ggt_element_format(const ggt_element* e, const char* name, char** out) {
  if (e == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    *out = dup(ggt::format_element(name ? name : e->value.name, e->value.element));
  });
}

ggt_status ggt_element_name(const ggt_element* e, char** out) {
  if (e == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = dup(e->value.name); });
}

ggt_status ggt_element_is_identity(const ggt_element* e, int* out) {
  if (e == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = e->value.element.is_identity() ? 1 : 0; });
}

ggt_status ggt_element_equal(const ggt_element* a, const ggt_element* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = a->value.element == b->value.element ? 1 : 0; });
}

ggt_status ggt_element_compose(const ggt_element* a, const ggt_element* b, ggt_element** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    *out = wrap(a->value.name + "_" + b->value.name, ggt::compose(a->value.element, b->value.element));
  });
}

ggt_status ggt_element_invert(const ggt_element* e, ggt_element** out) {
  if (e == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = wrap(e->value.name + "_inv", ggt::inverse(e->value.element)); });
}

ggt_status ggt_element_partition(const ggt_element* e, char** report) {
  if (e == nullptr || report == nullptr) return usage("null argument");
  return guarded([&] {
    std::string text;
    for (const auto& [k, c] : ggt::graded_partition(e->value.element).parts) {
      text += "S(" + std::to_string(k) + ") = " + ggt::format_clopen(c) + "\n";
    }
    *report = dup(text);
  });
}

ggt_status ggt_element_index(const ggt_element* e, size_t max_chain, int* is_zero, char** report) {
  if (e == nullptr || is_zero == nullptr || report == nullptr) return usage("null argument");
  return guarded([&] {
    const ggt::ClassContext ctx(e->value.element.graph(), max_chain);
    const ggt::IndexResult r = ggt::index(ctx, e->value.element);
    *is_zero = r.zero ? 1 : 0;
    *report = dup("index = " + ggt::format_class(*ctx.graph(), r.c) + "\nzero = " +
                  (r.zero ? "true" : "false") + "\n");
  });
}

ggt_status ggt_factor(const ggt_element* e, size_t max_depth, size_t max_chain,
                      ggt_factorization** out) {
  if (e == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    const ggt::ClassContext ctx(e->value.element.graph(), max_chain);
    const ggt::Factorization f =
        ggt::factor(ctx, e->value.element, max_depth == 0 ? ggt::kDefaultMaxDepth : max_depth);
    auto* result = new ggt_factorization{e->value.element.graph(), {}};
    result->value.certified = f.certified;
    for (size_t i = 0; i < f.transpositions.size(); ++i) {
      result->value.transpositions.push_back({"t" + std::to_string(i + 1), f.transpositions[i]});
    }
    *out = result;
  });
}

ggt_status ggt_factorization_parse(const ggt_graph* g, const char* text, ggt_factorization** out) {
  if (g == nullptr || text == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] {
    *out = new ggt_factorization{g->graph, ggt::parse_factorization(g->graph, text)};
  });
}

void ggt_factorization_free(ggt_factorization* f) { delete f; }

ggt_status ggt_factorization_format(const ggt_factorization* f, char** out) {
  if (f == nullptr || out == nullptr) return usage("null argument");
  return guarded([&] { *out = dup(ggt::format_factorization(f->value)); });
}

ggt_status ggt_factorization_size(const ggt_factorization* f, size_t* out) {
  if (f == nullptr || out == nullptr) return usage("null argument");
  *out = f->value.transpositions.size();
  return GGT_OK;
}

ggt_status ggt_factorization_get(const ggt_factorization* f, size_t i, ggt_element** out) {
  if (f == nullptr || out == nullptr) return usage("null argument");
  if (i >= f->value.transpositions.size()) return usage("factor index out of range");
  return guarded([&] { *out = new ggt_element{f->value.transpositions[i]}; });
}

ggt_status ggt_verify(const ggt_element* e, const ggt_factorization* f, int* certified) {
  if (e == nullptr || f == nullptr || certified == nullptr) return usage("null argument");
  return guarded([&] {
    std::vector<ggt::Element> fs;
    for (const ggt::NamedElement& t : f->value.transpositions) {
      if (!(*t.element.graph() == *e->value.element.graph())) {
        throw ggt::Error(ggt::ErrorCode::kGraphMismatch, "factor over another graph");
      }
      fs.push_back(t.element);
    }
    bool ok = ggt::verify_product(e->value.element, fs);
    for (const ggt::Element& t : fs) {
      if (t.is_identity() || !ggt::compose(t, t).is_identity()) ok = false;
    }
    *certified = ok ? 1 : 0;
  });
}

}  // extern "C"
