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

// ggt: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 usage, 2 invalid input, 3 mathematical refusal
// (the error name is the first line of stdout).

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ggt/ggt.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitRefused = 3;

// Thrown to unwind with an exit code after the diagnostics are printed.
struct Exit {
  int code;
};

struct GraphDeleter {
  void operator()(ggt_graph* g) const { ggt_graph_free(g); }
};
struct ElementDeleter {
  void operator()(ggt_element* e) const { ggt_element_free(e); }
};
struct FactorizationDeleter {
  void operator()(ggt_factorization* f) const { ggt_factorization_free(f); }
};
using GraphHandle = std::unique_ptr<ggt_graph, GraphDeleter>;
using ElementHandle = std::unique_ptr<ggt_element, ElementDeleter>;
using FactorizationHandle = std::unique_ptr<ggt_factorization, FactorizationDeleter>;

std::string error_text() {
  return std::string(ggt_last_error_name()) + "\n" + ggt_last_error_message() + "\n";
}

void check(ggt_status s) {
  switch (s) {
    case GGT_OK:
      return;
    case GGT_REFUSED:
      std::cout << error_text();
      throw Exit{kExitRefused};
    case GGT_USAGE:
      std::cerr << error_text();
      throw Exit{kExitUsage};
    default:
      std::cerr << error_text();
      throw Exit{kExitInvalid};
  }
}

std::string take(char* s) {
  std::string out(s);
  ggt_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "ParseError\ncannot read " << path << "\n";
    throw Exit{kExitInvalid};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "InvalidArgument\ncannot write " << path << "\n";
    throw Exit{kExitUsage};
  }
}

GraphHandle load_graph(const std::string& path) {
  ggt_graph* g = nullptr;
  const std::string stem = std::filesystem::path(path).stem().string();
  check(ggt_graph_parse(read_file(path).c_str(), stem.c_str(), &g));
  return GraphHandle(g);
}

ElementHandle load_element(const ggt_graph* g, const std::string& path) {
  ggt_element* e = nullptr;
  check(ggt_element_parse(g, read_file(path).c_str(), &e));
  return ElementHandle(e);
}

struct Options {
  std::string graph;
  std::vector<std::string> inputs;
  std::string output;
  size_t max_depth = 16;
  size_t max_chain = 0;
};

int run_verify(const Options& o) {
  GraphHandle g = load_graph(o.graph);
  ElementHandle e = load_element(g.get(), o.inputs[0]);
  const std::vector<std::string> files(o.inputs.begin() + 1, o.inputs.end());
  std::vector<FactorizationHandle> fs;
  for (const std::string& path : files) {
    ggt_factorization* f = nullptr;
    check(ggt_factorization_parse(g.get(), read_file(path).c_str(), &f));
    fs.emplace_back(f);
  }
  // Jobs are independent; results land in per-file slots so the report order
  // does not depend on scheduling.
  std::vector<int> certified(files.size(), 0);
  std::vector<ggt_status> status(files.size(), GGT_OK);
  std::vector<std::string> errors(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < files.size(); i = next++) {
      status[i] = ggt_verify(e.get(), fs[i].get(), &certified[i]);
      if (status[i] != GGT_OK) errors[i] = error_text();
    }
  };
  const size_t n_threads =
      std::min<size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (size_t i = 0; i < files.size(); ++i) {
    if (status[i] != GGT_OK) {
      std::cerr << errors[i];
      return status[i] == GGT_REFUSED ? kExitRefused : kExitInvalid;
    }
  }
  std::string report;
  bool all = true;
  for (size_t i = 0; i < files.size(); ++i) {
    all = all && certified[i];
    if (files.size() > 1) report += files[i] + ": ";
    report += std::string("certified=") + (certified[i] ? "true" : "false") + "\n";
  }
  if (!all) {
    std::cout << "NotEquivalent\n" << report;
    return kExitRefused;
  }
  std::cout << report;
  return 0;
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "verify") return run_verify(o);
  GraphHandle g = load_graph(o.graph);
  char* text = nullptr;
  if (cmd == "check") {
    check(ggt_graph_check(g.get(), &text));
    std::cout << take(text);
  } else if (cmd == "homology") {
    check(ggt_graph_homology(g.get(), &text));
    std::cout << take(text);
  } else if (cmd == "move-t" || cmd == "move-s") {
    ggt_graph* moved = nullptr;
    check(cmd == "move-t" ? ggt_graph_move_t(g.get(), o.inputs[0].c_str(), &moved)
                          : ggt_graph_move_s(g.get(), o.inputs[0].c_str(), &moved));
    GraphHandle h(moved);
    check(ggt_graph_format(h.get(), &text));
    write_output(o.output, take(text));
  } else if (cmd == "double") {
    check(ggt_graph_double(g.get(), o.inputs[0].c_str(), &text));
    std::cout << take(text);
  } else {
    ElementHandle e = load_element(g.get(), o.inputs[0]);
    if (cmd == "index") {
      int zero = 0;
      check(ggt_element_index(e.get(), o.max_chain, &zero, &text));
      std::cout << take(text);
    } else if (cmd == "partition") {
      check(ggt_element_partition(e.get(), &text));
      std::cout << take(text);
    } else if (cmd == "invert") {
      ggt_element* inv = nullptr;
      check(ggt_element_invert(e.get(), &inv));
      ElementHandle h(inv);
      check(ggt_element_format(h.get(), nullptr, &text));
      write_output(o.output, take(text));
    } else if (cmd == "compose") {
      ElementHandle rhs = load_element(g.get(), o.inputs[1]);
      ggt_element* c = nullptr;
      check(ggt_element_compose(e.get(), rhs.get(), &c));
      ElementHandle h(c);
      check(ggt_element_format(h.get(), nullptr, &text));
      write_output(o.output, take(text));
    } else if (cmd == "factor") {
      ggt_factorization* f = nullptr;
      check(ggt_factor(e.get(), o.max_depth, o.max_chain, &f));
      FactorizationHandle h(f);
      check(ggt_factorization_format(h.get(), &text));
      const std::string out = take(text);
      write_output(o.output, out);
      if (!o.output.empty()) std::cout << out.substr(0, out.find('\n') + 1);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in topological full groups of graph groupoids"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> positional;
    bool output, depth, chain, many;
  };
  const std::vector<Spec> specs{
      {"check", "criteria flags of a graph", {}, false, false, false, false},
      {"homology", "H0 and H1 of the graph groupoid", {}, false, false, false, false},
      {"index", "index of an element", {"element"}, false, false, true, false},
      {"compose", "product a o b of two elements", {"a", "b"}, true, false, false, false},
      {"invert", "inverse of an element", {"element"}, true, false, false, false},
      {"partition", "graded partition S(k) of an element", {"element"}, false, false, false, false},
      {"factor", "factor an index-zero element into transpositions", {"element"}, true, true, true,
       false},
      {"verify", "recompose factorizations and compare", {"element"}, false, false, false, true},
      {"move-t", "add an edge family at an infinite emitter", {"vertex"}, true, false, false, false},
      {"move-s", "delete a regular source", {"vertex"}, true, false, false, false},
      {"double", "doubling bisections of a clopen set", {"clopen"}, false, false, false, false},
  };
  std::vector<std::vector<std::string>> slots(specs.size());
  std::vector<std::vector<std::string>> rest(specs.size());
  for (size_t i = 0; i < specs.size(); ++i) {
    const Spec& s = specs[i];
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("graph", o.graph, "graph file")->required();
    slots[i].resize(s.positional.size());
    for (size_t k = 0; k < s.positional.size(); ++k) {
      sub->add_option(s.positional[k], slots[i][k])->required();
    }
    if (s.many) sub->add_option("factors", rest[i], "factorization files")->required();
    if (s.output) sub->add_option("-o,--output", o.output, "write the result to a file");
    if (s.depth) sub->add_option("--max-depth", o.max_depth, "matching depth cap")->check(CLI::PositiveNumber);
    if (s.chain) sub->add_option("--max-chain", o.max_chain, "eventual kernel step cap (0: 4 x vertices)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (size_t i = 0; i < specs.size(); ++i) {
    if (!app.got_subcommand(specs[i].name)) continue;
    o.inputs = slots[i];
    o.inputs.insert(o.inputs.end(), rest[i].begin(), rest[i].end());
    try {
      return run(specs[i].name, o);
    } catch (const Exit& e) {
      return e.code;
    }
  }
  return kExitUsage;
}
