// Copyright 2026 The pfcond authors
//
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

#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pfcond/families.hpp"
#include "pfcond/io.hpp"
#include "pfcond/kasteleyn.hpp"
#include "pfcond/suites.hpp"

namespace pfcond::cli {

namespace detail {

inline WeightMode parse_weights(const std::string& text, std::uint64_t seed) {
  WeightMode mode;
  mode.seed = seed;
  if (text == "unit") return mode;
  if (text.rfind("random", 0) == 0) {
    mode.kind = WeightMode::random;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
      auto comma = text.find(',', colon);
      if (comma == std::string::npos)
        throw std::invalid_argument("--weights expects random:lo,hi");
      mode.lo = std::stoi(text.substr(colon + 1, comma - colon - 1));
      mode.hi = std::stoi(text.substr(comma + 1));
    }
    return mode;
  }
  throw std::invalid_argument("--weights expects unit or random:lo,hi");
}

struct LoadedInstance {
  OrderedGraph<Rat> graph;
  std::optional<Embedding> embedding;
};

/// Input comes either from a family specification or from files.
inline LoadedInstance load(const std::string& family,
                           const std::string& in_file,
                           const std::string& embedding_file,
                           const std::string& weights, std::uint64_t seed) {
  if (!family.empty()) {
    auto inst = generate(FamilySpec::parse(family), parse_weights(weights, seed));
    return {convert_graph<Rat>(inst.graph), inst.embedding};
  }
  if (in_file.empty())
    throw std::invalid_argument("need --family or --in");
  LoadedInstance li{read_graph_file<Rat>(in_file), std::nullopt};
  if (!embedding_file.empty())
    li.embedding = read_embedding_file(embedding_file, li.graph);
  return li;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return f;
}

}  // namespace detail

/// Entry point of the command line tool; argv without the program name.
/// Returns 0 on success / all PASS, 1 on FAIL, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact perfect-matching counts and Pfaffian identity checks"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  if (const char* env = std::getenv("PFCOND_SEED")) seed = std::strtoull(env, nullptr, 10);

  std::string family, in_file, embedding_file, orientation_file, out_file,
      embedding_out;
  std::string weights = "unit", method = "enumerate", mode = "faces";
  std::string identity;
  int trials = 100, size = 8;

  auto add_input = [&](CLI::App* cmd, bool with_embedding) {
    cmd->add_option("--family", family, "family spec, e.g. grid:4,4");
    cmd->add_option("--in", in_file, "graph file");
    if (with_embedding)
      cmd->add_option("--embedding", embedding_file, "embedding file");
    cmd->add_option("--weights", weights, "unit or random:lo,hi");
    cmd->add_option("--seed", seed, "random seed (default $PFCOND_SEED)");
  };

  auto* gen = app.add_subcommand("gen", "generate a family instance");
  add_input(gen, false);
  gen->add_option("--out", out_file, "graph file to write (default stdout)");
  gen->add_option("--embedding-out", embedding_out, "embedding file to write");

  auto* count = app.add_subcommand("count", "count perfect matchings");
  add_input(count, true);
  count->add_option("--method", method, "enumerate or pfaffian");

  std::string pf_method = "definition";
  auto* pf = app.add_subcommand("pf", "Pfaffian of a skew array file");
  pf->add_option("--in,--file", in_file, "skew array file")->required();
  pf->add_option("--method", pf_method, "definition or eliminate");

  auto* orient = app.add_subcommand("orient", "construct an orientation");
  add_input(orient, true);
  orient->add_option("--out", out_file, "orientation file (default stdout)");

  auto* vo = app.add_subcommand("verify-orientation",
                                "check orientation admissibility");
  add_input(vo, true);
  vo->add_option("--orientation", orientation_file,
                 "orientation file (default: construct one)");
  vo->add_option("--mode", mode, "faces, all or super");

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("--identity", identity, "identity name")->required();
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--seed", seed, "suite seed (default $PFCOND_SEED)");
  verify->add_option("--size", size, "ambient size for array identities");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (family.empty()) throw std::invalid_argument("gen needs --family");
      auto inst = generate(FamilySpec::parse(family),
                           detail::parse_weights(weights, seed));
      if (out_file.empty()) {
        write_graph(out, inst.graph);
      } else {
        auto f = detail::open_out(out_file);
        write_graph(f, inst.graph);
      }
      if (!embedding_out.empty()) {
        if (!inst.embedding)
          throw std::invalid_argument("family has no planar embedding");
        auto f = detail::open_out(embedding_out);
        write_embedding(f, inst.graph, *inst.embedding);
      }
      return 0;
    }

    if (count->parsed()) {
      auto li = detail::load(family, in_file, embedding_file, weights, seed);
      if (method == "enumerate") {
        out << "count " << count_matchings(li.graph) << '\n';
        out << "gf " << ring_str(matching_gf(li.graph)) << '\n';
      } else if (method == "pfaffian") {
        if (!li.embedding)
          throw std::invalid_argument(
              "pfaffian method needs an embedding (planar family or "
              "--embedding)");
        auto unit = li.graph;
        {
          std::vector<Edge<Rat>> es = li.graph.edges();
          for (auto& e : es) e.w = Rat(1);
          unit = OrderedGraph<Rat>(li.graph.vset(), std::move(es));
        }
        auto xi = kasteleyn_orient(li.graph, *li.embedding);
        out << "count " << ring_str(count_with_orientation(unit, xi)) << '\n';
        out << "gf " << ring_str(count_with_orientation(li.graph, xi)) << '\n';
      } else {
        throw std::invalid_argument("unknown method " + method);
      }
      return 0;
    }

    if (pf->parsed()) {
      auto a = read_skew_file<Rat>(in_file);
      if (pf_method == "definition") {
        out << ring_str(pf_definition(a)) << '\n';
      } else if (pf_method == "eliminate") {
        out << ring_str(pf_eliminate(a)) << '\n';
      } else {
        throw std::invalid_argument("unknown method " + pf_method);
      }
      return 0;
    }

    if (orient->parsed()) {
      auto li = detail::load(family, in_file, embedding_file, weights, seed);
      if (!li.embedding)
        throw std::invalid_argument("orient needs an embedding");
      auto xi = kasteleyn_orient(li.graph, *li.embedding);
      if (out_file.empty()) {
        write_orientation(out, li.graph, xi);
      } else {
        auto f = detail::open_out(out_file);
        write_orientation(f, li.graph, xi);
      }
      return 0;
    }

    if (vo->parsed()) {
      auto li = detail::load(family, in_file, embedding_file, weights, seed);
      if (!li.embedding)
        throw std::invalid_argument("verify-orientation needs an embedding");
      Orientation xi = orientation_file.empty()
                           ? kasteleyn_orient(li.graph, *li.embedding)
                           : read_orientation_file(orientation_file, li.graph);
      AdmissibilityMode m;
      if (mode == "faces")
        m = AdmissibilityMode::faces;
      else if (mode == "all")
        m = AdmissibilityMode::all_cycles;
      else if (mode == "super")
        m = AdmissibilityMode::superposition_cycles;
      else
        throw std::invalid_argument("unknown mode " + mode);
      auto rep = verify_admissible(li.graph, *li.embedding, xi, m);
      for (const auto& v : rep.violations) out << "VIOLATION " << v << '\n';
      out << (rep.ok ? "OK" : "FAIL") << " cycles-checked "
          << rep.cycles_checked << '\n';
      return rep.ok ? 0 : 1;
    }

    if (verify->parsed()) {
      auto res = run_identity_suite(identity, trials, seed, size, out);
      return res.passed == res.total ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pfcond::cli
