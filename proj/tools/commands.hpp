#pragma once

// Command implementations for the gaingraph tool. Exit codes: 0 success,
// 1 negative result (not equivalent, a failed check), 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaingraph/gaingraph.hpp"

namespace gaingraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline GainGraph load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// "mu:K", "circle" or "sign".
inline std::optional<GroupSpec> parse_group_option(const std::string& text, UnitGain involution) {
  if (text == "circle") return GroupSpec::circle(involution);
  if (text == "sign") return GroupSpec::sign(involution);
  if (text.rfind("mu:", 0) == 0) {
    const std::string k = text.substr(3);
    if (k.empty() || k.size() > 12 || k.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const auto order = std::stoll(k);
    if (order < 1) return std::nullopt;
    return GroupSpec::roots_of_unity(order, involution);
  }
  return std::nullopt;
}

inline std::string format_walk(const Walk& w) {
  std::string s;
  for (std::size_t k = 0; k < w.vertices.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w.vertices[k] + 1);
  }
  return s;
}

inline std::string format_eigenvalue(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

inline int cmd_info(const GainGraph& phi, std::ostream& out) {
  out << "vertices " << phi.vertex_count() << '\n';
  out << "edges " << phi.edge_count() << '\n';
  out << "group " << to_string(phi.spec()) << '\n';
  out << "involution " << to_string(phi.spec().involution) << '\n';
  const SpanningForest forest = spanning_forest(phi.graph());
  std::vector<EdgeId> cotree;
  for (EdgeId e = 0; e < phi.edge_count(); ++e)
    if (!forest.in_forest[e]) cotree.push_back(e);
  out << "fundamental-cycles " << cotree.size() << '\n';
  for (EdgeId e : cotree) {
    const Edge& ed = phi.graph().edge(e);
    const Walk c = fundamental_cycle(phi.graph(), forest, e);
    out << "cycle " << ed.lo + 1 << ' ' << ed.hi + 1 << ": " << format_walk(c) << " gain "
        << to_string(gain_of_walk(phi, c)) << '\n';
  }
  return kExitOk;
}

inline int cmd_equiv(const GainGraph& a, const GainGraph& b, std::ostream& out) {
  if (!(a.graph() == b.graph())) throw InputError("the two documents have different underlying graphs");
  if (!a.spec().same_family(b.spec())) throw InputError("the two documents use different gain groups");
  const SwitchingDecision d = find_switching(a, b);
  if (d) {
    out << "equivalent\n";
    for (Vertex v = 0; v < d.zeta->values.size(); ++v) out << "zeta " << v + 1 << ' ' << to_string((*d.zeta)(v)) << '\n';
    return kExitOk;
  }
  out << "not-equivalent\n";
  out << "witness " << format_walk(d.witness->cycle) << '\n';
  out << "gains " << to_string(d.witness->gain_first) << ' ' << to_string(d.witness->gain_second) << '\n';
  return kExitNegative;
}

inline int cmd_verify(const GainGraph& phi, std::uint64_t seed, std::ostream& out) {
  bool all = true;
  for (const CheckResult& r : verify_instance(phi, seed)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? kExitOk : kExitNegative;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex unit gain graphs: switching, line graphs and spectra", "gaingraph"};
  app.require_subcommand(1);

  std::string file, file2;
  std::optional<std::uint64_t> seed;
  bool line = false;

  auto* info = app.add_subcommand("info", "Sizes, group and fundamental-cycle gains");
  info->add_option("FILE", file)->required();
  auto* linegraph = app.add_subcommand("linegraph", "Line-graph representative as a gaingraph document");
  linegraph->add_option("FILE", file)->required();
  auto* adjacency = app.add_subcommand("adjacency", "Adjacency matrix");
  adjacency->add_option("FILE", file)->required();
  auto* incidence = app.add_subcommand("incidence", "Incidence matrix of an orientation");
  incidence->add_option("FILE", file)->required();
  incidence->add_option("--seed", seed, "Random orientation seed (default orientation otherwise)");
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues, ascending");
  spectrum->add_option("FILE", file)->required();
  spectrum->add_flag("--line", line, "Use the line graph");
  auto* equiv = app.add_subcommand("equiv", "Decide switching equivalence");
  equiv->add_option("FILE1", file)->required();
  equiv->add_option("FILE2", file2)->required();
  auto* verify = app.add_subcommand("verify", "Check the line-graph identities on one instance");
  verify->add_option("FILE", file)->required();
  verify->add_option("--seed", seed, "Orientation and switching seed (default 0)");

  std::size_t vertices = 0, edges = 0;
  std::string group = "mu:4", involution = "1/2";
  std::uint64_t random_seed = 0;
  auto* random = app.add_subcommand("random", "Emit a random gaingraph document");
  random->add_option("--vertices", vertices)->required();
  random->add_option("--edges", edges)->required();
  random->add_option("--group", group, "mu:K, circle or sign")->capture_default_str();
  random->add_option("--involution", involution, "0 or 1/2")->capture_default_str();
  random->add_option("--seed", random_seed)->capture_default_str();

  std::vector<std::string> argv_store{"gaingraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (info->parsed()) return cmd_info(load_document(file), out);
    if (linegraph->parsed()) {
      out << serialize(line_graph_class(load_document(file)));
      return kExitOk;
    }
    if (adjacency->parsed()) {
      write_matrix(out, adjacency_matrix(load_document(file)));
      return kExitOk;
    }
    if (incidence->parsed()) {
      const GainGraph phi = load_document(file);
      write_matrix(out, incidence_matrix(seed ? random_orientation(phi, *seed) : default_orientation(phi)));
      return kExitOk;
    }
    if (spectrum->parsed()) {
      const GainGraph phi = load_document(file);
      for (double x : (line ? line_spectrum(phi) : adjacency_spectrum(phi)).eigenvalues)
        out << format_eigenvalue(x) << '\n';
      return kExitOk;
    }
    if (equiv->parsed()) return cmd_equiv(load_document(file), load_document(file2), out);
    if (verify->parsed()) return cmd_verify(load_document(file), seed.value_or(0), out);
    if (random->parsed()) {
      const auto s = parse_gain(involution);
      if (!s || (!s->is_identity() && *s != UnitGain::half_turn()))
        throw InputError("--involution must be 0 or 1/2");
      const auto spec = parse_group_option(group, *s);
      if (!spec) throw InputError("--group must be mu:K, circle or sign");
      if (auto bad = validate_spec(*spec)) throw InputError(*bad);
      if (edges > vertices * (vertices > 0 ? vertices - 1 : 0) / 2)
        throw InputError("--edges exceeds the number of vertex pairs");
      Rng rng(random_seed);
      out << serialize(random_gain_graph(vertices, edges, *spec, rng));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace gaingraph::cli
