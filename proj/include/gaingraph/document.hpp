#pragma once

// The gaingraph v1 text format:
//
//     gaingraph v1
//     group mu 4          # or: group circle | group sign
//     involution 1/2
//     vertices 3
//     edge 1 2 1/4        # 1-based endpoints, gain of the direction 1 -> 2
//     edge 2 3 0
//
// Blank lines and '#' comments are ignored. The header, group, involution and
// vertices directives come first, in that order.

#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaingraph/gain.hpp"
#include "gaingraph/graph.hpp"

namespace gaingraph {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

inline std::string serialize(const GainGraph& phi) {
  std::ostringstream os;
  os << "gaingraph v1\n";
  os << "group " << to_string(phi.spec()) << '\n';
  os << "involution " << to_string(phi.spec().involution) << '\n';
  os << "vertices " << phi.vertex_count() << '\n';
  for (EdgeId e = 0; e < phi.edge_count(); ++e) {
    const Edge& ed = phi.graph().edge(e);
    os << "edge " << ed.lo + 1 << ' ' << ed.hi + 1 << ' ' << to_string(phi.stored_gain(e)) << '\n';
  }
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::istringstream is{std::string(line)};
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

inline std::size_t parse_count(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, std::string("bad ") + what + " \"" + s + "\"");
  return std::stoull(s);
}

}  // namespace detail

inline GainGraph parse_document(std::string_view text) {
  enum class Stage { header, group, involution, vertices, edges } stage = Stage::header;
  GroupSpec spec;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<UnitGain> gains;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const auto w = detail::split_words(raw);
    if (w.empty()) continue;
    const std::string& head = w[0];

    switch (stage) {
      case Stage::header:
        if (w.size() != 2 || head != "gaingraph" || w[1] != "v1")
          throw ParseError(lineno, "expected header \"gaingraph v1\"");
        stage = Stage::group;
        continue;
      case Stage::group:
        if (head != "group") throw ParseError(lineno, "expected \"group\" directive, got \"" + head + "\"");
        if (w.size() == 2 && w[1] == "circle") {
          spec.family = GroupFamily::circle;
        } else if (w.size() == 2 && w[1] == "sign") {
          spec.family = GroupFamily::sign;
        } else if (w.size() == 3 && w[1] == "mu") {
          spec.family = GroupFamily::roots_of_unity;
          const std::size_t order = detail::parse_count(w[2], lineno, "group order");
          if (order == 0) throw ParseError(lineno, "group order must be positive");
          spec.order = static_cast<std::int64_t>(order);
        } else {
          throw ParseError(lineno, "unknown group; expected circle, sign or mu K");
        }
        stage = Stage::involution;
        continue;
      case Stage::involution: {
        if (head != "involution" || w.size() != 2)
          throw ParseError(lineno, "expected \"involution G\" directive");
        auto s = parse_gain(w[1]);
        if (!s) throw ParseError(lineno, "bad fraction \"" + w[1] + "\"");
        spec.involution = *s;
        if (auto bad = validate_spec(spec)) throw ParseError(lineno, *bad);
        stage = Stage::vertices;
        continue;
      }
      case Stage::vertices:
        if (head != "vertices" || w.size() != 2) throw ParseError(lineno, "expected \"vertices N\" directive");
        n = detail::parse_count(w[1], lineno, "vertex count");
        stage = Stage::edges;
        continue;
      case Stage::edges: {
        if (head != "edge") throw ParseError(lineno, "unknown directive \"" + head + "\"");
        if (w.size() != 4) throw ParseError(lineno, "expected \"edge I J GAIN\"");
        const std::size_t i = detail::parse_count(w[1], lineno, "vertex label");
        const std::size_t j = detail::parse_count(w[2], lineno, "vertex label");
        if (i < 1 || i > n || j < 1 || j > n)
          throw ParseError(lineno, "vertex label out of range 1.." + std::to_string(n));
        if (i == j) throw ParseError(lineno, "loop at vertex " + std::to_string(i));
        auto g = parse_gain(w[3]);
        if (!g) throw ParseError(lineno, "bad fraction \"" + w[3] + "\"");
        if (!spec.contains(*g)) throw ParseError(lineno, "gain " + w[3] + " is not in group " + to_string(spec));
        const Vertex a = i - 1, b = j - 1;
        const std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second)
          throw ParseError(lineno, "duplicate edge " + std::to_string(key.first + 1) + " " + std::to_string(key.second + 1));
        pairs.push_back(key);
        gains.push_back(a < b ? *g : inv(*g));
        continue;
      }
    }
  }
  if (stage != Stage::edges) throw ParseError(lineno, "document ends before the vertices directive");
  return GainGraph(SimpleGraph(n, pairs), spec, std::move(gains));
}

}  // namespace gaingraph
