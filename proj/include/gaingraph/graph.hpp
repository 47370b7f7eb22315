#pragma once

// Simple graphs, gain graphs, walks and switching.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaingraph/gain.hpp"

namespace gaingraph {

using Vertex = std::size_t;
using EdgeId = std::size_t;

/// An undirected edge stored with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  Vertex other(Vertex v) const { return v == lo ? hi : lo; }
  bool has(Vertex v) const noexcept { return v == lo || v == hi; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class SimpleGraph {
public:
  SimpleGraph() = default;

  /// Edge order in `pairs` fixes the edge indices. Throws on loops, parallel
  /// edges and out-of-range endpoints.
  SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n), incident_(n) {
    std::set<Edge> seen;
    edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n)
        throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} has an endpoint outside 0.." + std::to_string(n ? n - 1 : 0));
      if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
      const Edge e{std::min(a, b), std::max(a, b)};
      if (!seen.insert(e).second)
        throw std::invalid_argument("parallel edge {" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}");
      incident_[e.lo].push_back(edges_.size());
      incident_[e.hi].push_back(edges_.size());
      edges_.push_back(e);
    }
  }

  SimpleGraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : SimpleGraph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size())) {}

  explicit SimpleGraph(std::size_t n) : n_(n), incident_(n) {}

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_.at(v); }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return std::nullopt;
    for (EdgeId e : incident_[a])
      if (edges_[e].other(a) == b) return e;
    return std::nullopt;
  }

  friend bool operator==(const SimpleGraph& x, const SimpleGraph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// A simple graph with a gain on each edge. Only the lo -> hi direction is
/// stored; the reverse gain is always computed as the inverse.
class GainGraph {
public:
  GainGraph() = default;

  GainGraph(SimpleGraph graph, GroupSpec spec, std::vector<UnitGain> gains)
      : graph_(std::move(graph)), spec_(spec), gains_(std::move(gains)) {
    if (auto bad = validate_spec(spec_)) throw std::invalid_argument(*bad);
    if (gains_.size() != graph_.edge_count())
      throw std::invalid_argument("expected " + std::to_string(graph_.edge_count()) + " gains, got " +
                                  std::to_string(gains_.size()));
    for (EdgeId e = 0; e < gains_.size(); ++e)
      if (!spec_.contains(gains_[e]))
        throw std::invalid_argument("gain " + to_string(gains_[e]) + " on edge " + std::to_string(e) +
                                    " is not in group " + to_string(spec_));
  }

  /// Every edge gets the identity gain.
  GainGraph(SimpleGraph graph, GroupSpec spec)
      : GainGraph(graph, spec, std::vector<UnitGain>(graph.edge_count())) {}

  const SimpleGraph& graph() const noexcept { return graph_; }
  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  /// Gain of the canonical direction lo -> hi.
  const UnitGain& stored_gain(EdgeId e) const { return gains_.at(e); }
  const std::vector<UnitGain>& stored_gains() const noexcept { return gains_; }

  /// Gain of edge e traversed starting at `from`. The single place where the
  /// reverse direction is resolved.
  UnitGain gain(EdgeId e, Vertex from) const {
    const Edge& ed = graph_.edge(e);
    if (from == ed.lo) return gains_[e];
    if (from == ed.hi) return inv(gains_[e]);
    throw std::invalid_argument("vertex " + std::to_string(from) + " is not an endpoint of edge " + std::to_string(e));
  }

  friend bool operator==(const GainGraph&, const GainGraph&) = default;

private:
  SimpleGraph graph_;
  GroupSpec spec_;
  std::vector<UnitGain> gains_;
};

struct SwitchingFunction {
  std::vector<UnitGain> values;

  static SwitchingFunction identity(std::size_t n) { return {std::vector<UnitGain>(n)}; }
  const UnitGain& operator()(Vertex v) const { return values.at(v); }

  SwitchingFunction inverse() const {
    SwitchingFunction r{values};
    for (auto& g : r.values) g = inv(g);
    return r;
  }

  /// Switching by this and then by `next` equals switching by the product.
  SwitchingFunction then(const SwitchingFunction& next) const {
    SwitchingFunction r{values};
    for (std::size_t v = 0; v < r.values.size(); ++v) r.values[v] = mul(r.values[v], next.values.at(v));
    return r;
  }

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// Alternating sequence v0 e0 v1 e1 ... vk.
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  static Walk at(Vertex v) { return {{v}, {}}; }
  Walk& step(EdgeId e, Vertex to) {
    edges.push_back(e);
    vertices.push_back(to);
    return *this;
  }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

class WalkError : public std::invalid_argument {
public:
  WalkError(std::size_t position, const std::string& what)
      : std::invalid_argument("walk step " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Ordered product of directed-edge gains along w.
inline UnitGain gain_of_walk(const GainGraph& phi, const Walk& w) {
  if (w.vertices.size() != w.edges.size() + 1) throw WalkError(0, "vertex/edge counts do not alternate");
  if (w.vertices.front() >= phi.vertex_count()) throw WalkError(0, "start vertex out of range");
  UnitGain g;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const EdgeId e = w.edges[k];
    if (e >= phi.edge_count()) throw WalkError(k, "edge " + std::to_string(e) + " out of range");
    const Edge& ed = phi.graph().edge(e);
    const Vertex from = w.vertices[k], to = w.vertices[k + 1];
    if (!ed.has(from) || ed.other(from) != to)
      throw WalkError(k, "edge " + std::to_string(e) + " does not join " + std::to_string(from) + " and " +
                             std::to_string(to));
    g *= phi.gain(e, from);
  }
  return g;
}

/// phi^zeta(e_ij) = zeta(v_i)^-1 phi(e_ij) zeta(v_j).
inline GainGraph switch_gains(const GainGraph& phi, const SwitchingFunction& zeta) {
  if (zeta.values.size() != phi.vertex_count())
    throw std::invalid_argument("switching function has " + std::to_string(zeta.values.size()) +
                                " values for " + std::to_string(phi.vertex_count()) + " vertices");
  for (Vertex v = 0; v < zeta.values.size(); ++v)
    if (!phi.spec().contains(zeta.values[v]))
      throw std::invalid_argument("switching value " + to_string(zeta.values[v]) + " at vertex " + std::to_string(v) +
                                  " is not in group " + to_string(phi.spec()));
  std::vector<UnitGain> gains(phi.edge_count());
  for (EdgeId e = 0; e < gains.size(); ++e) {
    const Edge& ed = phi.graph().edge(e);
    gains[e] = inv(zeta(ed.lo)) * phi.stored_gain(e) * zeta(ed.hi);
  }
  return GainGraph(phi.graph(), phi.spec(), std::move(gains));
}

/// Maximal spanning forest grown breadth-first from the lowest vertex of each
/// component. Within a component, every vertex after the root is adjacent to
/// an earlier one in `order`.
struct SpanningForest {
  std::vector<std::optional<EdgeId>> parent_edge;  // nullopt at roots
  std::vector<Vertex> parent;                      // self at roots
  std::vector<Vertex> order;
  std::vector<std::size_t> component;
  std::vector<std::size_t> depth;
  std::vector<bool> in_forest;  // indexed by edge

  bool is_root(Vertex v) const { return !parent_edge.at(v).has_value(); }
};

inline SpanningForest spanning_forest(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SpanningForest f;
  f.parent_edge.assign(n, std::nullopt);
  f.parent.resize(n);
  f.component.assign(n, n);
  f.depth.assign(n, 0);
  f.in_forest.assign(g.edge_count(), false);
  f.order.reserve(n);
  std::size_t comp = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (f.component[root] != n) continue;
    f.component[root] = comp;
    f.parent[root] = root;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      f.order.push_back(v);
      for (EdgeId e : g.incident_edges(v)) {
        const Vertex w = g.edge(e).other(v);
        if (f.component[w] != n) continue;
        f.component[w] = comp;
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.depth[w] = f.depth[v] + 1;
        f.in_forest[e] = true;
        q.push(w);
      }
    }
    ++comp;
  }
  return f;
}

/// The cycle closed by cotree edge e: starts at its lower endpoint, follows
/// the forest to the upper endpoint, and returns along e.
inline Walk fundamental_cycle(const SimpleGraph& g, const SpanningForest& forest, EdgeId e) {
  if (e >= g.edge_count()) throw std::invalid_argument("edge " + std::to_string(e) + " out of range");
  if (forest.in_forest.at(e)) throw std::invalid_argument("edge " + std::to_string(e) + " is not a cotree edge");
  const Edge& ed = g.edge(e);
  if (forest.component.at(ed.lo) != forest.component.at(ed.hi))
    throw std::invalid_argument("edge " + std::to_string(e) + " joins two forest components");

  // Climb both endpoints to their lowest common ancestor.
  std::vector<std::pair<EdgeId, Vertex>> up_from_lo;  // (edge, vertex reached)
  std::vector<std::pair<EdgeId, Vertex>> up_from_hi;
  Vertex a = ed.lo, b = ed.hi;
  while (forest.depth[a] > forest.depth[b]) {
    up_from_lo.emplace_back(*forest.parent_edge[a], forest.parent[a]);
    a = forest.parent[a];
  }
  while (forest.depth[b] > forest.depth[a]) {
    up_from_hi.emplace_back(*forest.parent_edge[b], b);
    b = forest.parent[b];
  }
  while (a != b) {
    up_from_lo.emplace_back(*forest.parent_edge[a], forest.parent[a]);
    a = forest.parent[a];
    up_from_hi.emplace_back(*forest.parent_edge[b], b);
    b = forest.parent[b];
  }
  Walk w = Walk::at(ed.lo);
  for (const auto& [edge, to] : up_from_lo) w.step(edge, to);
  for (auto it = up_from_hi.rbegin(); it != up_from_hi.rend(); ++it) w.step(it->first, it->second);
  w.step(e, ed.lo);
  return w;
}

/// A cycle whose gain differs between two gain graphs.
struct SwitchingObstruction {
  Walk cycle;
  UnitGain gain_first;
  UnitGain gain_second;
};

struct SwitchingDecision {
  std::optional<SwitchingFunction> zeta;
  std::optional<SwitchingObstruction> witness;

  explicit operator bool() const noexcept { return zeta.has_value(); }
};

/// Decides whether phi2 = phi1^zeta for some zeta. Builds zeta along a
/// spanning forest (identity at each root), then compares the gain of every
/// fundamental cycle. A returned zeta is re-checked against phi2.
inline SwitchingDecision find_switching(const GainGraph& phi1, const GainGraph& phi2) {
  if (!(phi1.graph() == phi2.graph())) throw std::invalid_argument("gain graphs have different underlying graphs");
  if (!phi1.spec().same_family(phi2.spec())) throw std::invalid_argument("gain graphs have different gain groups");

  const SimpleGraph& g = phi1.graph();
  const SpanningForest forest = spanning_forest(g);
  SwitchingFunction zeta = SwitchingFunction::identity(g.vertex_count());
  for (Vertex v : forest.order) {
    if (forest.is_root(v)) continue;
    const EdgeId e = *forest.parent_edge[v];
    const Vertex p = forest.parent[v];
    zeta.values[v] = phi1.gain(e, v) * zeta(p) * inv(phi2.gain(e, v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (forest.in_forest[e]) continue;
    Walk c = fundamental_cycle(g, forest, e);
    const UnitGain g1 = gain_of_walk(phi1, c);
    const UnitGain g2 = gain_of_walk(phi2, c);
    if (g1 != g2) return {std::nullopt, SwitchingObstruction{std::move(c), g1, g2}};
  }
  if (!(switch_gains(phi1, zeta).stored_gains() == phi2.stored_gains()))
    throw std::logic_error("constructed switching function does not reproduce the target gains");
  return {std::move(zeta), std::nullopt};
}

inline bool is_switching_equivalent(const GainGraph& phi1, const GainGraph& phi2) {
  return static_cast<bool>(find_switching(phi1, phi2));
}

}  // namespace gaingraph
