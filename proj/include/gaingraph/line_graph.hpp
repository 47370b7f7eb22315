#pragma once

// Line graphs of oriented gain graphs.
//
// Vertex e of the line graph is edge e of the source graph. A line edge joins
// e and f when they share an endpoint v, and the line orientation at that
// incidence is omega(v, e)^-1. The line graph of a plain gain graph is only
// defined up to switching; line_graph_class returns the representative
// induced by default_orientation.

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "gaingraph/graph.hpp"
#include "gaingraph/orientation.hpp"

namespace gaingraph {

struct LineGraphMap {
  SimpleGraph line_graph;
  std::vector<Vertex> shared_vertex;  // indexed by line edge
};

/// Line edges are ordered lexicographically by (lower, upper) source edge.
inline LineGraphMap underlying_line_graph(const SimpleGraph& g) {
  std::vector<std::tuple<EdgeId, EdgeId, Vertex>> adj;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        adj.emplace_back(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]), v);
  }
  std::sort(adj.begin(), adj.end());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  LineGraphMap out;
  pairs.reserve(adj.size());
  out.shared_vertex.reserve(adj.size());
  for (const auto& [e, f, v] : adj) {
    pairs.emplace_back(e, f);
    out.shared_vertex.push_back(v);
  }
  out.line_graph = SimpleGraph(g.edge_count(), pairs);
  return out;
}

/// omega_L(e, ef) = omega(v, e)^-1 where v is the endpoint shared by e and f.
inline IncidencePhase line_orientation(const OrientedGainGraph& og, const LineGraphMap& lgm) {
  if (lgm.line_graph.vertex_count() != og.graph().edge_count())
    throw std::invalid_argument("line graph map does not belong to this graph");
  IncidencePhase omega(lgm.line_graph);
  for (EdgeId l = 0; l < lgm.line_graph.edge_count(); ++l) {
    const Edge& ef = lgm.line_graph.edge(l);
    const Vertex v = lgm.shared_vertex[l];
    omega.set(ef.lo, l, inv(og.omega().value(v, ef.lo)));
    omega.set(ef.hi, l, inv(og.omega().value(v, ef.hi)));
  }
  return omega;
}

/// The oriented line graph (Phi(omega_L), omega_L).
inline OrientedGainGraph line_graph_oriented(const OrientedGainGraph& og) {
  const LineGraphMap lgm = underlying_line_graph(og.graph());
  IncidencePhase omega = line_orientation(og, lgm);
  GainGraph phi = associated_gain_graph(lgm.line_graph, omega, og.spec());
  return OrientedGainGraph(std::move(phi), std::move(omega));
}

/// A representative of the line graph's switching class, taken from the
/// default orientation so the output is reproducible.
inline GainGraph line_graph_class(const GainGraph& phi) {
  return line_graph_oriented(default_orientation(phi)).phi();
}

}  // namespace gaingraph
