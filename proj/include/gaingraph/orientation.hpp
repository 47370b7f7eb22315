#pragma once

// Incidence phase functions and oriented gain graphs.
//
// An incidence phase assigns a gain to each (vertex, edge) incidence. With a
// central involution s it induces edge gains
//
//     phi(e_ij) = omega(v_i, e) * s * omega(v_j, e)^-1
//
// and an orientation of a gain graph is any incidence phase inducing exactly
// its gains. Non-incident pairs simply carry no value.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaingraph/gain.hpp"
#include "gaingraph/graph.hpp"

namespace gaingraph {

class IncidencePhase {
public:
  IncidencePhase() = default;
  explicit IncidencePhase(const SimpleGraph& g) : edges_(g.edges()), values_(g.edge_count()) {}

  /// The same value on every incidence.
  static IncidencePhase uniform(const SimpleGraph& g, UnitGain value) {
    IncidencePhase w(g);
    for (auto& ends : w.values_) ends = {value, value};
    return w;
  }

  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  void set(Vertex v, EdgeId e, UnitGain value) { slot(v, e) = value; }

  /// nullopt for non-incident pairs and for incidences not yet assigned.
  std::optional<UnitGain> at(Vertex v, EdgeId e) const {
    if (e >= edges_.size() || !edges_[e].has(v)) return std::nullopt;
    return values_[e][v == edges_[e].lo ? 0 : 1];
  }

  UnitGain value(Vertex v, EdgeId e) const {
    auto w = at(v, e);
    if (!w) throw std::invalid_argument("no incidence value at (" + std::to_string(v) + ", " + std::to_string(e) + ")");
    return *w;
  }

  /// First incidence without a value, if any.
  std::optional<std::pair<Vertex, EdgeId>> first_missing() const {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      if (!values_[e][0]) return std::pair{edges_[e].lo, e};
      if (!values_[e][1]) return std::pair{edges_[e].hi, e};
    }
    return std::nullopt;
  }

  friend bool operator==(const IncidencePhase&, const IncidencePhase&) = default;

private:
  std::optional<UnitGain>& slot(Vertex v, EdgeId e) {
    if (e >= edges_.size()) throw std::invalid_argument("edge " + std::to_string(e) + " out of range");
    if (!edges_[e].has(v))
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not incident to edge " + std::to_string(e));
    return values_[e][v == edges_[e].lo ? 0 : 1];
  }

  std::vector<Edge> edges_;
  std::vector<std::array<std::optional<UnitGain>, 2>> values_;  // [lo, hi]
};

/// Edge gains induced by omega. Throws naming the first missing incidence.
inline GainGraph associated_gain_graph(const SimpleGraph& g, const IncidencePhase& omega, const GroupSpec& spec) {
  if (omega.edges() != g.edges()) throw std::invalid_argument("incidence phase belongs to a different graph");
  if (auto miss = omega.first_missing())
    throw std::invalid_argument("missing incidence value at (" + std::to_string(miss->first) + ", " +
                                std::to_string(miss->second) + ")");
  std::vector<UnitGain> gains(g.edge_count());
  for (EdgeId e = 0; e < gains.size(); ++e) {
    const Edge& ed = g.edge(e);
    const UnitGain forward = omega.value(ed.lo, e) * spec.involution * inv(omega.value(ed.hi, e));
    const UnitGain backward = omega.value(ed.hi, e) * spec.involution * inv(omega.value(ed.lo, e));
    if (forward != inv(backward)) throw std::logic_error("induced gain is not inverse-symmetric");
    gains[e] = forward;
  }
  return GainGraph(g, spec, std::move(gains));
}

/// A gain graph together with one of its orientations.
class OrientedGainGraph {
public:
  OrientedGainGraph(GainGraph phi, IncidencePhase omega) : phi_(std::move(phi)), omega_(std::move(omega)) {
    const SimpleGraph& g = phi_.graph();
    if (omega_.edges() != g.edges()) throw std::invalid_argument("incidence phase belongs to a different graph");
    if (auto miss = omega_.first_missing())
      throw std::invalid_argument("missing incidence value at (" + std::to_string(miss->first) + ", " +
                                  std::to_string(miss->second) + ")");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      for (Vertex v : {ed.lo, ed.hi})
        if (!phi_.spec().contains(omega_.value(v, e)))
          throw std::invalid_argument("incidence value " + to_string(omega_.value(v, e)) + " is not in group " +
                                      to_string(phi_.spec()));
      if (!residual(e).is_identity())
        throw std::invalid_argument("orientation does not induce the gain of edge " + std::to_string(e));
    }
  }

  const GainGraph& phi() const noexcept { return phi_; }
  const IncidencePhase& omega() const noexcept { return omega_; }
  const SimpleGraph& graph() const noexcept { return phi_.graph(); }
  const GroupSpec& spec() const noexcept { return phi_.spec(); }

  /// phi(e_ij)^-1 * omega(v_i,e) * s * omega(v_j,e)^-1; the identity on every
  /// edge of a valid oriented gain graph.
  UnitGain residual(EdgeId e) const {
    const Edge& ed = graph().edge(e);
    return inv(phi_.stored_gain(e)) * omega_.value(ed.lo, e) * spec().involution * inv(omega_.value(ed.hi, e));
  }

  friend bool operator==(const OrientedGainGraph&, const OrientedGainGraph&) = default;

private:
  GainGraph phi_;
  IncidencePhase omega_;
};

/// omega(hi, e) = 1 and omega(lo, e) = s * phi(e_lo,hi) on every edge.
inline OrientedGainGraph default_orientation(const GainGraph& phi) {
  IncidencePhase omega(phi.graph());
  for (EdgeId e = 0; e < phi.edge_count(); ++e) {
    const Edge& ed = phi.graph().edge(e);
    omega.set(ed.hi, e, UnitGain::identity());
    omega.set(ed.lo, e, phi.spec().involution * phi.stored_gain(e));
  }
  return OrientedGainGraph(phi, std::move(omega));
}

/// Finite subgroup the random orientation draws from: the group itself for
/// sign and roots of unity, mu(circle_order) for the circle.
inline std::int64_t orientation_sample_order(const GroupSpec& spec, std::int64_t circle_order = 24) {
  switch (spec.family) {
    case GroupFamily::sign: return 2;
    case GroupFamily::roots_of_unity: return spec.order;
    case GroupFamily::circle: return circle_order;
  }
  return circle_order;
}

/// omega(hi, e) uniform in the sampling subgroup, omega(lo, e) forced so that
/// the orientation induces phi. Deterministic in the seed.
inline OrientedGainGraph random_orientation(const GainGraph& phi, std::uint64_t seed, std::int64_t circle_order = 24) {
  const std::int64_t order = orientation_sample_order(phi.spec(), circle_order);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, order - 1);
  IncidencePhase omega(phi.graph());
  for (EdgeId e = 0; e < phi.edge_count(); ++e) {
    const Edge& ed = phi.graph().edge(e);
    const UnitGain end(pick(rng), order);
    omega.set(ed.hi, e, end);
    omega.set(ed.lo, e, phi.stored_gain(e) * end * phi.spec().involution);
  }
  return OrientedGainGraph(phi, std::move(omega));
}

/// omega^zeta(v, e) = zeta(v)^-1 omega(v, e). Checks that the induced gain
/// graph equals phi switched by zeta.
inline OrientedGainGraph switch_orientation(const OrientedGainGraph& og, const SwitchingFunction& zeta) {
  const SimpleGraph& g = og.graph();
  if (zeta.values.size() != g.vertex_count())
    throw std::invalid_argument("switching function size does not match vertex count");
  IncidencePhase omega(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (Vertex v : {ed.lo, ed.hi}) omega.set(v, e, inv(zeta(v)) * og.omega().value(v, e));
  }
  GainGraph induced = associated_gain_graph(g, omega, og.spec());
  if (!(induced == switch_gains(og.phi(), zeta)))
    throw std::logic_error("switched orientation does not induce the switched gain graph");
  return OrientedGainGraph(std::move(induced), std::move(omega));
}

/// Multiplies both incidences of edge e by c. The induced gains do not change.
inline OrientedGainGraph reorient_edge(const OrientedGainGraph& og, EdgeId e, UnitGain c) {
  IncidencePhase omega = og.omega();
  const Edge& ed = og.graph().edge(e);
  for (Vertex v : {ed.lo, ed.hi}) omega.set(v, e, omega.value(v, e) * c);
  return OrientedGainGraph(og.phi(), std::move(omega));
}

}  // namespace gaingraph
