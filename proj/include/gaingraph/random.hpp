#pragma once

// Seeded random instances.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gaingraph/graph.hpp"
#include "gaingraph/orientation.hpp"

namespace gaingraph {

using Rng = std::mt19937_64;

/// Uniform element of the finite subgroup sampled for spec (see
/// orientation_sample_order).
inline UnitGain random_gain(const GroupSpec& spec, Rng& rng, std::int64_t circle_order = 24) {
  const std::int64_t order = orientation_sample_order(spec, circle_order);
  return UnitGain(std::uniform_int_distribution<std::int64_t>(0, order - 1)(rng), order);
}

inline std::vector<UnitGain> random_gains(std::size_t count, const GroupSpec& spec, Rng& rng) {
  std::vector<UnitGain> g(count);
  for (auto& x : g) x = random_gain(spec, rng);
  return g;
}

inline SwitchingFunction random_switching(std::size_t n, const GroupSpec& spec, Rng& rng) {
  return {random_gains(n, spec, rng)};
}

/// m distinct edges drawn uniformly without replacement, uniform gains.
inline GainGraph random_gain_graph(std::size_t n, std::size_t m, const GroupSpec& spec, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) all.emplace_back(i, j);
  if (m > all.size())
    throw std::invalid_argument(std::to_string(m) + " edges requested but only " + std::to_string(all.size()) +
                                " fit on " + std::to_string(n) + " vertices");
  // Partial Fisher-Yates.
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(k, all.size() - 1)(rng);
    std::swap(all[k], all[pick]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  SimpleGraph g(n, all);
  return GainGraph(std::move(g), spec, random_gains(m, spec, rng));
}

/// Each of the n(n-1)/2 pairs is an edge independently with probability p.
inline GainGraph random_gain_graph_gnp(std::size_t n, double p, const GroupSpec& spec, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  SimpleGraph g(n, pairs);
  const std::size_t m = g.edge_count();
  return GainGraph(std::move(g), spec, random_gains(m, spec, rng));
}

}  // namespace gaingraph
