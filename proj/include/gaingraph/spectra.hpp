#pragma once

// Adjacency and incidence matrices of complex unit gain graphs, and checks of
// the incidence/line-graph identity
//
//     H(Phi, omega)^* H(Phi, omega) = 2I + s A(line graph of (Phi, omega))
//
// together with the line-graph eigenvalue bounds it implies: lambda <= 2 when
// s = -1 and lambda >= -2 when s = +1.

#include <algorithm>
#include <cmath>
#include <optional>

#include "gaingraph/graph.hpp"
#include "gaingraph/line_graph.hpp"
#include "gaingraph/matrix.hpp"
#include "gaingraph/orientation.hpp"

namespace gaingraph {

/// Tolerance for identities evaluated in floating point.
inline constexpr double kIdentityTolerance = 1e-10;
/// Tolerance for comparisons between computed eigenvalues.
inline constexpr double kEigenTolerance = 1e-8;

inline ComplexMatrix adjacency_matrix(const GainGraph& phi) {
  ComplexMatrix a(phi.vertex_count(), phi.vertex_count());
  for (EdgeId e = 0; e < phi.edge_count(); ++e) {
    const Edge& ed = phi.graph().edge(e);
    const Complex z = to_complex(phi.stored_gain(e));
    a(ed.lo, ed.hi) = z;
    a(ed.hi, ed.lo) = std::conj(z);
  }
  return a;
}

/// n x m with entry (v, e) = omega(v, e) on incidences and zero elsewhere.
inline ComplexMatrix incidence_matrix(const OrientedGainGraph& og) {
  ComplexMatrix h(og.graph().vertex_count(), og.graph().edge_count());
  for (EdgeId e = 0; e < og.graph().edge_count(); ++e) {
    const Edge& ed = og.graph().edge(e);
    h(ed.lo, e) = to_complex(og.omega().value(ed.lo, e));
    h(ed.hi, e) = to_complex(og.omega().value(ed.hi, e));
  }
  return h;
}

struct LineIdentityReport {
  double residual = 0.0;            // max |H^*H - (2I + s A_L)|
  double diagonal_deviation = 0.0;  // max |(H^*H)_ee - 2|
};

inline LineIdentityReport check_line_identity(const OrientedGainGraph& og) {
  const ComplexMatrix h = incidence_matrix(og);
  const ComplexMatrix gram = h.adjoint() * h;
  const ComplexMatrix line_adj = adjacency_matrix(line_graph_oriented(og).phi());
  const std::size_t m = og.graph().edge_count();
  const ComplexMatrix rhs = 2.0 * ComplexMatrix::identity(m) + static_cast<double>(og.spec().involution_sign()) * line_adj;
  LineIdentityReport r;
  r.residual = (gram - rhs).max_abs();
  for (std::size_t e = 0; e < m; ++e) r.diagonal_deviation = std::max(r.diagonal_deviation, std::abs(gram(e, e) - 2.0));
  return r;
}

inline Spectrum adjacency_spectrum(const GainGraph& phi) { return hermitian_eigenvalues(adjacency_matrix(phi)); }

/// Spectrum of the line graph induced by a particular orientation.
inline Spectrum line_spectrum(const OrientedGainGraph& og) {
  return adjacency_spectrum(line_graph_oriented(og).phi());
}

/// Spectrum of the line graph of phi. Any orientation gives the same answer;
/// this one uses the default orientation.
inline Spectrum line_spectrum(const GainGraph& phi) { return adjacency_spectrum(line_graph_class(phi)); }

struct BoundCheck {
  bool holds = true;
  int involution_sign = 1;
  double bound = -2.0;                // -2 (lower) for s = +1, +2 (upper) for s = -1
  std::optional<double> extremal;     // min or max line eigenvalue; empty line graph has none
};

inline BoundCheck check_bound(const GainGraph& phi, double slack = kEigenTolerance) {
  const Spectrum spec = line_spectrum(phi);
  BoundCheck r;
  r.involution_sign = phi.spec().involution_sign();
  r.bound = r.involution_sign < 0 ? 2.0 : -2.0;
  if (spec.empty()) return r;
  if (r.involution_sign < 0) {
    r.extremal = spec.max();
    r.holds = *r.extremal <= 2.0 + slack;
  } else {
    r.extremal = spec.min();
    r.holds = *r.extremal >= -2.0 - slack;
  }
  return r;
}

/// Largest gap between the sorted spectra of A(phi) and A(phi^zeta).
inline double spectrum_switching_invariance(const GainGraph& phi, const SwitchingFunction& zeta) {
  return max_spectral_difference(adjacency_spectrum(phi), adjacency_spectrum(switch_gains(phi, zeta)));
}

}  // namespace gaingraph
