#pragma once

// Per-instance verification used by the `verify` command.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "gaingraph/orientation.hpp"
#include "gaingraph/random.hpp"
#include "gaingraph/spectra.hpp"

namespace gaingraph {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::string format_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

/// Incidence identity, eigenvalue bound, orientation switching and
/// orientation independence of the line spectrum, all on orientations drawn
/// from `seed`.
inline std::vector<CheckResult> verify_instance(const GainGraph& phi, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const OrientedGainGraph og = random_orientation(phi, seed);

  {
    const LineIdentityReport r = check_line_identity(og);
    const bool ok = r.residual <= kIdentityTolerance && r.diagonal_deviation <= 1e-14;
    out.push_back({"incidence-identity", ok,
                   "residual=" + format_double(r.residual) + " diagonal=" + format_double(r.diagonal_deviation)});
  }
  {
    const BoundCheck b = check_bound(phi);
    std::string detail = b.involution_sign < 0 ? "max eigenvalue " : "min eigenvalue ";
    detail += b.extremal ? format_double(*b.extremal) : std::string("none (empty line graph)");
    detail += b.involution_sign < 0 ? " <= 2" : " >= -2";
    out.push_back({"eigenvalue-bound", b.holds, detail});
  }
  {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const SwitchingFunction zeta = random_switching(phi.vertex_count(), phi.spec(), rng);
    bool ok = true;
    std::string detail = "switched orientation induces the switched gains";
    try {
      const OrientedGainGraph switched = switch_orientation(og, zeta);
      ok = switched.phi() == switch_gains(og.phi(), zeta);
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    out.push_back({"orientation-switching", ok, detail});
  }
  {
    const double d = max_spectral_difference(line_spectrum(default_orientation(phi)), line_spectrum(og));
    out.push_back({"line-spectrum-orientation", d <= kEigenTolerance, "max difference=" + format_double(d)});
  }
  return out;
}

}  // namespace gaingraph
