// Acceptance sweep. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "commands.hpp"
#include "gaingraph/gaingraph.hpp"
#include "oracles.hpp"

using namespace gaingraph;

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kDiagonalTol = 1e-14;
constexpr double kBoundSlack = 1e-8;
constexpr double kSpectrumTol = 1e-8;

const std::int64_t kOrders[] = {2, 4, 6, 8, 12};

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

/// One instance of the shared sweep: n in 2..8, edge probability 0.5, gains
/// uniform in mu_K, involution +1 or -1.
GainGraph sweep_instance(int index, Rng& rng) {
  const std::int64_t order = kOrders[index % 5];
  const UnitGain s = (index / 5) % 2 ? UnitGain::half_turn() : UnitGain::identity();
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
  return random_gain_graph_gnp(n, 0.5, GroupSpec::roots_of_unity(order, s), rng);
}

Outcome incidence_identity() {
  Rng rng(1001);
  double worst = 0.0, worst_diag = 0.0;
  for (int k = 0; k < 200; ++k) {
    const GainGraph phi = sweep_instance(k, rng);
    const LineIdentityReport r = check_line_identity(random_orientation(phi, rng()));
    worst = std::max(worst, r.residual);
    worst_diag = std::max(worst_diag, r.diagonal_deviation);
  }
  return {worst <= kResidualTol && worst_diag <= kDiagonalTol,
          "200 instances, max residual " + sci(worst) + ", max diagonal deviation " + sci(worst_diag)};
}

Outcome eigenvalue_bounds() {
  Rng rng(1001);  // same sweep as the identity check
  double max_minus = -1e300, min_plus = 1e300;
  int minus = 0, plus = 0;
  bool ok = true;
  for (int k = 0; k < 200; ++k) {
    const GainGraph phi = sweep_instance(k, rng);
    rng();  // orientation seed drawn by the identity sweep
    const BoundCheck b = check_bound(phi, kBoundSlack);
    ok = ok && b.holds;
    if (!b.extremal) continue;
    if (b.involution_sign < 0) {
      ++minus;
      max_minus = std::max(max_minus, *b.extremal);
    } else {
      ++plus;
      min_plus = std::min(min_plus, *b.extremal);
    }
  }
  return {ok, std::to_string(minus) + " instances with s=-1 (max eigenvalue " + sci(max_minus) + "), " +
                  std::to_string(plus) + " with s=+1 (min eigenvalue " + sci(min_plus) + ")"};
}

Outcome line_graphs_of_switched_pairs() {
  Rng rng(1003);
  int ok = 0;
  for (int k = 0; k < 50; ++k) {
    const GainGraph phi1 = sweep_instance(k, rng);
    const GainGraph phi2 = switch_gains(phi1, random_switching(phi1.vertex_count(), phi1.spec(), rng));
    const GainGraph line1 = line_graph_oriented(random_orientation(phi1, rng())).phi();
    const GainGraph line2 = line_graph_oriented(random_orientation(phi2, rng())).phi();
    const SwitchingDecision d = find_switching(line1, line2);
    if (d && switch_gains(line1, *d.zeta) == line2) ++ok;
  }
  return {ok == 50, std::to_string(ok) + "/50 line-graph pairs switching equivalent with verified zeta"};
}

Outcome switching_decision_vs_oracle() {
  long checked = 0, mismatches = 0, equivalent = 0;
  for (const UnitGain s : {UnitGain::identity(), UnitGain::half_turn()}) {
    const auto spec = GroupSpec::roots_of_unity(2, s);
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> chosen;
        for (std::size_t k = 0; k < pairs.size(); ++k)
          if (mask >> k & 1u) chosen.push_back(pairs[k]);
        const SimpleGraph g(n, chosen);
        const std::size_t m = g.edge_count();
        auto gains = [&](std::uint32_t bits) {
          std::vector<UnitGain> v(m);
          for (std::size_t e = 0; e < m; ++e) v[e] = UnitGain(bits >> e & 1u, 2);
          return v;
        };
        for (std::uint32_t a = 0; a < (1u << m); ++a)
          for (std::uint32_t b = 0; b < (1u << m); ++b) {
            const GainGraph p1(g, spec, gains(a)), p2(g, spec, gains(b));
            const bool fast = is_switching_equivalent(p1, p2);
            const bool slow = oracles::brute_force_switching(p1, p2, 2).has_value();
            ++checked;
            equivalent += slow;
            mismatches += fast != slow;
          }
      }
    }
  }
  Rng rng(1004);
  long random_mismatches = 0, random_equivalent = 0;
  const auto mu4 = GroupSpec::roots_of_unity(4, UnitGain::half_turn());
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const GainGraph p1 = random_gain_graph_gnp(n, 0.5, mu4, rng);
    // Half the targets are switched copies, half independent gains.
    const GainGraph p2 = k % 2 ? switch_gains(p1, random_switching(n, mu4, rng))
                               : GainGraph(p1.graph(), mu4, random_gains(p1.edge_count(), mu4, rng));
    const bool fast = is_switching_equivalent(p1, p2);
    const bool slow = oracles::brute_force_switching(p1, p2, 4).has_value();
    random_equivalent += slow;
    random_mismatches += fast != slow;
  }
  return {mismatches == 0 && random_mismatches == 0,
          "exhaustive mu2 n<=4: " + std::to_string(checked) + " pairs (" + std::to_string(equivalent) +
              " equivalent), " + std::to_string(mismatches) + " disagreements; random mu4 n<=5: 200 pairs (" +
              std::to_string(random_equivalent) + " equivalent), " + std::to_string(random_mismatches) +
              " disagreements"};
}

Outcome orientation_switching() {
  Rng rng(1005);
  int ok = 0;
  for (int k = 0; k < 200; ++k) {
    const GainGraph phi = sweep_instance(k, rng);
    const OrientedGainGraph og = random_orientation(phi, rng());
    const SwitchingFunction zeta = random_switching(phi.vertex_count(), phi.spec(), rng);
    IncidencePhase switched(phi.graph());
    for (EdgeId e = 0; e < phi.edge_count(); ++e)
      for (Vertex v : {phi.graph().edge(e).lo, phi.graph().edge(e).hi})
        switched.set(v, e, inv(zeta(v)) * og.omega().value(v, e));
    if (associated_gain_graph(phi.graph(), switched, phi.spec()) == switch_gains(phi, zeta)) ++ok;
  }
  return {ok == 200, std::to_string(ok) + "/200 exact equalities"};
}

Outcome spectral_invariance() {
  Rng rng(1006);
  double worst_switch = 0.0, worst_orient = 0.0;
  for (int k = 0; k < 100; ++k) {
    const GainGraph phi = sweep_instance(k, rng);
    const SwitchingFunction zeta = random_switching(phi.vertex_count(), phi.spec(), rng);
    worst_switch = std::max(worst_switch, spectrum_switching_invariance(phi, zeta));
    const Spectrum a = line_spectrum(random_orientation(phi, rng()));
    const Spectrum b = line_spectrum(random_orientation(phi, rng()));
    worst_orient = std::max(worst_orient, max_spectral_difference(a, b));
  }
  return {worst_switch <= kSpectrumTol && worst_orient <= kSpectrumTol,
          "100 instances, max gap under switching " + sci(worst_switch) + ", under reorientation " +
              sci(worst_orient)};
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> d;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = d(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(d(rng), d(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Outcome eigensolver_validation() {
  Rng rng(1007);
  double worst_oracle = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix m = random_hermitian(1 + k % 6, rng);
    worst_oracle = std::max(worst_oracle, max_spectral_difference(hermitian_eigenvalues(m), oracles::charpoly_eigenvalues(m)));
  }
  bool identities = true;
  double worst_trace = 0.0, worst_frob = 0.0;
  for (std::size_t n = 1; n <= 50; n += 7) {
    const ComplexMatrix m = random_hermitian(n, rng);
    const Spectrum s = hermitian_eigenvalues(m);
    double sum = 0.0, squares = 0.0;
    for (double x : s.eigenvalues) {
      sum += x;
      squares += x * x;
    }
    const double f = m.frobenius_norm();
    const double dt = std::abs(sum - m.trace().real()), df = std::abs(squares - f * f);
    worst_trace = std::max(worst_trace, dt);
    worst_frob = std::max(worst_frob, df);
    identities = identities && dt <= 1e-8 * static_cast<double>(n) && df <= 1e-8 * static_cast<double>(n);
  }
  return {worst_oracle <= kSpectrumTol && identities,
          "charpoly gap " + sci(worst_oracle) + " over 100 matrices; trace gap " + sci(worst_trace) +
              ", Frobenius gap " + sci(worst_frob) + " for n up to 50"};
}

Outcome uniform_involution_line_graphs() {
  Rng rng(1008);
  int ok = 0;
  for (int k = 0; k < 20; ++k) {
    const UnitGain s = k % 2 ? UnitGain::half_turn() : UnitGain::identity();
    const auto spec = GroupSpec::roots_of_unity(kOrders[k % 5], s);
    const SimpleGraph g = random_gain_graph_gnp(std::uniform_int_distribution<std::size_t>(2, 8)(rng), 0.5, spec, rng).graph();
    const IncidencePhase w = IncidencePhase::uniform(g, s);
    const OrientedGainGraph line = line_graph_oriented(OrientedGainGraph(associated_gain_graph(g, w, spec), w));
    const auto& gains = line.phi().stored_gains();
    if (std::all_of(gains.begin(), gains.end(), [&](const UnitGain& x) { return x == s; })) ++ok;
  }
  return {ok == 20, std::to_string(ok) + "/20 line graphs with every gain equal to the involution"};
}

Outcome cli_round_trip() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("gaingraph_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  Rng rng(1009);
  int round_trips = 0, verified = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, n * (n - 1) / 2)(rng);
    const std::string involution = k % 2 ? "1/2" : "0";
    std::ostringstream out, err;
    const int code = cli::run({"random", "--vertices", std::to_string(n), "--edges", std::to_string(m), "--group",
                               "mu:" + std::to_string(kOrders[k % 5]), "--involution", involution, "--seed",
                               std::to_string(rng())},
                              out, err);
    if (code != 0) continue;
    const std::string text = out.str();
    if (serialize(parse_document(text)) == text) ++round_trips;
    const fs::path file = dir / ("instance" + std::to_string(k) + ".gg");
    std::ofstream(file) << text;
    std::ostringstream vout, verr;
    if (cli::run({"verify", file.string(), "--seed", std::to_string(k)}, vout, verr) == 0) ++verified;
  }
  fs::remove_all(dir);
  return {round_trips == 100 && verified == 100,
          std::to_string(round_trips) + "/100 documents round-trip, " + std::to_string(verified) +
              "/100 verify runs exit 0"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 incidence identity H*H = 2I + sA(line)", incidence_identity},
      {"2 line-graph eigenvalue bounds", eigenvalue_bounds},
      {"3 switching-equivalent graphs have equivalent line graphs", line_graphs_of_switched_pairs},
      {"4 switching decision agrees with brute force", switching_decision_vs_oracle},
      {"5 switched orientation induces switched gains", orientation_switching},
      {"6 spectra invariant under switching and reorientation", spectral_invariance},
      {"7 eigensolver validation", eigensolver_validation},
      {"8 uniform-involution orientation gives uniform line gains", uniform_involution_line_graphs},
      {"9 document round trip and CLI verify", cli_round_trip},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << "[" << c.name << "] " << o.detail << '\n';
    failures += !o.passed;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed in " << seconds << " s\n";
  return failures == 0 ? 0 : 1;
}
