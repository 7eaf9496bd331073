// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ebitsim/entanglement.hpp"
#include "ebitsim/etpd.hpp"
#include "ebitsim/protocols.hpp"
#include "ebitsim/random.hpp"

using namespace ebitsim;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(Outcome&)> body;
};

double log2n(int n) { return std::log2(static_cast<double>(n)); }

void symmetric_three(Outcome& o) {
  const auto r = run_protocol(ProtocolSpec{SymmetricSpec{3}});
  o.detail << "S=" << r.report.entropy_ebits;
  o.require(std::abs(r.report.entropy_ebits - 1.2516) <= 1e-3, "S = 1.2516 +- 1e-3");
  const RealVector& l = r.report.schmidt_coefficients;
  o.require(std::abs(l(0) - 2.0 / 3.0) < 1e-12 && std::abs(l(1) - 1.0 / 6.0) < 1e-12 &&
                std::abs(l(2) - 1.0 / 6.0) < 1e-12,
            "spectrum {2/3, 1/6, 1/6}");
}

void saturating(Outcome& o) {
  double worst_s = 0.0, worst_l = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const auto r = run_protocol(ProtocolSpec{SaturatingSpec{n}});
    worst_s = std::max(worst_s, std::abs(r.report.entropy_ebits - log2n(n)));
    const RealVector& l = r.report.schmidt_coefficients;
    o.require(l.size() == n, "n Schmidt coefficients");
    worst_l = std::max(worst_l, l.maxCoeff() - l.minCoeff());
    if (n == 3) o.detail << "S(3)=" << r.report.entropy_ebits << " ";
    if (n == 4) o.detail << "S(4)=" << r.report.entropy_ebits << " ";
  }
  o.detail << "max|S-log2N|=" << worst_s << " max lambda spread=" << worst_l;
  o.require(worst_s <= 1e-9, "|S - log2 N| <= 1e-9");
  o.require(worst_l <= 1e-10, "Schmidt coefficients equal within 1e-10");
}

void two_photon_bound(Outcome& o) {
  double worst = 0.0;
  int max_rank = 0;
  constexpr int kNetworks = 200;
  for (std::uint64_t seed = 0; seed < kNetworks; ++seed) {
    const auto r = run_protocol(ProtocolSpec{TwoPhotonSpec{}, seed});
    worst = std::max(worst, r.report.entropy_ebits);
    max_rank = std::max(max_rank, r.report.numerical_rank);
  }
  o.detail << kNetworks << " networks, max S=" << worst << " max rank=" << max_rank;
  o.require(worst <= 1.0 + 1e-9, "max S <= 1 + 1e-9");
  o.require(max_rank <= 2, "Schmidt rank <= 2");
}

void single_detection_bound(Outcome& o) {
  double worst = 0.0;
  constexpr int kDraws = 400;
  for (std::uint64_t seed = 0; seed < kDraws; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 7);
    worst = std::max(worst,
                     run_protocol(ProtocolSpec{SingleDetectionSpec{dim, false}, seed}).report.entropy_ebits);
  }
  const double eq = run_protocol(ProtocolSpec{SingleDetectionSpec{3, true}}).report.entropy_ebits;
  o.detail << kDraws << " draws, max S=" << worst << ", orthogonal balanced S=" << eq;
  o.require(worst <= 1.0 + 1e-9, "max S <= 1 + 1e-9");
  o.require(std::abs(eq - 1.0) <= 1e-9, "equality on the orthogonal balanced case");
}

void permanent_oracles(Outcome& o) {
  Rng rng(20240501);
  double worst_perm = 0.0;
  int matrices = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + rep % 7;
    const ComplexMatrix m = random_complex_matrix(n, n, rng);
    const Complex ref = permanent_bruteforce(m);
    worst_perm = std::max(worst_perm, std::abs(permanent(m) - ref) / std::abs(ref));
    ++matrices;
  }
  double worst_proj = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const PhotonEnsemble ens(random_complex_matrix(n, n, rng));
      const auto net = compose(random_lossy_netlist(n, rng), PortBasis(n));
      const PhotonEnsemble out = apply_network_to_ensemble(ens, net);
      const ComplexMatrix fast = coincidence_project(out).matrix;
      const ComplexMatrix slow = coincidence_project_bruteforce(out).matrix;
      worst_proj = std::max(worst_proj, (fast - slow).norm() / slow.norm());
    }
  }
  o.detail << matrices << " matrices, permanent rel err=" << worst_perm
           << ", projection rel err=" << worst_proj;
  o.require(worst_perm <= 1e-12, "Ryser vs enumeration <= 1e-12");
  o.require(worst_proj <= 1e-12, "projection fast vs brute <= 1e-12");
}

void reck_round_trip(Outcome& o) {
  Rng rng(77);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 7;
    const ComplexMatrix u = haar_unitary(n, rng);
    worst = std::max(worst, max_abs_diff(compose(reck_decompose(u), PortBasis(n)).transfer(), u));
  }
  o.detail << "20 unitaries, max error=" << worst;
  o.require(worst < 1e-10, "reconstruction < 1e-10");
}

void etpd_oracle(Outcome& o) {
  const std::vector<double> ratios{0.1, 0.3, 1.0, 3.0, 10.0};
  const WidthSweep sweep = entanglement_vs_width_sweep(ratios);
  double worst = 0.0;
  bool strictly = true;
  for (size_t i = 0; i < sweep.rows.size(); ++i) {
    worst = std::max(worst, sweep.rows[i].rel_err);
    if (i > 0 && !(sweep.rows[i].entropy_ebits > sweep.rows[i - 1].entropy_ebits)) strictly = false;
    o.detail << "S(" << sweep.rows[i].ratio << ")=" << sweep.rows[i].entropy_ebits << " ";
  }
  o.detail << "max rel err=" << worst;
  o.require(worst < 0.01, "oracle agreement within 1%");
  o.require(strictly, "entropy strictly increasing in sigma/delta");
  o.require(sweep.rows.back().entropy_ebits > 2.0, "sigma/delta = 10 gives > 2 ebits");
}

void filter_ledger(Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    const auto good = run_protocol(ProtocolSpec{SaturatingSpec{n, FilterStrength::PerPhoton}});
    o.require(std::abs(good.report.entropy_ebits - log2n(n)) <= 1e-9,
              "t = 1/sqrt(N-1) saturates at N=" + std::to_string(n));
    if (n >= 3) {
      const auto bad = run_protocol(ProtocolSpec{SaturatingSpec{n, FilterStrength::PerComponent}});
      o.require(bad.report.entropy_ebits < log2n(n) - 0.05,
                "t = 1/(N-1) stays below log2 N - 0.05 at N=" + std::to_string(n));
      if (n == 3 || n == 8) o.detail << "N=" << n << ": t=1/(N-1) gives S=" << bad.report.entropy_ebits << " ";
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three-photon symmetric protocol, S = 1.2516 +- 1e-3", 1.0, symmetric_three},
      {2, "saturating protocol, S = log2 N for N = 2..8", 5.0, saturating},
      {3, "two photons + any linear optics: S <= 1, rank <= 2", 5.0, two_photon_bound},
      {4, "single detection: S <= 1, equality when orthogonal", 2.0, single_detection_bound},
      {5, "permanent and projection oracle equivalence, n = 2..8", 10.0, permanent_oracles},
      {6, "Reck round trip, N = 2..8", 2.0, reck_round_trip},
      {7, "ETPD Gaussian kernel vs analytic spectrum", 30.0, etpd_oracle},
      {8, "filter strength: per-photon saturates, per-component does not", 5.0, filter_ledger},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.time_limit_s, "runtime < " + std::to_string(c.time_limit_s) + " s");
    std::printf("[%s] criterion %d: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, o.detail.str().c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
