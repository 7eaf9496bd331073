#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "ebitsim/etpd.hpp"
#include "ebitsim/protocols.hpp"
#include "ebitsim/random.hpp"
#include "ebitsim/runner.hpp"

namespace ebitsim {

namespace {

struct Check {
  std::string name;
  std::function<double()> worst;  // returns the worst observed error
  double tol;
};

}  // namespace

int run_selftest(std::ostream& out) {
  const std::vector<Check> checks = {
      {"permanent: ryser vs enumeration, n=2..8",
       [] {
         Rng rng(11);
         double worst = 0.0;
         for (int n = 2; n <= 8; ++n) {
           const ComplexMatrix m = random_complex_matrix(n, n, rng);
           const Complex ref = permanent_bruteforce(m);
           worst = std::max(worst, std::abs(permanent(m) - ref) / std::abs(ref));
         }
         return worst;
       },
       1e-12},
      {"coincidence projection: permanent path vs enumeration, n=2..8",
       [] {
         Rng rng(12);
         double worst = 0.0;
         for (int n = 2; n <= 8; ++n) {
           const PhotonEnsemble ens(random_complex_matrix(n, n, rng));
           const auto net = compose(random_lossy_netlist(n, rng), PortBasis(n));
           const PhotonEnsemble out = apply_network_to_ensemble(ens, net);
           const ComplexMatrix fast = coincidence_project(out).matrix;
           const ComplexMatrix slow = coincidence_project_bruteforce(out).matrix;
           worst = std::max(worst, (fast - slow).norm() / slow.norm());
         }
         return worst;
       },
       1e-12},
      {"reck round trip, n=2..8",
       [] {
         Rng rng(13);
         double worst = 0.0;
         for (int n = 2; n <= 8; ++n) {
           const ComplexMatrix u = haar_unitary(n, rng);
           worst = std::max(worst, max_abs_diff(compose(reck_decompose(u), PortBasis(n)).transfer(), u));
         }
         return worst;
       },
       1e-10},
      {"saturating protocol, n=2..8: |S - log2 n|",
       [] {
         double worst = 0.0;
         for (int n = 2; n <= 8; ++n) {
           const auto r = run_protocol(ProtocolSpec{SaturatingSpec{n}, 0});
           worst = std::max(worst, std::abs(r.report.entropy_ebits - std::log2(double(n))));
         }
         return worst;
       },
       1e-9},
      {"gaussian kernel: SVD vs analytic spectrum, sigma/delta=1 (rel)",
       [] { return gaussian_width_row(1.0, 1.0, default_grid(1.0, 1.0)).rel_err; }, 0.01},
  };

  int failed = 0;
  for (const auto& c : checks) {
    double worst = 0.0;
    bool ok = false;
    try {
      worst = c.worst();
      ok = worst <= c.tol;
    } catch (const std::exception& e) {
      out << "FAIL " << c.name << " (" << e.what() << ")\n";
      ++failed;
      continue;
    }
    out << (ok ? "PASS " : "FAIL ") << c.name << " worst=" << std::setprecision(3) << worst
        << " tol=" << c.tol << '\n';
    if (!ok) ++failed;
  }
  out << (failed == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failed == 0 ? kExitOk : kExitNumericalFailure;
}

}  // namespace ebitsim
