#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ebitsim/entanglement.hpp"
#include "ebitsim/postselect.hpp"
#include "ebitsim/random.hpp"

using namespace ebitsim;

namespace {

double rel_frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm() / b.norm();
}

// Independent of permanent(): sum over detector assignments of the raw
// amplitude matrix, reading atomic labels as detector indices.
ComplexMatrix enumerate_untransformed(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Complex prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= m(k, sigma[k]);
    c(sigma[0], sigma[1]) += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return c;
}

}  // namespace

TEST_CASE("permanent") {
  CHECK(permanent(ComplexMatrix::Identity(2, 2)) == Complex(1.0));
  CHECK(std::abs(permanent(ComplexMatrix::Ones(3, 3)) - 6.0) < 1e-14);
  CHECK(permanent(ComplexMatrix(0, 0)) == Complex(1.0));
  CHECK(permanent_bruteforce(ComplexMatrix::Identity(3, 3)) == Complex(1.0));
  CHECK(permanent_bruteforce(ComplexMatrix::Ones(2, 2)) == Complex(2.0));

  SUBCASE("ryser matches enumeration") {
    Rng rng(5);
    const ComplexMatrix m5 = random_complex_matrix(5, 5, rng);
    const Complex ref5 = permanent_bruteforce(m5);
    CHECK(std::abs(permanent(m5) - ref5) / std::abs(ref5) < 1e-12);
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix m4 = random_complex_matrix(4, 4, rng);
      const Complex ref4 = permanent_bruteforce(m4);
      CHECK(std::abs(permanent(m4) - ref4) / std::abs(ref4) < 1e-12);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS(permanent(ComplexMatrix::Ones(2, 3)));
    CHECK_THROWS_WITH(permanent(ComplexMatrix::Ones(21, 21)), doctest::Contains("permanent size guard"));
    CHECK_THROWS(permanent_bruteforce(ComplexMatrix::Ones(10, 10)));
    CHECK_THROWS(permanent_bruteforce(ComplexMatrix::Ones(2, 3)));
  }
}

TEST_CASE("photon ensemble validation") {
  CHECK_THROWS(PhotonEnsemble(ComplexMatrix::Ones(2, 3)));
  CHECK_THROWS(PhotonEnsemble(ComplexMatrix::Ones(1, 1)));
  ComplexMatrix dead = ComplexMatrix::Ones(3, 3);
  dead.row(2).setZero();
  CHECK_THROWS(PhotonEnsemble(dead));
  CHECK_THROWS(PhotonEnsemble(ComplexMatrix::Ones(3, 3), {1, 1}));
  CHECK_THROWS(PhotonEnsemble(ComplexMatrix::Ones(3, 3), {0, 3}));
  CHECK_THROWS(PhotonEnsemble(ComplexMatrix::Ones(3, 3), {0, 1}, 0.0));
}

TEST_CASE("coincidence_project examples") {
  SUBCASE("three photons, uniform amplitudes") {
    const BipartiteAmplitude c = coincidence_project(PhotonEnsemble(ComplexMatrix::Ones(3, 3)));
    CHECK_FALSE(c.normalized);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(c.matrix(i, j) - (i == j ? 0.0 : 1.0)) < 1e-15);
  }
  SUBCASE("two photons, identity") {
    const BipartiteAmplitude c = coincidence_project(PhotonEnsemble(ComplexMatrix::Identity(2, 2)));
    ComplexMatrix want(2, 2);
    want << 0, 1, 0, 0;
    CHECK(max_abs_diff(c.matrix, want) == 0.0);
    CHECK(schmidt(c).entropy_ebits < 1e-12);
  }
  SUBCASE("four photons, amplitudes 1/2") {
    const PhotonEnsemble ens(ComplexMatrix::Constant(4, 4, 0.5));
    const ComplexMatrix c = coincidence_project(ens).matrix;
    // 1/2 * 1/2 * perm(2x2 of 1/2) = 1/4 * 2/4
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(std::abs(c(i, j) - (i == j ? 0.0 : 0.125)) < 1e-15);
    CHECK(rel_frobenius(c, enumerate_untransformed(ens.amplitudes())) < 1e-14);
  }
  SUBCASE("zero success amplitude") {
    // both atomic photons forced into port 0
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 0) = 1.0;
    CHECK_THROWS_WITH_AS(coincidence_project(PhotonEnsemble(m)),
                         "post-selection has zero success amplitude", Error);
    CHECK_THROWS_AS(coincidence_project_bruteforce(PhotonEnsemble(m)), Error);
  }
}

TEST_CASE("coincidence projection: untransformed ensemble matches direct assignment sum") {
  Rng rng(21);
  for (int n = 2; n <= 6; ++n) {
    const ComplexMatrix m = random_complex_matrix(n, n, rng);
    const ComplexMatrix c = coincidence_project(PhotonEnsemble(m)).matrix;
    CHECK(rel_frobenius(c, enumerate_untransformed(m)) < 1e-12);
    for (int i = 0; i < n; ++i) CHECK(c(i, i) == Complex(0.0));
  }
}

TEST_CASE("coincidence projection: permanent path equals enumeration through random networks") {
  Rng rng(22);
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const PhotonEnsemble ens(random_complex_matrix(n, n, rng), {rep % n, (rep + 1) % n});
      const auto net = compose(random_lossy_netlist(n, rng), PortBasis(n));
      const PhotonEnsemble out = apply_network_to_ensemble(ens, net);
      CHECK(rel_frobenius(coincidence_project(out).matrix,
                          coincidence_project_bruteforce(out).matrix) < 1e-12);
    }
  }
  CHECK_THROWS(coincidence_project_bruteforce(PhotonEnsemble(ComplexMatrix::Ones(9, 9))));
}

TEST_CASE("coincidence projection properties") {
  Rng rng(23);
  SUBCASE("exchange symmetry") {
    for (int n = 2; n <= 6; ++n) {
      ComplexMatrix m = random_complex_matrix(n, n, rng);
      m.row(1) = m.row(0);
      const auto net = compose(random_lossy_netlist(n, rng), PortBasis(n));
      const ComplexMatrix c =
          coincidence_project(apply_network_to_ensemble(PhotonEnsemble(m), net)).matrix;
      CHECK((c - c.transpose()).norm() < 1e-12 * c.norm());
    }
  }
  SUBCASE("linearity in each photon row") {
    const int n = 5;
    const ComplexMatrix m = random_complex_matrix(n, n, rng);
    const ComplexMatrix c = coincidence_project(PhotonEnsemble(m)).matrix;
    const Complex lambda{0.7, -1.3};
    for (int k = 0; k < n; ++k) {
      ComplexMatrix scaled = m;
      scaled.row(k) *= lambda;
      const ComplexMatrix cs = coincidence_project(PhotonEnsemble(scaled)).matrix;
      CHECK(rel_frobenius(cs, lambda * c) < 1e-13);
    }
  }
  SUBCASE("two photons through any network: Schmidt rank <= 2, at most one ebit") {
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const PhotonEnsemble ens(random_complex_matrix(2, 2, rng));
      const auto net = compose(random_lossy_netlist(2, rng), PortBasis(2));
      const SchmidtReport r = schmidt(coincidence_project(apply_network_to_ensemble(ens, net)));
      CHECK(r.numerical_rank <= 2);
      worst = std::max(worst, r.entropy_ebits);
    }
    CHECK(worst <= 1.0 + 1e-9);
  }
}

TEST_CASE("apply_network_to_ensemble") {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  const PhotonEnsemble ens(m);

  const PhotonEnsemble same = apply_network_to_ensemble(ens, LinearNetwork(2));
  CHECK(max_abs_diff(same.amplitudes(), m) == 0.0);

  const auto bs = compose({BeamSplitter{0, 1, std::acos(-1.0) / 4, 0.0}}, PortBasis(2));
  const PhotonEnsemble out = apply_network_to_ensemble(ens, bs);
  // photon 0 enters port 0: column 0 of the transfer
  CHECK(std::abs(out.amplitudes()(0, 0) - s) < 1e-15);
  CHECK(std::abs(out.amplitudes()(0, 1) + s) < 1e-15);
  CHECK(std::abs(out.amplitudes().row(0).norm() - 1.0) < 1e-12);

  const auto att = compose({Attenuator{0, 0.3}}, PortBasis(2));
  const PhotonEnsemble ones(ComplexMatrix::Ones(2, 2));
  const PhotonEnsemble lossy = apply_network_to_ensemble(ones, att);
  CHECK(lossy.amplitudes()(0, 0) == Complex(0.3));
  CHECK(lossy.amplitudes()(0, 1) == Complex(1.0));

  CHECK_THROWS_WITH(apply_network_to_ensemble(ens, LinearNetwork(3)),
                    doctest::Contains("dimension mismatch"));

  SUBCASE("label maps stay consistent with photon rows") {
    Rng rng(4);
    const PhotonEnsemble e(random_complex_matrix(4, 4, rng), {2, 0});
    const PhotonEnsemble t =
        apply_network_to_ensemble(e, compose(random_lossy_netlist(4, rng), PortBasis(4)));
    const ComplexVector ones4 = ComplexVector::Ones(4);
    CHECK(max_abs_diff(t.label_map(0) * ones4, t.amplitudes().row(2).transpose()) < 1e-13);
    CHECK(max_abs_diff(t.label_map(1) * ones4, t.amplitudes().row(0).transpose()) < 1e-13);
  }
}

TEST_CASE("single_detection_state") {
  ComplexVector ground = ComplexVector::Zero(3);
  ground(0) = 1.0;
  const auto prod = single_detection_state(ground, ground, 1.0, 1.0);
  CHECK(prod.normalized);
  CHECK(std::abs(prod.matrix.norm() - 1.0) < 1e-12);
  CHECK(schmidt(prod).entropy_ebits < 1e-12);

  ComplexVector a = ComplexVector::Zero(3), b = ComplexVector::Zero(3);
  a(1) = 1.0;
  b(2) = 1.0;
  CHECK(std::abs(schmidt(single_detection_state(a, b, 1.0, 1.0)).entropy_ebits - 1.0) < 1e-12);

  Rng rng(8);
  std::uniform_int_distribution<int> dim(2, 8);
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const int d = dim(rng);
    const ComplexVector w = random_complex_vector(2, rng);
    const auto c = single_detection_state(random_complex_vector(d, rng), random_complex_vector(d, rng),
                                          w(0), w(1));
    worst = std::max(worst, schmidt(c).entropy_ebits);
  }
  CHECK(worst <= 1.0 + 1e-9);

  CHECK_THROWS(single_detection_state(ComplexVector::Zero(3), ComplexVector::Zero(3), 1.0, 1.0));
  CHECK_THROWS(single_detection_state(ground, ComplexVector::Zero(4), 1.0, 1.0));
  CHECK_THROWS(single_detection_state(ComplexVector::Ones(1), ComplexVector::Ones(1), 1.0, 1.0));
}
