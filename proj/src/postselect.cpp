#include "ebitsim/postselect.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ebitsim {

PhotonEnsemble::PhotonEnsemble(ComplexMatrix amplitudes, std::pair<int, int> atomic_rows,
                               double epsilon)
    : amplitudes_(std::move(amplitudes)), atomic_rows_(atomic_rows), epsilon_(epsilon) {
  const auto n = amplitudes_.rows();
  if (n != amplitudes_.cols())
    fail("photon ensemble must be square (photons == ports)");
  if (n < 2) fail("photon ensemble needs at least two photons");
  auto [r1, r2] = atomic_rows_;
  if (r1 == r2 || r1 < 0 || r2 < 0 || r1 >= n || r2 >= n)
    fail("atomic rows must be two distinct photon indices");
  if (!(epsilon_ > 0.0 && epsilon_ < 1.0)) fail("epsilon must lie in (0, 1)");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (amplitudes_.row(k).norm() == 0.0)
      fail("photon " + std::to_string(k) + " has zero amplitude");
  }
  label_maps_[0] = amplitudes_.row(r1).transpose().asDiagonal();
  label_maps_[1] = amplitudes_.row(r2).transpose().asDiagonal();
}

PhotonEnsemble PhotonEnsemble::transformed(const ComplexMatrix& transfer) const {
  if (transfer.rows() != ports() || transfer.cols() != ports())
    fail("network port count does not match ensemble");
  PhotonEnsemble out;
  out.amplitudes_ = amplitudes_ * transfer.transpose();
  out.atomic_rows_ = atomic_rows_;
  out.epsilon_ = epsilon_;
  out.label_maps_[0] = transfer * label_maps_[0];
  out.label_maps_[1] = transfer * label_maps_[1];
  return out;
}

BipartiteAmplitude BipartiteAmplitude::normalize() const {
  const double norm = matrix.norm();
  if (norm == 0.0) fail_numerical("post-selection has zero success amplitude");
  return BipartiteAmplitude{matrix / norm, true};
}

namespace {

std::vector<int> ancilla_rows(const PhotonEnsemble& ens) {
  std::vector<int> rows;
  auto [r1, r2] = ens.atomic_rows();
  for (int k = 0; k < ens.photons(); ++k) {
    if (k != r1 && k != r2) rows.push_back(k);
  }
  return rows;
}

// Product of photon row norms; the natural size of a coincidence amplitude.
double amplitude_scale(const PhotonEnsemble& ens) {
  double s = 1.0;
  for (int k = 0; k < ens.photons(); ++k) s *= ens.amplitudes().row(k).norm();
  return s;
}

BipartiteAmplitude checked(ComplexMatrix c, const PhotonEnsemble& ens) {
  if (!(c.norm() > 1e-12 * amplitude_scale(ens)))
    fail_numerical("post-selection has zero success amplitude");
  return BipartiteAmplitude{std::move(c), false};
}

}  // namespace

BipartiteAmplitude coincidence_project(const PhotonEnsemble& ens) {
  const int n = ens.photons();
  if (n > kPermanentMaxSize) fail("permanent size guard: n = " + std::to_string(n) + " > 20");
  const std::vector<int> anc = ancilla_rows(ens);

  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  ComplexMatrix minor(n - 2, n - 2);
  std::vector<int> cols;
  cols.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      cols.clear();
      for (int c = 0; c < n; ++c) {
        if (c != i && c != j) cols.push_back(c);
      }
      for (int r = 0; r < n - 2; ++r) {
        for (int c = 0; c < n - 2; ++c) minor(r, c) = ens.amplitudes()(anc[r], cols[c]);
      }
      d(i, j) = permanent(minor);
    }
  }
  ComplexMatrix c = ens.label_map(0).transpose() * d * ens.label_map(1);
  return checked(std::move(c), ens);
}

BipartiteAmplitude coincidence_project_bruteforce(const PhotonEnsemble& ens) {
  const int n = ens.photons();
  if (n > kProjectBruteMaxSize)
    fail("coincidence_project_bruteforce supports n <= 8, got " + std::to_string(n));
  auto [r1, r2] = ens.atomic_rows();
  const ComplexMatrix& l1 = ens.label_map(0);
  const ComplexMatrix& l2 = ens.label_map(1);

  // sigma[k] = detector reached by photon k.
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Complex anc{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
      if (k != r1 && k != r2) anc *= ens.amplitudes()(k, sigma[k]);
    }
    if (anc == Complex{0.0, 0.0}) continue;
    for (int a = 0; a < n; ++a) {
      const Complex x = l1(sigma[r1], a) * anc;
      for (int b = 0; b < n; ++b) c(a, b) += x * l2(sigma[r2], b);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return checked(std::move(c), ens);
}

PhotonEnsemble apply_network_to_ensemble(const PhotonEnsemble& ens, const LinearNetwork& net) {
  if (net.count() != ens.ports())
    fail("dimension mismatch: network has " + std::to_string(net.count()) +
         " ports, ensemble has " + std::to_string(ens.ports()));
  return ens.transformed(net.transfer());
}

BipartiteAmplitude single_detection_state(const ComplexVector& psi1, const ComplexVector& psi2,
                                          Complex w1, Complex w2) {
  if (psi1.size() != psi2.size()) fail("motional states must have equal dimension");
  if (psi1.size() < 2) fail("motional dimension must be at least 2");
  const auto d = psi1.size();
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  c.col(0) += w1 * psi1;
  c.row(0) += w2 * psi2.transpose();
  if (c.norm() == 0.0) fail_numerical("single-detection state has zero norm");
  return BipartiteAmplitude{c / c.norm(), true};
}

}  // namespace ebitsim
