#include "ebitsim/random.hpp"

namespace ebitsim {

ComplexMatrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex{re, im};
    }
  }
  return m;
}

ComplexVector random_complex_vector(Eigen::Index size, Rng& rng) {
  return random_complex_matrix(size, 1, rng).col(0);
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  const ComplexMatrix z = random_complex_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

std::vector<NetworkElement> random_lossy_netlist(int n, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<NetworkElement> out = reck_decompose(haar_unitary(n, rng));
  for (int p = 0; p < n; ++p) out.emplace_back(Attenuator{p, 0.2 + 0.8 * unit(rng)});
  const auto second = reck_decompose(haar_unitary(n, rng));
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace ebitsim
