#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "ebitsim/postselect.hpp"

namespace ebitsim {

Complex permanent(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) fail("permanent requires a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n > kPermanentMaxSize) fail("permanent size guard: n = " + std::to_string(n) + " > 20");
  if (n == 0) return 1.0;

  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, walking
  // subsets S in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(static_cast<size_t>(n), Complex{0.0, 0.0});
  Complex total{0.0, 0.0};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (int i = 0; i < n; ++i) row_sums[i] += m(i, col);
    } else {
      for (int i = 0; i < n; ++i) row_sums[i] -= m(i, col);
    }
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    const bool odd = std::popcount(gray) & 1;
    total += odd ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

Complex permanent_bruteforce(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) fail("permanent requires a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n > kPermanentBruteMaxSize)
    fail("permanent_bruteforce supports n <= 9, got " + std::to_string(n));
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total{0.0, 0.0};
  do {
    Complex prod{1.0, 0.0};
    for (int k = 0; k < n; ++k) prod *= m(k, sigma[k]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace ebitsim
