#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ebitsim/core.hpp"
#include "ebitsim/optics.hpp"

namespace ebitsim {

using Rng = std::mt19937_64;

/// Entries with i.i.d. standard complex normal real/imag parts.
ComplexMatrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
ComplexVector random_complex_vector(Eigen::Index size, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix haar_unitary(int n, Rng& rng);

/// Haar unitary, random per-port attenuators, second Haar unitary; as an
/// element list so the result carries provenance.
std::vector<NetworkElement> random_lossy_netlist(int n, Rng& rng);

}  // namespace ebitsim
