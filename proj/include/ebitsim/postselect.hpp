#pragma once

#include <array>
#include <utility>

#include "ebitsim/core.hpp"
#include "ebitsim/optics.hpp"

namespace ebitsim {

inline constexpr int kPermanentMaxSize = 20;
inline constexpr int kPermanentBruteMaxSize = 9;
inline constexpr int kProjectBruteMaxSize = 8;

/// Ryser inclusion-exclusion with Gray-code updates, O(2^n n).
/// The 0x0 permanent is 1.
Complex permanent(const ComplexMatrix& m);

/// Sum over all n! permutations; reference for permanent().
Complex permanent_bruteforce(const ComplexMatrix& m);

/// N photons over N ports, two of which were emitted by the atoms.
///
/// Row k of `amplitudes` is photon k's amplitude over the ports. The two
/// atomic photons additionally carry a label map L (ports x atomic labels):
/// column a is the port amplitude of that photon given the atom recoiled
/// into motional label a. Label a is the emission port, so before any
/// network L = diag(row) and the row equals L * 1. Networks act on both.
class PhotonEnsemble {
 public:
  PhotonEnsemble(ComplexMatrix amplitudes, std::pair<int, int> atomic_rows = {0, 1},
                 double epsilon = 0.01);

  int photons() const noexcept { return static_cast<int>(amplitudes_.rows()); }
  int ports() const noexcept { return static_cast<int>(amplitudes_.cols()); }
  const ComplexMatrix& amplitudes() const noexcept { return amplitudes_; }
  std::pair<int, int> atomic_rows() const noexcept { return atomic_rows_; }
  double epsilon() const noexcept { return epsilon_; }

  /// Label map of atomic photon 0 (atom 1) or 1 (atom 2).
  const ComplexMatrix& label_map(int atom) const { return label_maps_.at(atom); }

  /// Ensemble after passing every photon through `transfer`.
  PhotonEnsemble transformed(const ComplexMatrix& transfer) const;

 private:
  PhotonEnsemble() = default;

  ComplexMatrix amplitudes_;
  std::pair<int, int> atomic_rows_{0, 1};
  double epsilon_ = 0.01;
  std::array<ComplexMatrix, 2> label_maps_;
};

/// Joint atomic amplitude C: C(a, b) is the amplitude for atom 1 in
/// motional label a and atom 2 in label b.
struct BipartiteAmplitude {
  ComplexMatrix matrix;
  bool normalized = false;

  /// Squared Frobenius norm; relative coincidence weight when unnormalized.
  double weight() const { return matrix.squaredNorm(); }
  BipartiteAmplitude normalize() const;
};

/// Coincidence projection (every detector clicks once). Atomic photons use
/// their label maps; remaining rows are ancillas:
///   C = L1^T * D * L2,  D_ij = perm(ancillas restricted to ports != i, j),
/// D_ii = 0. With untouched label maps this is
///   C_ij = M[r1][i] M[r2][j] perm(minor without rows r1, r2 and cols i, j).
/// Result is unnormalized.
BipartiteAmplitude coincidence_project(const PhotonEnsemble& ens);

/// Same contract by explicit enumeration of all n! detector assignments.
BipartiteAmplitude coincidence_project_bruteforce(const PhotonEnsemble& ens);

/// amplitudes' = amplitudes * T^T (detectors read output ports).
PhotonEnsemble apply_network_to_ensemble(const PhotonEnsemble& ens,
                                         const LinearNetwork& net);

/// w1 |psi1>|0> + w2 |0>|psi2>, normalized. Index 0 is the motional
/// ground state.
BipartiteAmplitude single_detection_state(const ComplexVector& psi1,
                                          const ComplexVector& psi2, Complex w1,
                                          Complex w2);

}  // namespace ebitsim
