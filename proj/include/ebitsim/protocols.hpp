#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ebitsim/entanglement.hpp"
#include "ebitsim/etpd.hpp"
#include "ebitsim/optics.hpp"
#include "ebitsim/postselect.hpp"

namespace ebitsim {

inline constexpr int kMinProtocolN = 2;
inline constexpr int kMaxProtocolN = 12;

/// One detector below both atoms; random motional states from `seed`
/// unless `orthogonal` selects the balanced orthogonal case.
struct SingleDetectionSpec {
  int dim = 3;
  bool orthogonal = false;
};

/// Two photons, two detectors, arbitrary passive network. Without an
/// explicit netlist a random lossy network is drawn from the seed. Photon
/// rows are random unless `symmetric` is set.
struct TwoPhotonSpec {
  std::optional<std::vector<NetworkElement>> network;
  bool symmetric = false;
};

struct SymmetricSpec {
  int n = 3;
};

enum class FilterStrength {
  PerPhoton,     // t = 1/sqrt(n-1): saturates log2 n
  PerComponent,  // t = 1/(n-1): does not
};

enum class Detection {
  OriginalPorts,   // collector -> filter -> collector^-1
  CollectorBasis,  // collector -> filter, detect there
};

struct SaturatingSpec {
  int n = 3;
  FilterStrength filter = FilterStrength::PerPhoton;
  Detection detection = Detection::OriginalPorts;
};

struct EtpdSpec {
  double sigma = 1.0;
  double delta = 1.0;
  int points = kDefaultGridPoints;
  std::optional<double> extent;  // default 8 * max(sigma, delta)
  bool delta_sum = false;        // idealized g = delta(pa + pb)
};

struct ProtocolSpec {
  std::variant<SingleDetectionSpec, TwoPhotonSpec, SymmetricSpec, SaturatingSpec, EtpdSpec> kind;
  std::uint64_t seed = 0;
};

std::string protocol_name(const ProtocolSpec& spec);

/// Every amplitude 1/sqrt(n); atomic rows (0, 1).
PhotonEnsemble build_symmetric_ensemble(int n);

double filter_amplitude(int n, FilterStrength strength);

struct SaturatingSetup {
  PhotonEnsemble ensemble;
  LinearNetwork network;
  double filter_t = 1.0;
};

/// Symmetric ensemble plus Reck-meshed collector, attenuator on port 0,
/// and (for OriginalPorts) the inverse collector.
SaturatingSetup build_saturating_protocol(int n, FilterStrength filter = FilterStrength::PerPhoton,
                                          Detection detection = Detection::OriginalPorts);

struct ProtocolResult {
  std::string protocol;
  int n = 0;  // photons (= detectors), motional dimension, or grid points
  BipartiteAmplitude amplitude;  // normalized
  SchmidtReport report;
  double coincidence_weight = 0.0;  // squared norm before normalization
  std::optional<double> sigma;
  std::optional<double> delta;
  std::optional<double> oracle_entropy_ebits;
  std::optional<double> rel_err;
};

ProtocolResult run_protocol(const ProtocolSpec& spec);

}  // namespace ebitsim
