#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ebitsim/core.hpp"

namespace ebitsim {

/// Optical ports (modes) of a network. Detector i reads port i.
class PortBasis {
 public:
  explicit PortBasis(int count);
  PortBasis(int count, std::vector<std::string> labels);

  int count() const noexcept { return count_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool contains(int port) const noexcept { return port >= 0 && port < count_; }

 private:
  int count_;
  std::vector<std::string> labels_;
};

/// Two-port mixer acting on (port_a, port_b) with block
///   [[cos t, e^{i phi} sin t], [-e^{-i phi} sin t, cos t]].
struct BeamSplitter {
  int port_a = 0;
  int port_b = 1;
  double theta = 0.0;  // mixing angle, rad
  double phi = 0.0;    // rad
};

struct PhaseShifter {
  int port = 0;
  double phi = 0.0;  // rad
};

/// Passive loss on one port; amplitude multiplied by t in [0, 1].
struct Attenuator {
  int port = 0;
  double t = 1.0;
};

using NetworkElement = std::variant<BeamSplitter, PhaseShifter, Attenuator>;

bool is_unitary_element(const NetworkElement& e) noexcept;

/// Port-to-port transfer matrix: output amplitude = transfer * input amplitude.
class LinearNetwork {
 public:
  /// Identity on `count` ports.
  explicit LinearNetwork(int count);

  /// Directly specified transfer; rejected if any singular value exceeds 1 + 1e-9.
  explicit LinearNetwork(ComplexMatrix transfer,
                         std::vector<NetworkElement> elements = {});

  int count() const noexcept { return static_cast<int>(transfer_.rows()); }
  const ComplexMatrix& transfer() const noexcept { return transfer_; }
  const std::vector<NetworkElement>& elements() const noexcept { return elements_; }

  /// `next` applied after this network.
  LinearNetwork then(const LinearNetwork& next) const;

 private:
  ComplexMatrix transfer_;
  std::vector<NetworkElement> elements_;
};

inline constexpr double kPhysicalitySlack = 1e-9;
inline constexpr double kUnitaryInputTol = 1e-8;

ComplexMatrix element_matrix(const NetworkElement& e, const PortBasis& basis);

/// Elements applied in list order: the first element acts first.
LinearNetwork compose(const std::vector<NetworkElement>& elements,
                      const PortBasis& basis);

/// Triangular beam-splitter mesh followed by one phase shifter per port.
/// Eliminates U row by row from the bottom using adjacent-column mixers,
/// leaving a diagonal phase that becomes the trailing phase shifters.
std::vector<NetworkElement> reck_decompose(const ComplexMatrix& unitary);

/// Real Householder unitary with first row (1, ..., 1)/sqrt(n); maps the
/// uniform mode onto port 0. Symmetric and self-inverse.
ComplexMatrix symmetric_collector_unitary(int n);

double largest_singular_value(const ComplexMatrix& m);

}  // namespace ebitsim
