#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ebitsim/core.hpp"
#include "ebitsim/entanglement.hpp"
#include "ebitsim/postselect.hpp"

namespace ebitsim {

/// Uniform 1-D momentum grid on [-extent, extent] (hbar = 1).
class MomentumGrid {
 public:
  MomentumGrid(int points, double extent);

  int points() const noexcept { return points_; }
  double extent() const noexcept { return extent_; }
  double weight() const noexcept { return 2.0 * extent_ / (points_ - 1); }
  double node(int i) const noexcept { return -extent_ + i * weight(); }
  RealVector nodes() const;

  bool operator==(const MomentumGrid&) const = default;

 private:
  int points_;
  double extent_;
};

inline constexpr int kDefaultGridPoints = 257;
inline constexpr double kDefaultExtentFactor = 8.0;

/// Default grid for a Gaussian source of width sigma and acceptance width delta.
MomentumGrid default_grid(double sigma, double delta, int points = kDefaultGridPoints);

/// Photon momentum amplitude G(p). A Gaussian of width sigma has
/// |G(p)|^2 proportional to exp(-p^2 / (2 sigma^2)).
class SourceWavefunction {
 public:
  static SourceWavefunction gaussian(double sigma);
  static SourceWavefunction custom(ComplexVector values, const MomentumGrid& grid);

  /// L2-normalized samples (sum |G|^2 * weight = 1).
  ComplexVector sample(const MomentumGrid& grid) const;

 private:
  SourceWavefunction() = default;

  double sigma_ = 0.0;
  std::optional<ComplexVector> values_;
  std::optional<MomentumGrid> grid_;
};

struct SumGaussianAcceptance {
  double delta = 1.0;  // g = exp(-(pa + pb)^2 / (4 delta^2))
};
struct DeltaSumAcceptance {};  // pa + pb = 0 on the grid anti-diagonal
struct SeparableAcceptance {
  ComplexVector u;  // g = u(pa) v(pb)
  ComplexVector v;
  MomentumGrid grid;
};
struct CustomAcceptance {
  ComplexMatrix values;  // g(pa_i, pb_j)
  MomentumGrid grid;
};

using AcceptanceFunction =
    std::variant<SumGaussianAcceptance, DeltaSumAcceptance, SeparableAcceptance, CustomAcceptance>;

/// Sampled g(p_i, p_j) on `grid`.
ComplexMatrix sample_acceptance(const AcceptanceFunction& g, const MomentumGrid& grid);

/// Atomic recoil kernel after an ETPD click with free-space photons:
///   K(p1, p2) = G1(p1) G2(p2) [g(p1, p2) + g(p2, p1)] * weight.
/// Unnormalized; weight() is the relative post-selection weight.
BipartiteAmplitude etpd_kernel_unnormalized(const SourceWavefunction& g1,
                                            const SourceWavefunction& g2,
                                            const AcceptanceFunction& g,
                                            const MomentumGrid& grid);

/// Frobenius-normalized kernel.
BipartiteAmplitude build_etpd_kernel(const SourceWavefunction& g1, const SourceWavefunction& g2,
                                     const AcceptanceFunction& g, const MomentumGrid& grid);

/// Gaussian source x Gaussian acceptance: exp(-a (p1^2 + p2^2) - 2 b p1 p2)
/// with a = 1/(4 sigma^2) + 1/(4 delta^2), b = 1/(4 delta^2).
struct GaussianKernelParams {
  double a = 0.0;
  double b = 0.0;
  double amplitude_ratio = 0.0;  // rho = b / (a + sqrt(a^2 - b^2))
  double mu = 0.0;               // rho^2; lambda_n = (1 - mu) mu^n
};

GaussianKernelParams gaussian_kernel_params(double sigma, double delta);

/// S(mu) = -log2(1 - mu) - mu/(1 - mu) log2(mu), mu in [0, 1).
double geometric_entropy(double mu);

/// Analytic Schmidt spectrum of the Gaussian kernel, truncated where
/// lambda_n < 1e-14. entropy_ebits is the closed form S(mu).
SchmidtReport gaussian_schmidt_oracle(double sigma, double delta);

struct WidthSweepRow {
  double ratio = 0.0;  // sigma / delta
  double sigma = 0.0;
  double delta = 0.0;
  int points = 0;
  double extent = 0.0;
  double entropy_ebits = 0.0;
  double oracle_entropy_ebits = 0.0;
  double rel_err = 0.0;
};

struct WidthSweep {
  std::vector<WidthSweepRow> rows;
  bool monotone = false;  // strictly increasing within 1e-6
};

/// Numerical entropy of a Gaussian source/acceptance kernel against the
/// oracle. delta = 1, sigma = ratio.
WidthSweepRow gaussian_width_row(double sigma, double delta, const MomentumGrid& grid);

/// Sweep on one shared grid.
WidthSweep entanglement_vs_width_sweep(const std::vector<double>& sigma_over_delta,
                                       const MomentumGrid& grid);
/// Sweep with the default grid chosen per row.
WidthSweep entanglement_vs_width_sweep(const std::vector<double>& sigma_over_delta,
                                       int points = kDefaultGridPoints);

inline constexpr double kGridUnderResolvedRelErr = 0.05;

}  // namespace ebitsim
