#include "ebitsim/etpd.hpp"

#include <cmath>
#include <sstream>

#include "ebitsim/parallel.hpp"

namespace ebitsim {

MomentumGrid::MomentumGrid(int points, double extent) : points_(points), extent_(extent) {
  if (points < 3 || points % 2 == 0) fail("momentum grid needs an odd point count >= 3");
  if (!(extent > 0.0) || !std::isfinite(extent)) fail("momentum grid extent must be positive");
}

RealVector MomentumGrid::nodes() const {
  RealVector p(points_);
  for (int i = 0; i < points_; ++i) p(i) = node(i);
  // exact symmetry about zero
  const int mid = points_ / 2;
  p(mid) = 0.0;
  for (int i = 0; i < mid; ++i) p(points_ - 1 - i) = -p(i);
  return p;
}

MomentumGrid default_grid(double sigma, double delta, int points) {
  return MomentumGrid(points, kDefaultExtentFactor * std::max(sigma, delta));
}

SourceWavefunction SourceWavefunction::gaussian(double sigma) {
  if (!(sigma > 0.0)) fail("gaussian source width must be positive");
  SourceWavefunction s;
  s.sigma_ = sigma;
  return s;
}

SourceWavefunction SourceWavefunction::custom(ComplexVector values, const MomentumGrid& grid) {
  if (values.size() != grid.points()) fail("grid mismatch: source samples do not match grid");
  if (!values.allFinite()) fail("source samples must be finite");
  SourceWavefunction s;
  s.values_ = std::move(values);
  s.grid_ = grid;
  return s;
}

ComplexVector SourceWavefunction::sample(const MomentumGrid& grid) const {
  ComplexVector v;
  if (values_) {
    if (!(*grid_ == grid)) fail("grid mismatch: source sampled on a different grid");
    v = *values_;
  } else {
    const RealVector p = grid.nodes();
    v = (-p.array().square() / (4.0 * sigma_ * sigma_)).exp().matrix().cast<Complex>();
  }
  const double norm = std::sqrt(v.squaredNorm() * grid.weight());
  if (!(norm > 0.0)) fail_numerical("source wavefunction vanishes on the grid");
  return v / norm;
}

ComplexMatrix sample_acceptance(const AcceptanceFunction& g, const MomentumGrid& grid) {
  const int n = grid.points();
  return std::visit(
      [&](const auto& acc) -> ComplexMatrix {
        using T = std::decay_t<decltype(acc)>;
        if constexpr (std::is_same_v<T, SumGaussianAcceptance>) {
          if (!(acc.delta > 0.0)) fail("acceptance width must be positive");
          const RealVector p = grid.nodes();
          ComplexMatrix m(n, n);
          const double scale = 1.0 / (4.0 * acc.delta * acc.delta);
          for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
              const double s = p(i) + p(j);
              m(i, j) = std::exp(-s * s * scale);
            }
          }
          return m;
        } else if constexpr (std::is_same_v<T, DeltaSumAcceptance>) {
          ComplexMatrix m = ComplexMatrix::Zero(n, n);
          for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1.0;
          return m;
        } else if constexpr (std::is_same_v<T, SeparableAcceptance>) {
          if (!(acc.grid == grid) || acc.u.size() != n || acc.v.size() != n)
            fail("grid mismatch: separable acceptance sampled on a different grid");
          return acc.u * acc.v.transpose();
        } else {
          if (!(acc.grid == grid) || acc.values.rows() != n || acc.values.cols() != n)
            fail("grid mismatch: acceptance sampled on a different grid");
          if (!acc.values.allFinite()) fail("acceptance samples must be finite");
          return acc.values;
        }
      },
      g);
}

BipartiteAmplitude etpd_kernel_unnormalized(const SourceWavefunction& g1,
                                            const SourceWavefunction& g2,
                                            const AcceptanceFunction& g,
                                            const MomentumGrid& grid) {
  const ComplexVector s1 = g1.sample(grid);
  const ComplexVector s2 = g2.sample(grid);
  const ComplexMatrix acc = sample_acceptance(g, grid);
  const ComplexMatrix sym = acc + acc.transpose();
  ComplexMatrix k = s1.asDiagonal() * sym * s2.asDiagonal();
  k *= grid.weight();

  const double scale = 2.0 * acc.cwiseAbs().maxCoeff() * grid.weight() *
                       s1.norm() * s2.norm();
  if (!(k.norm() > 1e-12 * scale)) fail_numerical("zero post-selection amplitude");
  return BipartiteAmplitude{std::move(k), false};
}

BipartiteAmplitude build_etpd_kernel(const SourceWavefunction& g1, const SourceWavefunction& g2,
                                     const AcceptanceFunction& g, const MomentumGrid& grid) {
  return etpd_kernel_unnormalized(g1, g2, g, grid).normalize();
}

GaussianKernelParams gaussian_kernel_params(double sigma, double delta) {
  if (!(sigma > 0.0) || !(delta > 0.0)) fail("gaussian widths must be positive");
  GaussianKernelParams p;
  p.b = 1.0 / (4.0 * delta * delta);
  p.a = 1.0 / (4.0 * sigma * sigma) + p.b;
  // a^2 - b^2 = (a - b)(a + b) avoids cancellation when delta >> sigma.
  p.amplitude_ratio = p.b / (p.a + std::sqrt((p.a - p.b) * (p.a + p.b)));
  p.mu = p.amplitude_ratio * p.amplitude_ratio;
  return p;
}

double geometric_entropy(double mu) {
  if (!(mu >= 0.0 && mu < 1.0)) fail("geometric ratio must lie in [0, 1)");
  if (mu == 0.0) return 0.0;
  return -std::log1p(-mu) / std::log(2.0) - mu / (1.0 - mu) * std::log2(mu);
}

SchmidtReport gaussian_schmidt_oracle(double sigma, double delta) {
  const GaussianKernelParams p = gaussian_kernel_params(sigma, delta);
  std::vector<double> lambda;
  double l = 1.0 - p.mu;
  while (l >= 1e-14 && lambda.size() < 1'000'000) {
    lambda.push_back(l);
    l *= p.mu;
    if (p.mu == 0.0) break;
  }
  SchmidtReport r;
  r.schmidt_coefficients = Eigen::Map<const RealVector>(lambda.data(), lambda.size());
  r.singular_values = r.schmidt_coefficients.cwiseSqrt();
  r.entropy_ebits = geometric_entropy(p.mu);
  r.numerical_rank = static_cast<int>((r.schmidt_coefficients.array() > kRankCutoff).count());
  return r;
}

WidthSweepRow gaussian_width_row(double sigma, double delta, const MomentumGrid& grid) {
  const auto src = SourceWavefunction::gaussian(sigma);
  const BipartiteAmplitude k = build_etpd_kernel(src, src, SumGaussianAcceptance{delta}, grid);
  WidthSweepRow row;
  row.ratio = sigma / delta;
  row.sigma = sigma;
  row.delta = delta;
  row.points = grid.points();
  row.extent = grid.extent();
  row.entropy_ebits = schmidt(k).entropy_ebits;
  row.oracle_entropy_ebits = gaussian_schmidt_oracle(sigma, delta).entropy_ebits;
  row.rel_err = std::abs(row.entropy_ebits - row.oracle_entropy_ebits) /
                std::max(row.oracle_entropy_ebits, 1e-12);
  return row;
}

namespace {

WidthSweep run_sweep(const std::vector<double>& ratios,
                     const std::function<MomentumGrid(double sigma, double delta)>& grid_for) {
  if (ratios.empty()) fail("width sweep needs at least one ratio");
  for (size_t i = 0; i < ratios.size(); ++i) {
    if (!(ratios[i] > 0.0)) fail("width ratios must be positive");
    if (i > 0 && !(ratios[i] > ratios[i - 1])) fail("width ratios must be sorted ascending");
  }
  constexpr double delta = 1.0;
  WidthSweep out;
  out.rows.resize(ratios.size());
  parallel_for(ratios.size(), [&](size_t i) {
    const double sigma = ratios[i] * delta;
    out.rows[i] = gaussian_width_row(sigma, delta, grid_for(sigma, delta));
  });
  for (const auto& row : out.rows) {
    if (row.rel_err > kGridUnderResolvedRelErr) {
      const double need = kDefaultExtentFactor * std::max(row.sigma, row.delta);
      std::ostringstream os;
      os << "grid under-resolved at sigma/delta = " << row.ratio << " (rel_err " << row.rel_err
         << "); suggested extent >= " << need << " with spacing <= "
         << 0.5 * std::min(row.sigma, row.delta) << " (points >= "
         << (2 * static_cast<int>(std::ceil(need / (0.5 * std::min(row.sigma, row.delta)))) + 1)
         << ")";
      fail_numerical(os.str());
    }
  }
  out.monotone = true;
  for (size_t i = 1; i < out.rows.size(); ++i) {
    if (!(out.rows[i].entropy_ebits > out.rows[i - 1].entropy_ebits - 1e-6)) out.monotone = false;
  }
  return out;
}

}  // namespace

WidthSweep entanglement_vs_width_sweep(const std::vector<double>& sigma_over_delta,
                                       const MomentumGrid& grid) {
  return run_sweep(sigma_over_delta, [&](double, double) { return grid; });
}

WidthSweep entanglement_vs_width_sweep(const std::vector<double>& sigma_over_delta, int points) {
  return run_sweep(sigma_over_delta,
                   [&](double sigma, double delta) { return default_grid(sigma, delta, points); });
}

}  // namespace ebitsim
