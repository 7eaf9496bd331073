#include "ebitsim/protocols.hpp"

#include <cmath>

#include "ebitsim/random.hpp"

namespace ebitsim {

namespace {

void require_n(int n) {
  if (n < kMinProtocolN || n > kMaxProtocolN)
    throw Error(ErrorKind::Config, "n out of range [2,12]");
}

}  // namespace

std::string protocol_name(const ProtocolSpec& spec) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SingleDetectionSpec>) return "single_detection";
        if constexpr (std::is_same_v<T, TwoPhotonSpec>) return "two_photon_two_detector";
        if constexpr (std::is_same_v<T, SymmetricSpec>) return "symmetric_n";
        if constexpr (std::is_same_v<T, SaturatingSpec>) return "saturating_n";
        return "etpd";
      },
      spec.kind);
}

PhotonEnsemble build_symmetric_ensemble(int n) {
  require_n(n);
  return PhotonEnsemble(ComplexMatrix::Constant(n, n, 1.0 / std::sqrt(double(n))));
}

double filter_amplitude(int n, FilterStrength strength) {
  require_n(n);
  const double m = n - 1;
  return strength == FilterStrength::PerPhoton ? 1.0 / std::sqrt(m) : 1.0 / m;
}

SaturatingSetup build_saturating_protocol(int n, FilterStrength filter, Detection detection) {
  require_n(n);
  const double t = filter_amplitude(n, filter);
  const ComplexMatrix collector = symmetric_collector_unitary(n);

  std::vector<NetworkElement> elements = reck_decompose(collector);
  elements.emplace_back(Attenuator{0, t});
  if (detection == Detection::OriginalPorts) {
    const auto back = reck_decompose(collector.adjoint());
    elements.insert(elements.end(), back.begin(), back.end());
  }
  return SaturatingSetup{build_symmetric_ensemble(n), compose(elements, PortBasis(n)), t};
}

namespace {

ProtocolResult finish(std::string name, int n, BipartiteAmplitude raw) {
  ProtocolResult r;
  r.protocol = std::move(name);
  r.n = n;
  r.coincidence_weight = raw.weight();
  r.amplitude = raw.normalize();
  r.report = schmidt(r.amplitude);
  return r;
}

ProtocolResult run(const SingleDetectionSpec& s, std::uint64_t seed) {
  if (s.dim < 2) throw Error(ErrorKind::Config, "dim must be >= 2");
  ComplexVector psi1 = ComplexVector::Zero(s.dim);
  ComplexVector psi2 = ComplexVector::Zero(s.dim);
  Complex w1{1.0, 0.0};
  Complex w2{1.0, 0.0};
  if (s.orthogonal) {
    if (s.dim < 3) throw Error(ErrorKind::Config, "orthogonal case needs dim >= 3");
    psi1(1) = 1.0;
    psi2(2) = 1.0;
  } else {
    Rng rng(seed);
    psi1 = random_complex_vector(s.dim, rng).normalized();
    psi2 = random_complex_vector(s.dim, rng).normalized();
    const ComplexVector w = random_complex_vector(2, rng);
    w1 = w(0);
    w2 = w(1);
  }
  ComplexMatrix c = ComplexMatrix::Zero(s.dim, s.dim);
  c.col(0) += w1 * psi1;
  c.row(0) += w2 * psi2.transpose();
  ProtocolResult r = finish("single_detection", s.dim, BipartiteAmplitude{c, false});
  r.amplitude = single_detection_state(psi1, psi2, w1, w2);
  return r;
}

ProtocolResult run(const TwoPhotonSpec& s, std::uint64_t seed) {
  Rng rng(seed);
  const PhotonEnsemble ens =
      s.symmetric ? PhotonEnsemble(ComplexMatrix::Constant(2, 2, 1.0 / std::sqrt(2.0)))
                  : PhotonEnsemble(random_complex_matrix(2, 2, rng));
  const auto elements = s.network ? *s.network : random_lossy_netlist(2, rng);
  const LinearNetwork net = compose(elements, PortBasis(2));
  return finish("two_photon_two_detector", 2,
                coincidence_project(apply_network_to_ensemble(ens, net)));
}

ProtocolResult run(const SymmetricSpec& s, std::uint64_t) {
  return finish("symmetric_n", s.n, coincidence_project(build_symmetric_ensemble(s.n)));
}

ProtocolResult run(const SaturatingSpec& s, std::uint64_t) {
  const SaturatingSetup setup = build_saturating_protocol(s.n, s.filter, s.detection);
  return finish("saturating_n", s.n,
                coincidence_project(apply_network_to_ensemble(setup.ensemble, setup.network)));
}

ProtocolResult run(const EtpdSpec& s, std::uint64_t) {
  if (!(s.sigma > 0.0) || !(s.delta > 0.0))
    throw Error(ErrorKind::Config, "sigma and delta must be positive");
  const MomentumGrid grid = s.extent ? MomentumGrid(s.points, *s.extent)
                                     : default_grid(s.sigma, s.delta, s.points);
  const auto src = SourceWavefunction::gaussian(s.sigma);
  const AcceptanceFunction acc = s.delta_sum ? AcceptanceFunction{DeltaSumAcceptance{}}
                                             : AcceptanceFunction{SumGaussianAcceptance{s.delta}};
  ProtocolResult r = finish("etpd", s.points, etpd_kernel_unnormalized(src, src, acc, grid));
  r.sigma = s.sigma;
  r.delta = s.delta;
  if (!s.delta_sum) {
    const double oracle = gaussian_schmidt_oracle(s.sigma, s.delta).entropy_ebits;
    r.oracle_entropy_ebits = oracle;
    r.rel_err = std::abs(r.report.entropy_ebits - oracle) / std::max(oracle, 1e-12);
  }
  return r;
}

}  // namespace

ProtocolResult run_protocol(const ProtocolSpec& spec) {
  return std::visit([&](const auto& k) { return run(k, spec.seed); }, spec.kind);
}

}  // namespace ebitsim
