#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "toricfano/rational.hpp"

namespace toricfano::numcheck {

/// A point of CP^m in homogeneous coordinates (z_0 : ... : z_m).
class SamplePoint {
 public:
  explicit SamplePoint(std::vector<std::complex<double>> homogeneous);

  std::size_t dim() const { return coords_.size() - 1; }
  const std::vector<std::complex<double>>& coords() const { return coords_; }
  /// Index of the largest coordinate; the affine chart used for local work.
  std::size_t chart() const { return chart_; }
  /// Affine coordinates z_k / z_chart for k != chart, in increasing k.
  std::vector<std::complex<double>> affine() const;

 private:
  std::vector<std::complex<double>> coords_;
  std::size_t chart_ = 0;
};

using DeltaValue = std::vector<double>;

/// delta(W_j) = (1/2) div(J W_j) for the Fubini-Study volume, closed form:
/// (m + 1) |z_j|^2 / |z|^2 - 1. The generator W_j rotates z_j with weight +1.
DeltaValue fs_delta(std::size_t m, const SamplePoint& p);

/// Same quantity computed directly as a divergence: the Fubini-Study
/// density (1 + |w|^2)^-(m+1) in the point's affine chart, the linear field
/// J W_j in that chart, and a fourth-order central difference for the
/// gradient of the log-density.
DeltaValue divergence_delta(std::size_t m, const SamplePoint& p, double step = 1e-3);

/// (1/2) Tr(J o A_Z) at the fixed point where only z_index is nonzero,
/// from the exact isotropy weights of the standard torus action.
RationalVector fixed_point_delta(std::size_t m, std::size_t index);

/// Smallest accepted sample count for barycenter_integral.
std::size_t minimal_samples(std::size_t m);

/// Integral of delta against the normalized Fubini-Study volume, by a
/// midpoint rule on the simplex of |z_k|^2 / |z|^2 (the image of the round
/// sphere measure under the Hopf map) with deterministic phases. Uses
/// roughly `samples` evaluations. Throws InputError below minimal_samples.
std::vector<double> barycenter_integral(std::size_t m, std::size_t samples);

/// Point e^{i theta_j} acting on coordinate z_j (j = 1..m).
SamplePoint torus_act(const SamplePoint& p, const std::vector<double>& angles);

}  // namespace toricfano::numcheck
