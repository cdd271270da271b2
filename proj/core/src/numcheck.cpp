#include "toricfano/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "toricfano/errors.hpp"

namespace toricfano::numcheck {

SamplePoint::SamplePoint(std::vector<std::complex<double>> homogeneous) : coords_(std::move(homogeneous)) {
  if (coords_.size() < 2) throw InputError("sample point needs at least two homogeneous coordinates");
  double best = 0.0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k].real()) || !std::isfinite(coords_[k].imag()))
      throw InputError("sample point has a non-finite coordinate");
    if (std::abs(coords_[k]) > best) {
      best = std::abs(coords_[k]);
      chart_ = k;
    }
  }
  if (best == 0.0) throw InputError("sample point has all coordinates zero");
}

std::vector<std::complex<double>> SamplePoint::affine() const {
  std::vector<std::complex<double>> w;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    if (k != chart_) w.push_back(coords_[k] / coords_[chart_]);
  return w;
}

DeltaValue fs_delta(std::size_t m, const SamplePoint& p) {
  if (p.dim() != m) throw InputError("fs_delta: point is not in CP^" + std::to_string(m));
  double norm2 = 0.0;
  for (const auto& z : p.coords()) norm2 += std::norm(z);
  DeltaValue out(m);
  for (std::size_t j = 1; j <= m; ++j)
    out[j - 1] = static_cast<double>(m + 1) * std::norm(p.coords()[j]) / norm2 - 1.0;
  return out;
}

namespace {

// log of the Fubini-Study density in affine coordinates, as a function of
// the 2m real coordinates (Re w_0, Im w_0, Re w_1, ...).
double log_density(std::size_t m, const std::vector<double>& x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return -static_cast<double>(m + 1) * std::log1p(r2);
}

}  // namespace

DeltaValue divergence_delta(std::size_t m, const SamplePoint& p, double step) {
  if (p.dim() != m) throw InputError("divergence_delta: point is not in CP^" + std::to_string(m));
  const auto w = p.affine();
  std::vector<double> x;
  for (const auto& c : w) {
    x.push_back(c.real());
    x.push_back(c.imag());
  }
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto at = [&](double dx) {
      auto y = x;
      y[i] += dx;
      return log_density(m, y);
    };
    grad[i] = (-at(2 * step) + 8 * at(step) - 8 * at(-step) + at(-2 * step)) / (12 * step);
  }

  // Chart coordinate k (in homogeneous numbering) carries weight
  // [k == j] - [chart == j] under W_j.
  std::vector<std::size_t> homogeneous_index;
  for (std::size_t k = 0; k <= m; ++k)
    if (k != p.chart()) homogeneous_index.push_back(k);

  DeltaValue out(m);
  for (std::size_t j = 1; j <= m; ++j) {
    // W_j acts on w_a by i * weight_a * w_a; J turns it into -weight_a * w_a.
    // div of that linear field is -2 * sum(weights) plus the density term.
    double div = 0.0;
    for (std::size_t a = 0; a < homogeneous_index.size(); ++a) {
      const double weight = (homogeneous_index[a] == j ? 1.0 : 0.0) - (p.chart() == j ? 1.0 : 0.0);
      if (weight == 0.0) continue;
      div += -2.0 * weight;
      div += -weight * (x[2 * a] * grad[2 * a] + x[2 * a + 1] * grad[2 * a + 1]);
    }
    out[j - 1] = 0.5 * div;
  }
  return out;
}

RationalVector fixed_point_delta(std::size_t m, std::size_t index) {
  if (m < 1) throw InputError("fixed_point_delta: m must be at least 1");
  if (index > m) throw InputError("fixed_point_delta: fixed point index " + std::to_string(index) + " out of range");
  RationalVector out(m, Rational(0));
  for (std::size_t j = 1; j <= m; ++j) {
    // Tangent coordinate z_k / z_index has weight [k == j] - [index == j];
    // J o A_Z is -weight on that complex line, real trace -2 * weight.
    Rational trace = 0;
    for (std::size_t k = 0; k <= m; ++k) {
      if (k == index) continue;
      const int weight = (k == j ? 1 : 0) - (index == j ? 1 : 0);
      trace += -2 * weight;
    }
    out[j - 1] = trace / 2;
  }
  return out;
}

std::size_t minimal_samples(std::size_t m) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) n *= 8;
  return n;
}

SamplePoint torus_act(const SamplePoint& p, const std::vector<double>& angles) {
  if (angles.size() != p.dim()) throw InputError("torus_act: expected one angle per torus factor");
  auto z = p.coords();
  for (std::size_t j = 1; j < z.size(); ++j) z[j] *= std::polar(1.0, angles[j - 1]);
  return SamplePoint(std::move(z));
}

std::vector<double> barycenter_integral(std::size_t m, std::size_t samples) {
  if (m < 1) throw InputError("barycenter_integral: m must be at least 1");
  if (samples < minimal_samples(m))
    throw InputError("barycenter_integral: " + std::to_string(samples) + " samples is below the minimum of " +
                     std::to_string(minimal_samples(m)));
  const auto per_axis = static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(samples), 1.0 / static_cast<double>(m)) + 1e-9));

  // Stick-breaking map from the cube to the simplex {s_1..s_m >= 0, sum <= 1};
  // its Jacobian prod (1 - s_1 - ... - s_{k-1}) times m! is the density.
  std::vector<double> total(m, 0.0);
  double weight_sum = 0.0;
  std::vector<std::size_t> idx(m, 0);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  std::size_t counter = 0;
  for (;;) {
    double remaining = 1.0;
    double jacobian = 1.0;
    std::vector<double> s(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double u = (static_cast<double>(idx[k]) + 0.5) / static_cast<double>(per_axis);
      jacobian *= remaining;
      s[k] = remaining * u;
      remaining -= s[k];
    }
    std::vector<std::complex<double>> z(m + 1);
    z[0] = std::sqrt(std::max(remaining, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
      const double phase = 2.0 * std::numbers::pi * std::fmod(golden * static_cast<double>(++counter * (k + 1)), 1.0);
      z[k + 1] = std::polar(std::sqrt(s[k]), phase);
    }
    const auto delta = fs_delta(m, SamplePoint(std::move(z)));
    for (std::size_t k = 0; k < m; ++k) total[k] += jacobian * delta[k];
    weight_sum += jacobian;

    std::size_t axis = 0;
    while (axis < m && ++idx[axis] == per_axis) idx[axis++] = 0;
    if (axis == m) break;
  }
  for (auto& t : total) t /= weight_sum;
  return total;
}

}  // namespace toricfano::numcheck
