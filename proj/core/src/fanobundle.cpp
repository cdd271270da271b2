#include "toricfano/fanobundle.hpp"

#include <string>

#include "toricfano/errors.hpp"

namespace toricfano {

TauMap TauMap::make(const FlagManifold& flag, RationalMatrix matrix, std::optional<std::vector<VectorH>> basis) {
  TauMap tau;
  tau.basis_ = basis ? std::move(*basis) : flag.zk_basis_default();
  if (tau.basis_.size() != flag.zk_dim())
    throw InputError("z(k) basis has " + std::to_string(tau.basis_.size()) + " vectors, expected " +
                     std::to_string(flag.zk_dim()));
  for (std::size_t j = 0; j < tau.basis_.size(); ++j) {
    if (tau.basis_[j].size() != flag.root_system().rank())
      throw InputError("z(k) basis vector " + std::to_string(j + 1) + " has the wrong length");
    if (!flag.in_zk(tau.basis_[j])) throw InputError("z(k) basis vector " + std::to_string(j + 1) + " is not in z(k)");
  }
  if (flag.zk_gram(tau.basis_).rank() != tau.basis_.size()) throw InputError("z(k) basis is linearly dependent");
  if (matrix.cols() != flag.zk_dim() && matrix.rows() > 0)
    throw InputError("tau has " + std::to_string(matrix.cols()) + " columns, expected " +
                     std::to_string(flag.zk_dim()));
  if (matrix.rows() == 0) matrix = RationalMatrix(0, flag.zk_dim());
  tau.surjective_ = matrix.rank() == matrix.rows();
  tau.matrix_ = std::move(matrix);
  return tau;
}

namespace {

// tau^* Q as a functional on z(k) in the declared basis, then solved
// against the restricted Killing form.
RationalVector pulled_coefficients(const RationalMatrix& zk_gram_inverse, const TauMap& tau, const RationalVector& q) {
  if (q.size() != tau.fiber_dim())
    throw InputError("vertex has length " + std::to_string(q.size()) + ", expected " +
                     std::to_string(tau.fiber_dim()));
  const RationalVector functional = tau.matrix().transpose() * q;
  return zk_gram_inverse * functional;
}

VectorH combine(const FlagManifold& flag, const TauMap& tau, const RationalVector& coeffs) {
  VectorH h = flag.h_v();
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) h += coeffs[j] * tau.basis()[j];
  return h;
}

RationalMatrix zk_gram_inverse(const FlagManifold& flag, const TauMap& tau) {
  auto inv = flag.zk_gram(tau.basis()).inverse();
  if (!inv) throw InputError("z(k) basis is linearly dependent");
  return *inv;
}

}  // namespace

VectorH pullback_point(const FlagManifold& flag, const TauMap& tau, const RationalVector& q) {
  return combine(flag, tau, pulled_coefficients(zk_gram_inverse(flag, tau), tau, q));
}

std::vector<Margin> fano_margins(const FlagManifold& flag, const TauMap& tau, const Polytope& polytope) {
  if (polytope.dim != tau.fiber_dim())
    throw InputError("fiber has rank " + std::to_string(polytope.dim) + " but tau has " +
                     std::to_string(tau.fiber_dim()) + " rows");
  const auto inv = zk_gram_inverse(flag, tau);
  const auto& roots = flag.root_system().roots();
  std::vector<Margin> out;
  out.reserve(polytope.vertices.size() * flag.r_m_plus().size());
  for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
    const VectorH h = combine(flag, tau, pulled_coefficients(inv, tau, polytope.vertices[v]));
    for (std::size_t k : flag.r_m_plus()) out.push_back({v, k, evaluate(roots[k], h)});
  }
  return out;
}

FanoVerdict fano_check(const FlagManifold& flag, const Fan& fan, const TauMap& tau) {
  if (fan.dim != tau.fiber_dim())
    throw InputError("fiber has rank " + std::to_string(fan.dim) + " but tau has " + std::to_string(tau.fiber_dim()) +
                     " rows");
  if (fan.dim > 0 && flag.zk_dim() == 0)
    throw InputError("empty painting: z(k) = 0 admits no surjection onto a positive-rank torus");
  FanoVerdict verdict;
  verdict.fiber_fano = is_fano(fan);
  verdict.tau_surjective = tau.surjective();
  if (fan.dim > 0) {
    verdict.margins = fano_margins(flag, tau, canonical_polytope(fan));
    for (const auto& m : verdict.margins)
      if (m.value <= 0) verdict.violations.push_back(m);
  }
  verdict.is_fano = verdict.fiber_fano && verdict.violations.empty();
  return verdict;
}

IntegralityStatus check_tau_integrality(const FlagManifold& flag, const TauMap& tau,
                                        const std::optional<std::vector<VectorH>>& cocharacter_basis) {
  if (!cocharacter_basis) return IntegralityStatus::not_checked;
  for (std::size_t j = 0; j < cocharacter_basis->size(); ++j)
    if (!flag.in_zk((*cocharacter_basis)[j]))
      throw InputError("cocharacter generator " + std::to_string(j + 1) + " is not in z(k)");
  for (const auto& g : *cocharacter_basis) {
    const RationalVector image = tau.matrix() * flag.express_in_zk(g, tau.basis());
    for (const auto& x : image)
      if (!is_integer(x)) return IntegralityStatus::not_integral;
  }
  return IntegralityStatus::integral;
}

}  // namespace toricfano
