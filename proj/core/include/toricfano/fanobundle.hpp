#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricfano/flagbase.hpp"
#include "toricfano/linalg.hpp"
#include "toricfano/toricfiber.hpp"

namespace toricfano {

/// tau on z(k) at Lie-algebra level: column j is the image in N_Q of the
/// j-th declared basis vector of z(k).
class TauMap {
 public:
  /// Validates shapes against the flag; the basis defaults to the flag's
  /// crossed-node basis. Throws InputError on a shape mismatch or a basis
  /// that is dependent or leaves z(k).
  static TauMap make(const FlagManifold& flag, RationalMatrix matrix, std::optional<std::vector<VectorH>> basis = {});

  const RationalMatrix& matrix() const { return matrix_; }
  const std::vector<VectorH>& basis() const { return basis_; }
  std::size_t fiber_dim() const { return matrix_.rows(); }
  /// rank == fiber_dim, i.e. tau is onto at Lie-algebra level.
  bool surjective() const { return surjective_; }

 private:
  RationalMatrix matrix_;
  std::vector<VectorH> basis_;
  bool surjective_ = false;
};

/// h_Q = h_V + B|z(k)^{-1}(tau^* Q), where (tau^* Q)(b_j) = <Q, tau(b_j)>.
VectorH pullback_point(const FlagManifold& flag, const TauMap& tau, const RationalVector& q);

struct Margin {
  std::size_t vertex;  // index into Polytope::vertices
  std::size_t root;    // index into RootSystem::roots()
  Rational value;
  bool operator==(const Margin&) const = default;
};

/// alpha(h_Q) for every vertex Q and every alpha in R_m+, ordered by vertex
/// index then root order.
std::vector<Margin> fano_margins(const FlagManifold& flag, const TauMap& tau, const Polytope& polytope);

struct FanoVerdict {
  bool fiber_fano = false;
  bool tau_surjective = false;
  std::vector<Margin> margins;
  std::vector<Margin> violations;  // margins with value <= 0
  bool is_fano = false;
};

/// The bundle is Fano iff the fiber is Fano and every margin is strictly
/// positive. Throws DomainError for a fan that is not smooth and complete,
/// InputError for a fiber/tau dimension mismatch or an empty painting with
/// a positive-dimensional fiber.
FanoVerdict fano_check(const FlagManifold& flag, const Fan& fan, const TauMap& tau);

enum class IntegralityStatus { integral, not_integral, not_checked };

/// Whether tau sends each given cocharacter generator of Z^o(K) into N.
/// Without generators the answer is not_checked. Throws InputError if a
/// generator is outside z(k).
IntegralityStatus check_tau_integrality(const FlagManifold& flag, const TauMap& tau,
                                        const std::optional<std::vector<VectorH>>& cocharacter_basis);

}  // namespace toricfano
