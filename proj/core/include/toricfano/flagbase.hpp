#pragma once

#include <cstddef>
#include <vector>

#include "toricfano/linalg.hpp"
#include "toricfano/rootsys.hpp"

namespace toricfano {

/// Crossed simple nodes of a painted Dynkin diagram (0-based global indices).
struct Painting {
  std::vector<std::size_t> crossed;
};

struct RootMargin {
  std::size_t root;  // index into RootSystem::roots()
  Rational value;
  bool operator==(const RootMargin&) const = default;
};

/// The generalized flag manifold G/K of a painted Dynkin diagram.
///
/// R_o is the set of roots supported on uncrossed nodes; R_m+ the positive
/// roots outside R_o (this fixes the invariant complex structure). z(k) is
/// the subspace of h on which every root of R_o vanishes, i.e. the vectors
/// whose uncrossed evaluation coordinates are zero. h_V = sum of H_alpha
/// over R_m+ is the real model of the Kahler-Einstein element Z_V.
class FlagManifold {
 public:
  static FlagManifold build(RootSystem rs, Painting painting);

  const RootSystem& root_system() const { return rs_; }
  const Painting& painting() const { return painting_; }
  const std::vector<std::size_t>& r_o() const { return r_o_; }
  const std::vector<std::size_t>& r_m_plus() const { return r_m_plus_; }
  std::size_t zk_dim() const { return painting_.crossed.size(); }

  /// Unit evaluation vectors on the crossed nodes, in crossed order.
  const std::vector<VectorH>& zk_basis_default() const { return zk_basis_; }
  const VectorH& h_v() const { return h_v_; }
  /// Killing form restricted to z(k), in the default basis.
  const RationalMatrix& zk_gram() const { return zk_gram_; }
  RationalMatrix zk_gram(const std::vector<VectorH>& basis) const;

  bool in_zk(const VectorH& h) const;

  /// alpha(h) for every alpha in R_m+, in R_m+ order. Throws DomainError
  /// when h is not in z(k).
  std::vector<RootMargin> chamber_margins(const VectorH& h) const;
  bool in_chamber(const VectorH& h) const;

  /// Coefficients of h over a basis of (a subspace of) z(k). Throws
  /// InputError for a dependent basis or a basis vector outside z(k), and
  /// DomainError when h is outside the span.
  RationalVector express_in_zk(const VectorH& h, const std::vector<VectorH>& basis) const;

  /// Embeds crossed-node coordinates (length zk_dim) into full evaluation
  /// coordinates.
  VectorH from_crossed_coords(const RationalVector& crossed_coords) const;

 private:
  RootSystem rs_;
  Painting painting_;
  std::vector<std::size_t> r_o_;
  std::vector<std::size_t> r_m_plus_;
  std::vector<VectorH> zk_basis_;
  VectorH h_v_;
  RationalMatrix zk_gram_;
};

}  // namespace toricfano
