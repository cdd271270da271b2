#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricfano/linalg.hpp"
#include "toricfano/rational.hpp"

namespace toricfano {

enum class DynkinLetter { A, B, C, D, E, F, G };

/// One simple factor of a semisimple root datum, e.g. {D, 4}.
struct SimpleType {
  DynkinLetter letter;
  int rank;

  std::string name() const;
  bool operator==(const SimpleType&) const = default;

  /// "A1", "D10", "E6", ... (case-insensitive letter).
  static SimpleType parse(std::string_view text);
};

/// Throws InputError unless (letter, rank) is an admissible Dynkin type.
void validate(const SimpleType& type);

/// Number of roots of a simple type from the classical table.
std::size_t classical_root_count(const SimpleType& type);

/// Integer coefficients of a root over the simple-root basis.
using RootCoeffs = std::vector<int>;

/// Element h of the real Cartan subspace, stored as its evaluations
/// (alpha_1(h), ..., alpha_r(h)) against the simple roots. The compact torus
/// element it stands for is W = -i h, so the pairing i*alpha(W) is alpha(h).
struct VectorH {
  RationalVector coords;

  std::size_t size() const { return coords.size(); }
  bool operator==(const VectorH&) const = default;

  static VectorH zero(std::size_t rank) { return {RationalVector(rank, Rational(0))}; }
  static VectorH unit(std::size_t rank, std::size_t i);
  VectorH& operator+=(const VectorH& rhs);
  friend VectorH operator+(VectorH lhs, const VectorH& rhs) { return lhs += rhs; }
  friend VectorH operator*(const Rational& s, VectorH v);
};

/// Element of the dual of the real Cartan subspace, stored by its
/// coefficients over the simple roots.
struct FunctionalH {
  RationalVector coeffs;

  bool operator==(const FunctionalH&) const = default;
  static FunctionalH from_root(const RootCoeffs& root);
};

Rational evaluate(const FunctionalH& phi, const VectorH& h);
Rational evaluate(const RootCoeffs& root, const VectorH& h);

/// Roots, positivity and Killing form of a semisimple Lie algebra, exact.
///
/// Roots are generated from the simple roots by closure under simple
/// reflections and kept sorted lexicographically by coefficient vector, so
/// the order is reproducible. The Gram matrix is the genuine Killing form
/// B(x, y) = sum over all roots beta of beta(x) beta(y) in evaluation
/// coordinates; it is integral and block diagonal across components.
class RootSystem {
 public:
  static RootSystem build(std::span<const SimpleType> components);
  static RootSystem build(std::initializer_list<SimpleType> components) {
    return build(std::span<const SimpleType>(components.begin(), components.size()));
  }

  const std::vector<SimpleType>& components() const { return components_; }
  std::size_t rank() const { return cartan_.size(); }
  std::size_t component_offset(std::size_t component) const { return offsets_.at(component); }

  const std::vector<RootCoeffs>& roots() const { return roots_; }
  bool is_positive(std::size_t index) const { return positive_.at(index); }
  std::vector<std::size_t> positive_indices() const;
  std::optional<std::size_t> find_root(const RootCoeffs& coeffs) const;

  /// Cartan integers a_ij = <alpha_i, alpha_j^vee>, block diagonal.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const RationalMatrix& gram() const { return gram_; }

  /// The unique h with B(h, .) = phi.
  VectorH killing_dual(const FunctionalH& phi) const;
  Rational killing(const VectorH& x, const VectorH& y) const;

  /// Reflection of beta in the hyperplane orthogonal to alpha.
  RootCoeffs reflect(const RootCoeffs& beta, const RootCoeffs& alpha) const;

  /// Generators of the Dynkin diagram automorphism group, as permutations
  /// of global node indices (perm[i] is the image of node i).
  std::vector<std::vector<std::size_t>> diagram_automorphisms() const;

 private:
  std::vector<SimpleType> components_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoeffs> roots_;
  std::vector<bool> positive_;
  RationalMatrix gram_;
  RationalMatrix gram_inverse_;
};

inline VectorH killing_dual(const RootSystem& rs, const FunctionalH& phi) { return rs.killing_dual(phi); }

}  // namespace toricfano
