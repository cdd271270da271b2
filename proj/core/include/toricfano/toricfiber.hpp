#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toricfano/rational.hpp"

namespace toricfano {

using LatticeVector = std::vector<std::int64_t>;

/// Fan of a toric manifold: rays in the cocharacter lattice N = Z^dim and
/// maximal cones given as sets of ray indices (each of size dim).
/// A rank-0 fan has no rays and the single empty cone.
struct Fan {
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

struct FanDiagnostics {
  bool smooth = false;
  bool complete = false;
  bool effective = false;
  std::vector<std::string> messages;
};

/// Structural checks. Throws InputError for a non-primitive or duplicate
/// ray, a duplicate cone, a cone of the wrong size or a bad ray index;
/// otherwise reports smoothness, completeness and effectiveness.
FanDiagnostics validate_fan(const Fan& fan);

/// Anticanonical test: for every maximal cone the linear functional u with
/// <u, v> = -1 on its rays satisfies <u, v> > -1 on every other ray.
/// Throws DomainError unless the fan is smooth and complete.
bool is_fano(const Fan& fan);

/// Fixed-point polytope: one point per maximal cone (same order).
struct Polytope {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;
  std::vector<std::size_t> cone_of_vertex;
};

/// Canonical polytope from isotropy weights: at the fixed point of cone
/// sigma the tangent weights are the dual basis u_i of sigma's rays, and
/// the point is -(u_1 + ... + u_m). Throws DomainError unless the fan is
/// smooth and complete.
Polytope canonical_polytope(const Fan& fan);

/// Isotropy weights at the fixed point of a maximal cone: the dual basis
/// of the cone's rays (row i pairs to 1 with ray i and 0 with the others).
std::vector<RationalVector> isotropy_weights(const Fan& fan, std::size_t cone);

/// CP^m: rays e_1, ..., e_m, -(e_1 + ... + e_m). Cone 0 is {e_1, ..., e_m};
/// cone r (1 <= r <= m) swaps e_r for the last ray. Cone r is the fixed point
/// where only the homogeneous coordinate z_r is nonzero.
Fan projective_space(std::size_t m);

/// Rank-0 fan (a point).
Fan point_fan();

/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch_surface(std::int64_t a);

/// Lattice N1 + N2, rays embedded, cones are all unions c1 u c2 in
/// lexicographic (c1, c2) order.
Fan product(const Fan& f1, const Fan& f2);

}  // namespace toricfano
