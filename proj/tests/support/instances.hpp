#pragma once

// Shared fixtures and test-only oracles. Nothing here is used by the
// library; the brute-force routines deliberately avoid the library's
// fixed-point path.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "toricfano/fanobundle.hpp"
#include "toricfano/flagbase.hpp"
#include "toricfano/linalg.hpp"
#include "toricfano/rootsys.hpp"
#include "toricfano/toricfiber.hpp"

namespace toricfano::testing {

inline RationalVector rv(std::initializer_list<long long> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

/// Evaluation coordinates (alpha_1(h), ..., alpha_N(h)) of the element of
/// the D_N Cartan with orthonormal-weight coordinates `eps` (standard base
/// alpha_k = e_k - e_{k+1}, alpha_N = e_{N-1} + e_N).
inline VectorH d_type_from_eps(const RationalVector& eps) {
  const std::size_t n = eps.size();
  VectorH h = VectorH::zero(n);
  for (std::size_t k = 0; k + 1 < n; ++k) h.coords[k] = eps[k] - eps[k + 1];
  h.coords[n - 1] = eps[n - 2] + eps[n - 1];
  return h;
}

/// Root of D_N given by +-e_i +-e_j (0-based i != j) as simple-root
/// coefficients, by solving against the explicit simple roots.
inline RootCoeffs d_type_root(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
  std::vector<RationalVector> simple;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    RationalVector a(n, Rational(0));
    a[k] = 1;
    a[k + 1] = -1;
    simple.push_back(a);
  }
  RationalVector last(n, Rational(0));
  last[n - 2] = 1;
  last[n - 1] = 1;
  simple.push_back(last);
  RationalVector target(n, Rational(0));
  target[i] = si;
  target[j] = sj;
  const auto c = RationalMatrix::from_columns(simple).solve(target);
  RootCoeffs out;
  for (const auto& x : *c) out.push_back(boost::multiprecision::numerator(x).convert_to<int>());
  return out;
}

struct Instance {
  FlagManifold flag;
  TauMap tau;
  Fan fan;
};

/// Hirzebruch surface F_n as SL2 x_B CP^1: base A1 crossed {1}, z(k) basis
/// Y = diag(i, -i) with evaluation coordinate -2, tau = [n].
inline Instance hirzebruch(long long n) {
  auto flag = FlagManifold::build(RootSystem::build({{DynkinLetter::A, 1}}), Painting{{0}});
  auto tau = TauMap::make(flag, RationalMatrix::from_rows({rv({n})}), std::vector<VectorH>{VectorH{rv({-2})}});
  return {flag, tau, projective_space(1)};
}

/// SO(4n)/U(n)xU(n) with fiber CP^2 and tau = scale * Id on the basis
/// {E1, E2}, E1 = sum of e_k over the first block and E2 over the second
/// (orthonormal-weight coordinates). n = 1 uses A1 x A1 = D_2.
inline Instance so4n(std::size_t n, const Rational& scale) {
  const std::size_t big = 2 * n;
  RationalVector e1(big, Rational(0)), e2(big, Rational(0));
  for (std::size_t k = 0; k < n; ++k) e1[k] = 1;
  for (std::size_t k = n; k < big; ++k) e2[k] = 1;
  RootSystem rs = n == 1 ? RootSystem::build({{DynkinLetter::A, 1}, {DynkinLetter::A, 1}})
                         : RootSystem::build({{DynkinLetter::D, static_cast<int>(big)}});
  // For n = 1 the D_2 formulas still hold: alpha_1 = e1 - e2, alpha_2 = e1 + e2.
  auto flag = FlagManifold::build(std::move(rs), Painting{{n - 1, big - 1}});
  RationalMatrix t(2, 2);
  t(0, 0) = scale;
  t(1, 1) = scale;
  auto tau = TauMap::make(flag, t, std::vector<VectorH>{d_type_from_eps(e1), d_type_from_eps(e2)});
  return {flag, tau, projective_space(2)};
}

inline Instance so4n_standard(std::size_t n) { return so4n(n, Rational(static_cast<long long>(3 * n))); }

/// Brute-force vertices of {u : <u, v_r> >= -1 for all rays}: intersect
/// every dim-subset of boundary hyperplanes and keep feasible points.
inline std::set<RationalVector> halfspace_vertices(const Fan& fan) {
  const std::size_t m = fan.dim;
  const std::size_t nrays = fan.rays.size();
  std::set<RationalVector> out;
  std::vector<bool> pick(nrays, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(m, nrays)), true);
  do {
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < nrays; ++r)
      if (pick[r]) rows.emplace_back(fan.rays[r].begin(), fan.rays[r].end());
    const auto a = RationalMatrix::from_rows(rows);
    const auto u = a.solve(RationalVector(m, Rational(-1)));
    if (!u) continue;
    bool feasible = true;
    for (const auto& ray : fan.rays) {
      Rational s = 0;
      for (std::size_t j = 0; j < m; ++j) s += (*u)[j] * ray[j];
      feasible = feasible && s >= -1;
    }
    if (feasible) out.insert(*u);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Del Pezzo surface: CP^2 blown up at one torus-fixed point.
inline Fan blowup_cp2() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {1, 1}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

/// Random invertible rational matrix with small entries.
inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (;;) {
    RationalMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = Rational(num(rng), den(rng));
    if (s.determinant() != 0) return s;
  }
}

}  // namespace toricfano::testing
