#include "toricfano/toricfiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricfano/errors.hpp"
#include "toricfano/linalg.hpp"

namespace toricfano {

namespace {

RationalVector to_rational(const LatticeVector& v) { return RationalVector(v.begin(), v.end()); }

RationalMatrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  std::vector<RationalVector> rows;
  for (std::size_t i : cone) rows.push_back(to_rational(fan.rays[i]));
  return RationalMatrix::from_rows(rows);
}

std::string cone_name(const std::vector<std::size_t>& cone) {
  std::string s = "{";
  for (std::size_t k = 0; k < cone.size(); ++k) s += (k ? "," : "") + std::to_string(cone[k]);
  return s + "}";
}

// Index of the sublattice spanned by the rows, 0 if they do not span.
// Integer row reduction with Euclid steps keeps everything integral.
std::int64_t lattice_index(std::vector<LatticeVector> rows, std::size_t dim) {
  std::int64_t index = 1;
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::abs(rows[i][c]) < std::abs(rows[best][c]))) best = i;
      if (best == rows.size()) return 0;
      std::swap(rows[top], rows[best]);
      bool reduced = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const std::int64_t q = rows[i][c] / rows[top][c];
        for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    index *= std::abs(rows[top][c]);
    ++top;
  }
  return index;
}

void require_smooth_complete(const Fan& fan, const char* what) {
  const auto d = validate_fan(fan);
  if (!d.smooth || !d.complete)
    throw DomainError(std::string(what) + ": fan must be smooth and complete");
}

}  // namespace

FanDiagnostics validate_fan(const Fan& fan) {
  FanDiagnostics d;
  std::set<LatticeVector> seen_rays;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& v = fan.rays[i];
    if (v.size() != fan.dim)
      throw InputError("ray " + std::to_string(i) + " has length " + std::to_string(v.size()) + ", expected " +
                       std::to_string(fan.dim));
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g != 1) throw InputError("ray " + std::to_string(i) + " is not primitive");
    if (!seen_rays.insert(v).second) throw InputError("ray " + std::to_string(i) + " is a duplicate");
  }
  if (fan.max_cones.empty()) throw InputError("fan has no maximal cones");

  std::set<std::vector<std::size_t>> seen_cones;
  std::map<std::vector<std::size_t>, int> facet_count;
  d.smooth = true;
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    auto cone = fan.max_cones[k];
    if (cone.size() != fan.dim)
      throw InputError("cone " + std::to_string(k) + " has " + std::to_string(cone.size()) + " rays, expected " +
                       std::to_string(fan.dim));
    for (std::size_t i : cone)
      if (i >= fan.rays.size())
        throw InputError("cone " + std::to_string(k) + " references missing ray " + std::to_string(i));
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw InputError("cone " + std::to_string(k) + " repeats a ray");
    if (!seen_cones.insert(cone).second) throw InputError("cone " + std::to_string(k) + " is a duplicate");

    const Rational det = fan.dim == 0 ? Rational(1) : cone_matrix(fan, cone).determinant();
    if (det != 1 && det != -1) {
      d.smooth = false;
      d.messages.push_back("cone " + cone_name(cone) + " is not unimodular (det " + to_string(det) + ")");
    }
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      auto facet = cone;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
      ++facet_count[facet];
    }
  }

  d.complete = true;
  for (const auto& [facet, count] : facet_count)
    if (count != 2) {
      d.complete = false;
      d.messages.push_back("facet " + cone_name(facet) + " lies in " + std::to_string(count) +
                           " maximal cone(s), expected 2");
    }
  if (fan.dim == 0 && fan.max_cones.size() != 1) d.complete = false;

  d.effective = fan.dim == 0 || lattice_index(fan.rays, fan.dim) == 1;
  if (!d.effective) d.messages.push_back("rays do not span the lattice");
  return d;
}

std::vector<RationalVector> isotropy_weights(const Fan& fan, std::size_t cone) {
  const auto& c = fan.max_cones.at(cone);
  if (fan.dim == 0) return {};
  // Rows of (ray matrix)^{-T} are the dual basis.
  const auto inv = cone_matrix(fan, c).inverse();
  if (!inv) throw DomainError("cone " + cone_name(c) + " is degenerate");
  const auto dual = inv->transpose();
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(dual.row(i));
  return out;
}

bool is_fano(const Fan& fan) {
  require_smooth_complete(fan, "is_fano");
  for (const auto& cone : fan.max_cones) {
    if (fan.dim == 0) continue;
    const auto u = cone_matrix(fan, cone).solve(RationalVector(fan.dim, Rational(-1)));
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      if (std::find(cone.begin(), cone.end(), r) != cone.end()) continue;
      if (dot(*u, to_rational(fan.rays[r])) <= -1) return false;
    }
  }
  return true;
}

Polytope canonical_polytope(const Fan& fan) {
  require_smooth_complete(fan, "canonical_polytope");
  Polytope p;
  p.dim = fan.dim;
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    RationalVector vertex(fan.dim, Rational(0));
    for (const auto& w : isotropy_weights(fan, k))
      for (std::size_t j = 0; j < fan.dim; ++j) vertex[j] -= w[j];
    p.vertices.push_back(std::move(vertex));
    p.cone_of_vertex.push_back(k);
  }
  return p;
}

Fan projective_space(std::size_t m) {
  if (m < 1) throw InputError("projective_space: dimension must be at least 1");
  Fan f;
  f.dim = m;
  for (std::size_t i = 0; i < m; ++i) {
    LatticeVector e(m, 0);
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.emplace_back(m, -1);
  std::vector<std::size_t> base(m);
  std::iota(base.begin(), base.end(), 0);
  f.max_cones.push_back(base);
  for (std::size_t r = 1; r <= m; ++r) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < m; ++i)
      if (i != r - 1) cone.push_back(i);
    cone.push_back(m);
    f.max_cones.push_back(cone);
  }
  return f;
}

Fan point_fan() {
  Fan f;
  f.max_cones.push_back({});
  return f;
}

Fan hirzebruch_surface(std::int64_t a) {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

Fan product(const Fan& f1, const Fan& f2) {
  validate_fan(f1);
  validate_fan(f2);
  Fan f;
  f.dim = f1.dim + f2.dim;
  for (const auto& v : f1.rays) {
    LatticeVector w(f.dim, 0);
    std::copy(v.begin(), v.end(), w.begin());
    f.rays.push_back(w);
  }
  for (const auto& v : f2.rays) {
    LatticeVector w(f.dim, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(f1.dim));
    f.rays.push_back(w);
  }
  for (const auto& c1 : f1.max_cones)
    for (const auto& c2 : f2.max_cones) {
      auto cone = c1;
      for (std::size_t i : c2) cone.push_back(f1.rays.size() + i);
      f.max_cones.push_back(std::move(cone));
    }
  return f;
}

}  // namespace toricfano
