#include "toricfano/flagbase.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "toricfano/errors.hpp"

namespace toricfano {

FlagManifold FlagManifold::build(RootSystem rs, Painting painting) {
  const std::size_t r = rs.rank();
  std::set<std::size_t> unique;
  for (std::size_t i : painting.crossed) {
    if (i >= r)
      throw InputError("crossed node " + std::to_string(i + 1) + " out of range 1.." + std::to_string(r));
    if (!unique.insert(i).second) throw InputError("crossed node " + std::to_string(i + 1) + " listed twice");
  }
  painting.crossed.assign(unique.begin(), unique.end());

  FlagManifold flag;
  flag.rs_ = std::move(rs);
  flag.painting_ = std::move(painting);
  const auto& roots = flag.rs_.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const bool on_crossed = std::any_of(flag.painting_.crossed.begin(), flag.painting_.crossed.end(),
                                        [&](std::size_t i) { return roots[k][i] != 0; });
    if (!on_crossed)
      flag.r_o_.push_back(k);
    else if (flag.rs_.is_positive(k))
      flag.r_m_plus_.push_back(k);
  }

  FunctionalH sum{RationalVector(r, Rational(0))};
  for (std::size_t k : flag.r_m_plus_)
    for (std::size_t i = 0; i < r; ++i) sum.coeffs[i] += roots[k][i];
  flag.h_v_ = flag.rs_.killing_dual(sum);

  for (std::size_t i : flag.painting_.crossed) flag.zk_basis_.push_back(VectorH::unit(r, i));
  flag.zk_gram_ = flag.zk_gram(flag.zk_basis_);
  return flag;
}

RationalMatrix FlagManifold::zk_gram(const std::vector<VectorH>& basis) const {
  RationalMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = rs_.killing(basis[i], basis[j]);
  return g;
}

bool FlagManifold::in_zk(const VectorH& h) const {
  if (h.size() != rs_.rank()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const bool crossed = std::binary_search(painting_.crossed.begin(), painting_.crossed.end(), i);
    if (!crossed && h.coords[i] != 0) return false;
  }
  return true;
}

std::vector<RootMargin> FlagManifold::chamber_margins(const VectorH& h) const {
  if (h.size() != rs_.rank()) throw InputError("chamber_margins: rank mismatch");
  if (!in_zk(h)) throw DomainError("chamber_margins: element is not in z(k)");
  std::vector<RootMargin> out;
  out.reserve(r_m_plus_.size());
  for (std::size_t k : r_m_plus_) out.push_back({k, evaluate(rs_.roots()[k], h)});
  return out;
}

bool FlagManifold::in_chamber(const VectorH& h) const {
  const auto margins = chamber_margins(h);
  return std::all_of(margins.begin(), margins.end(), [](const RootMargin& m) { return m.value > 0; });
}

RationalVector FlagManifold::express_in_zk(const VectorH& h, const std::vector<VectorH>& basis) const {
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!in_zk(basis[j])) throw InputError("basis vector " + std::to_string(j + 1) + " is not in z(k)");
  if (!in_zk(h)) throw DomainError("express_in_zk: element is not in z(k)");
  // Only crossed coordinates can be nonzero.
  std::vector<RationalVector> cols;
  for (const auto& b : basis) {
    RationalVector c;
    for (std::size_t i : painting_.crossed) c.push_back(b.coords[i]);
    cols.push_back(std::move(c));
  }
  RationalVector rhs;
  for (std::size_t i : painting_.crossed) rhs.push_back(h.coords[i]);
  if (basis.empty()) {
    if (std::any_of(rhs.begin(), rhs.end(), [](const Rational& q) { return q != 0; }))
      throw DomainError("express_in_zk: element is outside the span of the basis");
    return {};
  }
  RationalMatrix a(zk_dim(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < zk_dim(); ++i) a(i, j) = cols[j][i];
  if (a.rank() != basis.size()) throw InputError("express_in_zk: basis is linearly dependent");
  auto x = a.solve_in_span(rhs);
  if (!x) throw DomainError("express_in_zk: element is outside the span of the basis");
  return *x;
}

VectorH FlagManifold::from_crossed_coords(const RationalVector& crossed_coords) const {
  if (crossed_coords.size() != zk_dim())
    throw InputError("expected " + std::to_string(zk_dim()) + " crossed-node coordinates, got " +
                     std::to_string(crossed_coords.size()));
  VectorH h = VectorH::zero(rs_.rank());
  for (std::size_t j = 0; j < zk_dim(); ++j) h.coords[painting_.crossed[j]] = crossed_coords[j];
  return h;
}

}  // namespace toricfano
