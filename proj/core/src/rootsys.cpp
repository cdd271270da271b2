#include "toricfano/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "toricfano/errors.hpp"

namespace toricfano {

namespace {

char letter_char(DynkinLetter l) { return "ABCDEFG"[static_cast<int>(l)]; }

// Simple roots in a Euclidean realization (Bourbaki numbering). Only the
// inner products matter; they give the Cartan integers.
std::vector<RationalVector> euclidean_simple_roots(const SimpleType& t) {
  const int r = t.rank;
  auto e = [](int dim, int i) {
    RationalVector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto diff = [](RationalVector a, const RationalVector& b, const Rational& s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= s * b[i];
    return a;
  };
  std::vector<RationalVector> out;
  switch (t.letter) {
    case DynkinLetter::A:
      for (int i = 0; i < r; ++i) out.push_back(diff(e(r + 1, i), e(r + 1, i + 1)));
      break;
    case DynkinLetter::B:
    case DynkinLetter::C:
    case DynkinLetter::D:
      for (int i = 0; i + 1 < r; ++i) out.push_back(diff(e(r, i), e(r, i + 1)));
      if (t.letter == DynkinLetter::B) out.push_back(e(r, r - 1));
      if (t.letter == DynkinLetter::C) out.push_back(diff(e(r, r - 1), e(r, r - 1), -1));
      if (t.letter == DynkinLetter::D) out.push_back(diff(e(r, r - 2), e(r, r - 1), -1));
      break;
    case DynkinLetter::G: {
      RationalVector a2 = {-2, 1, 1};
      out = {diff(e(3, 0), e(3, 1)), a2};
      break;
    }
    case DynkinLetter::F: {
      const Rational h(1, 2);
      out = {diff(e(4, 1), e(4, 2)), diff(e(4, 2), e(4, 3)), e(4, 3), RationalVector{h, -h, -h, -h}};
      break;
    }
    case DynkinLetter::E: {
      const Rational h(1, 2);
      out.push_back(RationalVector{h, -h, -h, -h, -h, -h, -h, h});
      out.push_back(diff(e(8, 0), e(8, 1), -1));
      for (int i = 0; i < 6; ++i) out.push_back(diff(e(8, i + 1), e(8, i)));
      out.resize(static_cast<std::size_t>(r));
      break;
    }
  }
  return out;
}

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  const auto simple = euclidean_simple_roots(t);
  const std::size_t r = simple.size();
  std::vector<std::vector<int>> a(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational v = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]);
      a[i][j] = boost::multiprecision::numerator(v).convert_to<int>();
    }
  return a;
}

// Closure of the simple roots under simple reflections. For a reduced
// root system this is the whole root set.
std::vector<RootCoeffs> reflection_closure(const std::vector<std::vector<int>>& cartan) {
  const std::size_t r = cartan.size();
  std::set<RootCoeffs> seen;
  std::deque<RootCoeffs> queue;
  for (std::size_t i = 0; i < r; ++i) {
    RootCoeffs c(r, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    const RootCoeffs beta = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      int pairing = 0;
      for (std::size_t i = 0; i < r; ++i) pairing += beta[i] * cartan[i][j];
      if (pairing == 0) continue;
      RootCoeffs image = beta;
      image[j] -= pairing;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string SimpleType::name() const { return std::string(1, letter_char(letter)) + std::to_string(rank); }

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("bad Dynkin type \"" + std::string(text) + "\"");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  const std::string_view letters = "ABCDEFG";
  const auto pos = letters.find(c);
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (pos == std::string_view::npos || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InputError("bad Dynkin type \"" + std::string(text) + "\"");
  SimpleType t{static_cast<DynkinLetter>(pos), rank};
  validate(t);
  return t;
}

void validate(const SimpleType& t) {
  bool ok = false;
  switch (t.letter) {
    case DynkinLetter::A: ok = t.rank >= 1; break;
    case DynkinLetter::B:
    case DynkinLetter::C: ok = t.rank >= 2; break;
    case DynkinLetter::D: ok = t.rank >= 3; break;
    case DynkinLetter::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case DynkinLetter::F: ok = t.rank == 4; break;
    case DynkinLetter::G: ok = t.rank == 2; break;
  }
  if (!ok) throw InputError("inadmissible Dynkin type " + t.name());
}

std::size_t classical_root_count(const SimpleType& t) {
  validate(t);
  const auto r = static_cast<std::size_t>(t.rank);
  switch (t.letter) {
    case DynkinLetter::A: return r * (r + 1);
    case DynkinLetter::B:
    case DynkinLetter::C: return 2 * r * r;
    case DynkinLetter::D: return 2 * r * (r - 1);
    case DynkinLetter::E: return r == 6 ? 72 : r == 7 ? 126 : 240;
    case DynkinLetter::F: return 48;
    case DynkinLetter::G: return 12;
  }
  return 0;
}

VectorH VectorH::unit(std::size_t rank, std::size_t i) {
  VectorH v = zero(rank);
  v.coords.at(i) = 1;
  return v;
}

VectorH& VectorH::operator+=(const VectorH& rhs) {
  if (rhs.size() != size()) throw InputError("VectorH: rank mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += rhs.coords[i];
  return *this;
}

VectorH operator*(const Rational& s, VectorH v) {
  for (auto& c : v.coords) c *= s;
  return v;
}

FunctionalH FunctionalH::from_root(const RootCoeffs& root) {
  FunctionalH f;
  f.coeffs.reserve(root.size());
  for (int c : root) f.coeffs.emplace_back(c);
  return f;
}

Rational evaluate(const FunctionalH& phi, const VectorH& h) {
  if (phi.coeffs.size() != h.size()) throw InputError("evaluate: rank mismatch");
  return dot(phi.coeffs, h.coords);
}

Rational evaluate(const RootCoeffs& root, const VectorH& h) {
  if (root.size() != h.size()) throw InputError("evaluate: rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < root.size(); ++i)
    if (root[i] != 0) s += root[i] * h.coords[i];
  return s;
}

RootSystem RootSystem::build(std::span<const SimpleType> components) {
  if (components.empty()) throw InputError("root system needs at least one simple component");
  RootSystem rs;
  std::size_t total = 0;
  for (const auto& t : components) {
    validate(t);
    rs.components_.push_back(t);
    rs.offsets_.push_back(total);
    total += static_cast<std::size_t>(t.rank);
  }
  rs.cartan_.assign(total, std::vector<int>(total, 0));
  std::vector<RootCoeffs> all;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto local = cartan_matrix(components[k]);
    const std::size_t off = rs.offsets_[k];
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = 0; j < local.size(); ++j) rs.cartan_[off + i][off + j] = local[i][j];
    for (const auto& local_root : reflection_closure(local)) {
      RootCoeffs global(total, 0);
      std::copy(local_root.begin(), local_root.end(), global.begin() + static_cast<std::ptrdiff_t>(off));
      all.push_back(std::move(global));
    }
  }
  std::sort(all.begin(), all.end());
  rs.roots_ = std::move(all);
  rs.positive_.reserve(rs.roots_.size());
  for (const auto& root : rs.roots_)
    rs.positive_.push_back(std::all_of(root.begin(), root.end(), [](int c) { return c >= 0; }));

  rs.gram_ = RationalMatrix(total, total);
  for (const auto& root : rs.roots_)
    for (std::size_t i = 0; i < total; ++i) {
      if (root[i] == 0) continue;
      for (std::size_t j = 0; j < total; ++j)
        if (root[j] != 0) rs.gram_(i, j) += root[i] * root[j];
    }
  rs.gram_inverse_ = *rs.gram_.inverse();
  return rs;
}

std::vector<std::size_t> RootSystem::positive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (positive_[i]) out.push_back(i);
  return out;
}

std::optional<std::size_t> RootSystem::find_root(const RootCoeffs& coeffs) const {
  const auto it = std::lower_bound(roots_.begin(), roots_.end(), coeffs);
  if (it == roots_.end() || *it != coeffs) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

VectorH RootSystem::killing_dual(const FunctionalH& phi) const {
  if (phi.coeffs.size() != rank()) throw InputError("killing_dual: rank mismatch");
  return {gram_inverse_ * phi.coeffs};
}

Rational RootSystem::killing(const VectorH& x, const VectorH& y) const {
  if (x.size() != rank() || y.size() != rank()) throw InputError("killing: rank mismatch");
  return dot(x.coords, gram_ * y.coords);
}

RootCoeffs RootSystem::reflect(const RootCoeffs& beta, const RootCoeffs& alpha) const {
  // (phi, psi) = phi(H_psi) is the form induced on the dual.
  const VectorH h_alpha = killing_dual(FunctionalH::from_root(alpha));
  const Rational pairing = 2 * evaluate(beta, h_alpha) / evaluate(alpha, h_alpha);
  if (!is_integer(pairing)) throw DomainError("reflect: non-integral Cartan pairing");
  const int n = boost::multiprecision::numerator(pairing).convert_to<int>();
  RootCoeffs out = beta;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= n * alpha[i];
  return out;
}

std::vector<std::vector<std::size_t>> RootSystem::diagram_automorphisms() const {
  std::vector<std::vector<std::size_t>> gens;
  auto identity = [&] {
    std::vector<std::size_t> p(rank());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    return p;
  };
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& t = components_[k];
    const std::size_t off = offsets_[k];
    const auto r = static_cast<std::size_t>(t.rank);
    if (t.letter == DynkinLetter::A && r >= 2) {
      auto p = identity();
      for (std::size_t i = 0; i < r; ++i) p[off + i] = off + r - 1 - i;
      gens.push_back(std::move(p));
    } else if (t.letter == DynkinLetter::D) {
      auto p = identity();
      std::swap(p[off + r - 2], p[off + r - 1]);
      gens.push_back(std::move(p));
      if (r == 4) {
        auto q = identity();
        std::swap(q[off + 0], q[off + 2]);
        gens.push_back(std::move(q));
      }
    } else if (t.letter == DynkinLetter::E && r == 6) {
      auto p = identity();
      std::swap(p[off + 0], p[off + 5]);
      std::swap(p[off + 2], p[off + 4]);
      gens.push_back(std::move(p));
    }
  }
  // Swapping isomorphic components is also a diagram automorphism.
  for (std::size_t a = 0; a < components_.size(); ++a)
    for (std::size_t b = a + 1; b < components_.size(); ++b) {
      if (!(components_[a] == components_[b])) continue;
      auto p = identity();
      for (std::size_t i = 0; i < static_cast<std::size_t>(components_[a].rank); ++i)
        std::swap(p[offsets_[a] + i], p[offsets_[b] + i]);
      gens.push_back(std::move(p));
      break;
    }
  return gens;
}

}  // namespace toricfano
