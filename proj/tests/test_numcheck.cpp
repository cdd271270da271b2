#include <doctest.h>

#include <cmath>
#include <random>

#include "toricfano/errors.hpp"
#include "toricfano/numcheck.hpp"
#include "toricfano/toricfiber.hpp"

using namespace toricfano;
using namespace toricfano::numcheck;
using cd = std::complex<double>;

namespace {

SamplePoint random_point(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> g;
  std::vector<cd> z(m + 1);
  for (auto& c : z) c = {g(rng), g(rng)};
  return SamplePoint(z);
}

}  // namespace

TEST_CASE("fs_delta at reference points") {
  CHECK(fs_delta(1, SamplePoint({1.0, 0.0}))[0] == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(std::abs(fs_delta(1, SamplePoint({1.0, 1.0}))[0]) < 1e-8);
  const auto d = fs_delta(2, SamplePoint({1.0, 0.0, 0.0}));
  CHECK(std::abs(d[0] + 1.0) < 1e-8);
  CHECK(std::abs(d[1] + 1.0) < 1e-8);
  // CP^1 affine formula 2|z|^2/(1+|z|^2) - 1
  const cd z{0.3, -1.7};
  CHECK(std::abs(fs_delta(1, SamplePoint({1.0, z}))[0] - (2 * std::norm(z) / (1 + std::norm(z)) - 1)) < 1e-14);
}

TEST_CASE("divergence_delta agrees with the closed form") {
  std::mt19937_64 rng(42);
  for (std::size_t m = 1; m <= 4; ++m)
    for (int i = 0; i < 50; ++i) {
      const auto p = random_point(rng, m);
      const auto a = fs_delta(m, p);
      const auto b = divergence_delta(m, p);
      for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-8);
    }
}

TEST_CASE("fixed_point_delta") {
  CHECK(fixed_point_delta(2, 0) == RationalVector{-1, -1});
  CHECK(fixed_point_delta(2, 1) == RationalVector{2, -1});
  CHECK(fixed_point_delta(1, 1) == RationalVector{1});
  CHECK_THROWS_AS(fixed_point_delta(2, 3), InputError);
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto poly = canonical_polytope(projective_space(m));
    for (std::size_t i = 0; i <= m; ++i) CHECK(fixed_point_delta(m, i) == poly.vertices[i]);
  }
}

TEST_CASE("numeric delta at fixed points matches the exact vertices") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<cd> z(m + 1, 0.0);
      z[i] = {0.6, 0.8};
      const SamplePoint p(z);
      const auto exact = fixed_point_delta(m, i);
      const auto a = fs_delta(m, p);
      const auto b = divergence_delta(m, p);
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(std::abs(a[j] - to_double(exact[j])) < 1e-8);
        CHECK(std::abs(b[j] - to_double(exact[j])) < 1e-8);
      }
    }
}

TEST_CASE("samples stay inside the polytope and approach its vertices") {
  std::mt19937_64 rng(5);
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto fan = projective_space(m);
    for (int i = 0; i < 200; ++i) {
      const auto d = fs_delta(m, random_point(rng, m));
      for (const auto& ray : fan.rays) {
        double pairing = 0;
        for (std::size_t j = 0; j < m; ++j) pairing += d[j] * static_cast<double>(ray[j]);
        CHECK(pairing >= -1.0 - 1e-6);
      }
    }
    // Near each fixed point the image is near the vertex.
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<cd> z(m + 1, cd{1e-3, 0.0});
      z[i] = 1.0;
      const auto d = fs_delta(m, SamplePoint(z));
      const auto v = fixed_point_delta(m, i);
      for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(d[j] - to_double(v[j])) < 1e-3);
    }
  }
}

TEST_CASE("torus invariance") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(0, 6.283185307179586);
  for (std::size_t m = 1; m <= 3; ++m)
    for (int i = 0; i < 50; ++i) {
      const auto p = random_point(rng, m);
      std::vector<double> th(m);
      for (auto& t : th) t = angle(rng);
      const auto a = fs_delta(m, p);
      const auto b = fs_delta(m, torus_act(p, th));
      for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-10);
    }
}

TEST_CASE("barycenter of the canonical polytope is the origin") {
  SUBCASE("CP^1") {
    const auto b = barycenter_integral(1, 10000);
    CHECK(std::abs(b[0]) < 1e-4);
  }
  SUBCASE("CP^2") {
    const auto b = barycenter_integral(2, 100000);
    CHECK(std::hypot(b[0], b[1]) < 1e-3);
  }
  SUBCASE("too few samples is an error") { CHECK_THROWS_AS(barycenter_integral(2, 10), InputError); }
}

TEST_CASE("sample point validation") {
  CHECK_THROWS_AS(SamplePoint({0.0, 0.0}), InputError);
  CHECK_THROWS_AS(SamplePoint({1.0}), InputError);
  CHECK(SamplePoint({0.1, 2.0, 0.5}).chart() == 1);
}
