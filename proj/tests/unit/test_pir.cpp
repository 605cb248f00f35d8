#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rankring/sampling.hpp"
#include "rankring/pir.hpp"

using namespace rankring;

namespace {

std::set<std::uint64_t> idempotent_set(const PirRing& r) {
  return {r.idempotents().begin(), r.idempotents().end()};
}

// Z/12 with h = X^2 + 9X + 1: X^2+X+1 mod 2 and X^2+1 mod 3.
PirExtension z12ext() { return PirExtension(decompose(12), {1, 9, 1}); }

std::vector<ExtElem> random_vector(const PirExtension& s, int n, Rng& rng) {
  std::vector<ExtElem> v;
  for (int j = 0; j < n; ++j) {
    ExtElem x{std::vector<std::uint64_t>(s.degree())};
    for (auto& c : x.coeffs) c = rng() % s.ring().eta();
    v.push_back(x);
  }
  return v;
}

}  // namespace

TEST_CASE("decompose") {
  const PirRing r40 = decompose(40);
  CHECK(r40.size() == 2);
  CHECK(idempotent_set(r40) == std::set<std::uint64_t>{16, 25});
  for (std::size_t j = 0; j < r40.size(); ++j) {
    const std::uint64_t e = r40.idempotents()[j];
    CHECK(e * e % 40 == e);
    CHECK(e % r40.component(j).modulus() == 1);
  }
  const PirRing r8 = decompose(8);
  CHECK(r8.size() == 1);
  CHECK(r8.idempotents() == std::vector<std::uint64_t>{1});

  // Oracle for Z/12: search [0, 12) for each congruence system.
  std::set<std::uint64_t> want;
  for (std::uint64_t x = 0; x < 12; ++x)
    if ((x % 4 == 1 && x % 3 == 0) || (x % 4 == 0 && x % 3 == 1)) want.insert(x);
  CHECK(idempotent_set(decompose(12)) == want);
  CHECK(want == std::set<std::uint64_t>{4, 9});

  CHECK_THROWS_AS(decompose(1), OutOfRange);
  CHECK_THROWS_AS(decompose(0), OutOfRange);
  CHECK_THROWS_AS(decompose(1000003ULL * 1000033ULL, 1000), OutOfRange);
}

TEST_CASE("CRT maps are inverse bijections") {
  const PirRing r = decompose(360);
  for (std::uint64_t x = 0; x < 360; ++x) {
    std::vector<std::uint64_t> parts;
    for (std::size_t j = 0; j < r.size(); ++j) parts.push_back(r.phi(x, j));
    CHECK(r.phi_inverse(parts) == x);
  }
  for (std::size_t j = 0; j < r.size(); ++j) CHECK(r.phi(0, j) == 0);
}

TEST_CASE("combined h of the Z/40 extension") {
  const PirRing r = decompose(40);
  std::vector<Extension> comps;
  for (const auto& c : r.components())
    comps.emplace_back(c, c.modulus() == 5 ? std::vector<std::uint64_t>{2, 4, 4, 0, 1}
                                           : std::vector<std::uint64_t>{1, 3, 6, 4, 1});
  const PirExtension s(r, comps);
  CHECK(s.combined_h() == std::vector<std::uint64_t>{17, 19, 14, 20, 1});
  const PirExtension back(r, s.combined_h());
  for (std::size_t j = 0; j < 2; ++j) CHECK(back.component(j).modulus_poly() == comps[j].modulus_poly());
  CHECK_THROWS_AS(PirExtension(r, std::vector<Extension>{comps[0], default_extension(5, 1, 3)}), DimensionMismatch);
  CHECK_THROWS_AS(PirExtension(r, std::vector<Extension>{comps[0], default_extension(3, 1, 4)}), MixedRings);
}

TEST_CASE("element CRT round trip and product") {
  const PirExtension s = z12ext();
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto v = random_vector(s, 2, rng);
    std::vector<std::vector<ExtElem>> parts;
    for (std::size_t j = 0; j < s.size(); ++j) parts.push_back(s.phi(v, j));
    CHECK(s.phi_inverse(parts) == v);
    const ExtElem p = s.mul(v[0], v[1]);
    for (std::size_t j = 0; j < s.size(); ++j)
      CHECK(s.phi(p, j) == s.component(j).mul(s.phi(v[0], j), s.phi(v[1], j)));
  }
}

TEST_CASE("pir rank equals minimal generating set size") {
  const PirExtension s = z12ext();
  Rng rng(11);
  CHECK(pir_rank(s, std::vector<ExtElem>(2, ExtElem{{0, 0}})) == 0);
  for (int i = 0; i < 25; ++i) {
    auto v = random_vector(s, 2, rng);
    // Push some coordinates into proper ideals so ranks vary.
    if (i % 3 == 0) v[1] = s.mul(v[0], ExtElem{{rng() % 12, rng() % 12}});
    if (i % 4 == 1)
      for (auto& x : v)
        for (auto& c : x.coeffs) c = c * 6 % 12;
    std::vector<oracle::Vec> gens;
    for (const auto& x : v) gens.push_back(x.coeffs);
    CHECK(pir_rank(s, v) == static_cast<std::size_t>(oracle::min_generating_set_size(gens, 2, 12)));
  }
}

TEST_CASE("pir code rank and distance against brute force") {
  const PirExtension s = z12ext();
  const oracle::Mul mul = [&](const ExtElem& a, const ExtElem& b) { return s.mul(a, b); };
  Rng rng(21);
  for (int i = 0; i < 12; ++i) {
    Matrix<ExtElem> g;
    g.append_row(random_vector(s, 3, rng));
    if (i % 2) {
      auto row = g.row(0);
      for (auto& x : row)
        for (auto& c : x.coeffs) c = c * (i % 4 == 1 ? 4 : 3) % 12;
      g.set_row(0, row);
    }
    const auto want = oracle::min_distance(g, 2, 12, mul);
    if (!want) {
      CHECK_THROWS_AS(pir_min_distance(s, g), ZeroCode);
      continue;
    }
    CHECK(pir_min_distance(s, g, DistanceMethod::SocleProjection) == *want);
    CHECK(pir_min_distance(s, g, DistanceMethod::Brute) == *want);
    std::size_t kmax = 0;
    for (const auto& c : pir_component_codes(s, g)) kmax = std::max(kmax, c.rank());
    CHECK(pir_code_rank(s, g) == kmax);
  }
}

TEST_CASE("single component agrees with the chain ring") {
  const PirExtension s(decompose(8), {1, 3, 6, 4, 1});
  const Extension& e = s.component(0);
  Rng rng(2);
  Matrix<ExtElem> g;
  for (int i = 0; i < 2; ++i) {
    std::vector<ExtElem> row;
    for (int j = 0; j < 3; ++j) row.push_back(e.random(rng));
    g.append_row(row);
  }
  CHECK(pir_min_distance(s, g) == min_rank_distance(LinearCode(e, g)));
  CHECK(pir_code_rank(s, g) == LinearCode(e, g).rank());
}
