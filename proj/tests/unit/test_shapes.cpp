#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "rankring/sampling.hpp"
#include "rankring/chain_ring.hpp"
#include "rankring/shapes.hpp"

using namespace rankring;

namespace {

BigInt big(std::uint64_t x) { return BigInt(x); }

std::map<Partition, std::uint64_t> enumerated_shapes(std::uint64_t p, int nu, int n) {
  const ChainRing r(p, nu);
  std::map<Partition, std::uint64_t> out;
  enumerate_submodules(r, n, {}, [&](const Matrix<std::uint64_t>& g) { ++out[shape_of_module(r, g)]; });
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition({3, 1, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition({1, 3}), OutOfRange);
  CHECK_THROWS_AS(Partition({-1}), OutOfRange);
  CHECK(Partition({3, 1}).to_string() == "(3,1)");
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(free_shape(3, 2)) == free_shape(2, 3));
  CHECK(free_shape(2, 3) == Partition({2, 2, 2}));
  CHECK(cardinality_log_q(Partition({3, 1})) == 4);
  CHECK(conjugate(Partition(std::vector<int>{})).empty());
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(6, 3, 3) == gaussian_binomial(6, 3, 3));
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), OutOfRange);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, 2) == gaussian_binomial(n, n - k, 2));
}

TEST_CASE("shape counts") {
  const Partition l({2, 2});
  CHECK(count_submodules_of_shape(l, l, 2) == 1);
  CHECK(count_submodules_of_shape(l, Partition({2}), 2) == 6);
  CHECK(count_submodules_of_shape(l, Partition({1}), 2) == 3);
  CHECK_THROWS_AS(count_submodules_of_shape(l, Partition({3}), 2), ShapeNotDominated);
  CHECK(count_submodules_of_rank(l, 1, 2, 2) == 9);
  CHECK(count_submodules_of_rank(l, 0, 2, 2) == 1);
  CHECK(beta(2, 2, 1, 2) == 9);
  CHECK(count_submodules_of_rank(free_shape(3, 3), 2, 3, 3) == beta(3, 3, 2, 3));
}

TEST_CASE("closure oracle agrees with the small worked counts") {
  const auto z4sq = oracle::submodules_by_shape(2, 2, 2);
  CHECK(z4sq.at(Partition({2})) == 6);
  CHECK(z4sq.at(Partition({1})) == 3);
  const auto f2cube = oracle::submodules_by_shape(2, 1, 3);
  CHECK(f2cube.at(Partition({1})) == 7);
}

TEST_CASE("enumerator agrees with the closure oracle") {
  for (auto [p, nu, n] : {std::tuple<std::uint64_t, int, int>{2, 2, 2}, {2, 3, 2}, {2, 2, 3}, {3, 2, 2}, {2, 1, 5},
                          {3, 1, 3}, {5, 1, 2}, {2, 4, 1}}) {
    CAPTURE(p);
    CAPTURE(nu);
    CAPTURE(n);
    CHECK(enumerated_shapes(p, nu, n) == oracle::submodules_by_shape(p, nu, n));
  }
}

TEST_CASE("formulas agree with enumeration") {
  for (auto [p, nu, n] : {std::tuple<std::uint64_t, int, int>{2, 2, 3}, {3, 2, 2}, {2, 3, 2}, {2, 1, 4}}) {
    const auto shapes = enumerated_shapes(p, nu, n);
    std::map<int, BigInt> by_rank;
    for (const auto& [mu, count] : shapes) {
      CHECK(count_submodules_of_shape(free_shape(nu, n), mu, p) == big(count));
      by_rank[static_cast<int>(mu.length())] += count;
    }
    for (int k = 0; k <= n; ++k) CHECK(beta(p, nu, k, n) == by_rank[k]);
  }
}

TEST_CASE("enumeration respects the rank filter and the budget") {
  const ChainRing z4(2, 2);
  SubmoduleEnumeration opts;
  opts.rank_filter = 1;
  CHECK(enumerate_submodules(z4, 2, opts, [](const Matrix<std::uint64_t>&) {}) == 9);
  opts.rank_filter = 0;
  std::uint64_t zero_modules = 0;
  enumerate_submodules(z4, 2, opts, [&](const Matrix<std::uint64_t>& g) {
    ++zero_modules;
    CHECK(shape_of_module(z4, g).empty());
  });
  CHECK(zero_modules == 1);
  SubmoduleEnumeration tiny;
  tiny.candidate_budget = 10;
  CHECK_THROWS_AS(enumerate_submodules(ChainRing(2, 1), 6, tiny, [](const Matrix<std::uint64_t>&) {}), TooLarge);
  SubmoduleEnumeration capped;
  capped.ambient_cap = 16;
  CHECK_THROWS_AS(enumerate_submodules(ChainRing(2, 1), 5, capped, [](const Matrix<std::uint64_t>&) {}), TooLarge);
}

TEST_CASE("shape of a module") {
  const ChainRing z4(2, 2), z8(2, 3);
  CHECK(shape_of_module(z4, Matrix<std::uint64_t>::from_rows({{2, 0}, {0, 2}})) == Partition({1, 1}));
  CHECK(shape_of_module(z8, identity(z8, 3)) == free_shape(3, 3));
}

TEST_CASE("beta reduces to gaussian binomials over fields") {
  for (std::uint64_t q : {2, 3, 5})
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) CHECK(beta(q, 1, k, n) == gaussian_binomial(n, k, q));
}
