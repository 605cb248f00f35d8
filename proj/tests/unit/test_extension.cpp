#include <cmath>
#include <random>

#include "doctest.h"
#include "rankring/extension.hpp"
#include "rankring/fp_poly.hpp"

using namespace rankring;

namespace {

// Schoolbook reduction of X^e modulo monic h over Z/mod.
std::vector<std::uint64_t> x_power_mod(int e, const std::vector<std::uint64_t>& h, std::uint64_t mod) {
  const std::size_t m = h.size() - 1;
  std::vector<std::uint64_t> r(e + 1, 0);
  r[e] = 1;
  for (int d = e; d >= static_cast<int>(m); --d) {
    const std::uint64_t c = r[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= m; ++i) r[d - m + i] = (r[d - m + i] + mod * mod - c * h[i]) % mod;
  }
  r.resize(m);
  return r;
}

const Extension z8ext() { return Extension(ChainRing(2, 3), {1, 3, 6, 4, 1}); }

}  // namespace

TEST_CASE("validation of h") {
  const Extension s = z8ext();
  CHECK(s.degree() == 4);
  CHECK(fp::reduce(s.modulus_poly(), 2) == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
  CHECK_NOTHROW(Extension(ChainRing(2, 2), {1, 0, 1, 0, 0, 1}));
  CHECK_THROWS_AS(Extension(ChainRing(2, 3), {1, 0, 1}), ReducibleResidue);
  CHECK_THROWS_AS(Extension(ChainRing(2, 3), {1, 1, 2}), NotMonic);
  try {
    Extension(ChainRing(2, 3), {1, 0, 1});
  } catch (const ReducibleResidue& e) {
    CHECK(e.factor() == std::vector<std::uint64_t>{1, 1});
  }
}

TEST_CASE("multiplication reduces modulo h") {
  const Extension s = z8ext();
  const auto a = s.generator();
  CHECK(s.mul(a, s.generator_power(3)) == s.generator_power(4));
  CHECK(s.generator_power(4).coeffs == x_power_mod(4, s.modulus_poly(), 8));
  CHECK(s.generator_power(4).coeffs == std::vector<std::uint64_t>{7, 5, 2, 4});
  for (int e = 0; e < 12; ++e) CHECK(s.generator_power(e).coeffs == x_power_mod(e, s.modulus_poly(), 8));
}

TEST_CASE("inverse and valuation") {
  const Extension s = z8ext();
  CHECK(s.invert(s.one()) == s.one());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto x = s.random(rng);
    if (s.valuation(x) == 0) {
      CHECK(s.mul(x, s.invert(x)) == s.one());
    } else {
      CHECK_THROWS_AS(s.invert(x), NotAUnit);
    }
  }
  CHECK(s.valuation(s.from_base(4)) == 2);
  CHECK(s.valuation(s.zero()) == 3);
  CHECK(s.mul_pi_power(s.from_coeffs({1, 3, 0, 0}), 2) == s.from_coeffs({4, 4, 0, 0}));
  const auto x = s.from_coeffs({1, 3, 5, 7});
  CHECK(s.mul_pi_power(x, 0) == x);
  CHECK(s.mul_pi_power(x, 3) == s.zero());
}

TEST_CASE("psi is a surjective ring homomorphism") {
  const Extension s = z8ext();
  const Extension& f = s.residue_field();
  CHECK(f.nu() == 1);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto x = s.random(rng), y = s.random(rng);
    CHECK(s.psi(s.add(x, y)) == f.add(s.psi(x), s.psi(y)));
    CHECK(s.psi(s.mul(x, y)) == f.mul(s.psi(x), s.psi(y)));
    CHECK(s.psi(s.mul(s.from_base(2), x)) == f.zero());
    const auto z = f.random(rng);
    CHECK(s.psi(s.lift(z)) == z);
  }
  CHECK(s.lift(f.generator()) == s.generator());
}

TEST_CASE("matrix representation") {
  const Extension s2 = default_extension(2, 1, 2);
  const auto a = s2.matrix_representation({s2.one(), s2.generator()});
  CHECK(a == Matrix<std::uint64_t>::from_rows({{1, 0}, {0, 1}}));
  const Extension s = Extension(ChainRing(2, 2), {1, 0, 1, 0, 0, 1});
  const std::vector<ExtElem> e{s.one(), s.from_coeffs({0, 2, 0, 0, 0}), s.zero(), s.zero(), s.zero()};
  const auto me = s.matrix_representation(e);
  Matrix<std::uint64_t> want(5, 5, 0);
  want(0, 0) = 1;
  want(1, 1) = 2;
  CHECK(me == want);
  CHECK(s.from_matrix_representation(me) == e);
  CHECK(s.matrix_representation({s.zero(), s.zero()}) == Matrix<std::uint64_t>(5, 2, 0));
}

TEST_CASE("default extension uses an irreducible residue polynomial") {
  for (auto [p, nu, m] : {std::tuple<std::uint64_t, int, int>{2, 2, 5}, {3, 2, 3}, {5, 1, 2}, {2, 3, 4}}) {
    const Extension s = default_extension(p, nu, m);
    CHECK(s.degree() == m);
    CHECK(fp::check_irreducible(fp::reduce(s.modulus_poly(), p), p).irreducible);
    CHECK(s.residue_size() == static_cast<std::uint64_t>(std::pow(p, m)));
  }
}

TEST_CASE("rabin test on small polynomials") {
  CHECK(fp::check_irreducible({1, 1, 1}, 2).irreducible);
  CHECK_FALSE(fp::check_irreducible({1, 0, 1}, 2).irreducible);
  CHECK(fp::check_irreducible({1, 0, 1}, 3).irreducible);
  CHECK_FALSE(fp::check_irreducible({1, 0, 0, 0, 1}, 2).irreducible);
  CHECK(fp::check_irreducible({1, 1, 0, 0, 1}, 2).irreducible);
}
