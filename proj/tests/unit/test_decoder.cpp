#include "doctest.h"
#include "rankring/codes.hpp"
#include "rankring/decoder.hpp"
#include "rankring/io.hpp"
#include "rankring/vector_rank.hpp"

using namespace rankring;

namespace {

const std::string fixtures = RANKRING_FIXTURES_DIR;

RsdInstance planted(const Extension& s, int n, int k, int r, std::uint64_t seed, std::vector<ExtElem>* e = nullptr) {
  Rng rng(seed);
  PlantedInstance pi = make_planted_instance(s, n, k, r, rng);
  if (e) *e = pi.planted.error;
  return RsdInstance{s, pi.H, pi.syndrome, r, std::nullopt};
}

}  // namespace

TEST_CASE("final example decodes to the printed error") {
  const InstanceSpec inst = load_instance(fixtures + "/final_example.json");
  const Json want = read_json_file(fixtures + "/final_example.json")["expected"];
  for (int alg : {1, 2}) {
    DecoderParams p;
    p.algorithm = alg;
    const auto rep = decode(inst.components().front(), p);
    CHECK(format_vector(*rep.error) == "(6a^2+2, 0, 4a^2+4, 2a^2+6)");
    CHECK(*rep.error == parse_vector(want["e"], 4, 8, "e"));
  }
}

TEST_CASE("system builders") {
  const Extension s = default_extension(2, 2, 3);
  // n = u = 1, H = (1), f = (1): the system is the identity on coordinates.
  const Matrix<ExtElem> h(1, 1, s.one());
  const std::vector<ExtElem> syn{s.from_coeffs({1, 2, 3})};
  const auto [a1, b1] = build_system_alg1(s, h, syn, {s.one()});
  CHECK(a1.rows() == 3);
  CHECK(a1.cols() == 1);
  CHECK(a1(0, 0) == 1);
  CHECK(a1(1, 0) == 0);
  CHECK(b1 == std::vector<std::uint64_t>{1, 2, 3});

  // Alg 2 with F = identity: unknowns are the matrix representation of e.
  Rng rng(3);
  const LinearCode c = random_free_code(s, 3, 1, rng);
  const auto hh = dual_code_matrix(s, c.gens());
  const auto pe = random_error(s, 3, 2, rng);
  const auto syn2 = syndrome(s, pe.error, hh);
  const auto [a2, b2] = build_system_alg2(s, hh, syn2, identity(s.base(), 3));
  const auto rep = s.matrix_representation(pe.error);
  std::vector<std::uint64_t> x(9);
  for (int i = 0; i < 3; ++i)
    for (int cc = 0; cc < 3; ++cc) x[i * 3 + cc] = rep(cc, i);
  CHECK(mat_vec(s.base(), a2, x) == b2);
  CHECK(reconstruct_alg2(s, x, identity(s.base(), 3)) == pe.error);
}

TEST_CASE("zero syndrome and rank zero") {
  const Extension s = default_extension(2, 2, 5);
  auto inst = planted(s, 5, 1, 1, 0);
  inst.s.assign(inst.s.size(), s.zero());
  inst.r = 0;
  const auto rep = decode(inst, {});
  CHECK(rep.trials == 0);
  CHECK(is_zero_vector(s, *rep.error));
}

TEST_CASE("planted instances decode correctly") {
  const Extension s = default_extension(2, 2, 5);
  for (int alg : {1, 2})
    for (int r : {1, 2})
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = planted(s, 5, 1, r, seed);
        DecoderParams p;
        p.algorithm = alg;
        p.seed = seed;
        const auto rep = decode(inst, p);
        REQUIRE(rep.error);
        CHECK(syndrome(s, *rep.error, inst.H) == inst.s);
        CHECK(vector_rank(s, *rep.error) == static_cast<std::size_t>(r));
      }
}

TEST_CASE("determinism across worker counts") {
  const Extension s = default_extension(2, 2, 5);
  const auto inst = planted(s, 5, 1, 1, 77);
  DecoderParams p;
  p.seed = 5;
  p.algorithm = 1;
  const auto a = decode(inst, p);
  p.workers = 4;
  const auto b = decode(inst, p);
  CHECK(*a.error == *b.error);
  CHECK(a.trials == b.trials);
  CHECK(a.solve_failures == b.solve_failures);
}

TEST_CASE("trial cap and validation") {
  const Extension s = default_extension(2, 2, 5);
  auto inst = planted(s, 5, 1, 1, 3);
  DecoderParams p;
  p.max_trials = 0;
  CHECK_THROWS_AS(decode(inst, p), TrialsExhausted);
  auto bad = inst;
  bad.s.pop_back();
  CHECK_THROWS_AS(decode(bad, {}), DimensionMismatch);
  bad = inst;
  bad.r = 9;
  CHECK_THROWS_AS(decode(bad, {}), OutOfRange);
  DecoderParams wrong;
  wrong.algorithm = 3;
  CHECK_THROWS_AS(decode(inst, wrong), InvalidParams);
}

TEST_CASE("radius decoding accepts any rank up to t") {
  const Extension s = default_extension(2, 2, 5);
  auto inst = planted(s, 5, 1, 1, 9);
  inst.t = 2;
  const auto rep = decode(inst, {});
  CHECK(vector_rank(s, *rep.error) <= 2);
  CHECK(syndrome(s, *rep.error, inst.H) == inst.s);
}

TEST_CASE("estimators") {
  CHECK(expected_trials(2, 2, 5, 5, 1, 1, 1, 5) == 1);
  CHECK(approx_expected_trials(2, 2, 5, 5, 1, 1, 2) == 4);
  CHECK(approx_expected_trials(2, 1, 6, 4, 1, 1, 1) == 2);
  CHECK(approx_expected_trials(2, 2, 5, 5, 1, 1, 1) == 4);
  CHECK(expected_trials(2, 2, 5, 5, 1, 1, 2) == BigRational(beta(2, 2, 1, 5), beta(2, 2, 1, 4)));
  CHECK(operations_per_trial(5, 5, 1, 2) == 8000);
  CHECK(operations_per_trial(5, 5, 1, 1) == 5 * 4 * 16 * 25);
  CHECK(default_u(1, 5, 5, 1) == 4);
  CHECK(default_u(2, 5, 5, 1) == 4);
  // Unknown-count bound n * u <= m (n - k) for the default u.
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n)
      for (int k = 0; k < n; ++k) CHECK(n * default_u(1, m, n, k) <= m * (n - k));
}

TEST_CASE("exact and approximate trial counts stay within the beta slack") {
  for (std::uint64_t q : {2, 3})
    for (int nu = 1; nu <= 2; ++nu)
      for (int alg : {1, 2})
        for (int n = 2; n <= 6; ++n)
          for (int k = 1; k < n; ++k) {
            const int m = n;
            const int u = default_u(alg, m, n, k);
            for (int r = 1; 2 * r <= u; ++r) {
              const BigRational exact = expected_trials(q, nu, m, n, k, r, alg, u);
              const BigRational approx(approx_expected_trials(q, nu, m, n, k, r, alg, u));
              BigInt slack = big_pow(BigInt(4), nu);
              BigInt chains = 1;
              for (int i = 1; i < nu; ++i) chains = chains * (r + i) / i;
              slack *= chains;
              CHECK(exact <= approx * BigRational(slack));
              CHECK(approx <= exact * BigRational(slack));
            }
          }
}

TEST_CASE("pir decoding recombines components") {
  const PirRing ring = decompose(12);
  const PirExtension s(ring, {1, 9, 1});
  std::vector<RsdInstance> parts;
  std::vector<std::vector<ExtElem>> errs;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<ExtElem> e;
    parts.push_back(planted(s.component(j), 2, 1, 1, 40 + j, &e));
    errs.push_back(e);
  }
  const auto rep = pir_decode(s, parts, {});
  CHECK(rep.components.size() == 2);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto ej = s.phi(rep.error, j);
    CHECK(syndrome(s.component(j), ej, parts[j].H) == parts[j].s);
  }
  const PirExtension single(decompose(8), {1, 3, 6, 4, 1});
  const auto inst = planted(single.component(0), 4, 2, 1, 1);
  CHECK(pir_decode(single, {inst}, {}).error == *decode(inst, {}).error);
}
