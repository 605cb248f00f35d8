#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankring/bigint.hpp"
#include "rankring/extension.hpp"
#include "rankring/linalg.hpp"
#include "rankring/pir.hpp"
#include "rankring/sampling.hpp"

namespace rankring {

/// Find e with e H^T = s and rk(e) = r (or rk(e) <= t when a radius is set).
struct RsdInstance {
  Extension ext;
  Matrix<ExtElem> H;
  std::vector<ExtElem> s;
  int r = 0;
  std::optional<int> t;

  int m() const { return ext.degree(); }
  int n() const { return static_cast<int>(H.cols()); }
  int k() const { return static_cast<int>(H.cols() - H.rows()); }
};

/// Checks that H has free rows of rank n - k, s has length n - k and
/// r <= min(m, n). Throws NotFree / DimensionMismatch / OutOfRange.
void validate(const RsdInstance& inst);

struct DecoderParams {
  int algorithm = 2;
  std::optional<int> u;
  std::optional<std::uint64_t> max_trials;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// When a solve succeeds but the particular solution has the wrong rank,
  /// walk up to this many further solutions before resampling (0 = off).
  std::uint64_t solution_enumeration_cap = 0;
};

struct DecodeReport {
  std::optional<std::vector<ExtElem>> error;
  int rank = -1;
  std::uint64_t trials = 0;
  std::uint64_t solve_failures = 0;
  std::uint64_t rank_mismatches = 0;
  /// Solutions found through the enumeration fallback rather than directly.
  std::uint64_t enumerated_hits = 0;
  int u = 0;
  std::uint64_t max_trials = 0;
  double elapsed_seconds = 0;
};

int default_u(int algorithm, int m, int n, int k);

/// Alg 1 system over R: unknown x_{i,j} at index j*u + i, equation for
/// coordinate c of syndrome entry l at row l*m + c.
std::pair<Matrix<std::uint64_t>, std::vector<std::uint64_t>> build_system_alg1(const Extension& ext,
                                                                               const Matrix<ExtElem>& H,
                                                                               const std::vector<ExtElem>& s,
                                                                               const std::vector<ExtElem>& f);
/// e_j = sum_i x_{j*u+i} f_i.
std::vector<ExtElem> reconstruct_alg1(const Extension& ext, const std::vector<std::uint64_t>& x,
                                      const std::vector<ExtElem>& f, int n);

/// Alg 2 system over R with the power basis b = (1, a, ..., a^(m-1)):
/// unknown X_{c,i} at index i*m + c, rows as in Alg 1.
std::pair<Matrix<std::uint64_t>, std::vector<std::uint64_t>> build_system_alg2(const Extension& ext,
                                                                               const Matrix<ExtElem>& H,
                                                                               const std::vector<ExtElem>& s,
                                                                               const Matrix<std::uint64_t>& F);
/// e = b X F.
std::vector<ExtElem> reconstruct_alg2(const Extension& ext, const std::vector<std::uint64_t>& x,
                                      const Matrix<std::uint64_t>& F);

/// Expected number of trials: beta(q,nu,r,m)/beta(q,nu,r,u) for Alg 1 and
/// beta(q,nu,r,n)/beta(q,nu,r,u) for Alg 2 (u defaults as in default_u).
BigRational expected_trials(std::uint64_t q, int nu, int m, int n, int k, int r, int algorithm,
                            std::optional<int> u = std::nullopt);
/// |R|^(r floor(mk/n)) for Alg 1 with the default u, |R|^(r (m - u)) for an
/// explicit u, and |R|^(r (n - u)) for Alg 2.
BigInt approx_expected_trials(std::uint64_t q, int nu, int m, int n, int k, int r, int algorithm,
                              std::optional<int> u = std::nullopt);
/// Cost factor of one trial's solve: m (n-k) u^2 n^2 for Alg 1 and
/// m^3 (n-k)^3 for Alg 2.
BigInt operations_per_trial(int m, int n, int k, int algorithm, std::optional<int> u = std::nullopt);

/// Runs Algorithm 1 or 2 with the exact target rank r (or every r' <= t
/// when the instance carries a radius, first success wins). TrialsExhausted
/// when no acceptable e turns up within max_trials.
DecodeReport decode(const RsdInstance& inst, const DecoderParams& params);

struct PirDecodeReport {
  std::vector<DecodeReport> components;
  std::vector<ExtElem> error;
};

/// Decodes each CRT component independently and recombines through the
/// idempotents. Component failures are rethrown naming the component.
PirDecodeReport pir_decode(const PirExtension& ext, const std::vector<RsdInstance>& parts, const DecoderParams& params);

}  // namespace rankring
