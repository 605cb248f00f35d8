#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankring/extension.hpp"
#include "rankring/linalg.hpp"
#include "rankring/sampling.hpp"
#include "rankring/shapes.hpp"

namespace rankring {

/// An S-linear code of length n: the row module of `gens` inside S^n. With
/// nu = 1 this is an ordinary linear rank-metric code over F_{p^m}.
class LinearCode {
 public:
  LinearCode(Extension ext, Matrix<ExtElem> gens);

  const Extension& ext() const { return ext_; }
  const Matrix<ExtElem>& gens() const { return gens_; }
  std::size_t length() const { return gens_.cols(); }
  const SmithForm<ExtElem>& smith() const { return smith_; }

  std::size_t rank() const { return smith_.rank; }
  bool is_free() const;
  bool is_zero() const { return smith_.rank == 0; }
  /// Shape over S, lambda_i = nu - delta_i.
  Partition shape() const;
  /// log_p |C| = m * sum(lambda).
  int log_p_size() const;

  /// Rows pi^delta_i * b_i with b_i the leading rows of the right inverse
  /// transform: a generating set aligned with the Smith form.
  Matrix<ExtElem> smith_generators() const;

 private:
  Extension ext_;
  Matrix<ExtElem> gens_;
  SmithForm<ExtElem> smith_;
};

std::size_t code_rank(const LinearCode& c);
bool is_free(const LinearCode& c);
int correction_capability(int min_distance);

LinearCode envelope(const LinearCode& c);
LinearCode socle(const LinearCode& c);
/// Row space of Psi(gens) over the residue field, rows reduced to a basis.
/// ZeroProjection when Psi(C) = 0.
LinearCode project_code(const LinearCode& c);

enum class DistanceMethod { SocleProjection, Brute };

/// Enumeration cap: RANKRING_MAX_ENUM when set, else 2^24.
std::uint64_t enumeration_cap();

/// Minimum rank distance. SocleProjection enumerates the p^(mk) codewords of
/// Psi(E(C)); Brute enumerates all of C. ZeroCode for C = 0, TooLarge past
/// the cap. Workers share a monotone minimum.
int min_rank_distance(const LinearCode& c, DistanceMethod method = DistanceMethod::SocleProjection,
                      std::optional<std::uint64_t> cap = std::nullopt, unsigned workers = 0);

/// log_{|R|} |C| <= max(m, n) * (min(m, n) - d + 1).
bool singleton_holds(const LinearCode& c, int d);

/// Coefficient-wise canonical lift of a field code into S^n over `ring_ext`,
/// whose residue field must match the code's field. DependentRows when the
/// field generators are not independent.
LinearCode lift_field_code(const Extension& ring_ext, const LinearCode& field_code);

struct RdReduction {
  LinearCode code;
  std::vector<ExtElem> received;
  int t;
};

/// C'' = soc(lift(Cf)), y'' = pi^(nu-1) lift(y).
RdReduction reduce_rd_instance(const Extension& ring_ext, const LinearCode& field_code,
                               const std::vector<ExtElem>& y, int t);

/// Inverse of x -> pi^(nu-1) lift(x) on pi^(nu-1) S^n. InvalidParams if some
/// coordinate lies outside pi^(nu-1) S.
std::vector<ExtElem> map_back_to_field(const Extension& ring_ext, const std::vector<ExtElem>& v);

LinearCode random_free_code(const Extension& ext, int n, int k, Rng& rng);
LinearCode random_free_code(const Extension& ext, int n, int k, std::uint64_t seed);

struct PlantedError {
  std::vector<ExtElem> error;
  /// Generators of supp(e): pi^(nu - mu_i) f_i with f a free basis.
  std::vector<ExtElem> support;
  /// r x n coordinates over R with e_j = sum_i coords(i, j) support[i].
  Matrix<std::uint64_t> coords;
};

/// Error of rank exactly r. Without a shape the support is free of rank r;
/// with shape mu (mu'_1 = r) it is generated by pi^(nu - mu_i) f_i.
PlantedError random_error(const Extension& ext, int n, int r, Rng& rng,
                          const std::optional<Partition>& shape = std::nullopt);
std::vector<ExtElem> random_error(const Extension& ext, int n, int r, std::uint64_t seed);

/// Planted RSD instance: random free [n, k] code, its derived parity-check
/// matrix, a random codeword and a planted error of rank r.
struct PlantedInstance {
  LinearCode code;
  Matrix<ExtElem> H;
  PlantedError planted;
  std::vector<ExtElem> codeword;
  std::vector<ExtElem> received;
  std::vector<ExtElem> syndrome;
};

PlantedInstance make_planted_instance(const Extension& ext, int n, int k, int r, Rng& rng,
                                      const std::optional<Partition>& shape = std::nullopt);

/// y * H^T over S.
std::vector<ExtElem> syndrome(const Extension& ext, const std::vector<ExtElem>& y, const Matrix<ExtElem>& h);

/// Codeword x * G.
std::vector<ExtElem> encode(const Extension& ext, const std::vector<ExtElem>& x, const Matrix<ExtElem>& g);

}  // namespace rankring
