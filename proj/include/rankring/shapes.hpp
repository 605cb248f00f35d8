#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankring/bigint.hpp"
#include "rankring/chain_ring.hpp"
#include "rankring/linalg.hpp"

namespace rankring {

/// Integer partition, parts weakly decreasing and positive. A module over a
/// chain ring with shape lambda is isomorphic to prod R / m^lambda_i.
class Partition {
 public:
  Partition() = default;
  /// Zeros are dropped; throws OutOfRange if the parts are not weakly
  /// decreasing or contain a negative entry.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based i, zero past the end.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
/// Shape of a free module of rank n: (nu, ..., nu), n times.
Partition free_shape(int nu, int n);
/// log_q |M| for a module of the given shape.
int cardinality_log_q(const Partition& lambda);

BigInt gaussian_binomial(int n, int k, std::uint64_t q);

/// Number of submodules of shape mu inside a module of shape lambda.
BigInt count_submodules_of_shape(const Partition& lambda, const Partition& mu, std::uint64_t q);

/// Number of rank-k submodules inside a module of shape lambda over a chain
/// ring with nilpotency index nu (lambda_1 <= nu).
BigInt count_submodules_of_rank(const Partition& lambda, int k, std::uint64_t q, int nu);

/// Number of rank-k submodules of a free rank-n module.
BigInt beta(std::uint64_t q, int nu, int k, int n);

/// Shape of the module generated by the rows of a generator matrix, read off
/// the Smith diagonal as lambda_i = nu - valuation(d_i).
template <ChainRingLike Ring>
Partition shape_of_module(const Ring& ring, const Matrix<typename Ring::Elem>& generators) {
  const auto sf = smith_normal_form(ring, generators, false);
  std::vector<int> parts;
  for (int e : sf.exponents) parts.push_back(ring.nu() - e);
  return Partition(std::move(parts));
}

struct SubmoduleEnumeration {
  std::uint64_t ambient_cap = std::uint64_t{1} << 16;
  /// Upper bound on generator-form candidates inspected before TooLarge.
  std::uint64_t candidate_budget = std::uint64_t{1} << 24;
  std::optional<int> rank_filter;
};

/// Brute-force oracle: visits every submodule of (Z/p^nu)^n exactly once,
/// each as its canonical echelon generator matrix (pivot p^a_j in column j,
/// entries right of a pivot reduced modulo the later pivots). Returns the
/// number of modules visited. TooLarge when p^(nu n) exceeds the ambient cap
/// or the candidate budget runs out.
std::uint64_t enumerate_submodules(const ChainRing& ring, int n, const SubmoduleEnumeration& opts,
                                   const std::function<void(const Matrix<std::uint64_t>&)>& visit);

}  // namespace rankring
