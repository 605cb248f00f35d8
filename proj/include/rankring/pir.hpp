#pragma once

#include <cstdint>
#include <vector>

#include "rankring/chain_ring.hpp"
#include "rankring/codes.hpp"
#include "rankring/extension.hpp"

namespace rankring {

/// Z/eta as a product of chain rings Z/p_j^k_j, components sorted by prime.
class PirRing {
 public:
  std::uint64_t eta() const { return eta_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<ChainRing>& components() const { return components_; }
  const ChainRing& component(std::size_t j) const { return components_.at(j); }
  /// e_j = 1 mod p_j^k_j and 0 mod every other component modulus.
  const std::vector<std::uint64_t>& idempotents() const { return idempotents_; }

  std::uint64_t reduce(std::uint64_t x) const { return x % eta_; }
  /// Projection onto component j (0-based).
  std::uint64_t phi(std::uint64_t x, std::size_t j) const { return x % components_.at(j).modulus(); }
  /// sum_j x_j e_j mod eta.
  std::uint64_t phi_inverse(const std::vector<std::uint64_t>& parts) const;

  std::vector<std::uint64_t> phi(const std::vector<std::uint64_t>& v, std::size_t j) const;
  std::vector<std::uint64_t> phi_inverse(const std::vector<std::vector<std::uint64_t>>& parts) const;

  friend PirRing decompose(std::uint64_t eta, std::uint64_t trial_bound);

 private:
  std::uint64_t eta_ = 1;
  std::vector<ChainRing> components_;
  std::vector<std::uint64_t> idempotents_;
};

/// Factors eta by trial division with divisors up to `trial_bound`; OutOfRange
/// when eta < 2 or the cofactor cannot be certified prime within the bound.
PirRing decompose(std::uint64_t eta, std::uint64_t trial_bound = std::uint64_t{1} << 20);

/// S = S_(1) x ... x S_(rho), each a Galois extension of common degree m.
/// Elements over Z/eta are stored as ExtElem with coordinates mod eta.
class PirExtension {
 public:
  /// Components from h over Z/eta reduced modulo each prime power.
  PirExtension(PirRing ring, const std::vector<std::uint64_t>& h);
  /// Components given explicitly; combined_h is recombined through the
  /// idempotents. DimensionMismatch when degrees differ.
  PirExtension(PirRing ring, std::vector<Extension> components);

  const PirRing& ring() const { return ring_; }
  std::size_t size() const { return components_.size(); }
  int degree() const { return components_.front().degree(); }
  const std::vector<Extension>& components() const { return components_; }
  const Extension& component(std::size_t j) const { return components_.at(j); }
  const std::vector<std::uint64_t>& combined_h() const { return combined_h_; }

  ExtElem phi(const ExtElem& x, std::size_t j) const;
  ExtElem phi_inverse(const std::vector<ExtElem>& parts) const;
  std::vector<ExtElem> phi(const std::vector<ExtElem>& v, std::size_t j) const;
  std::vector<ExtElem> phi_inverse(const std::vector<std::vector<ExtElem>>& parts) const;
  Matrix<ExtElem> phi(const Matrix<ExtElem>& a, std::size_t j) const;

  ExtElem mul(const ExtElem& x, const ExtElem& y) const;

 private:
  PirRing ring_;
  std::vector<Extension> components_;
  std::vector<std::uint64_t> combined_h_;
};

/// rk(v) = max_j rk(Phi_j(v)).
std::size_t pir_rank(const PirExtension& ext, const std::vector<ExtElem>& v);

/// Code over Z/eta given by generators; each component code is Phi_j(gens).
std::vector<LinearCode> pir_component_codes(const PirExtension& ext, const Matrix<ExtElem>& gens);
/// k(C) = max_j k(C_j).
std::size_t pir_code_rank(const PirExtension& ext, const Matrix<ExtElem>& gens);
/// d(C) = min over nonzero components of d(C_j). ZeroCode when C = 0.
int pir_min_distance(const PirExtension& ext, const Matrix<ExtElem>& gens,
                     DistanceMethod method = DistanceMethod::SocleProjection);

}  // namespace rankring
