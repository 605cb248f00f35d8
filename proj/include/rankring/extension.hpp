#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "rankring/chain_ring.hpp"
#include "rankring/matrix.hpp"

namespace rankring {

/// Element of S = R[X]/(h), stored as its m coordinates in the power basis
/// (1, a, ..., a^(m-1)) with a = X + (h).
struct ExtElem {
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const ExtElem&, const ExtElem&) = default;
  friend auto operator<=>(const ExtElem&, const ExtElem&) = default;
};

/// The Galois extension S = R[X]/(h) of R = Z/p^nu with Psi(h) irreducible
/// over F_p. S is itself a chain ring with maximal ideal pS, so it exposes
/// the same ring interface as ChainRing and plugs into the generic linear
/// algebra. With nu = 1 the extension is the finite field F_{p^m}.
class Extension {
 public:
  using Elem = ExtElem;

  /// Validates that h is monic of degree >= 1 and that Psi(h) is
  /// irreducible (NotMonic / ReducibleResidue otherwise).
  Extension(const ChainRing& base, std::vector<std::uint64_t> h);

  const ChainRing& base() const { return base_; }
  int degree() const { return m_; }
  int nu() const { return base_.nu(); }
  std::uint64_t p() const { return base_.p(); }
  /// Ascending canonical coefficients of h, length m + 1.
  const std::vector<std::uint64_t>& modulus_poly() const { return h_; }
  /// F_{p^m} realised as F_p[X]/(Psi(h)); the extension itself when nu = 1.
  const Extension& residue_field() const { return residue_ ? *residue_ : *this; }
  /// Number of elements of the residue field, p^m.
  std::uint64_t residue_size() const { return residue_size_; }

  Elem zero() const { return ExtElem{std::vector<std::uint64_t>(m_, 0)}; }
  Elem one() const;
  /// The generator a = X + (h).
  Elem generator() const;
  Elem generator_power(int i) const;
  Elem from_base(std::uint64_t r) const;
  Elem from_coeffs(std::vector<std::uint64_t> c) const;
  bool is_zero(const Elem& x) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem scalar_mul(std::uint64_t r, const Elem& x) const;

  int valuation(const Elem& x) const;
  bool is_unit(const Elem& x) const { return valuation(x) == 0; }
  Elem unit_part(const Elem& x) const;
  /// Inverts Psi(x) in the residue field and Hensel-lifts with
  /// y <- y (2 - x y). NotAUnit when Psi(x) = 0.
  Elem invert(const Elem& x) const;
  Elem shift_down(const Elem& x, int k) const;
  Elem mul_pi_power(const Elem& x, int k) const;
  Elem pi_power(int k) const { return from_base(base_.pi_power(k)); }

  /// Coordinate-wise reduction mod p into the residue field.
  Elem psi(const Elem& x) const;
  /// Canonical lift of a residue-field element (coordinates in [0, p)).
  Elem lift(const Elem& y) const;

  std::uint64_t residue_class_count(int k) const;
  Elem residue_class_rep(int k, std::uint64_t idx) const;

  template <class Rng>
  Elem random(Rng& rng) const {
    Elem x = zero();
    for (auto& c : x.coeffs) c = base_.random(rng);
    return x;
  }

  std::string to_string(const Elem& x) const;

  /// Column j of the result holds the power-basis coordinates of v[j].
  Matrix<std::uint64_t> matrix_representation(const std::vector<Elem>& v) const;
  /// Inverse of matrix_representation: reads each column back as an element.
  std::vector<Elem> from_matrix_representation(const Matrix<std::uint64_t>& a) const;

  friend bool operator==(const Extension& a, const Extension& b) {
    return a.base_ == b.base_ && a.h_ == b.h_;
  }

 private:
  ChainRing base_;
  std::vector<std::uint64_t> h_;
  int m_;
  std::uint64_t residue_size_;
  // reduction_[i] = X^(m + i) mod h, for i in [0, m - 1).
  std::vector<std::vector<std::uint64_t>> reduction_;
  std::shared_ptr<const Extension> residue_;
};

/// Extension over Z/p^nu with h the canonical lift of the smallest monic
/// irreducible polynomial of degree m over F_p.
Extension default_extension(std::uint64_t p, int nu, int m);

std::vector<ExtElem> psi(const Extension& ext, const std::vector<ExtElem>& v);
std::vector<ExtElem> lift(const Extension& ext, const std::vector<ExtElem>& v);

}  // namespace rankring
