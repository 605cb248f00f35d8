#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "rankring/errors.hpp"

namespace rankring {

/// The chain ring Z/p^nu. The maximal ideal is generated by p and every
/// nonzero element factors uniquely as p^i * u with u a unit.
///
/// Elements are plain canonical residues in [0, p^nu). Moduli are kept below
/// 2^62 so that products fit in unsigned __int128.
class ChainRing {
 public:
  using Elem = std::uint64_t;

  ChainRing(std::uint64_t p, int nu);

  std::uint64_t p() const { return p_; }
  int nu() const { return nu_; }
  std::uint64_t modulus() const { return modulus_; }
  /// Size of the residue field R/pR.
  std::uint64_t residue_size() const { return p_; }
  /// The generator of the maximal ideal, as an element.
  Elem pi() const { return p_ % modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % modulus_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(std::int64_t v) const;
  Elem reduce(std::uint64_t v) const { return v % modulus_; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + modulus_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : modulus_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % modulus_);
  }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Largest i with p^i | a; nu for zero.
  int valuation(Elem a) const;
  /// The canonical unit u = a / p^valuation(a), taken in [0, p^(nu - v)).
  Elem unit_part(Elem a) const;
  Elem invert(Elem a) const;
  /// Exact division by p^k. Requires valuation(a) >= k.
  Elem shift_down(Elem a, int k) const;
  Elem mul_pi_power(Elem a, int k) const;
  /// p^k reduced into the ring (zero for k >= nu).
  Elem pi_power(int k) const;
  /// Image in the residue field F_p.
  std::uint64_t residue(Elem a) const { return a % p_; }

  /// Number of residue classes modulo p^k and a canonical representative
  /// for index idx in [0, residue_class_count(k)).
  std::uint64_t residue_class_count(int k) const;
  Elem residue_class_rep(int /*k*/, std::uint64_t idx) const { return idx; }

  template <class Rng>
  Elem random(Rng& rng) const {
    return std::uniform_int_distribution<Elem>(0, modulus_ - 1)(rng);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  friend bool operator==(const ChainRing& a, const ChainRing& b) {
    return a.p_ == b.p_ && a.nu_ == b.nu_;
  }

 private:
  std::uint64_t p_;
  int nu_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Integer p^e, throwing OutOfRange when the result would reach 2^62.
std::uint64_t checked_power(std::uint64_t p, int e);

/// An element of a specific chain ring. Arithmetic between elements of
/// different rings raises MixedRings. The ring must outlive the element.
class RingElem {
 public:
  RingElem(const ChainRing& ring, std::int64_t value)
      : ring_(&ring), value_(ring.from_int(value)) {}

  const ChainRing& ring() const { return *ring_; }
  std::uint64_t value() const { return value_; }

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const { return raw(ring_->neg(value_)); }

  int valuation() const { return ring_->valuation(value_); }
  RingElem unit_part() const { return raw(ring_->unit_part(value_)); }
  RingElem inverse() const { return raw(ring_->invert(value_)); }
  std::uint64_t residue() const { return ring_->residue(value_); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return *a.ring_ == *b.ring_ && a.value_ == b.value_;
  }

 private:
  RingElem raw(std::uint64_t v) const {
    RingElem r(*ring_, 0);
    r.value_ = v;
    return r;
  }
  void check_same(const RingElem& o) const;

  const ChainRing* ring_;
  std::uint64_t value_;
};

}  // namespace rankring
