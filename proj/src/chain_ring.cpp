#include "rankring/chain_ring.hpp"

#include <limits>

namespace rankring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t p, int e) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > kLimit / p) throw OutOfRange("p^nu must stay below 2^62");
    r *= p;
  }
  if (r >= kLimit) throw OutOfRange("p^nu must stay below 2^62");
  return r;
}

ChainRing::ChainRing(std::uint64_t p, int nu) : p_(p), nu_(nu), modulus_(1) {
  if (nu < 1) throw OutOfRange("nilpotency index nu must be >= 1");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  modulus_ = checked_power(p, nu);
}

ChainRing::Elem ChainRing::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

ChainRing::Elem ChainRing::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

int ChainRing::valuation(Elem a) const {
  if (a == 0) return nu_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

ChainRing::Elem ChainRing::unit_part(Elem a) const {
  if (a == 0) return one();
  while (a % p_ == 0) a /= p_;
  return a;
}

ChainRing::Elem ChainRing::invert(Elem a) const {
  if (a % p_ == 0) throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(modulus_));
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = static_cast<__int128>(modulus_), r1 = a;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  __int128 m = static_cast<__int128>(modulus_);
  __int128 inv = t0 % m;
  if (inv < 0) inv += m;
  return static_cast<Elem>(inv);
}

ChainRing::Elem ChainRing::shift_down(Elem a, int k) const {
  for (int i = 0; i < k; ++i) a /= p_;
  return a;
}

ChainRing::Elem ChainRing::pi_power(int k) const {
  if (k >= nu_) return 0;
  Elem r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r % modulus_;
}

ChainRing::Elem ChainRing::mul_pi_power(Elem a, int k) const { return mul(a, pi_power(k)); }

std::uint64_t ChainRing::residue_class_count(int k) const {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

void RingElem::check_same(const RingElem& o) const {
  if (!(*ring_ == *o.ring_)) {
    throw MixedRings("Z/" + std::to_string(ring_->modulus()) + " vs Z/" +
                     std::to_string(o.ring_->modulus()));
  }
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same(o);
  return raw(ring_->add(value_, o.value_));
}

RingElem RingElem::operator-(const RingElem& o) const {
  check_same(o);
  return raw(ring_->sub(value_, o.value_));
}

RingElem RingElem::operator*(const RingElem& o) const {
  check_same(o);
  return raw(ring_->mul(value_, o.value_));
}

}  // namespace rankring
