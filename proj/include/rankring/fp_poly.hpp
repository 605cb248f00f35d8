#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rankring::fp {

// Dense polynomials over the prime field F_p, ascending coefficients, kept
// trimmed (no trailing zeros; the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);
Poly reduce(const Poly& f, std::uint64_t p);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// Inverse of a modulo f, if gcd(a, f) = 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& f, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p);

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p);

struct IrreducibilityResult {
  bool irreducible = false;
  /// Nontrivial monic factor, when one was found.
  Poly factor;
};

/// Rabin's test: f of degree m is irreducible iff X^(p^m) = X mod f and
/// gcd(X^(p^(m/l)) - X, f) = 1 for every prime l dividing m.
IrreducibilityResult check_irreducible(const Poly& f, std::uint64_t p);

/// The lexicographically smallest monic irreducible polynomial of degree m
/// over F_p (coefficients compared from the constant term upward).
Poly smallest_irreducible(int m, std::uint64_t p);

}  // namespace rankring::fp
