#include "rankring/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankring::fp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::vector<int> prime_divisors(int m) {
  std::vector<int> out;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// X^(p^k) mod f, by k successive p-th powers.
Poly frobenius_iterate(const Poly& f, int k, std::uint64_t p) {
  Poly x = mod(Poly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) x = powmod(x, p, f, p);
  return x;
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const Poly& f, std::uint64_t p) {
  Poly r(f.size());
  std::transform(f.begin(), f.end(), r.begin(), [p](std::uint64_t c) { return c % p; });
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i] % p) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

Poly derivative(const Poly& f, std::uint64_t p) {
  Poly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i % p, p));
  trim(r);
  return r;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1 % p, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {Poly{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
  for (int i = degree(r); i >= db; --i) {
    std::uint64_t c = mulmod(r[i], lead_inv, p);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly monic(const Poly& f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = inv_mod_prime(f.back(), p);
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mulmod(f[i], inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& f, std::uint64_t p) {
  Poly r0 = f, r1 = mod(a, f, p);
  Poly t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly t = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (degree(r0) != 0) return std::nullopt;
  const std::uint64_t c = inv_mod_prime(r0[0], p);
  Poly inv(t0.size());
  for (std::size_t i = 0; i < t0.size(); ++i) inv[i] = mulmod(t0[i], c, p);
  trim(inv);
  return mod(inv, f, p);
}

Poly powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
  Poly result = mod(Poly{1}, f, p);
  base = mod(base, f, p);
  while (exp > 0) {
    if (exp & 1U) result = mod(mul(result, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    exp >>= 1U;
  }
  return result;
}

IrreducibilityResult check_irreducible(const Poly& f_in, std::uint64_t p) {
  const Poly f = monic(reduce(f_in, p), p);
  const int m = degree(f);
  IrreducibilityResult res;
  if (m < 1) return res;
  if (m == 1) {
    res.irreducible = true;
    return res;
  }
  const Poly x{0, 1};
  bool ok = frobenius_iterate(f, m, p) == mod(x, f, p);
  if (ok) {
    for (int l : prime_divisors(m)) {
      Poly g = gcd(f, sub(frobenius_iterate(f, m / l, p), x, p), p);
      if (degree(g) > 0) {
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    res.irreducible = true;
    return res;
  }
  // Look for a witness: a repeated factor, then small distinct-degree factors.
  Poly g = gcd(f, derivative(f, p), p);
  if (degree(g) > 0 && degree(g) < m) {
    res.factor = g;
    return res;
  }
  Poly xp = mod(x, f, p);
  for (int i = 1; i <= m / 2; ++i) {
    xp = powmod(xp, p, f, p);
    Poly d = gcd(f, sub(xp, x, p), p);
    if (degree(d) > 0 && degree(d) < m) {
      res.factor = d;
      return res;
    }
  }
  return res;
}

Poly smallest_irreducible(int m, std::uint64_t p) {
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  Poly f(static_cast<std::size_t>(m) + 1, 0);
  f[m] = 1;
  // Odometer over the m lower coefficients, constant term fastest.
  while (true) {
    if (check_irreducible(f, p).irreducible) return f;
    int i = 0;
    while (i < m) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
}

}  // namespace rankring::fp
