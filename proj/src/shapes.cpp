#include "rankring/shapes.hpp"

#include <algorithm>
#include <sstream>

namespace rankring {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw OutOfRange("partition parts must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1]) throw OutOfRange("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

int Partition::size() const {
  int s = 0;
  for (int x : parts_) s += x;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.largest(), 0);
  for (int part : lambda.parts())
    for (int i = 0; i < part; ++i) ++out[i];
  return Partition(std::move(out));
}

Partition free_shape(int nu, int n) { return Partition(std::vector<int>(std::max(n, 0), nu)); }

int cardinality_log_q(const Partition& lambda) { return lambda.size(); }

BigInt gaussian_binomial(int n, int k, std::uint64_t q) {
  if (q < 2) throw OutOfRange("q must be at least 2");
  if (k < 0 || n < 0 || k > n) throw OutOfRange("gaussian binomial needs 0 <= k <= n");
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (int i = 0; i < k; ++i) {
    num *= big_pow(bq, n) - big_pow(bq, i);
    den *= big_pow(bq, k) - big_pow(bq, i);
  }
  return num / den;
}

namespace {

// Padded conjugate: entry i (0-based) is lambda'_{i+1}, length `len`.
std::vector<int> conjugate_padded(const Partition& lambda, int len) {
  std::vector<int> c(std::max(len, lambda.largest()) + 1, 0);
  for (int part : lambda.parts())
    for (int i = 0; i < part; ++i) ++c[i];
  return c;
}

// prod_i q^{mu'_{i+1}(lam'_i - mu'_i)} [lam'_i - mu'_{i+1} choose mu'_i - mu'_{i+1}]_q
BigInt shape_product(const std::vector<int>& lam_c, const std::vector<int>& mu_c, std::uint64_t q, int top) {
  BigInt total = 1;
  const BigInt bq = q;
  for (int i = 0; i < top; ++i) {
    const int li = lam_c[i], mi = mu_c[i], mnext = mu_c[i + 1];
    total *= big_pow(bq, static_cast<unsigned>(mnext * (li - mi)));
    total *= gaussian_binomial(li - mnext, mi - mnext, q);
  }
  return total;
}

void chains(int level, int levels, int prev, const std::vector<int>& bound, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& emit) {
  if (level == levels) {
    emit(cur);
    return;
  }
  const int hi = std::min(prev, bound[level]);
  for (int v = 0; v <= hi; ++v) {
    cur[level] = v;
    chains(level + 1, levels, v, bound, cur, emit);
  }
}

}  // namespace

BigInt count_submodules_of_shape(const Partition& lambda, const Partition& mu, std::uint64_t q) {
  if (mu.length() > lambda.length()) throw ShapeNotDominated(mu.to_string() + " is not inside " + lambda.to_string());
  for (std::size_t i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i))
      throw ShapeNotDominated(mu.to_string() + " is not inside " + lambda.to_string());
  const int top = lambda.largest();
  return shape_product(conjugate_padded(lambda, top), conjugate_padded(mu, top), q, top);
}

BigInt count_submodules_of_rank(const Partition& lambda, int k, std::uint64_t q, int nu) {
  if (lambda.largest() > nu) throw OutOfRange("lambda_1 exceeds nu");
  const std::vector<int> lam_c = conjugate_padded(lambda, nu);
  if (k < 0 || k > lam_c[0]) throw OutOfRange("rank k exceeds the rank of the module");
  if (nu == 0 || k == 0) return 1;
  BigInt total = 0;
  std::vector<int> cur(nu + 1, 0);
  cur[0] = k;
  chains(1, nu, k, lam_c, cur, [&](const std::vector<int>& mu_c) {
    total += shape_product(lam_c, mu_c, q, nu);
  });
  return total;
}

BigInt beta(std::uint64_t q, int nu, int k, int n) {
  if (q < 2) throw OutOfRange("q must be at least 2");
  if (nu < 1) throw OutOfRange("nu must be at least 1");
  if (k < 0 || n < 0 || k > n) throw OutOfRange("beta needs 0 <= k <= n");
  BigInt total = 0;
  const BigInt bq = q;
  std::vector<int> l(nu + 1, 0);
  l[0] = k;
  const std::vector<int> bound(nu + 1, n);
  chains(1, nu, k, bound, l, [&](const std::vector<int>& c) {
    BigInt term = 1;
    for (int i = 0; i < nu; ++i) {
      term *= big_pow(bq, static_cast<unsigned>(c[i + 1] * (n - c[i])));
      term *= gaussian_binomial(n - c[i + 1], c[i] - c[i + 1], q);
    }
    total += term;
  });
  return total;
}

namespace {

struct Enumerator {
  const ChainRing& ring;
  int n;
  int nu;
  const SubmoduleEnumeration& opts;
  const std::function<void(const Matrix<std::uint64_t>&)>& visit;
  std::vector<int> a;
  std::vector<std::vector<std::uint64_t>> g;
  std::uint64_t candidates = 0;
  std::uint64_t visited = 0;

  // Greedy reduction of x by the rows below j; true when x reduces to zero.
  bool reduces_to_zero(std::vector<std::uint64_t> x, int j) const {
    for (int l = j + 1; l < n; ++l) {
      if (x[l] == 0) continue;
      if (a[l] == nu) return false;
      if (ring.valuation(x[l]) < a[l]) return false;
      const std::uint64_t c = ring.shift_down(x[l], a[l]);
      for (int t = l; t < n; ++t) x[t] = ring.sub(x[t], ring.mul(c, g[l][t]));
    }
    return true;
  }

  void tick() {
    if (++candidates > opts.candidate_budget) throw TooLarge("submodule enumeration exceeded its candidate budget");
  }

  void emit() {
    Matrix<std::uint64_t> m(0, n, 0);
    for (int j = 0; j < n; ++j)
      if (a[j] < nu) m.append_row(g[j]);
    if (opts.rank_filter && rank(ring, m) != static_cast<std::size_t>(*opts.rank_filter)) return;
    ++visited;
    visit(m);
  }

  void place(int j) {
    if (j < 0) {
      emit();
      return;
    }
    for (int aj = 0; aj <= nu; ++aj) {
      a[j] = aj;
      g[j].assign(n, 0);
      if (aj == nu) {
        tick();
        place(j - 1);
        continue;
      }
      g[j][j] = ring.pi_power(aj);
      std::vector<std::uint64_t> radix(n, 1);
      for (int l = j + 1; l < n; ++l) radix[l] = a[l] == nu ? ring.modulus() : ring.pi_power(a[l]);
      for (;;) {
        tick();
        std::vector<std::uint64_t> x(n);
        for (int t = 0; t < n; ++t) x[t] = ring.mul_pi_power(g[j][t], nu - aj);
        if (reduces_to_zero(x, j)) place(j - 1);
        int l = j + 1;
        for (; l < n; ++l) {
          if (++g[j][l] < radix[l]) break;
          g[j][l] = 0;
        }
        if (l == n) break;
      }
    }
    a[j] = nu;
    g[j].assign(n, 0);
  }
};

}  // namespace

std::uint64_t enumerate_submodules(const ChainRing& ring, int n, const SubmoduleEnumeration& opts,
                                   const std::function<void(const Matrix<std::uint64_t>&)>& visit) {
  if (n < 0) throw OutOfRange("n must be non-negative");
  BigInt ambient = big_pow(BigInt(ring.modulus()), static_cast<unsigned>(n));
  if (ambient > BigInt(opts.ambient_cap)) throw TooLarge("ambient module exceeds the enumeration cap");
  Enumerator e{ring, n, ring.nu(), opts, visit, std::vector<int>(n, ring.nu()),
               std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n, 0))};
  e.place(n - 1);
  return e.visited;
}

}  // namespace rankring
