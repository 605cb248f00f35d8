#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oracle {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

__int128 det(const std::vector<std::vector<__int128>>& a) {
  const std::size_t k = a.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  __int128 total = 0;
  do {
    __int128 term = 1;
    for (std::size_t i = 0; i < k && term; ++i) term *= a[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

int valuation(__int128 x, std::uint64_t p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % static_cast<__int128>(p) == 0 && v < cap) x /= static_cast<__int128>(p), ++v;
  return v;
}

// Visits every k-subset of [0, n).
bool any_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int module_rank(const rankring::Matrix<std::uint64_t>& a, std::uint64_t modulus) {
  const std::size_t rows = a.rows();
  if (rows == 0) return 0;
  int best = 0;
  std::uint64_t rest = modulus;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    int nu = 0;
    std::uint64_t pn = 1;
    while (rest % p == 0) rest /= p, pn *= p, ++nu;
    // [a mod p^nu | p^nu I] over Z.
    std::vector<std::vector<__int128>> b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) b[i].push_back(static_cast<__int128>(a(i, j) % pn));
      for (std::size_t j = 0; j < rows; ++j) b[i].push_back(i == j ? static_cast<__int128>(pn) : 0);
    }
    const std::size_t cols = b[0].size();
    const int cap = nu * static_cast<int>(rows) + 1;
    int prev = 0, rank = 0;
    for (std::size_t k = 1; k <= rows; ++k) {
      int vk = cap;
      any_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
        return any_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
          std::vector<std::vector<__int128>> sub(k, std::vector<__int128>(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = b[rs[i]][cs[j]];
          vk = std::min(vk, valuation(det(sub), p, cap));
          return vk == prev;
        });
      });
      if (vk - prev < nu) ++rank;
      prev = vk;
    }
    best = std::max(best, rank);
  }
  return best;
}

int vector_rank(const std::vector<ExtElem>& v, std::uint64_t modulus) {
  if (v.empty()) return 0;
  const std::size_t m = v.front().coeffs.size();
  rankring::Matrix<std::uint64_t> a(m, v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) a(i, j) = v[j].coeffs[i];
  return module_rank(a, modulus);
}

std::set<Vec> span(const std::vector<Vec>& gens, std::size_t dim, std::uint64_t modulus) {
  std::set<Vec> seen{Vec(dim, 0)};
  std::deque<Vec> todo{Vec(dim, 0)};
  while (!todo.empty()) {
    const Vec x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Vec y(dim);
      for (std::size_t i = 0; i < dim; ++i) y[i] = (x[i] + g[i]) % modulus;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

int min_generating_set_size(const std::vector<Vec>& elements, std::size_t dim, std::uint64_t modulus) {
  const std::set<Vec> module = span(elements, dim, modulus);
  if (module.size() == 1) return 0;
  const std::vector<Vec> pool(module.begin(), module.end());
  for (std::size_t k = 1;; ++k) {
    const bool ok = any_subset(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vec> g;
      for (auto i : idx) g.push_back(pool[i]);
      return span(g, dim, modulus).size() == module.size();
    });
    if (ok) return static_cast<int>(k);
  }
}

rankring::Partition shape_from_elements(const std::set<Vec>& module, std::uint64_t p, int nu) {
  std::uint64_t modulus = 1;
  for (int i = 0; i < nu; ++i) modulus *= p;
  // log_p |M[p^i]| = sum_j min(lambda_j, i), so its increments are lambda'.
  std::vector<int> log_torsion(nu + 1, 0);
  for (int i = 1; i <= nu; ++i) {
    std::uint64_t pi = 1;
    for (int t = 0; t < i; ++t) pi *= p;
    std::uint64_t count = 0;
    for (const auto& x : module)
      if (std::all_of(x.begin(), x.end(), [&](std::uint64_t c) { return mulmod(c, pi, modulus) == 0; })) ++count;
    int lg = 0;
    while (count > 1) count /= p, ++lg;
    log_torsion[i] = lg;
  }
  std::vector<int> conj;
  for (int i = 1; i <= nu; ++i) conj.push_back(log_torsion[i] - log_torsion[i - 1]);
  return rankring::conjugate(rankring::Partition(conj));
}

std::map<rankring::Partition, std::uint64_t> submodules_by_shape(std::uint64_t p, int nu, int n) {
  std::uint64_t modulus = 1;
  for (int i = 0; i < nu; ++i) modulus *= p;
  std::vector<Vec> ambient;
  {
    Vec x(n, 0);
    while (true) {
      ambient.push_back(x);
      int i = 0;
      for (; i < n; ++i) {
        if (++x[i] < modulus) break;
        x[i] = 0;
      }
      if (i == n) break;
    }
  }
  // Each submodule is generated by adding one vector at a time to a smaller
  // one, so closure search from {0} reaches all of them.
  std::set<std::set<Vec>> found;
  std::deque<std::vector<Vec>> todo{{}};
  found.insert(span({}, n, modulus));
  std::map<rankring::Partition, std::uint64_t> out;
  while (!todo.empty()) {
    const std::vector<Vec> gens = todo.front();
    todo.pop_front();
    const std::set<Vec> module = span(gens, n, modulus);
    ++out[shape_from_elements(module, p, nu)];
    for (const auto& v : ambient) {
      if (module.count(v)) continue;
      std::vector<Vec> next = gens;
      next.push_back(v);
      std::set<Vec> bigger = span(next, n, modulus);
      if (found.insert(std::move(bigger)).second) todo.push_back(next);
    }
  }
  return out;
}

void for_each_combination(const rankring::Matrix<ExtElem>& gens, int m, std::uint64_t modulus, const Mul& mul,
                          const std::function<void(const std::vector<ExtElem>&)>& visit) {
  const std::size_t k = gens.rows(), n = gens.cols();
  std::vector<std::uint64_t> digits(k * m, 0);
  while (true) {
    std::vector<ExtElem> word(n, ExtElem{Vec(m, 0)});
    for (std::size_t i = 0; i < k; ++i) {
      ExtElem x{Vec(digits.begin() + i * m, digits.begin() + (i + 1) * m)};
      for (std::size_t j = 0; j < n; ++j) {
        const ExtElem t = mul(x, gens(i, j));
        for (int c = 0; c < m; ++c) word[j].coeffs[c] = (word[j].coeffs[c] + t.coeffs[c]) % modulus;
      }
    }
    visit(word);
    std::size_t d = 0;
    for (; d < digits.size(); ++d) {
      if (++digits[d] < modulus) break;
      digits[d] = 0;
    }
    if (d == digits.size()) break;
  }
}

std::optional<int> min_distance(const rankring::Matrix<ExtElem>& gens, int m, std::uint64_t modulus, const Mul& mul) {
  std::optional<int> best;
  for_each_combination(gens, m, modulus, mul, [&](const std::vector<ExtElem>& w) {
    const int r = vector_rank(w, modulus);
    if (r > 0 && (!best || r < *best)) best = r;
  });
  return best;
}

std::set<std::vector<ExtElem>> codewords(const rankring::Matrix<ExtElem>& gens, int m, std::uint64_t modulus,
                                         const Mul& mul) {
  std::set<std::vector<ExtElem>> out;
  for_each_combination(gens, m, modulus, mul, [&](const std::vector<ExtElem>& w) { out.insert(w); });
  return out;
}

}  // namespace oracle
