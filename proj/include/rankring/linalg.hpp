#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rankring/errors.hpp"
#include "rankring/matrix.hpp"

namespace rankring {

/// What the generic algorithms need from a chain ring: exact arithmetic, the
/// valuation with respect to the maximal-ideal generator pi, unit inversion,
/// and exact division by powers of pi.
template <class R>
concept ChainRingLike = requires(const R& r, const typename R::Elem& x, int k) {
  { r.zero() } -> std::convertible_to<typename R::Elem>;
  { r.one() } -> std::convertible_to<typename R::Elem>;
  { r.is_zero(x) } -> std::convertible_to<bool>;
  { r.add(x, x) } -> std::convertible_to<typename R::Elem>;
  { r.sub(x, x) } -> std::convertible_to<typename R::Elem>;
  { r.neg(x) } -> std::convertible_to<typename R::Elem>;
  { r.mul(x, x) } -> std::convertible_to<typename R::Elem>;
  { r.nu() } -> std::convertible_to<int>;
  { r.valuation(x) } -> std::convertible_to<int>;
  { r.unit_part(x) } -> std::convertible_to<typename R::Elem>;
  { r.invert(x) } -> std::convertible_to<typename R::Elem>;
  { r.shift_down(x, k) } -> std::convertible_to<typename R::Elem>;
  { r.mul_pi_power(x, k) } -> std::convertible_to<typename R::Elem>;
  { r.pi_power(k) } -> std::convertible_to<typename R::Elem>;
  { r.residue_class_count(k) } -> std::convertible_to<std::uint64_t>;
};

/// left * A * right = diag(d) with d_i = pi^exponents[i] for i < rank and
/// zero afterwards; exponents are non-decreasing. The inverses of both
/// transforms are tracked alongside so bases can be read off directly.
template <class Elem>
struct SmithForm {
  std::vector<Elem> diag;
  std::vector<int> exponents;
  std::size_t rank = 0;
  Matrix<Elem> left, left_inv, right, right_inv;
  bool has_transforms = false;
};

template <ChainRingLike Ring>
SmithForm<typename Ring::Elem> smith_normal_form(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                                                 bool with_transforms = true) {
  using Elem = typename Ring::Elem;
  const std::size_t rows = a.rows(), cols = a.cols();
  const int nu = ring.nu();
  Matrix<Elem> w = a;
  SmithForm<Elem> sf;
  sf.has_transforms = with_transforms;
  if (with_transforms) {
    sf.left = sf.left_inv = identity(ring, rows);
    sf.right = sf.right_inv = identity(ring, cols);
  }

  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    // Pivot: minimal valuation, lowest (row, col) on ties.
    int best = nu;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < rows && best > 0; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const int v = ring.valuation(w(i, j));
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    if (best >= nu) break;

    if (pr != t) {
      w.swap_rows(t, pr);
      if (with_transforms) {
        sf.left.swap_rows(t, pr);
        sf.left_inv.swap_cols(t, pr);
      }
    }
    if (pc != t) {
      w.swap_cols(t, pc);
      if (with_transforms) {
        sf.right.swap_cols(t, pc);
        sf.right_inv.swap_rows(t, pc);
      }
    }

    // Normalise the pivot to exactly pi^best.
    const Elem u = ring.unit_part(w(t, t));
    if (u != ring.one()) {
      const Elem uinv = ring.invert(u);
      for (std::size_t j = t; j < cols; ++j) w(t, j) = ring.mul(uinv, w(t, j));
      if (with_transforms) {
        for (std::size_t j = 0; j < rows; ++j) sf.left(t, j) = ring.mul(uinv, sf.left(t, j));
        for (std::size_t i = 0; i < rows; ++i) sf.left_inv(i, t) = ring.mul(sf.left_inv(i, t), u);
      }
    }

    for (std::size_t i = t + 1; i < rows; ++i) {
      if (ring.is_zero(w(i, t))) continue;
      const Elem c = ring.shift_down(w(i, t), best);
      for (std::size_t j = t; j < cols; ++j) w(i, j) = ring.sub(w(i, j), ring.mul(c, w(t, j)));
      if (with_transforms) {
        for (std::size_t j = 0; j < rows; ++j) sf.left(i, j) = ring.sub(sf.left(i, j), ring.mul(c, sf.left(t, j)));
        for (std::size_t k = 0; k < rows; ++k)
          sf.left_inv(k, t) = ring.add(sf.left_inv(k, t), ring.mul(sf.left_inv(k, i), c));
      }
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (ring.is_zero(w(t, j))) continue;
      const Elem c = ring.shift_down(w(t, j), best);
      w(t, j) = ring.zero();
      if (with_transforms) {
        for (std::size_t k = 0; k < cols; ++k) sf.right(k, j) = ring.sub(sf.right(k, j), ring.mul(sf.right(k, t), c));
        for (std::size_t k = 0; k < cols; ++k)
          sf.right_inv(t, k) = ring.add(sf.right_inv(t, k), ring.mul(c, sf.right_inv(j, k)));
      }
    }
    sf.exponents.push_back(best);
  }
  sf.rank = t;
  sf.diag.assign(steps, ring.zero());
  for (std::size_t i = 0; i < t; ++i) sf.diag[i] = ring.pi_power(sf.exponents[i]);
  return sf;
}

/// Minimum number of generators of the row (equivalently column) module.
template <ChainRingLike Ring>
std::size_t rank(const Ring& ring, const Matrix<typename Ring::Elem>& a) {
  return smith_normal_form(ring, a, false).rank;
}

template <class Elem>
struct SolveOutcome {
  std::optional<std::vector<Elem>> particular;
  /// Per unknown in the Smith coordinates y = right^-1 x: y_j is determined
  /// modulo pi^free_valuations[j] (nu means unique, 0 means unconstrained).
  std::vector<int> free_valuations;
  bool solvable() const { return particular.has_value(); }
};

/// Solves A x = b through diag(d) y = left b, x = right y. Free parameters
/// are set to zero in the particular solution.
template <ChainRingLike Ring>
SolveOutcome<typename Ring::Elem> solve(const Ring& ring, const SmithForm<typename Ring::Elem>& sf,
                                        const std::vector<typename Ring::Elem>& b) {
  using Elem = typename Ring::Elem;
  if (!sf.has_transforms) throw InvalidParams("solve needs Smith transforms");
  if (b.size() != sf.left.rows()) throw DimensionMismatch("right-hand side length");
  const std::size_t cols = sf.right.rows();
  SolveOutcome<Elem> out;
  out.free_valuations.assign(cols, 0);
  for (std::size_t j = 0; j < sf.rank; ++j) out.free_valuations[j] = ring.nu() - sf.exponents[j];

  const std::vector<Elem> lb = mat_vec(ring, sf.left, b);
  std::vector<Elem> y(cols, ring.zero());
  for (std::size_t i = 0; i < lb.size(); ++i) {
    if (i < sf.rank) {
      if (ring.valuation(lb[i]) < sf.exponents[i]) return out;
      y[i] = ring.shift_down(lb[i], sf.exponents[i]);
    } else if (!ring.is_zero(lb[i])) {
      return out;
    }
  }
  out.particular = mat_vec(ring, sf.right, y);
  return out;
}

template <ChainRingLike Ring>
SolveOutcome<typename Ring::Elem> solve(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                                        const std::vector<typename Ring::Elem>& b) {
  return solve(ring, smith_normal_form(ring, a), b);
}

/// Walks the solution set of A x = b (A given by its Smith form), starting at
/// the particular solution, visiting at most `cap` solutions. The visitor
/// returns false to stop early. Returns the number of solutions visited.
template <ChainRingLike Ring>
std::uint64_t enumerate_solutions(const Ring& ring, const SmithForm<typename Ring::Elem>& sf,
                                  const std::vector<typename Ring::Elem>& b, std::uint64_t cap,
                                  const std::function<bool(const std::vector<typename Ring::Elem>&)>& visit) {
  using Elem = typename Ring::Elem;
  const auto base = solve(ring, sf, b);
  if (!base.particular || cap == 0) return 0;
  const std::size_t cols = sf.right.rows();
  // y-space particular solution and the step generator per coordinate.
  std::vector<Elem> y0 = mat_vec(ring, sf.right_inv, *base.particular);
  std::vector<std::size_t> slots;
  std::vector<std::uint64_t> radix;
  for (std::size_t j = 0; j < cols; ++j) {
    const int fv = base.free_valuations[j];
    if (fv >= ring.nu()) continue;
    slots.push_back(j);
    radix.push_back(ring.residue_class_count(ring.nu() - fv));
  }
  std::vector<std::uint64_t> digit(slots.size(), 0);
  std::uint64_t visited = 0;
  while (visited < cap) {
    std::vector<Elem> y = y0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const std::size_t j = slots[s];
      const int fv = base.free_valuations[j];
      const Elem t = ring.residue_class_rep(ring.nu() - fv, digit[s]);
      y[j] = ring.add(y[j], ring.mul_pi_power(t, fv));
    }
    ++visited;
    if (!visit(mat_vec(ring, sf.right, y))) break;
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      if (++digit[s] < radix[s]) break;
      digit[s] = 0;
    }
    if (s == slots.size()) break;
  }
  return visited;
}

/// Rows generate the right kernel {x : A x = 0}.
template <ChainRingLike Ring>
Matrix<typename Ring::Elem> kernel_basis(const Ring& ring, const Matrix<typename Ring::Elem>& a) {
  using Elem = typename Ring::Elem;
  const auto sf = smith_normal_form(ring, a);
  const std::size_t cols = a.cols();
  Matrix<Elem> out;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Elem> col = sf.right.col(j);
    if (j < sf.rank) {
      const int shift = ring.nu() - sf.exponents[j];
      if (shift >= ring.nu()) continue;
      for (auto& x : col) x = ring.mul_pi_power(x, shift);
    }
    out.append_row(col);
  }
  if (out.rows() == 0) out = Matrix<Elem>(0, cols, ring.zero());
  return out;
}

/// Parity-check matrix of the free code generated by the rows of g:
/// (n - k) x n, free, with g * h^T = 0.
template <ChainRingLike Ring>
Matrix<typename Ring::Elem> dual_code_matrix(const Ring& ring, const Matrix<typename Ring::Elem>& g) {
  using Elem = typename Ring::Elem;
  const auto sf = smith_normal_form(ring, g);
  if (sf.rank != g.rows()) throw NotFree("generator rows are not independent");
  for (int e : sf.exponents)
    if (e != 0) throw NotFree("Smith diagonal has a non-unit entry");
  Matrix<Elem> h(g.cols() - sf.rank, g.cols(), ring.zero());
  for (std::size_t j = sf.rank; j < g.cols(); ++j) h.set_row(j - sf.rank, sf.right.col(j));
  return h;
}

/// Rows generate a free rank-u module containing the row module of w.
template <ChainRingLike Ring>
Matrix<typename Ring::Elem> complete_to_free(const Ring& ring, const Matrix<typename Ring::Elem>& w,
                                             std::size_t u) {
  using Elem = typename Ring::Elem;
  const auto sf = smith_normal_form(ring, w);
  if (u < sf.rank) throw RankTooSmall("u is below rank(W)");
  if (u > w.cols()) throw OutOfRange("u exceeds the ambient rank");
  Matrix<Elem> f(u, w.cols(), ring.zero());
  for (std::size_t i = 0; i < u; ++i) f.set_row(i, sf.right_inv.row(i));
  return f;
}

/// Whether v lies in the module generated by the rows of a.
template <ChainRingLike Ring>
bool row_module_contains(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                         const std::vector<typename Ring::Elem>& v) {
  if (a.rows() == 0) return is_zero_vector(ring, v);
  return solve(ring, a.transposed(), v).solvable();
}

template <ChainRingLike Ring>
bool row_module_includes(const Ring& ring, const Matrix<typename Ring::Elem>& big,
                         const Matrix<typename Ring::Elem>& small) {
  if (small.rows() == 0) return true;
  const auto sf = smith_normal_form(ring, big.rows() == 0 ? Matrix<typename Ring::Elem>(1, small.cols(), ring.zero())
                                                          : big.transposed());
  for (std::size_t i = 0; i < small.rows(); ++i)
    if (!solve(ring, sf, small.row(i)).solvable()) return false;
  return true;
}

template <ChainRingLike Ring>
bool same_row_module(const Ring& ring, const Matrix<typename Ring::Elem>& a, const Matrix<typename Ring::Elem>& b) {
  return row_module_includes(ring, a, b) && row_module_includes(ring, b, a);
}

}  // namespace rankring
