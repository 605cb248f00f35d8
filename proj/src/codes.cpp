#include "rankring/codes.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "rankring/fp_poly.hpp"
#include "rankring/vector_rank.hpp"

namespace rankring {

namespace {

void check_shape(const Extension& ext, const Matrix<ExtElem>& g) {
  for (const auto& x : g.data())
    if (static_cast<int>(x.coeffs.size()) != ext.degree())
      throw DimensionMismatch("code generator entries need m coordinates");
}

Matrix<ExtElem> leading_rows(const Matrix<ExtElem>& m, std::size_t count, std::size_t cols, const ExtElem& zero) {
  Matrix<ExtElem> out(count, cols, zero);
  for (std::size_t i = 0; i < count; ++i) out.set_row(i, m.row(i));
  return out;
}

}  // namespace

LinearCode::LinearCode(Extension ext, Matrix<ExtElem> gens) : ext_(std::move(ext)), gens_(std::move(gens)) {
  check_shape(ext_, gens_);
  smith_ = smith_normal_form(ext_, gens_);
}

bool LinearCode::is_free() const {
  return std::all_of(smith_.exponents.begin(), smith_.exponents.end(), [](int e) { return e == 0; });
}

Partition LinearCode::shape() const {
  std::vector<int> parts;
  for (int e : smith_.exponents) parts.push_back(ext_.nu() - e);
  return Partition(std::move(parts));
}

int LinearCode::log_p_size() const { return ext_.degree() * shape().size(); }

Matrix<ExtElem> LinearCode::smith_generators() const {
  Matrix<ExtElem> out(smith_.rank, length(), ext_.zero());
  for (std::size_t i = 0; i < smith_.rank; ++i) {
    auto row = smith_.right_inv.row(i);
    for (auto& x : row) x = ext_.mul_pi_power(x, smith_.exponents[i]);
    out.set_row(i, row);
  }
  return out;
}

std::size_t code_rank(const LinearCode& c) { return c.rank(); }
bool is_free(const LinearCode& c) { return c.is_free(); }
int correction_capability(int min_distance) { return min_distance < 1 ? 0 : (min_distance - 1) / 2; }

LinearCode envelope(const LinearCode& c) {
  return LinearCode(c.ext(), leading_rows(c.smith().right_inv, c.rank(), c.length(), c.ext().zero()));
}

LinearCode socle(const LinearCode& c) {
  const Extension& ext = c.ext();
  Matrix<ExtElem> rows = leading_rows(c.smith().right_inv, c.rank(), c.length(), ext.zero());
  return LinearCode(ext, scale(ext, ext.pi_power(ext.nu() - 1), rows));
}

LinearCode project_code(const LinearCode& c) {
  const Extension& field = c.ext().residue_field();
  Matrix<ExtElem> img(c.gens().rows(), c.length(), field.zero());
  for (std::size_t i = 0; i < img.rows(); ++i)
    for (std::size_t j = 0; j < img.cols(); ++j) img(i, j) = c.ext().psi(c.gens()(i, j));
  const auto sf = smith_normal_form(field, img);
  if (sf.rank == 0) throw ZeroProjection("Psi(C) is the zero code");
  return LinearCode(field, leading_rows(sf.right_inv, sf.rank, c.length(), field.zero()));
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("RANKRING_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

namespace {

// Walks every combination sum_s digit_s * step_s with digit_s < radix_s and
// radix_s * step_s = 0, tracking the minimum rank of nonzero combinations.
// Steps are flattened matrix representations (m x n, row-major).
int min_rank_over_span(const ChainRing& base, std::size_t m, std::size_t n,
                       const std::vector<std::vector<std::uint64_t>>& steps, const std::vector<std::uint64_t>& radix,
                       std::uint64_t cap, unsigned workers) {
  BigInt total = 1;
  for (auto r : radix) total *= r;
  if (total > BigInt(cap)) throw TooLarge("codeword enumeration of " + total.str() + " exceeds cap " + std::to_string(cap));
  const std::uint64_t count = static_cast<std::uint64_t>(total);
  if (count <= 1) throw ZeroCode("the code has no nonzero codeword");

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, count / 4096)));
  std::atomic<int> best(static_cast<int>(std::min(m, n)) + 1);

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> digit(steps.size(), 0);
    std::vector<std::uint64_t> cur(m * n, 0);
    std::uint64_t idx = begin;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      digit[s] = idx % radix[s];
      idx /= radix[s];
      for (std::size_t t = 0; t < cur.size(); ++t) cur[t] = base.add(cur[t], base.mul(digit[s] % base.modulus(), steps[s][t]));
    }
    Matrix<std::uint64_t> mat(m, n, 0);
    for (std::uint64_t i = begin; i < end; ++i) {
      if ((i & 1023u) == 0 && best.load(std::memory_order_relaxed) <= 1) return;
      if (i != 0) {
        for (std::size_t t = 0; t < cur.size(); ++t) mat(t / n, t % n) = cur[t];
        const int rk = static_cast<int>(rank(base, mat));
        int seen = best.load(std::memory_order_relaxed);
        while (rk > 0 && rk < seen && !best.compare_exchange_weak(seen, rk)) {
        }
      }
      for (std::size_t s = 0; s < steps.size(); ++s) {
        for (std::size_t t = 0; t < cur.size(); ++t) cur[t] = base.add(cur[t], steps[s][t]);
        if (++digit[s] < radix[s]) break;
        digit[s] = 0;
      }
    }
  };

  if (workers <= 1) {
    run(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = w * chunk, e = std::min(count, b + chunk);
      if (b < e) pool.emplace_back(run, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return best.load();
}

// Steps a^c * pi^delta_i * b_i with radix p^(nu - delta_i).
int min_rank_of_code(const LinearCode& code, std::uint64_t cap, unsigned workers) {
  const Extension& ext = code.ext();
  const ChainRing& base = ext.base();
  const auto& sf = code.smith();
  const Matrix<ExtElem> gens = code.smith_generators();
  std::vector<std::vector<std::uint64_t>> steps;
  std::vector<std::uint64_t> radix;
  for (std::size_t i = 0; i < sf.rank; ++i) {
    const std::uint64_t r = checked_power(base.p(), ext.nu() - sf.exponents[i]);
    for (int c = 0; c < ext.degree(); ++c) {
      std::vector<ExtElem> row = gens.row(i);
      for (auto& x : row) x = ext.mul(ext.generator_power(c), x);
      steps.push_back(ext.matrix_representation(row).data());
      radix.push_back(r);
    }
  }
  return min_rank_over_span(base, ext.degree(), code.length(), steps, radix, cap, workers);
}

}  // namespace

int min_rank_distance(const LinearCode& c, DistanceMethod method, std::optional<std::uint64_t> cap, unsigned workers) {
  if (c.is_zero()) throw ZeroCode("minimum distance of the zero code");
  const std::uint64_t limit = cap.value_or(enumeration_cap());
  if (method == DistanceMethod::Brute) return min_rank_of_code(c, limit, workers);
  return min_rank_of_code(project_code(envelope(c)), limit, workers);
}

bool singleton_holds(const LinearCode& c, int d) {
  const long long m = c.ext().degree(), n = static_cast<long long>(c.length());
  // log_{|R|} |C| = m * |lambda| / nu; compare after multiplying through by nu.
  const long long lhs = m * c.shape().size();
  const long long rhs = c.ext().nu() * std::max(m, n) * (std::min(m, n) - d + 1);
  return lhs <= rhs;
}

LinearCode lift_field_code(const Extension& ring_ext, const LinearCode& field_code) {
  const Extension& f = field_code.ext();
  if (f.nu() != 1 || f.p() != ring_ext.p() || f.modulus_poly() != fp::reduce(ring_ext.modulus_poly(), ring_ext.p()))
    throw InvalidParams("field code does not live in the residue field of the target extension");
  if (field_code.rank() != field_code.gens().rows()) throw DependentRows("field generator rows are dependent");
  Matrix<ExtElem> g(field_code.gens().rows(), field_code.length(), ring_ext.zero());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = ring_ext.lift(field_code.gens()(i, j));
  return LinearCode(ring_ext, g);
}

RdReduction reduce_rd_instance(const Extension& ring_ext, const LinearCode& field_code, const std::vector<ExtElem>& y,
                               int t) {
  if (y.size() != field_code.length()) throw DimensionMismatch("received word length");
  LinearCode lifted = lift_field_code(ring_ext, field_code);
  const ExtElem top = ring_ext.pi_power(ring_ext.nu() - 1);
  std::vector<ExtElem> y2;
  for (const auto& x : y) y2.push_back(ring_ext.mul(top, ring_ext.lift(x)));
  return RdReduction{socle(lifted), std::move(y2), t};
}

std::vector<ExtElem> map_back_to_field(const Extension& ring_ext, const std::vector<ExtElem>& v) {
  const Extension& field = ring_ext.residue_field();
  const int shift = ring_ext.nu() - 1;
  std::vector<ExtElem> out;
  for (const auto& x : v) {
    if (ring_ext.valuation(x) < shift) throw InvalidParams("vector is not in pi^(nu-1) S^n");
    out.push_back(field.from_coeffs(ring_ext.psi(ring_ext.shift_down(x, shift)).coeffs));
  }
  return out;
}

LinearCode random_free_code(const Extension& ext, int n, int k, Rng& rng) {
  if (k < 0 || n < 0 || k > n) throw OutOfRange("random code needs 0 <= k <= n");
  const Extension& field = ext.residue_field();
  Matrix<ExtElem> g(k, n, ext.zero());
  for (;;) {
    Matrix<ExtElem> img(k, n, field.zero());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) {
        g(i, j) = ext.random(rng);
        img(i, j) = ext.psi(g(i, j));
      }
    if (rank(field, img) == static_cast<std::size_t>(k)) return LinearCode(ext, g);
  }
}

LinearCode random_free_code(const Extension& ext, int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  return random_free_code(ext, n, k, rng);
}

PlantedError random_error(const Extension& ext, int n, int r, Rng& rng, const std::optional<Partition>& shape) {
  if (r < 0 || r > std::min(ext.degree(), n)) throw OutOfRange("error rank must lie in [0, min(m, n)]");
  if (shape && (static_cast<int>(shape->length()) != r || shape->largest() > ext.nu()))
    throw OutOfRange("support shape must have r parts, each at most nu");
  PlantedError out;
  out.support = sample_free_submodule(ext, r, rng);
  if (shape)
    for (int i = 0; i < r; ++i) out.support[i] = ext.mul_pi_power(out.support[i], ext.nu() - shape->part(i + 1));
  out.coords = sample_free_rows(ext.base(), r, n, rng);
  out.error.assign(n, ext.zero());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      out.error[j] = ext.add(out.error[j], ext.scalar_mul(out.coords(i, j), out.support[i]));
  return out;
}

std::vector<ExtElem> random_error(const Extension& ext, int n, int r, std::uint64_t seed) {
  Rng rng(seed);
  return random_error(ext, n, r, rng).error;
}

PlantedInstance make_planted_instance(const Extension& ext, int n, int k, int r, Rng& rng,
                                      const std::optional<Partition>& shape) {
  LinearCode code = random_free_code(ext, n, k, rng);
  Matrix<ExtElem> h = dual_code_matrix(ext, code.gens());
  PlantedError planted = random_error(ext, n, r, rng, shape);
  std::vector<ExtElem> msg(k);
  for (auto& x : msg) x = ext.random(rng);
  std::vector<ExtElem> c = encode(ext, msg, code.gens());
  std::vector<ExtElem> y = add(ext, c, planted.error);
  std::vector<ExtElem> s = syndrome(ext, planted.error, h);
  return PlantedInstance{std::move(code), std::move(h), std::move(planted), std::move(c), std::move(y), std::move(s)};
}

std::vector<ExtElem> syndrome(const Extension& ext, const std::vector<ExtElem>& y, const Matrix<ExtElem>& h) {
  if (y.size() != h.cols()) throw DimensionMismatch("syndrome: word length differs from H columns");
  return mat_vec(ext, h, y);
}

std::vector<ExtElem> encode(const Extension& ext, const std::vector<ExtElem>& x, const Matrix<ExtElem>& g) {
  return vec_mat(ext, x, g);
}

}  // namespace rankring
