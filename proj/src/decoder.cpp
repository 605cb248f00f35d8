#include "rankring/decoder.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <thread>

#include "rankring/codes.hpp"
#include "rankring/shapes.hpp"
#include "rankring/vector_rank.hpp"

namespace rankring {

void validate(const RsdInstance& inst) {
  const auto& ext = inst.ext;
  if (inst.H.rows() > inst.H.cols()) throw DimensionMismatch("H has more rows than columns");
  for (const auto& x : inst.H.data())
    if (static_cast<int>(x.coeffs.size()) != ext.degree()) throw DimensionMismatch("H entries need m coordinates");
  if (inst.s.size() != inst.H.rows()) throw DimensionMismatch("syndrome length must equal the number of rows of H");
  for (const auto& x : inst.s)
    if (static_cast<int>(x.coeffs.size()) != ext.degree()) throw DimensionMismatch("syndrome entries need m coordinates");
  const auto sf = smith_normal_form(ext, inst.H, false);
  if (sf.rank != inst.H.rows()) throw NotFree("rows of H are dependent");
  for (int e : sf.exponents)
    if (e != 0) throw NotFree("rows of H do not generate a free module");
  const int bound = std::min(inst.m(), inst.n());
  if (inst.r < 0 || inst.r > bound) throw OutOfRange("r must lie in [0, min(m, n)]");
  if (inst.t && (*inst.t < 0 || *inst.t > bound)) throw OutOfRange("t must lie in [0, min(m, n)]");
}

int default_u(int algorithm, int m, int n, int k) {
  if (algorithm == 1) return n == 0 ? 0 : m * (n - k) / n;
  if (algorithm == 2) return n - k;
  throw InvalidParams("algorithm must be 1 or 2");
}

std::pair<Matrix<std::uint64_t>, std::vector<std::uint64_t>> build_system_alg1(const Extension& ext,
                                                                               const Matrix<ExtElem>& H,
                                                                               const std::vector<ExtElem>& s,
                                                                               const std::vector<ExtElem>& f) {
  if (s.size() != H.rows()) throw DimensionMismatch("syndrome length");
  const std::size_t m = ext.degree(), n = H.cols(), u = f.size();
  Matrix<std::uint64_t> a(m * H.rows(), n * u, 0);
  std::vector<std::uint64_t> b(m * H.rows(), 0);
  for (std::size_t l = 0; l < H.rows(); ++l) {
    for (std::size_t c = 0; c < m; ++c) b[l * m + c] = s[l].coeffs[c];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < u; ++i) {
        const ExtElem p = ext.mul(f[i], H(l, j));
        for (std::size_t c = 0; c < m; ++c) a(l * m + c, j * u + i) = p.coeffs[c];
      }
  }
  return {std::move(a), std::move(b)};
}

std::vector<ExtElem> reconstruct_alg1(const Extension& ext, const std::vector<std::uint64_t>& x,
                                      const std::vector<ExtElem>& f, int n) {
  const std::size_t u = f.size();
  if (x.size() != u * n) throw DimensionMismatch("solution length");
  std::vector<ExtElem> e(n, ext.zero());
  for (int j = 0; j < n; ++j)
    for (std::size_t i = 0; i < u; ++i) e[j] = ext.add(e[j], ext.scalar_mul(x[j * u + i], f[i]));
  return e;
}

std::pair<Matrix<std::uint64_t>, std::vector<std::uint64_t>> build_system_alg2(const Extension& ext,
                                                                               const Matrix<ExtElem>& H,
                                                                               const std::vector<ExtElem>& s,
                                                                               const Matrix<std::uint64_t>& F) {
  if (s.size() != H.rows()) throw DimensionMismatch("syndrome length");
  if (F.cols() != H.cols()) throw DimensionMismatch("F must have n columns");
  const std::size_t m = ext.degree(), u = F.rows();
  Matrix<std::uint64_t> a(m * H.rows(), m * u, 0);
  std::vector<std::uint64_t> b(m * H.rows(), 0);
  for (std::size_t l = 0; l < H.rows(); ++l) {
    for (std::size_t c = 0; c < m; ++c) b[l * m + c] = s[l].coeffs[c];
    for (std::size_t i = 0; i < u; ++i) {
      ExtElem g = ext.zero();
      for (std::size_t j = 0; j < H.cols(); ++j) g = ext.add(g, ext.scalar_mul(F(i, j), H(l, j)));
      for (std::size_t c = 0; c < m; ++c) {
        const ExtElem p = ext.mul(ext.generator_power(static_cast<int>(c)), g);
        for (std::size_t c2 = 0; c2 < m; ++c2) a(l * m + c2, i * m + c) = p.coeffs[c2];
      }
    }
  }
  return {std::move(a), std::move(b)};
}

std::vector<ExtElem> reconstruct_alg2(const Extension& ext, const std::vector<std::uint64_t>& x,
                                      const Matrix<std::uint64_t>& F) {
  const ChainRing& base = ext.base();
  const std::size_t m = ext.degree(), u = F.rows(), n = F.cols();
  if (x.size() != m * u) throw DimensionMismatch("solution length");
  std::vector<ExtElem> e(n, ext.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < m; ++c) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < u; ++i) v = base.add(v, base.mul(x[i * m + c], F(i, j)));
      e[j].coeffs[c] = v;
    }
  return e;
}

namespace {

int resolve_u(int algorithm, int m, int n, int k, std::optional<int> u) {
  const int v = u.value_or(default_u(algorithm, m, n, k));
  const int top = algorithm == 1 ? m : n;
  if (v < 0 || v > top) throw InvalidParams("u must lie in [0, " + std::to_string(top) + "]");
  return v;
}

}  // namespace

BigRational expected_trials(std::uint64_t q, int nu, int m, int n, int k, int r, int algorithm, std::optional<int> u) {
  if (k < 0 || k > n || r < 0) throw OutOfRange("estimator needs 0 <= k <= n and r >= 0");
  const int uu = resolve_u(algorithm, m, n, k, u);
  if (r > uu) throw OutOfRange("r exceeds u: the support can never be contained");
  const int ambient = algorithm == 1 ? m : n;
  return BigRational(beta(q, nu, r, ambient), beta(q, nu, r, uu));
}

BigInt approx_expected_trials(std::uint64_t q, int nu, int m, int n, int k, int r, int algorithm, std::optional<int> u) {
  if (k < 0 || k > n || r < 0) throw OutOfRange("estimator needs 0 <= k <= n and r >= 0");
  const int uu = resolve_u(algorithm, m, n, k, u);
  const int ambient = algorithm == 1 ? m : n;
  // Default Alg 1 guess: the closed form r * floor(mk/n).
  const int exponent = algorithm == 1 && !u ? (m * k) / n : ambient - uu;
  return big_pow(big_pow(BigInt(q), nu), static_cast<std::uint64_t>(r) * exponent);
}

BigInt operations_per_trial(int m, int n, int k, int algorithm, std::optional<int> u) {
  const int uu = resolve_u(algorithm, m, n, k, u);
  const BigInt bm = m, bn = n, bk = n - k, bu = uu;
  if (algorithm == 1) return bm * bk * bu * bu * bn * bn;
  return bm * bm * bm * bk * bk * bk;
}

namespace {

enum class Outcome : std::uint8_t { SolveFailure, RankMismatch, Accepted };

struct TrialResult {
  Outcome outcome = Outcome::SolveFailure;
  std::vector<ExtElem> error;
  bool via_enumeration = false;
};

class Runner {
 public:
  Runner(const RsdInstance& inst, const DecoderParams& params, int r, int u)
      : inst_(inst), params_(params), ext_(inst.ext), r_(r), u_(u) {}

  TrialResult trial(std::uint64_t index) const {
    Rng rng = stream_for(params_.seed, index);
    const ChainRing& base = ext_.base();
    std::vector<ExtElem> f;
    Matrix<std::uint64_t> F;
    std::pair<Matrix<std::uint64_t>, std::vector<std::uint64_t>> sys;
    if (params_.algorithm == 1) {
      f = sample_free_submodule(ext_, u_, rng);
      sys = build_system_alg1(ext_, inst_.H, inst_.s, f);
    } else {
      F = sample_free_rows(base, u_, inst_.n(), rng);
      sys = build_system_alg2(ext_, inst_.H, inst_.s, F);
    }
    auto rebuild = [&](const std::vector<std::uint64_t>& x) {
      return params_.algorithm == 1 ? reconstruct_alg1(ext_, x, f, inst_.n()) : reconstruct_alg2(ext_, x, F);
    };

    TrialResult out;
    const auto sf = smith_normal_form(base, sys.first);
    const auto sol = solve(base, sf, sys.second);
    if (!sol.solvable()) return out;
    out.outcome = Outcome::RankMismatch;
    std::vector<ExtElem> e = rebuild(*sol.particular);
    if (acceptable(e)) {
      out.outcome = Outcome::Accepted;
      out.error = std::move(e);
      return out;
    }
    if (params_.solution_enumeration_cap > 0) {
      enumerate_solutions(base, sf, sys.second, params_.solution_enumeration_cap,
                          std::function<bool(const std::vector<std::uint64_t>&)>([&](const std::vector<std::uint64_t>& x) {
                            std::vector<ExtElem> cand = rebuild(x);
                            if (!acceptable(cand)) return true;
                            out.outcome = Outcome::Accepted;
                            out.error = std::move(cand);
                            out.via_enumeration = true;
                            return false;
                          }));
    }
    return out;
  }

  DecodeReport run(std::uint64_t max_trials) const {
    DecodeReport rep;
    rep.u = u_;
    rep.max_trials = max_trials;
    const unsigned workers = std::max(1u, params_.workers);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{max_trials};
    std::mutex mu;
    std::map<std::uint64_t, TrialResult> accepted;
    std::vector<std::vector<std::pair<std::uint64_t, Outcome>>> misses(workers);

    auto work = [&](unsigned w) {
      for (;;) {
        const std::uint64_t idx = next.fetch_add(1);
        if (idx >= max_trials || idx > best.load()) return;
        TrialResult res = trial(idx);
        if (res.outcome == Outcome::Accepted) {
          std::uint64_t seen = best.load();
          while (idx < seen && !best.compare_exchange_weak(seen, idx)) {
          }
          std::lock_guard<std::mutex> lock(mu);
          accepted.emplace(idx, std::move(res));
        } else {
          misses[w].emplace_back(idx, res.outcome);
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }

    const std::uint64_t stop = accepted.empty() ? max_trials : accepted.begin()->first;
    rep.trials = accepted.empty() ? max_trials : stop + 1;
    for (const auto& lane : misses)
      for (const auto& [idx, kind] : lane) {
        if (idx >= stop) continue;
        if (kind == Outcome::SolveFailure)
          ++rep.solve_failures;
        else
          ++rep.rank_mismatches;
      }
    if (!accepted.empty()) {
      const auto& win = accepted.begin()->second;
      rep.error = win.error;
      rep.rank = r_;
      rep.enumerated_hits = win.via_enumeration ? 1 : 0;
    }
    return rep;
  }

 private:
  bool acceptable(const std::vector<ExtElem>& e) const {
    return vector_rank(ext_, e) == static_cast<std::size_t>(r_) && syndrome(ext_, e, inst_.H) == inst_.s;
  }

  const RsdInstance& inst_;
  const DecoderParams& params_;
  const Extension& ext_;
  int r_;
  int u_;
};

std::uint64_t default_max_trials(const RsdInstance& inst, int algorithm, int r, int u) {
  const BigRational exp = expected_trials(inst.ext.p(), inst.ext.nu(), inst.m(), inst.n(), inst.k(), r, algorithm, u);
  const BigInt cap = 64 * ceil_div(exp);
  const BigInt limit = BigInt(1) << 62;
  return static_cast<std::uint64_t>(cap > limit ? limit : cap);
}

DecodeReport decode_exact(const RsdInstance& inst, const DecoderParams& params, int r) {
  const int u = resolve_u(params.algorithm, inst.m(), inst.n(), inst.k(), params.u);
  if (r == 0) {
    DecodeReport rep;
    rep.u = u;
    if (!is_zero_vector(inst.ext, inst.s)) throw TrialsExhausted("r = 0 needs a zero syndrome");
    rep.error = std::vector<ExtElem>(inst.n(), inst.ext.zero());
    rep.rank = 0;
    return rep;
  }
  if (r > u) throw InvalidParams("u must be at least r");
  const std::uint64_t max_trials = params.max_trials.value_or(default_max_trials(inst, params.algorithm, r, u));
  DecodeReport rep = Runner(inst, params, r, u).run(max_trials);
  if (!rep.error)
    throw TrialsExhausted("no error of rank " + std::to_string(r) + " after " + std::to_string(rep.trials) +
                          " trials (" + std::to_string(rep.solve_failures) + " unsolvable, " +
                          std::to_string(rep.rank_mismatches) + " wrong rank)");
  return rep;
}

}  // namespace

DecodeReport decode(const RsdInstance& inst, const DecoderParams& params) {
  if (params.algorithm != 1 && params.algorithm != 2) throw InvalidParams("algorithm must be 1 or 2");
  validate(inst);
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](DecodeReport rep) {
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };
  if (!inst.t || *inst.t == inst.r) return finish(decode_exact(inst, params, inst.r));

  DecodeReport total;
  for (int r = 0; r <= *inst.t; ++r) {
    try {
      DecodeReport rep = decode_exact(inst, params, r);
      rep.trials += total.trials;
      rep.solve_failures += total.solve_failures;
      rep.rank_mismatches += total.rank_mismatches;
      return finish(rep);
    } catch (const TrialsExhausted&) {
      // Every trial of this rank failed; carry the tallies forward.
      const int u = resolve_u(params.algorithm, inst.m(), inst.n(), inst.k(), params.u);
      if (r > 0 && r <= u)
        total.trials += params.max_trials.value_or(default_max_trials(inst, params.algorithm, r, u));
    }
  }
  throw TrialsExhausted("no error of rank <= " + std::to_string(*inst.t) + " found");
}

namespace {

std::string strip_tag(const std::string& what) {
  const auto pos = what.find(": ");
  return pos == std::string::npos ? what : what.substr(pos + 2);
}

}  // namespace

PirDecodeReport pir_decode(const PirExtension& ext, const std::vector<RsdInstance>& parts, const DecoderParams& params) {
  if (parts.size() != ext.size()) throw DimensionMismatch("one instance per CRT component");
  std::vector<std::future<DecodeReport>> jobs;
  for (const auto& inst : parts) jobs.push_back(std::async(std::launch::async, [&inst, &params] { return decode(inst, params); }));
  PirDecodeReport out;
  std::vector<std::vector<ExtElem>> errors;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const std::string tag = "component " + std::to_string(j) + " (Z/" + std::to_string(ext.component(j).base().modulus()) + "): ";
    try {
      out.components.push_back(jobs[j].get());
    } catch (const TrialsExhausted& e) {
      throw TrialsExhausted(tag + strip_tag(e.what()));
    } catch (const TooLarge& e) {
      throw TooLarge(tag + strip_tag(e.what()));
    } catch (const Error& e) {
      throw InvalidParams(tag + e.what());
    }
    errors.push_back(*out.components.back().error);
  }
  out.error = ext.phi_inverse(errors);
  return out;
}

}  // namespace rankring
