#include "rankring/pir.hpp"

#include <algorithm>

#include "rankring/vector_rank.hpp"

namespace rankring {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

PirRing decompose(std::uint64_t eta, std::uint64_t trial_bound) {
  if (eta < 2) throw OutOfRange("eta must be at least 2");
  PirRing out;
  out.eta_ = eta;
  std::uint64_t rest = eta;
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t d = 2; d <= rest / d; ++d) {
    if (d > trial_bound) throw OutOfRange("eta has a cofactor beyond the trial-division bound");
    int k = 0;
    while (rest % d == 0) {
      rest /= d;
      ++k;
    }
    if (k > 0) factors.emplace_back(d, k);
  }
  if (rest > 1) {
    auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& f) { return f.first == rest; });
    if (it != factors.end())
      ++it->second;
    else
      factors.emplace_back(rest, 1);
  }
  std::sort(factors.begin(), factors.end());
  for (const auto& [p, k] : factors) {
    ChainRing c(p, k);
    const std::uint64_t q = c.modulus();
    const std::uint64_t cofactor = eta / q;
    const std::uint64_t inv = ChainRing(p, k).invert(cofactor % q);
    out.components_.push_back(c);
    out.idempotents_.push_back(mulmod(cofactor, inv, eta));
  }
  return out;
}

std::uint64_t PirRing::phi_inverse(const std::vector<std::uint64_t>& parts) const {
  if (parts.size() != components_.size()) throw DimensionMismatch("one part per component");
  std::uint64_t x = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) x = (x + mulmod(parts[j] % eta_, idempotents_[j], eta_)) % eta_;
  return x;
}

std::vector<std::uint64_t> PirRing::phi(const std::vector<std::uint64_t>& v, std::size_t j) const {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(phi(x, j));
  return out;
}

std::vector<std::uint64_t> PirRing::phi_inverse(const std::vector<std::vector<std::uint64_t>>& parts) const {
  if (parts.size() != components_.size()) throw DimensionMismatch("one part per component");
  const std::size_t len = parts.empty() ? 0 : parts.front().size();
  std::vector<std::uint64_t> out(len);
  std::vector<std::uint64_t> slice(parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].size() != len) throw DimensionMismatch("component lengths differ");
      slice[j] = parts[j][i];
    }
    out[i] = phi_inverse(slice);
  }
  return out;
}

PirExtension::PirExtension(PirRing ring, const std::vector<std::uint64_t>& h) : ring_(std::move(ring)) {
  for (auto c : h) combined_h_.push_back(ring_.reduce(c));
  for (std::size_t j = 0; j < ring_.size(); ++j) components_.emplace_back(ring_.component(j), ring_.phi(combined_h_, j));
}

PirExtension::PirExtension(PirRing ring, std::vector<Extension> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_.size()) throw DimensionMismatch("one extension per CRT component");
  std::vector<std::vector<std::uint64_t>> hs;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (!(components_[j].base() == ring_.component(j))) throw MixedRings("component extension over the wrong ring");
    if (components_[j].degree() != components_.front().degree())
      throw DimensionMismatch("component extensions must share the degree m");
    hs.push_back(components_[j].modulus_poly());
  }
  combined_h_ = ring_.phi_inverse(hs);
}

ExtElem PirExtension::phi(const ExtElem& x, std::size_t j) const { return ExtElem{ring_.phi(x.coeffs, j)}; }

ExtElem PirExtension::phi_inverse(const std::vector<ExtElem>& parts) const {
  std::vector<std::vector<std::uint64_t>> c;
  for (const auto& p : parts) c.push_back(p.coeffs);
  return ExtElem{ring_.phi_inverse(c)};
}

std::vector<ExtElem> PirExtension::phi(const std::vector<ExtElem>& v, std::size_t j) const {
  std::vector<ExtElem> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(phi(x, j));
  return out;
}

std::vector<ExtElem> PirExtension::phi_inverse(const std::vector<std::vector<ExtElem>>& parts) const {
  if (parts.size() != components_.size()) throw DimensionMismatch("one part per component");
  const std::size_t len = parts.front().size();
  std::vector<ExtElem> out;
  std::vector<ExtElem> slice(parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) slice[j] = parts[j].at(i);
    out.push_back(phi_inverse(slice));
  }
  return out;
}

Matrix<ExtElem> PirExtension::phi(const Matrix<ExtElem>& a, std::size_t j) const {
  Matrix<ExtElem> out(a.rows(), a.cols(), components_.at(j).zero());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = phi(a(r, c), j);
  return out;
}

ExtElem PirExtension::mul(const ExtElem& x, const ExtElem& y) const {
  std::vector<ExtElem> parts;
  for (std::size_t j = 0; j < components_.size(); ++j) parts.push_back(components_[j].mul(phi(x, j), phi(y, j)));
  return phi_inverse(parts);
}

std::size_t pir_rank(const PirExtension& ext, const std::vector<ExtElem>& v) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < ext.size(); ++j) best = std::max(best, vector_rank(ext.component(j), ext.phi(v, j)));
  return best;
}

std::vector<LinearCode> pir_component_codes(const PirExtension& ext, const Matrix<ExtElem>& gens) {
  std::vector<LinearCode> out;
  for (std::size_t j = 0; j < ext.size(); ++j) out.emplace_back(ext.component(j), ext.phi(gens, j));
  return out;
}

std::size_t pir_code_rank(const PirExtension& ext, const Matrix<ExtElem>& gens) {
  std::size_t best = 0;
  for (const auto& c : pir_component_codes(ext, gens)) best = std::max(best, c.rank());
  return best;
}

int pir_min_distance(const PirExtension& ext, const Matrix<ExtElem>& gens, DistanceMethod method) {
  int best = -1;
  for (const auto& c : pir_component_codes(ext, gens)) {
    if (c.is_zero()) continue;
    const int d = min_rank_distance(c, method);
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw ZeroCode("every CRT component of the code is zero");
  return best;
}

}  // namespace rankring
