#include "rankring/sampling.hpp"

#include "rankring/vector_rank.hpp"

namespace rankring {

Rng stream_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5eedu};
  return Rng(seq);
}

std::vector<ExtElem> sample_free_submodule(const Extension& ext, int u, Rng& rng) {
  if (u < 0 || u > ext.degree()) throw OutOfRange("free submodule rank must lie in [0, m]");
  std::vector<ExtElem> f(u);
  for (;;) {
    for (auto& x : f) x = ext.random(rng);
    if (residue_rank(ext, f) == static_cast<std::size_t>(u)) return f;
  }
}

std::size_t residue_matrix_rank(const ChainRing& ring, const Matrix<std::uint64_t>& a) {
  const ChainRing field(ring.p(), 1);
  Matrix<std::uint64_t> r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) %= ring.p();
  return rank(field, r);
}

Matrix<std::uint64_t> sample_free_rows(const ChainRing& ring, int u, int n, Rng& rng) {
  if (u < 0 || u > n) throw OutOfRange("free submodule rank must lie in [0, n]");
  Matrix<std::uint64_t> f(u, n, 0);
  for (;;) {
    for (int i = 0; i < u; ++i)
      for (int j = 0; j < n; ++j) f(i, j) = ring.random(rng);
    if (residue_matrix_rank(ring, f) == static_cast<std::size_t>(u)) return f;
  }
}

}  // namespace rankring
