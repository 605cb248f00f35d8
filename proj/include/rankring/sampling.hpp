#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rankring/extension.hpp"
#include "rankring/linalg.hpp"

namespace rankring {

using Rng = std::mt19937_64;

/// Independent stream for (seed, index), so trial i sees the same candidates
/// no matter which worker runs it.
Rng stream_for(std::uint64_t seed, std::uint64_t index);

/// u elements of S whose residues are F_p-independent, i.e. a basis of a free
/// rank-u R-submodule of S. Rejection sampling on uniform coordinates.
std::vector<ExtElem> sample_free_submodule(const Extension& ext, int u, Rng& rng);

/// u x n matrix over R whose rows are independent modulo p: a basis of a free
/// rank-u submodule of R^n.
Matrix<std::uint64_t> sample_free_rows(const ChainRing& ring, int u, int n, Rng& rng);

/// Rank over F_p of the matrix reduced modulo p.
std::size_t residue_matrix_rank(const ChainRing& ring, const Matrix<std::uint64_t>& a);

}  // namespace rankring
