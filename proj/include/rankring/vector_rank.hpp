#pragma once

#include <vector>

#include "rankring/extension.hpp"
#include "rankring/linalg.hpp"

namespace rankring {

/// Rank of the R-submodule of S generated by the coordinates of v.
std::size_t vector_rank(const Extension& ext, const std::vector<ExtElem>& v);

/// Minimal generating set {pi^k_i b_i} of supp(v), read off the Smith form of
/// the matrix representation. b_i are R-independent; k_i non-decreasing.
std::vector<ExtElem> support_basis(const Extension& ext, const std::vector<ExtElem>& v);

/// Rank over F_p of Psi(v), computed in the residue field.
std::size_t residue_rank(const Extension& ext, const std::vector<ExtElem>& v);

/// Whether the elements are R-linearly independent (all Smith exponents zero
/// and full rank).
bool is_independent(const Extension& ext, const std::vector<ExtElem>& elems);

}  // namespace rankring
