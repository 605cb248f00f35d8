#include "rankring/vector_rank.hpp"

namespace rankring {

std::size_t vector_rank(const Extension& ext, const std::vector<ExtElem>& v) {
  return rank(ext.base(), ext.matrix_representation(v));
}

std::vector<ExtElem> support_basis(const Extension& ext, const std::vector<ExtElem>& v) {
  const auto sf = smith_normal_form(ext.base(), ext.matrix_representation(v));
  std::vector<ExtElem> basis;
  for (std::size_t i = 0; i < sf.rank; ++i) {
    ExtElem b = ext.from_coeffs(sf.left_inv.col(i));
    basis.push_back(ext.mul_pi_power(b, sf.exponents[i]));
  }
  return basis;
}

std::size_t residue_rank(const Extension& ext, const std::vector<ExtElem>& v) {
  const Extension& field = ext.residue_field();
  return rank(field.base(), field.matrix_representation(psi(ext, v)));
}

bool is_independent(const Extension& ext, const std::vector<ExtElem>& elems) {
  const auto sf = smith_normal_form(ext.base(), ext.matrix_representation(elems), false);
  if (sf.rank != elems.size()) return false;
  for (int e : sf.exponents)
    if (e != 0) return false;
  return true;
}

}  // namespace rankring
