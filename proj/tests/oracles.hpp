#pragma once

// Brute-force oracles. They use only modular integer arithmetic and the
// element product of an extension; no Smith forms, no shape formulas.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rankring/extension.hpp"
#include "rankring/matrix.hpp"
#include "rankring/shapes.hpp"

namespace oracle {

using Vec = std::vector<std::uint64_t>;
using rankring::ExtElem;

/// Minimum number of generators of the column module of `a` over Z/modulus.
/// For each prime power p^nu of the modulus, the invariant factors of the
/// integer matrix [a | p^nu I] come from its determinantal divisors (exact
/// Leibniz minors); the rank is the count of factors not divisible by p^nu,
/// maximised over the primes. Needs modulus <= 2^16 and at most 6 rows.
int module_rank(const rankring::Matrix<std::uint64_t>& a, std::uint64_t modulus);

/// Rank of the R-module generated by the coordinates of v, via module_rank
/// on the coefficient matrix.
int vector_rank(const std::vector<ExtElem>& v, std::uint64_t modulus);

/// Every element of the Z-span of gens in (Z/modulus)^d.
std::set<Vec> span(const std::vector<Vec>& gens, std::size_t dim, std::uint64_t modulus);

/// Minimum number of generators of span(elements), by subset search.
int min_generating_set_size(const std::vector<Vec>& elements, std::size_t dim, std::uint64_t modulus);

/// Shape of a submodule of (Z/p^nu)^d from the sizes of its p^i-torsion.
rankring::Partition shape_from_elements(const std::set<Vec>& module, std::uint64_t p, int nu);

/// All submodules of (Z/p^nu)^n grouped by shape, by closure search.
/// Feasible only for tiny ambient sizes.
std::map<rankring::Partition, std::uint64_t> submodules_by_shape(std::uint64_t p, int nu, int n);

using Mul = std::function<ExtElem(const ExtElem&, const ExtElem&)>;

/// Calls visit(x G) for every x in S^k, where S has `m` coordinates mod
/// `modulus`.
void for_each_combination(const rankring::Matrix<ExtElem>& gens, int m, std::uint64_t modulus, const Mul& mul,
                          const std::function<void(const std::vector<ExtElem>&)>& visit);

/// min over nonzero codewords of vector_rank; nullopt for the zero code.
std::optional<int> min_distance(const rankring::Matrix<ExtElem>& gens, int m, std::uint64_t modulus, const Mul& mul);

/// Every codeword (as a set) of the code generated by gens.
std::set<std::vector<ExtElem>> codewords(const rankring::Matrix<ExtElem>& gens, int m, std::uint64_t modulus,
                                         const Mul& mul);

}  // namespace oracle
