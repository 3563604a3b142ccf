#pragma once

// Reference implementations used only by the tests. They share integer types with
// the library but none of its algorithms.

#include "ktoric/group_ring.hpp"
#include "ktoric/integer.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using ktoric::Integer;
using ktoric::IntVector;
using Rows = std::vector<IntVector>;

/// Determinant by cofactor expansion.
Integer determinant(const Rows& m);

/// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of the k x k minors.
/// Returns min(rows, cols) entries, zeros last.
IntVector invariant_factors(const Rows& a, std::size_t cols);

/// Integer row echelon basis of the lattice spanned by `rows`.
Rows echelon(Rows rows, std::size_t cols);

/// Whether v lies in the Z-span of an echelon basis.
bool in_lattice(const Rows& echelon_basis, IntVector v);

/// Membership of h in the ideal (gens) of Z[G], certified on the box of group
/// elements with free coordinates in [-half_width, half_width]: true means the
/// translates t^b * g that fit in the box span h.
bool box_member(const ktoric::GroupHandle& group, const std::vector<ktoric::GroupRingElement>& gens,
                const ktoric::GroupRingElement& h, long half_width);

/// Fine-graded Hilbert numerator of k[x1..xn]/(intersection of the ideals generated
/// by each component), by counting standard monomials up to total degree
/// `truncation` and multiplying by prod (1 - x_i). Keys are exponent vectors.
std::map<std::vector<int>, long> hilbert_numerator(int n, const std::vector<std::vector<int>>& components,
                                                   int truncation);

/// Specializes x_i -> t^{degrees[i]}.
ktoric::GroupRingElement specialize(const std::map<std::vector<int>, long>& numerator,
                                    const std::vector<ktoric::GroupElement>& degrees,
                                    const ktoric::GroupHandle& group);

} // namespace oracle
