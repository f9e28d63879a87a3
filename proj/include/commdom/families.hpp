#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commdom/group.hpp"

namespace commdom {

/// A permutation of [0, k) as its image list.
using Permutation = std::vector<std::uint32_t>;

// Canonical element orderings (stable across releases; witness sets and group
// files depend on them):
//   abelian_product  mixed radix, first factor most significant
//   dihedral(2n)     r^i at i, r^i s at n + i
//   generalized_dihedral(A)   a at index(a), a x at |A| + index(a)
//   generalized_quaternion    a^i at i, a^i b at n + i (n = order / 2)
//   symmetric / alternating   lexicographic order of image lists
//   heisenberg(p)    [[1,a,c],[0,1,b],[0,0,1]] at (a p + b) p + c
//   heisenberg_torus breadth-first discovery order of the matrix action
//   pgl2 / psl2      lexicographic order of the induced permutations of the
//                    projective line (field elements 0..q-1, infinity = q)
//   perm_closure     breadth-first discovery order from the identity

GroupTable cyclic(std::size_t n);
GroupTable abelian_product(const std::vector<std::size_t>& factors);
GroupTable generalized_dihedral(const GroupTable& abelian);
GroupTable dihedral(std::size_t order);
GroupTable generalized_quaternion(std::size_t order);
GroupTable symmetric(std::size_t n);
GroupTable alternating(std::size_t n);
GroupTable heisenberg(std::size_t p);
/// Upper unitriangular 3x3 matrices over GF(q) extended by diag(l, 1, 1/l),
/// l running over GF(q)*. For q = 4 the torus acts fixed-point-freely and
/// the result has exactly two non-abelian centralizers.
GroupTable heisenberg_torus(std::size_t q);
GroupTable pgl2(std::size_t q);
GroupTable psl2(std::size_t q);

/// Closure of the generators under composition. Product convention for all
/// permutation groups: (a * b)(x) = a(b(x)).
GroupTable perm_closure(const std::vector<Permutation>& generators,
                        std::size_t cap = kDefaultOrderCap);

/// The non-abelian group of order p q (p < q primes, p | q - 1), realised as
/// affine maps x -> r^i x + j of Z_q with r of multiplicative order p.
GroupTable pq_group(std::size_t p, std::size_t q);

/// Builds a group from a descriptor string such as "dihedral(8)",
/// "generalized_dihedral(abelian_product(3,3))" or
/// "direct(heisenberg(3),cyclic(5))". Every constructor output is re-tagged with
/// its canonical descriptor, so make_group(g.descriptor()) reproduces g.
GroupTable make_group(const std::string& descriptor);

/// Builds a group from CLI-style tokens: a family name followed by integer
/// parameters ("heisenberg", "3"). A single token is parsed as a descriptor.
GroupTable make_group(const std::vector<std::string>& family_and_params);

/// Lists the families accepted by make_group.
std::vector<std::string> family_names();

std::string cycle_notation(const Permutation& p);

}  // namespace commdom
