#pragma once

// Independent reference implementations used only by the tests. They share no code with the library
// beyond plain data types.

#include <array>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Tri = std::array<int, 3>;
using TriSet = std::vector<Tri>;

// Disk check from first principles: manifold edges, one boundary cycle, Euler characteristic 1,
// and every vertex link a single path or cycle.
bool is_disk(const TriSet& t);

// Minimum over all vertex permutations of the sorted unoriented triangle list.
TriSet permutation_canonical(const TriSet& t);

// Number of triangulated disks with k triangles up to isomorphism, by exhaustion over vertex sets.
std::size_t brute_force_disks(int k);

// Z^cols modulo the rows, by plain dense Smith normal form: returns (free rank, invariant factors > 1).
std::pair<int, std::vector<mpz_class>> dense_cokernel(std::vector<std::vector<mpz_class>> m, int cols);

// H_1 of the covering of the presentation complex for the permutation action of `gens`
// (generators given as permutations, relators as signed generator-index sequences).
std::pair<int, std::vector<mpz_class>> fox_kernel_homology(const std::vector<std::vector<int>>& gens,
                                                            const std::vector<std::vector<int>>& relators);

// Order of the group generated by permutations, by closure.
std::size_t closure_order(const std::vector<std::vector<int>>& gens);

}  // namespace oracle
