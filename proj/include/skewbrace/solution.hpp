#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "skewbrace/perm.hpp"

namespace skewbrace {

// A finite set-theoretic map r : X x X -> X x X on X = {0..n-1}, stored as a
// full table. Candidate solutions are bijective tables satisfying the braid
// relation; both properties are queried, not assumed.
struct SolutionTable {
  int n = 0;
  std::vector<std::pair<int, int>> map;  // index i*n+j holds r(i,j)

  std::pair<int, int> apply(int i, int j) const { return map[i * n + j]; }
  bool operator==(const SolutionTable&) const = default;
};

// Throws FormatError if the table has wrong size or out-of-range entries.
void check_solution_shape(const SolutionTable& sol);

// First pair of inputs sharing an output, if any: {i1,j1,i2,j2,k,l}.
std::optional<std::array<int, 6>> bijectivity_witness(const SolutionTable& sol);
bool is_bijective(const SolutionTable& sol);

// The component maps sigma_x(y), tau_y(x) with r(x,y) = (sigma[x](y), tau[y](x)).
// Rows need not be permutations.
struct DiagonalMaps {
  std::vector<std::vector<int>> sigma;
  std::vector<std::vector<int>> tau;
};

DiagonalMaps extract_diagonal(const SolutionTable& sol);

// First triple (a,b,c) where r12 r23 r12 != r23 r12 r23, rightmost factor
// applied first.
std::optional<std::array<int, 3>> ybe_witness(const SolutionTable& sol);
bool is_ybe(const SolutionTable& sol);

// First failing row: {0, x} when sigma[x] is not a permutation,
// {1, y} when tau[y] is not.
std::optional<std::array<int, 2>> nondegeneracy_witness(const SolutionTable& sol);
bool is_nondegenerate(const SolutionTable& sol);

// First pair with r(r(x,y)) != (x,y).
std::optional<std::array<int, 2>> involutivity_witness(const SolutionTable& sol);
bool is_involutive(const SolutionTable& sol);

SolutionTable make_flip(int n);

// Conjugate the table by p x p: r'(p(x),p(y)) = (p x p)(r(x,y)).
SolutionTable relabel_solution(const SolutionTable& sol, const Perm& p);

}  // namespace skewbrace
