#pragma once

#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/solution.hpp"

namespace skewbrace {

// Every group table on {0..n-1} with identity 0, found by backtracking with
// Latin-square and associativity pruning. No isomorphism dedup.
std::vector<GroupTable> all_group_tables(int n);

// One representative per isomorphism class, 1 <= n <= 8, in canonical order.
std::vector<GroupTable> enumerate_groups(int n);

enum class BraceEnumMethod { naive, holomorph };

inline const char* method_name(BraceEnumMethod m) {
  return m == BraceEnumMethod::naive ? "naive" : "holomorph";
}

struct BraceCatalog {
  int order = 0;
  BraceEnumMethod method = BraceEnumMethod::holomorph;
  std::vector<FiniteSkewBrace> members;  // canonical forms, sorted
};

// All skew braces of order n up to isomorphism. The holomorph method walks
// regular subgroups of Hol(A,+) for each additive group A; the naive method
// (n <= 4) scans pairs of group tables and filters by skew distributivity.
BraceCatalog enumerate_skew_braces(int n, BraceEnumMethod method = BraceEnumMethod::holomorph);

// All bijective braid-relation tables on {0..n-1}, 1 <= n <= 3, by full scan
// over the (n^2)! bijections of the pair set. Duplicate-free raw tables in
// lexicographic order.
std::vector<SolutionTable> enumerate_solutions(int n, bool require_nondegenerate,
                                               bool require_involutive);

// Non-degenerate solutions generated from (sigma, tau) permutation families;
// must return exactly the non-degenerate subset of enumerate_solutions.
std::vector<SolutionTable> enumerate_solutions_sigma_tau(int n, bool require_involutive);

// Lexicographically minimal table pair over all carrier bijections fixing 0.
// Order <= 8.
FiniteSkewBrace canonical_form(const FiniteSkewBrace& b);
bool are_isomorphic(const FiniteSkewBrace& b1, const FiniteSkewBrace& b2);

GroupTable canonical_group_form(const GroupTable& g);

}  // namespace skewbrace
