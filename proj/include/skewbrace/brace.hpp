#pragma once

#include <string>
#include <vector>

#include "skewbrace/group.hpp"
#include "skewbrace/perm.hpp"
#include "skewbrace/solution.hpp"

namespace skewbrace {

// A finite skew brace on carrier {0..n-1}: two group tables sharing
// identity 0, linked by a o (b + c) = a o b - a + a o c. neg/inv/lambda are
// caches derived from the tables at construction; verify() re-checks them.
// All operations other than verify assume a brace that passed verify.
struct FiniteSkewBrace {
  int n = 0;
  std::vector<int> add;     // n*n, a + b
  std::vector<int> mul;     // n*n, a o b
  std::vector<int> neg;     // additive inverse, -1 if none found
  std::vector<int> inv;     // multiplicative inverse, -1 if none found
  std::vector<int> lambda;  // n*n, lambda[a*n+b] = -a + a o b, -1 if neg missing

  int add_at(int a, int b) const { return add[a * n + b]; }
  int mul_at(int a, int b) const { return mul[a * n + b]; }
  int lambda_at(int a, int b) const { return lambda[a * n + b]; }
  int neg_of(int a) const { return neg[a]; }
  int inv_of(int a) const { return inv[a]; }

  bool tables_equal(const FiniteSkewBrace& o) const { return n == o.n && add == o.add && mul == o.mul; }
};

// Builds the brace and its caches. Throws FormatError on bad dimensions or
// out-of-range entries; does not check the brace axioms (see verify).
FiniteSkewBrace make_skew_brace(int n, std::vector<int> add, std::vector<int> mul);

struct AxiomViolation {
  std::string axiom;         // stable identifier, e.g. "skew-distributivity"
  std::vector<int> witness;  // elements exhibiting the failure, lexicographically first
  std::string detail;
  int occurrences = 0;       // how many tuples violate this axiom
};

struct VerifyReport {
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

VerifyReport verify(const FiniteSkewBrace& b);

// Row a of the lambda table as a permutation, and its inverse.
Perm lambda_of(const FiniteSkewBrace& b, int a);
Perm lambda_inv_of(const FiniteSkewBrace& b, int a);

// a * c = lambda_a(c) - c
int star(const FiniteSkewBrace& b, int a, int c);

// (G,.,.) and (G,.op,.), with the identity relabeled to index 0.
FiniteSkewBrace make_trivial(const GroupTable& g);
FiniteSkewBrace make_almost_trivial(const GroupTable& g);

// Group of order n^2 on pairs (a,b) ~ a*n+b with
// (a,b)(c,d) = (a + lambda_b(c), b o d).
GroupTable semidirect(const FiniteSkewBrace& b);

// r_B(a,c) = (lambda_a(c), lambda_a(c)^-1 o a o c)
SolutionTable solution_from_brace(const FiniteSkewBrace& b);

}  // namespace skewbrace
