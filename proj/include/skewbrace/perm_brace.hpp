#pragma once

#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/bword.hpp"
#include "skewbrace/perm.hpp"
#include "skewbrace/solution.hpp"

namespace skewbrace {

// An element of Sym(X) x Sym(X); products are componentwise.
struct PermPair {
  Perm first, second;
  bool operator==(const PermPair&) const = default;
  auto operator<=>(const PermPair&) const = default;
};

// The finite skew brace generated inside Sym(X) x Sym(X) by the pairs
// g_x = (sigma_x, tau_x^-1) of a non-degenerate solution, together with the
// data tying its carrier back to the generators.
struct PermBraceResult {
  FiniteSkewBrace brace;
  std::vector<PermPair> labels;    // element -> pair; labels[0] is the identity pair
  std::vector<int> generator_map;  // x in X -> element index of g_x
  // One additive word per element: e = g_{w[0]} + g_{w[1]} + ... (left folded,
  // empty word for 0).
  std::vector<std::vector<int>> additive_certificates;
};

// Builds carrier, multiplication and addition tables. Multiplication is the
// pair closure; addition grows from a + g_y = a o g_{f_a^-1(y)} where f_a is
// the first component of a's label. The finished triple must pass verify;
// failure is reported as std::logic_error since it would mean the
// construction identities are inconsistent.
// Throws PreconditionError when sol is degenerate or fails the braid test.
PermBraceResult permutation_brace(const SolutionTable& sol);

// Group presentation of the multiplicative structure: generators x1..xn, one
// relator (xi o xj) o ((x_sigma o x_tau) ~) per ordered pair.
SkewBracePresentation emit_mul_presentation(const SolutionTable& sol);

// Additive counterpart: relators ((xi + xs) + (- (xs + xt))) encoding
// x + sigma_x(y) = sigma_x(y) + sigma_{sigma_x(y)}(tau_y(x)).
SkewBracePresentation emit_add_presentation(const SolutionTable& sol);

// True iff every relator of both presentations evaluates to the identity in
// pb.brace under x_i -> g_{x_i}.
bool check_image_relations(const SolutionTable& sol, const PermBraceResult& pb);

}  // namespace skewbrace
