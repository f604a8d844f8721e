#pragma once

#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// A subset of a brace carrier as a membership mask. Subsets are totally
// ordered by their mask (element 0 first), which fixes every output order.
struct ElementSubset {
  int n = 0;
  std::vector<uint8_t> mask;

  static ElementSubset empty(int n) { return {n, std::vector<uint8_t>(n, 0)}; }
  static ElementSubset zero_only(int n);
  static ElementSubset full(int n) { return {n, std::vector<uint8_t>(n, 1)}; }
  static ElementSubset of(int n, const std::vector<int>& elems);

  bool contains(int e) const { return mask[e] != 0; }
  void insert(int e) { mask[e] = 1; }
  int count() const;
  std::vector<int> elements() const;

  bool operator==(const ElementSubset&) const = default;
  // Ascending bit-pattern order, element 0 least significant: {0} < {0,1} < {0,2} < ...
  bool operator<(const ElementSubset& o) const {
    for (int e = n - 1; e >= 0; --e)
      if (mask[e] != o.mask[e]) return mask[e] < o.mask[e];
    return false;
  }
  bool subset_of(const ElementSubset& o) const;
};

// Strictly increasing ideal chain starting at {0}. length() counts the
// proper steps after the initial term.
struct AscendingSeries {
  std::vector<ElementSubset> terms;
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

bool is_additive_subgroup(const FiniteSkewBrace& b, const ElementSubset& s);

// Additive subgroup with lambda_a(s) inside s for all a. When that holds,
// multiplicative closure of s is asserted (it is forced) rather than tested.
bool is_left_ideal(const FiniteSkewBrace& b, const ElementSubset& s);

// Left ideal, normal in both groups.
bool is_ideal(const FiniteSkewBrace& b, const ElementSubset& s);

// Smallest ideal containing seed, by alternating closure under addition,
// lambda images, both conjugations, and star images on both sides.
ElementSubset ideal_closure(const FiniteSkewBrace& b, const ElementSubset& seed);

struct BraceQuotient {
  FiniteSkewBrace brace;
  std::vector<int> projection;  // carrier element -> coset index
  std::vector<int> coset_rep;   // coset index -> minimal representative
};

// Throws PreconditionError unless is_ideal(b, i). Cosets are numbered by
// their minimal element, so the coset of 0 is element 0.
BraceQuotient quotient(const FiniteSkewBrace& b, const ElementSubset& i);

ElementSubset socle(const FiniteSkewBrace& b);        // Ker(lambda) n Z(B,+)
ElementSubset annihilator(const FiniteSkewBrace& b);  // Soc(B) n Z(B,o)
ElementSubset derived_ideal(const FiniteSkewBrace& b);  // additive closure of all a*c

AscendingSeries upper_annihilator_series(const FiniteSkewBrace& b);
AscendingSeries upper_socle_series(const FiniteSkewBrace& b);

bool is_annihilator_nilpotent(const FiniteSkewBrace& b);
bool is_simple(const FiniteSkewBrace& b);

enum class IdealEnumMode {
  automatic,             // subgroup scan up to order 12, closure mode beyond
  subgroup_scan,         // test every additive subgroup (exponential in n)
  closure_of_singletons  // principal ideals closed under pairwise joins
};

std::vector<ElementSubset> all_ideals(const FiniteSkewBrace& b,
                                      IdealEnumMode mode = IdealEnumMode::automatic);

// All g*x, x*g, g o x o g^-1, g + x - g over g in B.
ElementSubset conjugates(const FiniteSkewBrace& b, int x);

// { k-fold additive sum of s : s in Soc(B) }
ElementSubset socle_multiples(const FiniteSkewBrace& b, int k);

}  // namespace skewbrace
