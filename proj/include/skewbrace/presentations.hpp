#pragma once

#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/bword.hpp"
#include "skewbrace/ideals.hpp"

namespace skewbrace {

struct PresentationWithAssignment {
  SkewBracePresentation pres;
  Assignment assign;  // canonical assignment under which all relators vanish
};

// One generator g<e> per element; relators ((ga + gc) + (- g_{a+c})) and
// ((ga o gc) o (g_{aoc} ~)) for every pair, plus the relator g0.
PresentationWithAssignment table_presentation(const FiniteSkewBrace& b);

// Presentation of the trivial brace on a product of cyclic groups, one
// generator per factor; 0 means an infinite cyclic factor. Per generator the
// three star relators x*x, x*(-x), (-x)*(-x) plus the additive order
// relator; across factors additive commutation and the mixed star relators.
SkewBracePresentation trivial_brace_presentation(const std::vector<int>& cyclic_orders);

struct ExtendFamilySizes {
  int m = 0;    // transversal generators (non-zero cosets)
  int n = 0;    // ideal generators (non-zero ideal elements)
  int ell = 0;  // relators of the ideal's table presentation
  int s = 0;    // lifted quotient table-presentation relators
  int r = 0;    // lifted additive-group table relators of the quotient
  int total() const { return m * m + m + ell + 4 * n * m + s + r; }
};

// Presentation of b from an ideal i and the quotient b/i: generators y1..ym
// for the non-zero cosets (minimal-element transversal) and x1..xn for the
// non-zero ideal elements. Every correction word is a single x-generator or
// 0, since each discrepancy element lies in the ideal. With i = b the output
// collapses to the ideal's table presentation.
// Throws PreconditionError unless i is an ideal of b.
PresentationWithAssignment extend_presentation(const FiniteSkewBrace& b, const ElementSubset& i,
                                               ExtendFamilySizes* sizes = nullptr);

}  // namespace skewbrace
