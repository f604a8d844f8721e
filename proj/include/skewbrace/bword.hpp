#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// Expression over generator symbols under +, o, additive negation and
// multiplicative inversion. Trees are immutable and shared freely.
//
// Text grammar (whitespace-insensitive between tokens):
//   word := '0' | NAME | '(' word '+' word ')' | '(' word 'o' word ')'
//         | '(' '-' word ')' | '(' word '~' ')'
//   NAME := [a-z][a-z0-9]*   ("o" is the product token, never a NAME)
class BWord;
using BWordRef = std::shared_ptr<const BWord>;

class BWord {
 public:
  enum class Kind { zero, gen, sum, prod, neg, inv };

  static BWordRef zero();
  static BWordRef gen(std::string name);
  static BWordRef sum(BWordRef l, BWordRef r);
  static BWordRef prod(BWordRef l, BWordRef r);
  static BWordRef neg(BWordRef w);
  static BWordRef inv(BWordRef w);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const BWordRef& lhs() const { return lhs_; }
  const BWordRef& rhs() const { return rhs_; }

 private:
  BWord(Kind k, std::string name, BWordRef l, BWordRef r)
      : kind_(k), name_(std::move(name)), lhs_(std::move(l)), rhs_(std::move(r)) {}

  Kind kind_;
  std::string name_;
  BWordRef lhs_, rhs_;
};

bool structurally_equal(const BWordRef& a, const BWordRef& b);

// lambda_a(b) and a*b as expression macros.
BWordRef lambda_word(const BWordRef& a, const BWordRef& b);  // ((- a) + (a o b))
BWordRef star_word(const BWordRef& a, const BWordRef& b);    // (lambda_word(a,b) + (- b))

std::string print_bword(const BWordRef& w);

// Throws FormatError with a 1-based column on syntax errors.
BWordRef parse_bword(const std::string& text);

void collect_generators(const BWordRef& w, std::set<std::string>& out);

using Assignment = std::map<std::string, int>;

// Structural recursion through the brace tables.
// Throws PreconditionError on a generator missing from the assignment.
int eval_bword(const BWordRef& w, const FiniteSkewBrace& b, const Assignment& a);

// Generator names plus relators, each asserted to evaluate to 0.
struct SkewBracePresentation {
  std::vector<std::string> generators;
  std::vector<BWordRef> relators;
};

// Throws FormatError if a relator mentions an undeclared generator or a
// generator name is invalid ("o" is reserved).
void validate_presentation(const SkewBracePresentation& p);

// Indices of relators that do not evaluate to 0 (empty means sound).
std::vector<int> failing_relators(const SkewBracePresentation& p, const FiniteSkewBrace& b,
                                  const Assignment& a);

}  // namespace skewbrace
