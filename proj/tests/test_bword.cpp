#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "skewbrace/bword.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/ideals.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

namespace {

BWordRef random_word(std::mt19937& rng, const std::vector<std::string>& names, int depth) {
  const int pick = depth == 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 6);
  switch (pick) {
    case 0:
      return BWord::zero();
    case 1:
      return BWord::gen(names[rng() % names.size()]);
    case 2:
      return BWord::sum(random_word(rng, names, depth - 1), random_word(rng, names, depth - 1));
    case 3:
      return BWord::prod(random_word(rng, names, depth - 1), random_word(rng, names, depth - 1));
    case 4:
      return BWord::neg(random_word(rng, names, depth - 1));
    default:
      return BWord::inv(random_word(rng, names, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing the documented shapes") {
  const BWordRef sum = parse_bword("(x1 + x1)");
  REQUIRE(sum->kind() == BWord::Kind::sum);
  CHECK(sum->lhs()->kind() == BWord::Kind::gen);
  CHECK(sum->lhs()->name() == "x1");
  CHECK(sum->rhs()->name() == "x1");

  const BWordRef lam = parse_bword("((- y1) + (y1 o x1))");
  CHECK(structurally_equal(lam, lambda_word(BWord::gen("y1"), BWord::gen("x1"))));

  const BWordRef inv = parse_bword("(x1 ~)");
  REQUIRE(inv->kind() == BWord::Kind::inv);
  CHECK(inv->lhs()->name() == "x1");

  CHECK(parse_bword("0")->kind() == BWord::Kind::zero);
}

TEST_CASE("printing is the inverse of parsing") {
  for (const std::string text :
       {"0", "x1", "(x1 + x1)", "((- y1) + (y1 o x1))", "(x1 ~)", "(- (x1 o (y2 ~)))",
        "(((- y1) + (y1 o x1)) + (- x1))"})
    CHECK(print_bword(parse_bword(text)) == text);
}

TEST_CASE("whitespace between tokens is irrelevant") {
  const BWordRef a = parse_bword("(x1+x1)");
  const BWordRef b = parse_bword("( x1   +  x1 )");
  const BWordRef c = parse_bword("(x1 + x1)");
  CHECK(structurally_equal(a, b));
  CHECK(structurally_equal(b, c));
  CHECK(structurally_equal(parse_bword("(x1~)"), parse_bword("(x1 ~)")));
}

TEST_CASE("syntax errors carry positions") {
  for (const std::string bad : {"", "(x1 +", "(x1 + x2", "x1)", "(x1 * x2)", "(x1 x2)", "()",
                                "(0 -)", "O", "x1 x2"}) {
    CHECK_THROWS_AS(parse_bword(bad), FormatError);
  }
  try {
    parse_bword("(x1 * x2)");
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(e.col() == 5);
  }
}

TEST_CASE("random trees round-trip") {
  std::mt19937 rng(2024);
  const std::vector<std::string> names{"x1", "x2", "y1", "ab2"};
  for (int trial = 0; trial < 300; ++trial) {
    const BWordRef w = random_word(rng, names, 8);
    CHECK(structurally_equal(parse_bword(print_bword(w)), w));
  }
}

TEST_CASE("evaluation basics") {
  const FiniteSkewBrace z2 = trivial_z(2);
  CHECK(eval_bword(parse_bword("(x1 + x1)"), z2, {{"x1", 1}}) == 0);
  CHECK(eval_bword(parse_bword("0"), z2, {}) == 0);
  CHECK(eval_bword(parse_bword("(x1 ~)"), z2, {{"x1", 1}}) == 1);
  CHECK_THROWS_AS(eval_bword(parse_bword("x9"), z2, {{"x1", 1}}), PreconditionError);
  CHECK_THROWS_AS(eval_bword(parse_bword("x1"), z2, {{"x1", 7}}), PreconditionError);
}

TEST_CASE("lambda and star macros agree with the table operations") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSkewBrace& b : brace_catalog(n).members) {
      const BWordRef lam = lambda_word(BWord::gen("a"), BWord::gen("c"));
      const BWordRef st = star_word(BWord::gen("a"), BWord::gen("c"));
      for (int a = 0; a < b.n; ++a)
        for (int c = 0; c < b.n; ++c) {
          const Assignment assign{{"a", a}, {"c", c}};
          CHECK(eval_bword(lam, b, assign) == b.lambda_at(a, c));
          CHECK(eval_bword(st, b, assign) == star(b, a, c));
        }
    }
}

TEST_CASE("evaluation commutes with quotient projections") {
  std::mt19937 rng(777);
  const std::vector<std::string> names{"a", "c"};
  for (int n = 2; n <= 4; ++n)
    for (const FiniteSkewBrace& b : brace_catalog(n).members)
      for (const ElementSubset& ideal : all_ideals(b)) {
        const BraceQuotient q = quotient(b, ideal);
        for (int trial = 0; trial < 20; ++trial) {
          const BWordRef w = random_word(rng, names, 5);
          const int a = static_cast<int>(rng() % b.n), c = static_cast<int>(rng() % b.n);
          const Assignment down{{"a", a}, {"c", c}};
          const Assignment up{{"a", q.projection[a]}, {"c", q.projection[c]}};
          CHECK(q.projection[eval_bword(w, b, down)] == eval_bword(w, q.brace, up));
        }
      }
}

TEST_CASE("presentation validation") {
  SkewBracePresentation p;
  p.generators = {"x1"};
  p.relators = {parse_bword("(x1 + y1)")};
  CHECK_THROWS_AS(validate_presentation(p), FormatError);

  p.relators = {parse_bword("(x1 + x1)")};
  CHECK_NOTHROW(validate_presentation(p));

  p.generators = {"x1", "x1"};
  CHECK_THROWS_AS(validate_presentation(p), FormatError);

  p.generators = {"o"};
  p.relators.clear();
  CHECK_THROWS_AS(validate_presentation(p), FormatError);

  p.generators = {"X1"};
  CHECK_THROWS_AS(validate_presentation(p), FormatError);
}

TEST_CASE("failing relators are indexed") {
  const FiniteSkewBrace z2 = trivial_z(2);
  SkewBracePresentation p;
  p.generators = {"x1"};
  p.relators = {parse_bword("(x1 + x1)"), parse_bword("x1"), parse_bword("0")};
  CHECK(failing_relators(p, z2, {{"x1", 1}}) == std::vector<int>{1});
  CHECK(failing_relators(p, z2, {{"x1", 0}}).empty());
}
