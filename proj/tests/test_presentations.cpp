#include <doctest.h>

#include "helpers.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/presentations.hpp"

using namespace skewbrace;
using namespace skewbrace::testing;

namespace {

void check_sound(const PresentationWithAssignment& pa, const FiniteSkewBrace& b) {
  CHECK_NOTHROW(validate_presentation(pa.pres));
  CHECK(failing_relators(pa.pres, b, pa.assign).empty());
}

}  // namespace

TEST_CASE("table presentation shapes") {
  const PresentationWithAssignment one = table_presentation(trivial_z(1));
  CHECK(one.pres.generators == std::vector<std::string>{"g0"});
  CHECK(one.pres.relators.size() == 3);
  check_sound(one, trivial_z(1));

  const PresentationWithAssignment two = table_presentation(trivial_z(2));
  CHECK(two.pres.generators.size() == 2);
  CHECK(two.pres.relators.size() == 9);
  check_sound(two, trivial_z(2));

  // the first pair contributes ((g0 + g0) + (- g0)) and ((g0 o g0) o (g0 ~))
  CHECK(print_bword(two.pres.relators[0]) == "((g0 + g0) + (- g0))");
  CHECK(print_bword(two.pres.relators[1]) == "((g0 o g0) o (g0 ~))");
  CHECK(print_bword(two.pres.relators.back()) == "g0");
}

TEST_CASE("table presentations are sound on small catalogs") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSkewBrace& b : brace_catalog(n).members) check_sound(table_presentation(b), b);
  check_sound(table_presentation(almost_trivial_s3()), almost_trivial_s3());
}

TEST_CASE("trivial brace presentation, one infinite factor") {
  const SkewBracePresentation p = trivial_brace_presentation({0});
  CHECK(p.generators == std::vector<std::string>{"x1"});
  REQUIRE(p.relators.size() == 3);
  CHECK(print_bword(p.relators[0]) == "(((- x1) + (x1 o x1)) + (- x1))");
  CHECK(print_bword(p.relators[1]) == "(((- x1) + (x1 o (- x1))) + (- (- x1)))");
  CHECK(print_bword(p.relators[2]) == "(((- (- x1)) + ((- x1) o (- x1))) + (- (- x1)))");
}

TEST_CASE("trivial brace presentation, finite factors") {
  const SkewBracePresentation p2 = trivial_brace_presentation({2});
  REQUIRE(p2.relators.size() == 4);
  CHECK(print_bword(p2.relators[3]) == "(x1 + x1)");
  CHECK(failing_relators(p2, trivial_z(2), {{"x1", 1}}).empty());

  // the order relator is the only thing pinning the order: sending x1 to the
  // generator of Z/4 must break exactly it
  CHECK(failing_relators(p2, trivial_z(4), {{"x1", 1}}) == std::vector<int>{3});

  const SkewBracePresentation p1 = trivial_brace_presentation({1});
  REQUIRE(p1.relators.size() == 4);
  CHECK(print_bword(p1.relators[3]) == "x1");
  CHECK(failing_relators(p1, trivial_z(1), {{"x1", 0}}).empty());
}

TEST_CASE("trivial brace presentation, several factors") {
  const SkewBracePresentation p = trivial_brace_presentation({2, 3});
  CHECK(p.generators == std::vector<std::string>{"x1", "x2"});
  // 4 per-generator relators per factor, 1 commutation, 4 mixed stars
  CHECK(p.relators.size() == 13);
  // inside Z/6 = Z/2 x Z/3: x1 -> 3 (order 2), x2 -> 2 (order 3)
  CHECK(failing_relators(p, trivial_z(6), {{"x1", 3}, {"x2", 2}}).empty());

  CHECK_THROWS_AS(trivial_brace_presentation({}), PreconditionError);
  CHECK_THROWS_AS(trivial_brace_presentation({-1}), PreconditionError);
}

TEST_CASE("trivial brace presentations evaluate to 0 in cyclic braces") {
  for (int k = 1; k <= 8; ++k) {
    const SkewBracePresentation p = trivial_brace_presentation({k});
    const Assignment assign{{"x1", k == 1 ? 0 : 1}};
    CHECK(failing_relators(p, trivial_z(k), assign).empty());
  }
}

TEST_CASE("extension presentation for Z/4 over {0,2}") {
  const FiniteSkewBrace z4 = trivial_z(4);
  const ElementSubset ideal = ElementSubset::of(4, {0, 2});
  ExtendFamilySizes sizes;
  const PresentationWithAssignment pa = extend_presentation(z4, ideal, &sizes);

  CHECK(sizes.m == 1);
  CHECK(sizes.n == 1);
  CHECK(sizes.ell == 9);
  CHECK(sizes.s == 9);
  CHECK(sizes.r == 4);
  CHECK(static_cast<int>(pa.pres.relators.size()) == sizes.total());
  CHECK(pa.pres.generators == std::vector<std::string>{"y1", "x1"});
  CHECK(pa.assign.at("y1") == 1);  // transversal representative of the coset {1,3}
  CHECK(pa.assign.at("x1") == 2);
  check_sound(pa, z4);
}

TEST_CASE("extension presentation for the almost trivial S3 over A3") {
  const FiniteSkewBrace at = almost_trivial_s3();
  const ElementSubset a3 = ElementSubset::of(6, {0, 3, 4});
  ExtendFamilySizes sizes;
  const PresentationWithAssignment pa = extend_presentation(at, a3, &sizes);
  CHECK(sizes.m == 1);
  CHECK(sizes.n == 2);
  CHECK(static_cast<int>(pa.pres.relators.size()) == sizes.total());
  check_sound(pa, at);
}

TEST_CASE("degenerate ideals") {
  const FiniteSkewBrace z4 = trivial_z(4);

  // the whole brace: no transversal generators, only the ideal's relators
  ExtendFamilySizes sizes;
  const PresentationWithAssignment whole =
      extend_presentation(z4, ElementSubset::full(4), &sizes);
  CHECK(sizes.m == 0);
  CHECK(sizes.s == 0);
  CHECK(sizes.r == 0);
  CHECK(whole.pres.relators.size() == 2 * 16 + 1);
  CHECK(whole.pres.generators == std::vector<std::string>{"x1", "x2", "x3"});
  check_sound(whole, z4);

  // the zero ideal: no x generators, corrections all collapse to 0
  const PresentationWithAssignment zero =
      extend_presentation(z4, ElementSubset::zero_only(4), &sizes);
  CHECK(sizes.n == 0);
  CHECK(sizes.ell == 3);
  CHECK(zero.pres.generators == std::vector<std::string>{"y1", "y2", "y3"});
  check_sound(zero, z4);

  CHECK_THROWS_AS(extend_presentation(z4, ElementSubset::of(4, {0, 1}), nullptr),
                  PreconditionError);
}

TEST_CASE("extension presentations are sound across catalogs and ideals") {
  for (int n = 2; n <= 4; ++n)
    for (const FiniteSkewBrace& b : brace_catalog(n).members)
      for (const ElementSubset& ideal : all_ideals(b)) {
        if (ideal.count() == 1 || ideal.count() == b.n) continue;  // proper non-zero only
        ExtendFamilySizes sizes;
        const PresentationWithAssignment pa = extend_presentation(b, ideal, &sizes);
        CHECK(static_cast<int>(pa.pres.relators.size()) == sizes.total());
        check_sound(pa, b);
      }
}
