// Acceptance battery: nine oracle- and property-based criteria, one pass/fail
// line each. Exit status 0 iff every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skewbrace/cli.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/ideals.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/perm_brace.hpp"
#include "skewbrace/presentations.hpp"

using namespace skewbrace;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

const BraceCatalog& catalog(int n, BraceEnumMethod m = BraceEnumMethod::holomorph) {
  static std::map<std::pair<int, int>, BraceCatalog> cache;
  const auto key = std::make_pair(n, static_cast<int>(m));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_skew_braces(n, m)).first;
  return it->second;
}

// 1. Every brace of order <= 6 passes verify, the identity pack, both star
//    identities and the semidirect commutator identity. Exact.
Outcome axiom_battery() {
  Outcome out;
  int braces = 0;
  for (int n = 1; n <= 6; ++n)
    for (const FiniteSkewBrace& b : catalog(n).members) {
      ++braces;
      if (!verify(b).pass()) out.fail("verify fails at order " + std::to_string(n));
      for (int a = 0; a < b.n; ++a) {
        const Perm linv = lambda_inv_of(b, a);
        for (int c = 0; c < b.n; ++c) {
          if (b.add_at(a, c) != b.mul_at(a, linv[c])) out.fail("a+b != a o lambda_a^-1(b)");
          if (b.mul_at(a, c) != b.add_at(a, b.lambda_at(a, c))) out.fail("a o b != a + lambda_a(b)");
        }
        if (b.neg_of(a) != b.lambda_at(a, b.inv_of(a))) out.fail("-a != lambda_a(a^-1)");
      }
      for (int a = 0; a < b.n && out.pass; ++a)
        for (int x = 0; x < b.n; ++x)
          for (int y = 0; y < b.n; ++y) {
            const int lhs1 = star(b, a, b.add_at(x, y));
            const int rhs1 =
                b.add_at(b.add_at(b.add_at(star(b, a, x), x), star(b, a, y)), b.neg_of(x));
            if (lhs1 != rhs1) out.fail("star sum identity fails");
            const int sxy = star(b, x, y);
            const int lhs2 = star(b, b.mul_at(a, x), y);
            const int rhs2 = b.add_at(b.add_at(star(b, a, sxy), sxy), star(b, a, y));
            if (lhs2 != rhs2) out.fail("star product identity fails");
          }
      const GroupTable sd = semidirect(b);
      const std::vector<int> inv = group_inverses(sd);
      for (int a = 0; a < b.n; ++a)
        for (int c = 0; c < b.n; ++c) {
          const int x = a, y = c * b.n;  // (0,a) and (c,0)
          const int comm = sd.at(sd.at(sd.at(x, y), inv[x]), inv[y]);
          if (comm != star(b, a, c) * b.n) out.fail("semidirect commutator identity fails");
        }
    }
  out.detail = std::to_string(braces) + " braces checked" + (out.pass ? "" : "; " + out.detail);
  return out;
}

// 2. Naive and holomorph enumerations agree exactly for n <= 4; orders 1..3
//    hold only the trivial brace. Exact.
Outcome oracle_agreement() {
  Outcome out;
  for (int n = 1; n <= 4; ++n) {
    const auto& naive = catalog(n, BraceEnumMethod::naive).members;
    const auto& holo = catalog(n).members;
    if (naive.size() != holo.size()) {
      out.fail("method counts differ at order " + std::to_string(n));
      continue;
    }
    for (size_t i = 0; i < naive.size(); ++i)
      if (!naive[i].tables_equal(holo[i]))
        out.fail("catalogs differ at order " + std::to_string(n));
  }
  for (int n = 1; n <= 3; ++n)
    if (catalog(n, BraceEnumMethod::naive).members.size() != 1)
      out.fail("order " + std::to_string(n) + " should hold exactly one brace");
  if (out.pass) out.detail = "naive == holomorph for n <= 4; counts 1,1,1 at n = 1,2,3";
  return out;
}

// 3. r_B is a non-degenerate solution for every catalog brace, n <= 6. Exact.
Outcome solution_functor() {
  Outcome out;
  int count = 0;
  for (int n = 1; n <= 6; ++n)
    for (const FiniteSkewBrace& b : catalog(n).members) {
      ++count;
      const SolutionTable sol = solution_from_brace(b);
      if (!is_ybe(sol)) out.fail("attached solution fails the braid test");
      if (!is_nondegenerate(sol)) out.fail("attached solution is degenerate");
    }
  out.detail = std::to_string(count) + " attached solutions checked" +
               (out.pass ? "" : "; " + out.detail);
  return out;
}

// 4. For every non-degenerate solution with |X| <= 3, the permutation brace
//    verifies and all image relations hold; the sigma/tau generator is
//    cross-checked against the full scan at |X| <= 2.
Outcome structure_brace_soundness() {
  Outcome out;
  int solutions = 0;
  for (int n = 1; n <= 2; ++n)
    if (enumerate_solutions_sigma_tau(n, false) != enumerate_solutions(n, true, false))
      out.fail("sigma/tau generator disagrees with the full scan at n = " + std::to_string(n));
  for (int n = 1; n <= 3; ++n)
    for (const SolutionTable& sol : enumerate_solutions(n, true, false)) {
      ++solutions;
      try {
        const PermBraceResult pb = permutation_brace(sol);  // verifies internally
        if (!check_image_relations(sol, pb)) out.fail("image relations fail");
      } catch (const std::exception& e) {
        out.fail(std::string("construction failed: ") + e.what());
      }
    }
  out.detail = std::to_string(solutions) + " non-degenerate solutions processed" +
               (out.pass ? "" : "; " + out.detail);
  return out;
}

// 5. All emitted presentations are sound: extension relators over every
//    proper non-zero ideal (orders <= 6), table presentations (orders <= 6),
//    and the trivial-brace presentation on Z/k for k <= 8. Exact.
Outcome presentation_soundness() {
  Outcome out;
  int relators = 0;
  for (int n = 1; n <= 6; ++n)
    for (const FiniteSkewBrace& b : catalog(n).members) {
      const PresentationWithAssignment tp = table_presentation(b);
      relators += static_cast<int>(tp.pres.relators.size());
      if (!failing_relators(tp.pres, b, tp.assign).empty())
        out.fail("table presentation unsound at order " + std::to_string(n));
      for (const ElementSubset& ideal : all_ideals(b)) {
        if (ideal.count() == 1 || ideal.count() == b.n) continue;
        ExtendFamilySizes sizes;
        const PresentationWithAssignment ep = extend_presentation(b, ideal, &sizes);
        relators += static_cast<int>(ep.pres.relators.size());
        if (static_cast<int>(ep.pres.relators.size()) != sizes.total())
          out.fail("family size formula mismatch");
        if (!failing_relators(ep.pres, b, ep.assign).empty())
          out.fail("extension relator does not vanish at order " + std::to_string(n));
      }
    }
  for (int k = 1; k <= 8; ++k) {
    const SkewBracePresentation p = trivial_brace_presentation({k});
    relators += static_cast<int>(p.relators.size());
    const Assignment assign{{"x1", k == 1 ? 0 : 1}};
    if (!failing_relators(p, make_trivial(cyclic_group(k)), assign).empty())
      out.fail("trivial-brace presentation unsound at k = " + std::to_string(k));
  }
  out.detail =
      std::to_string(relators) + " relators evaluated" + (out.pass ? "" : "; " + out.detail);
  return out;
}

// 6. Socle-scale facts: lambda acts on the socle by conjugation, socle
//    multiples are ideals for k <= 6, and conjugate sets are finite with
//    reported sizes. Exact.
Outcome socle_scale_facts() {
  Outcome out;
  int conjugate_total = 0, elements = 0;
  for (int n = 1; n <= 6; ++n)
    for (const FiniteSkewBrace& b : catalog(n).members) {
      for (int c : socle(b).elements())
        for (int a = 0; a < b.n; ++a)
          if (b.lambda_at(a, c) != b.mul_at(b.mul_at(a, c), b.inv_of(a)))
            out.fail("lambda is not conjugation on the socle");
      for (int k = 1; k <= 6; ++k)
        if (!is_ideal(b, socle_multiples(b, k)))
          out.fail("socle multiples fail the ideal test at k = " + std::to_string(k));
      for (int x = 0; x < b.n; ++x) {
        conjugate_total += conjugates(b, x).count();
        ++elements;
      }
    }
  std::ostringstream avg;
  avg.setf(std::ios::fixed);
  avg.precision(2);
  avg << static_cast<double>(conjugate_total) / elements;
  out.detail = "mean conjugate-set size " + avg.str() + " over " + std::to_string(elements) +
               " elements" + (out.pass ? "" : "; " + out.detail);
  return out;
}

// 7. For trivial braces on each group of order <= 8 the upper annihilator
//    series equals the group's upper central series; abelian groups give
//    [{0}, B]. Exact.
Outcome series_coherence() {
  Outcome out;
  int groups = 0;
  for (int n = 1; n <= 8; ++n)
    for (const GroupTable& g : enumerate_groups(n)) {
      ++groups;
      const FiniteSkewBrace b = make_trivial(g);
      const AscendingSeries series = upper_annihilator_series(b);
      const auto central = upper_central_series(g);
      if (series.terms.size() != central.size()) {
        out.fail("series lengths differ at order " + std::to_string(n));
        continue;
      }
      for (size_t i = 0; i < central.size(); ++i)
        if (series.terms[i] != ElementSubset::of(n, central[i]))
          out.fail("series terms differ at order " + std::to_string(n));
      const bool abelian = group_center(g).size() == static_cast<size_t>(n);
      if (abelian) {
        const bool two_step = n == 1 ? series.terms.size() == 1
                                     : (series.terms.size() == 2 &&
                                        series.terms[1] == ElementSubset::full(n));
        if (!two_step) out.fail("abelian series is not [{0}, B]");
      }
    }
  out.detail = std::to_string(groups) + " groups compared" + (out.pass ? "" : "; " + out.detail);
  return out;
}

// 8. Flip degeneration: one-element permutation brace, and multiplicative
//    relators that are literally pairwise commutation. Exact.
Outcome flip_degeneration() {
  Outcome out;
  for (int n = 1; n <= 4; ++n) {
    const SolutionTable flip = make_flip(n);
    if (permutation_brace(flip).brace.n != 1)
      out.fail("flip brace has more than one element at n = " + std::to_string(n));
    const SkewBracePresentation p = emit_mul_presentation(flip);
    if (p.relators.size() != static_cast<size_t>(n) * n) out.fail("relator count is not n^2");
    int idx = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y, ++idx) {
        auto gen = [](int i) { return BWord::gen("x" + std::to_string(i + 1)); };
        const BWordRef expected =
            BWord::prod(BWord::prod(gen(x), gen(y)), BWord::inv(BWord::prod(gen(y), gen(x))));
        if (!structurally_equal(p.relators[idx], expected))
          out.fail("flip relator is not a commutation relator");
      }
  }
  if (out.pass) out.detail = "flips of size 1..4 degenerate as required";
  return out;
}

// 9. The five formats round-trip byte-exactly on canonical outputs, and the
//    ten documented malformed fixtures exit with status 2 through the CLI.
Outcome format_round_trips() {
  Outcome out;

  const std::string sol_text = serialize_solution(make_flip(3));
  if (serialize_solution(parse_solution(sol_text)) != sol_text) out.fail("solution round-trip");

  const std::string brace_text = serialize_brace(make_almost_trivial(symmetric_group(3)));
  if (serialize_brace(parse_brace(brace_text)) != brace_text) out.fail("brace round-trip");

  const FiniteSkewBrace z4 = make_trivial(cyclic_group(4));
  for (const SkewBracePresentation& p :
       {table_presentation(z4).pres, trivial_brace_presentation({2, 3}),
        extend_presentation(z4, ElementSubset::of(4, {0, 2})).pres}) {
    const std::string text = serialize_presentation(p);
    if (serialize_presentation(parse_presentation(text)) != text)
      out.fail("presentation round-trip");
  }

  for (const BraceEnumMethod m : {BraceEnumMethod::holomorph, BraceEnumMethod::naive}) {
    const std::string text = serialize_catalog(catalog(4, m));
    if (serialize_catalog(parse_catalog(text)) != text) out.fail("catalog round-trip");
  }

  SolutionTable shift2;
  shift2.n = 2;
  shift2.map = {{1, 1}, {0, 1}, {1, 0}, {0, 0}};
  const std::string labels_text = serialize_perm_brace(permutation_brace(shift2));
  if (serialize_perm_brace(parse_perm_brace(labels_text)) != labels_text)
    out.fail("labels round-trip");

  const std::string dir = std::string(SKEWBRACE_FIXTURE_DIR) + "/malformed/";
  const std::vector<std::pair<std::string, std::string>> fixtures{
      {"verify-solution", "01_solution_bad_header.sol"},
      {"verify-solution", "02_solution_duplicate_pair.sol"},
      {"verify-solution", "03_solution_missing_pair.sol"},
      {"verify-solution", "04_solution_index_range.sol"},
      {"verify-solution", "05_solution_bad_arrow.sol"},
      {"verify-brace", "06_brace_row_length.brc"},
      {"verify-brace", "07_brace_entry_range.brc"},
      {"verify-brace", "08_brace_missing_mul.brc"},
      {"present-table", "09_presentation_undeclared_gen.prs"},
      {"present-table", "10_presentation_syntax_error.prs"}};
  int rejected = 0;
  for (const auto& [cmd, name] : fixtures) {
    const std::string file = dir + name;
    const std::vector<std::string> args =
        cmd == "present-table"
            ? std::vector<std::string>{"check-presentation", file, "--in", file, "--assign", "x1=0"}
            : std::vector<std::string>{cmd, file};
    const CommandResult r = run_cli(args);
    if (r.status == 2)
      ++rejected;
    else
      out.fail(name + " exited " + std::to_string(r.status) + " instead of 2");
  }
  out.detail = "5 formats round-tripped, " + std::to_string(rejected) +
               "/10 malformed fixtures rejected" + (out.pass ? "" : "; " + out.detail);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom battery over all braces of order <= 6", axiom_battery},
      {"naive and holomorph enumerations agree", oracle_agreement},
      {"attached solutions are non-degenerate braid solutions", solution_functor},
      {"permutation braces of all solutions with |X| <= 3 are sound", structure_brace_soundness},
      {"emitted presentations evaluate to zero", presentation_soundness},
      {"socle conjugation, socle multiples and conjugate sets", socle_scale_facts},
      {"annihilator series matches the upper central series", series_coherence},
      {"flip solutions degenerate to the one-element brace", flip_degeneration},
      {"file formats round-trip and malformed fixtures are rejected", format_round_trips},
  };

  bool all_pass = true;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%s) [%.2fs]\n", out.pass ? "PASS" : "FAIL", index,
                name.c_str(), out.detail.c_str(), secs);
    all_pass = all_pass && out.pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES above");
  return all_pass ? 0 : 1;
}
