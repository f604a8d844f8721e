#include "skewbrace/presentations.hpp"

#include <map>
#include <string>

#include "skewbrace/errors.hpp"

namespace skewbrace {

namespace {

std::string table_gen_name(int e) { return "g" + std::to_string(e); }

BWordRef substitute(const BWordRef& w, const std::map<std::string, BWordRef>& repl) {
  switch (w->kind()) {
    case BWord::Kind::zero:
      return w;
    case BWord::Kind::gen:
      return repl.at(w->name());
    case BWord::Kind::sum:
      return BWord::sum(substitute(w->lhs(), repl), substitute(w->rhs(), repl));
    case BWord::Kind::prod:
      return BWord::prod(substitute(w->lhs(), repl), substitute(w->rhs(), repl));
    case BWord::Kind::neg:
      return BWord::neg(substitute(w->lhs(), repl));
    case BWord::Kind::inv:
      return BWord::inv(substitute(w->lhs(), repl));
  }
  throw std::logic_error("unreachable b-word kind");
}

}  // namespace

PresentationWithAssignment table_presentation(const FiniteSkewBrace& b) {
  PresentationWithAssignment out;
  for (int e = 0; e < b.n; ++e) {
    out.pres.generators.push_back(table_gen_name(e));
    out.assign[table_gen_name(e)] = e;
  }
  auto g = [](int e) { return BWord::gen(table_gen_name(e)); };
  for (int a = 0; a < b.n; ++a)
    for (int c = 0; c < b.n; ++c) {
      out.pres.relators.push_back(
          BWord::sum(BWord::sum(g(a), g(c)), BWord::neg(g(b.add_at(a, c)))));
      out.pres.relators.push_back(
          BWord::prod(BWord::prod(g(a), g(c)), BWord::inv(g(b.mul_at(a, c)))));
    }
  out.pres.relators.push_back(g(0));
  return out;
}

SkewBracePresentation trivial_brace_presentation(const std::vector<int>& cyclic_orders) {
  if (cyclic_orders.empty()) throw PreconditionError("at least one cyclic factor is required");
  for (int k : cyclic_orders)
    if (k < 0) throw PreconditionError("cyclic orders must be non-negative");

  const int f = static_cast<int>(cyclic_orders.size());
  auto x = [](int i) { return BWord::gen("x" + std::to_string(i + 1)); };

  SkewBracePresentation p;
  for (int i = 0; i < f; ++i) p.generators.push_back("x" + std::to_string(i + 1));

  for (int i = 0; i < f; ++i) {
    p.relators.push_back(star_word(x(i), x(i)));
    p.relators.push_back(star_word(x(i), BWord::neg(x(i))));
    p.relators.push_back(star_word(BWord::neg(x(i)), BWord::neg(x(i))));
    if (cyclic_orders[i] >= 1) {
      BWordRef acc = x(i);
      for (int t = 1; t < cyclic_orders[i]; ++t) acc = BWord::sum(acc, x(i));
      p.relators.push_back(acc);
    }
  }
  for (int i = 0; i < f; ++i)
    for (int j = i + 1; j < f; ++j)
      p.relators.push_back(
          BWord::sum(BWord::sum(x(i), x(j)), BWord::neg(BWord::sum(x(j), x(i)))));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) {
      if (i == j) continue;
      p.relators.push_back(star_word(x(i), x(j)));
      p.relators.push_back(star_word(x(i), BWord::neg(x(j))));
    }
  return p;
}

PresentationWithAssignment extend_presentation(const FiniteSkewBrace& b, const ElementSubset& i,
                                               ExtendFamilySizes* sizes) {
  const BraceQuotient q = quotient(b, i);  // also validates that i is an ideal
  const int m = q.brace.n - 1;

  const std::vector<int> ideal_elems = i.elements();  // ascending, starts with 0
  const int n = static_cast<int>(ideal_elems.size()) - 1;

  // Element of the ideal -> its x-generator word (0 itself becomes the 0 word).
  std::vector<int> x_index(b.n, -1);
  for (int k = 1; k <= n; ++k) x_index[ideal_elems[k]] = k;
  auto xword = [&](int e) {
    if (e == 0) return BWord::zero();
    if (x_index[e] < 0) throw std::logic_error("correction element escaped the ideal");
    return BWord::gen("x" + std::to_string(x_index[e]));
  };
  auto yword = [&](int coset) {
    return coset == 0 ? BWord::zero() : BWord::gen("y" + std::to_string(coset));
  };
  auto ygen = [&](int coset) { return BWord::gen("y" + std::to_string(coset)); };

  PresentationWithAssignment out;
  for (int c = 1; c <= m; ++c) {
    out.pres.generators.push_back("y" + std::to_string(c));
    out.assign["y" + std::to_string(c)] = q.coset_rep[c];
  }
  for (int k = 1; k <= n; ++k) {
    out.pres.generators.push_back("x" + std::to_string(k));
    out.assign["x" + std::to_string(k)] = ideal_elems[k];
  }

  ExtendFamilySizes fam;
  fam.m = m;
  fam.n = n;

  // Evaluates a word over the y/x generators in b; correction terms are read
  // off as value minus the transversal representative of the value's coset.
  auto eval_in_b = [&](const BWordRef& w) { return eval_bword(w, b, out.assign); };

  if (m > 0) {
    // products of transversal representatives
    for (int s = 1; s <= m; ++s)
      for (int t = 1; t <= m; ++t) {
        const int p = b.mul_at(q.coset_rep[s], q.coset_rep[t]);
        const int c = q.projection[p];
        const int corr = b.add_at(p, b.neg_of(q.coset_rep[c]));
        out.pres.relators.push_back(BWord::sum(
            BWord::sum(BWord::prod(ygen(s), ygen(t)), BWord::neg(yword(c))), BWord::neg(xword(corr))));
      }
    // multiplicative inverses of transversal representatives
    for (int s = 1; s <= m; ++s) {
      const int p = b.inv_of(q.coset_rep[s]);
      const int c = q.projection[p];
      const int corr = b.add_at(p, b.neg_of(q.coset_rep[c]));
      out.pres.relators.push_back(BWord::sum(
          BWord::sum(BWord::inv(ygen(s)), BWord::neg(yword(c))), BWord::neg(xword(corr))));
    }
  }

  // relators of the ideal as a brace (its table presentation, renamed)
  {
    std::vector<int> sub_add(static_cast<size_t>(n + 1) * (n + 1));
    std::vector<int> sub_mul(static_cast<size_t>(n + 1) * (n + 1));
    std::vector<int> sub_index(b.n, -1);
    for (int k = 0; k <= n; ++k) sub_index[ideal_elems[k]] = k;
    for (int a = 0; a <= n; ++a)
      for (int c = 0; c <= n; ++c) {
        sub_add[a * (n + 1) + c] = sub_index[b.add_at(ideal_elems[a], ideal_elems[c])];
        sub_mul[a * (n + 1) + c] = sub_index[b.mul_at(ideal_elems[a], ideal_elems[c])];
      }
    const FiniteSkewBrace sub = make_skew_brace(n + 1, std::move(sub_add), std::move(sub_mul));
    const PresentationWithAssignment tp = table_presentation(sub);
    std::map<std::string, BWordRef> repl;
    for (int k = 0; k <= n; ++k) repl[table_gen_name(k)] = xword(ideal_elems[k]);
    for (const BWordRef& rho : tp.pres.relators) out.pres.relators.push_back(substitute(rho, repl));
    fam.ell = static_cast<int>(tp.pres.relators.size());
  }

  if (m > 0) {
    for (int k = 1; k <= n; ++k)
      for (int c = 1; c <= m; ++c) {
        const int e = ideal_elems[k], rep = q.coset_rep[c];
        // lambda_{y}(x), x^{o,y}, x^{+,y}, lambda_{y^-1}(x); each lands in the ideal
        const BWordRef heads[4] = {
            lambda_word(ygen(c), xword(e)),
            BWord::prod(BWord::prod(ygen(c), xword(e)), BWord::inv(ygen(c))),
            BWord::sum(BWord::sum(ygen(c), xword(e)), BWord::neg(ygen(c))),
            lambda_word(BWord::inv(ygen(c)), xword(e)),
        };
        const int values[4] = {
            b.lambda_at(rep, e),
            b.mul_at(b.mul_at(rep, e), b.inv_of(rep)),
            b.add_at(b.add_at(rep, e), b.neg_of(rep)),
            b.lambda_at(b.inv_of(rep), e),
        };
        for (int fidx = 0; fidx < 4; ++fidx)
          out.pres.relators.push_back(BWord::sum(heads[fidx], BWord::neg(xword(values[fidx]))));
      }

    // quotient relators lifted through the transversal, corrected into the ideal
    const PresentationWithAssignment qt = table_presentation(q.brace);
    std::map<std::string, BWordRef> lift;
    for (int c = 0; c <= m; ++c) lift[table_gen_name(c)] = yword(c);
    for (const BWordRef& sigma : qt.pres.relators) {
      const BWordRef lifted = substitute(sigma, lift);
      out.pres.relators.push_back(BWord::sum(lifted, BWord::neg(xword(eval_in_b(lifted)))));
      ++fam.s;
    }
    // additive group table of the quotient, lifted likewise
    for (int sgen = 0; sgen <= m; ++sgen)
      for (int t = 0; t <= m; ++t) {
        const BWordRef lifted = BWord::sum(BWord::sum(yword(sgen), yword(t)),
                                           BWord::neg(yword(q.brace.add_at(sgen, t))));
        out.pres.relators.push_back(BWord::sum(lifted, BWord::neg(xword(eval_in_b(lifted)))));
        ++fam.r;
      }
  }

  if (sizes) *sizes = fam;
  return out;
}

}  // namespace skewbrace
