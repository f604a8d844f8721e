#include "skewbrace/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "skewbrace/errors.hpp"

namespace skewbrace {

ElementSubset ElementSubset::zero_only(int n) {
  ElementSubset s = empty(n);
  s.insert(0);
  return s;
}

ElementSubset ElementSubset::of(int n, const std::vector<int>& elems) {
  ElementSubset s = empty(n);
  for (int e : elems) {
    if (e < 0 || e >= n) throw PreconditionError("subset element out of range");
    s.insert(e);
  }
  return s;
}

int ElementSubset::count() const {
  int c = 0;
  for (uint8_t m : mask) c += m;
  return c;
}

std::vector<int> ElementSubset::elements() const {
  std::vector<int> out;
  for (int e = 0; e < n; ++e)
    if (mask[e]) out.push_back(e);
  return out;
}

bool ElementSubset::subset_of(const ElementSubset& o) const {
  for (int e = 0; e < n; ++e)
    if (mask[e] && !o.mask[e]) return false;
  return true;
}

bool is_additive_subgroup(const FiniteSkewBrace& b, const ElementSubset& s) {
  if (!s.contains(0)) return false;
  const auto elems = s.elements();
  for (int x : elems)
    for (int y : elems)
      if (!s.contains(b.add_at(x, y))) return false;
  // finite and closed, so inverses are inside
  return true;
}

bool is_left_ideal(const FiniteSkewBrace& b, const ElementSubset& s) {
  if (!is_additive_subgroup(b, s)) return false;
  const auto elems = s.elements();
  for (int a = 0; a < b.n; ++a)
    for (int x : elems)
      if (!s.contains(b.lambda_at(a, x))) return false;
  // Forced consequence: a left ideal is closed under the multiplication.
  for (int x : elems)
    for (int y : elems)
      if (!s.contains(b.mul_at(x, y)))
        throw std::logic_error("left ideal not multiplicatively closed; brace tables are inconsistent");
  return true;
}

bool is_ideal(const FiniteSkewBrace& b, const ElementSubset& s) {
  if (!is_left_ideal(b, s)) return false;
  const auto elems = s.elements();
  for (int g = 0; g < b.n; ++g)
    for (int x : elems) {
      if (!s.contains(b.add_at(b.add_at(g, x), b.neg_of(g)))) return false;
      if (!s.contains(b.mul_at(b.mul_at(g, x), b.inv_of(g)))) return false;
    }
  return true;
}

ElementSubset ideal_closure(const FiniteSkewBrace& b, const ElementSubset& seed) {
  ElementSubset s = seed;
  s.n = b.n;
  s.mask.resize(b.n, 0);
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    auto grow = [&](int e) {
      if (!s.contains(e)) {
        s.insert(e);
        grew = true;
      }
    };
    const auto elems = s.elements();
    for (int x : elems)
      for (int y : elems) grow(b.add_at(x, y));
    for (int g = 0; g < b.n; ++g)
      for (int x : elems) {
        grow(b.lambda_at(g, x));
        grow(b.add_at(b.add_at(g, x), b.neg_of(g)));
        grow(b.mul_at(b.mul_at(g, x), b.inv_of(g)));
        grow(star(b, g, x));
        grow(star(b, x, g));
      }
  }
  return s;
}

BraceQuotient quotient(const FiniteSkewBrace& b, const ElementSubset& i) {
  if (i.n != b.n) throw PreconditionError("subset carrier size does not match brace");
  if (!is_ideal(b, i)) throw PreconditionError("quotient requires an ideal");

  const int n = b.n;
  const auto ideal_elems = i.elements();

  // Additive cosets, keyed by minimal member; multiplicative cosets must agree.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    std::vector<char> add_coset(n, 0), mul_coset(n, 0);
    for (int x : ideal_elems) {
      add_coset[b.add_at(a, x)] = 1;
      mul_coset[b.mul_at(a, x)] = 1;
    }
    if (add_coset != mul_coset)
      throw std::logic_error("additive and multiplicative cosets disagree for an ideal");
    for (int e = 0; e < n; ++e)
      if (add_coset[e]) coset_of[e] = idx;
  }

  const int m = static_cast<int>(reps.size());
  std::vector<int> qadd(static_cast<size_t>(m) * m), qmul(static_cast<size_t>(m) * m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      qadd[p * m + q] = coset_of[b.add_at(reps[p], reps[q])];
      qmul[p * m + q] = coset_of[b.mul_at(reps[p], reps[q])];
    }

  BraceQuotient result{make_skew_brace(m, std::move(qadd), std::move(qmul)), coset_of, reps};

  // The projection must be a homomorphism for both operations; anything else
  // means the ideal test and the tables disagree.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (result.projection[b.add_at(a, c)] !=
          result.brace.add_at(result.projection[a], result.projection[c]))
        throw std::logic_error("quotient projection is not additive");
      if (result.projection[b.mul_at(a, c)] !=
          result.brace.mul_at(result.projection[a], result.projection[c]))
        throw std::logic_error("quotient projection is not multiplicative");
    }
  if (!verify(result.brace).pass()) throw std::logic_error("quotient by an ideal failed verification");
  return result;
}

ElementSubset socle(const FiniteSkewBrace& b) {
  ElementSubset s = ElementSubset::empty(b.n);
  for (int a = 0; a < b.n; ++a) {
    bool kernel = true;
    for (int x = 0; x < b.n && kernel; ++x)
      if (b.lambda_at(a, x) != x) kernel = false;
    bool central = true;
    for (int x = 0; x < b.n && central; ++x)
      if (b.add_at(a, x) != b.add_at(x, a)) central = false;
    if (kernel && central) s.insert(a);
  }
  return s;
}

ElementSubset annihilator(const FiniteSkewBrace& b) {
  ElementSubset s = socle(b);
  for (int a = 0; a < b.n; ++a) {
    if (!s.contains(a)) continue;
    for (int x = 0; x < b.n; ++x)
      if (b.mul_at(a, x) != b.mul_at(x, a)) {
        s.mask[a] = 0;
        break;
      }
  }
  return s;
}

ElementSubset derived_ideal(const FiniteSkewBrace& b) {
  ElementSubset s = ElementSubset::zero_only(b.n);
  for (int a = 0; a < b.n; ++a)
    for (int c = 0; c < b.n; ++c) s.insert(star(b, a, c));
  bool grew = true;
  while (grew) {
    grew = false;
    const auto elems = s.elements();
    for (int x : elems)
      for (int y : elems) {
        const int z = b.add_at(x, y);
        if (!s.contains(z)) {
          s.insert(z);
          grew = true;
        }
      }
  }
  return s;
}

namespace {

AscendingSeries ascending_series(const FiniteSkewBrace& b,
                                 ElementSubset (*step)(const FiniteSkewBrace&)) {
  AscendingSeries series;
  series.terms.push_back(ElementSubset::zero_only(b.n));
  for (;;) {
    const BraceQuotient q = quotient(b, series.terms.back());
    const ElementSubset upstairs = step(q.brace);
    ElementSubset next = ElementSubset::empty(b.n);
    for (int e = 0; e < b.n; ++e)
      if (upstairs.contains(q.projection[e])) next.insert(e);
    if (next == series.terms.back()) break;
    series.terms.push_back(next);
  }
  return series;
}

}  // namespace

AscendingSeries upper_annihilator_series(const FiniteSkewBrace& b) {
  return ascending_series(b, &annihilator);
}

AscendingSeries upper_socle_series(const FiniteSkewBrace& b) {
  return ascending_series(b, &socle);
}

bool is_annihilator_nilpotent(const FiniteSkewBrace& b) {
  return upper_annihilator_series(b).terms.back() == ElementSubset::full(b.n);
}

bool is_simple(const FiniteSkewBrace& b) {
  if (b.n == 1) return false;
  const ElementSubset full = ElementSubset::full(b.n);
  for (int x = 1; x < b.n; ++x)
    if (ideal_closure(b, ElementSubset::of(b.n, {x})) != full) return false;
  return true;
}

std::vector<ElementSubset> all_ideals(const FiniteSkewBrace& b, IdealEnumMode mode) {
  if (mode == IdealEnumMode::automatic)
    mode = b.n <= 12 ? IdealEnumMode::subgroup_scan : IdealEnumMode::closure_of_singletons;

  std::vector<ElementSubset> out;
  if (mode == IdealEnumMode::subgroup_scan) {
    if (b.n > 12) throw PreconditionError("subgroup scan supported up to order 12");
    const uint32_t limit = 1u << (b.n - 1);
    for (uint32_t bits = 0; bits < limit; ++bits) {
      ElementSubset s = ElementSubset::zero_only(b.n);
      for (int e = 1; e < b.n; ++e)
        if (bits & (1u << (e - 1))) s.insert(e);
      if (is_additive_subgroup(b, s) && is_ideal(b, s)) out.push_back(s);
    }
  } else {
    // Principal ideals, then all joins; every ideal is a join of these.
    out.push_back(ElementSubset::zero_only(b.n));
    for (int x = 1; x < b.n; ++x) {
      const ElementSubset c = ideal_closure(b, ElementSubset::of(b.n, {x}));
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      const size_t sz = out.size();
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = i + 1; j < sz; ++j) {
          ElementSubset u = out[i];
          for (int e = 0; e < b.n; ++e)
            if (out[j].contains(e)) u.insert(e);
          const ElementSubset join = ideal_closure(b, u);
          if (std::find(out.begin(), out.end(), join) == out.end()) {
            out.push_back(join);
            grew = true;
          }
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSubset conjugates(const FiniteSkewBrace& b, int x) {
  if (x < 0 || x >= b.n) throw PreconditionError("element index out of range");
  ElementSubset s = ElementSubset::empty(b.n);
  for (int g = 0; g < b.n; ++g) {
    s.insert(star(b, g, x));
    s.insert(star(b, x, g));
    s.insert(b.mul_at(b.mul_at(g, x), b.inv_of(g)));
    s.insert(b.add_at(b.add_at(g, x), b.neg_of(g)));
  }
  return s;
}

ElementSubset socle_multiples(const FiniteSkewBrace& b, int k) {
  if (k <= 0) throw PreconditionError("multiple must be positive");
  const ElementSubset soc = socle(b);
  ElementSubset s = ElementSubset::empty(b.n);
  for (int e : soc.elements()) {
    int acc = 0;
    for (int t = 0; t < k; ++t) acc = b.add_at(acc, e);
    s.insert(acc);
  }
  return s;
}

}  // namespace skewbrace
