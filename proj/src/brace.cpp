#include "skewbrace/brace.hpp"

#include <algorithm>

#include "skewbrace/errors.hpp"

namespace skewbrace {

namespace {

void check_table(const std::vector<int>& t, int n, const char* name) {
  if (t.size() != static_cast<size_t>(n) * n)
    throw FormatError(std::string(name) + " table has " + std::to_string(t.size()) +
                      " entries, expected " + std::to_string(n * n));
  for (int v : t)
    if (v < 0 || v >= n) throw FormatError(std::string(name) + " table entry out of range");
}

std::vector<int> two_sided_inverses(const std::vector<int>& t, int n) {
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a * n + b] == 0 && t[b * n + a] == 0) {
        inv[a] = b;
        break;
      }
  return inv;
}

}  // namespace

FiniteSkewBrace make_skew_brace(int n, std::vector<int> add, std::vector<int> mul) {
  if (n <= 0) throw FormatError("brace order must be positive");
  check_table(add, n, "add");
  check_table(mul, n, "mul");

  FiniteSkewBrace b;
  b.n = n;
  b.add = std::move(add);
  b.mul = std::move(mul);
  b.neg = two_sided_inverses(b.add, n);
  b.inv = two_sided_inverses(b.mul, n);
  b.lambda.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    if (b.neg[a] < 0) continue;
    for (int c = 0; c < n; ++c) b.lambda[a * n + c] = b.add_at(b.neg[a], b.mul_at(a, c));
  }
  return b;
}

namespace {

struct Checker {
  const FiniteSkewBrace& b;
  std::vector<AxiomViolation>& out;

  void report(const std::string& axiom, std::vector<int> witness, std::string detail) {
    for (auto& v : out)
      if (v.axiom == axiom) {
        ++v.occurrences;
        return;
      }
    out.push_back({axiom, std::move(witness), std::move(detail), 1});
  }

  // Checks one table for the group axioms with identity 0.
  // Returns true when no violation was recorded.
  bool check_group(const std::vector<int>& t, const std::string& prefix, bool mul_side) {
    const int n = b.n;
    const size_t before = out.size();
    auto at = [&](int x, int y) { return t[x * n + y]; };

    if (mul_side) {
      // The multiplicative identity must exist and coincide with 0.
      int e = -1;
      for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
          if (at(cand, a) != a || at(a, cand) != a) ok = false;
        if (ok) e = cand;
      }
      if (e < 0) {
        report(prefix + "-identity", {}, "no two-sided identity element");
      } else if (e != 0) {
        report("shared-identity", {e}, "shared identity: 0 != " + std::to_string(e));
      }
    } else {
      for (int a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a) {
          report(prefix + "-identity", {a}, "0 is not an identity at element " + std::to_string(a));
          break;
        }
    }

    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (at(at(a, x), y) != at(a, at(x, y)))
            report(prefix + "-associativity", {a, x, y},
                   prefix + " is not associative at (" + std::to_string(a) + "," +
                       std::to_string(x) + "," + std::to_string(y) + ")");

    for (int a = 0; a < n; ++a) {
      bool has = false;
      for (int c = 0; c < n && !has; ++c)
        if (at(a, c) == 0 && at(c, a) == 0) has = true;
      if (!has)
        report(prefix + "-inverse", {a}, "no " + prefix + " inverse for element " + std::to_string(a));
    }
    return out.size() == before;
  }
};

}  // namespace

VerifyReport verify(const FiniteSkewBrace& b) {
  check_table(b.add, b.n, "add");
  check_table(b.mul, b.n, "mul");

  VerifyReport rep;
  Checker chk{b, rep.violations};
  const int n = b.n;

  const bool add_ok = chk.check_group(b.add, "add", false);
  const bool mul_ok = chk.check_group(b.mul, "mul", true);
  if (!add_ok || !mul_ok) return rep;  // later axioms presuppose two groups on identity 0

  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int lhs = b.mul_at(a, b.add_at(x, y));
        const int rhs = b.add_at(b.add_at(b.mul_at(a, x), b.neg_of(a)), b.mul_at(a, y));
        if (lhs != rhs)
          chk.report("skew-distributivity", {a, x, y},
                     "a o (b + c) != a o b - a + a o c at (" + std::to_string(a) + "," +
                         std::to_string(x) + "," + std::to_string(y) + ")");
      }

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (b.lambda_at(a, c) != b.add_at(b.neg_of(a), b.mul_at(a, c)))
        chk.report("lambda-cache", {a, c}, "stale lambda cache");

  for (int a = 0; a < n; ++a) {
    Perm row(b.lambda.begin() + static_cast<size_t>(a) * n,
             b.lambda.begin() + static_cast<size_t>(a + 1) * n);
    if (!is_permutation(row)) {
      chk.report("lambda-permutation", {a}, "lambda row " + std::to_string(a) + " is not a permutation");
      continue;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (b.lambda_at(a, b.add_at(x, y)) != b.add_at(b.lambda_at(a, x), b.lambda_at(a, y)))
          chk.report("lambda-automorphism", {a, x, y},
                     "lambda_" + std::to_string(a) + " does not preserve addition");
  }

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const int ac = b.mul_at(a, c);
      for (int x = 0; x < n; ++x)
        if (b.lambda_at(ac, x) != b.lambda_at(a, b.lambda_at(c, x)))
          chk.report("lambda-homomorphism", {a, c, x},
                     "lambda_(a o c) != lambda_a . lambda_c at (" + std::to_string(a) + "," +
                         std::to_string(c) + ")");
    }

  return rep;
}

Perm lambda_of(const FiniteSkewBrace& b, int a) {
  if (a < 0 || a >= b.n) throw PreconditionError("element index out of range");
  return Perm(b.lambda.begin() + static_cast<size_t>(a) * b.n,
              b.lambda.begin() + static_cast<size_t>(a + 1) * b.n);
}

Perm lambda_inv_of(const FiniteSkewBrace& b, int a) { return inverse_perm(lambda_of(b, a)); }

int star(const FiniteSkewBrace& b, int a, int c) {
  if (a < 0 || a >= b.n || c < 0 || c >= b.n) throw PreconditionError("element index out of range");
  return b.add_at(b.lambda_at(a, c), b.neg_of(c));
}

namespace {

// Swap the identity to index 0 so that both operations share identity 0.
GroupTable normalize_identity(const GroupTable& g) {
  if (g.identity == 0) return g;
  Perm p = identity_perm(g.n);
  std::swap(p[0], p[g.identity]);
  return relabel_group(g, p);
}

}  // namespace

FiniteSkewBrace make_trivial(const GroupTable& g) {
  const GroupTable h = normalize_identity(g);
  return make_skew_brace(h.n, h.op, h.op);
}

FiniteSkewBrace make_almost_trivial(const GroupTable& g) {
  const GroupTable h = normalize_identity(g);
  return make_skew_brace(h.n, opposite_group(h).op, h.op);
}

GroupTable semidirect(const FiniteSkewBrace& b) {
  const int n = b.n, m = n * n;
  GroupTable g{m, std::vector<int>(static_cast<size_t>(m) * m), 0};
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const int first = b.add_at(a, b.lambda_at(x, c));
          const int second = b.mul_at(x, d);
          g.op[(a * n + x) * m + (c * n + d)] = first * n + second;
        }
  return g;
}

SolutionTable solution_from_brace(const FiniteSkewBrace& b) {
  SolutionTable sol;
  sol.n = b.n;
  sol.map.resize(static_cast<size_t>(b.n) * b.n);
  for (int a = 0; a < b.n; ++a)
    for (int c = 0; c < b.n; ++c) {
      const int first = b.lambda_at(a, c);
      const int second = b.mul_at(b.mul_at(b.inv_of(first), a), c);
      sol.map[a * b.n + c] = {first, second};
    }
  return sol;
}

}  // namespace skewbrace
