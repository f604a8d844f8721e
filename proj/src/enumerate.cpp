#include "skewbrace/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "skewbrace/errors.hpp"

namespace skewbrace {

namespace {

// Re-checks associativity for every triple whose four lookups just became
// fully determined by the assignment of cell (i,j). -1 marks unknown cells.
bool assoc_consistent(const std::vector<int>& t, int n, int i, int j) {
  auto at = [&](int x, int y) { return t[x * n + y]; };
  const int v = at(i, j);

  // triples (i,j,c)
  for (int c = 0; c < n; ++c) {
    const int bc = at(j, c);
    if (bc < 0) continue;
    const int lhs = at(v, c), rhs = at(i, bc);
    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
  }
  // triples (a,i,j)
  for (int a = 0; a < n; ++a) {
    const int ab = at(a, i);
    if (ab < 0) continue;
    const int lhs = at(ab, j), rhs = at(a, v);
    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
  }
  // triples (a,b,j) with t[a][b] == i
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (at(a, b) != i) continue;
      const int bc = at(b, j);
      if (bc < 0) continue;
      const int rhs = at(a, bc);
      if (rhs >= 0 && v != rhs) return false;
    }
  // triples (i,b,c) with t[b][c] == j
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (at(b, c) != j) continue;
      const int ib = at(i, b);
      if (ib < 0) continue;
      const int lhs = at(ib, c);
      if (lhs >= 0 && lhs != v) return false;
    }
  return true;
}

void fill_tables(std::vector<int>& t, int n, int cell, std::vector<uint32_t>& row_used,
                 std::vector<uint32_t>& col_used, std::vector<GroupTable>& out) {
  // cells walk the (n-1)x(n-1) block row-major; row 0 / column 0 are fixed
  const int total = (n - 1) * (n - 1);
  if (cell == total) {
    out.push_back(GroupTable{n, t, 0});
    return;
  }
  const int i = 1 + cell / (n - 1);
  const int j = 1 + cell % (n - 1);
  for (int v = 0; v < n; ++v) {
    const uint32_t bit = 1u << v;
    if ((row_used[i] & bit) || (col_used[j] & bit)) continue;
    t[i * n + j] = v;
    row_used[i] |= bit;
    col_used[j] |= bit;
    if (assoc_consistent(t, n, i, j)) fill_tables(t, n, cell + 1, row_used, col_used, out);
    t[i * n + j] = -1;
    row_used[i] &= ~bit;
    col_used[j] &= ~bit;
  }
}

}  // namespace

std::vector<GroupTable> all_group_tables(int n) {
  if (n < 1) throw PreconditionError("group order must be positive");
  std::vector<GroupTable> out;
  std::vector<int> t(static_cast<size_t>(n) * n, -1);
  std::vector<uint32_t> row_used(n, 0), col_used(n, 0);
  for (int k = 0; k < n; ++k) {
    t[k] = k;          // 0 * k = k
    t[k * n] = k;      // k * 0 = k
    row_used[0] |= 1u << k;
    col_used[0] |= 1u << k;
    row_used[k] |= 1u << k;  // row k holds k at column 0
    col_used[k] |= 1u << k;
  }
  // row_used[0]/col_used[0] now block everything, which is right: row 0 is full.
  fill_tables(t, n, 0, row_used, col_used, out);
  return out;
}

namespace {

// Lexicographically minimal relabeling of one or two tables under carrier
// bijections fixing 0. Tables are compared concatenated.
std::vector<int> min_relabeling(const std::vector<const std::vector<int>*>& tables, int n) {
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> best;
  std::vector<int> cur(tables.size() * n * n);
  Perm p(n), q(n);
  do {
    p[0] = 0;
    for (int k = 1; k < n; ++k) p[k] = rest[k - 1];
    for (int k = 0; k < n; ++k) q[p[k]] = k;
    bool worse = false, better = best.empty();
    size_t idx = 0;
    for (const auto* tab : tables) {
      for (int x = 0; x < n && !worse; ++x)
        for (int y = 0; y < n; ++y, ++idx) {
          const int val = p[(*tab)[q[x] * n + q[y]]];
          cur[idx] = val;
          if (!better) {
            if (val < best[idx]) {
              better = true;
            } else if (val > best[idx]) {
              worse = true;
              break;
            }
          }
        }
      if (worse) break;
    }
    if (!worse && better) {
      if (idx < cur.size()) {  // finish filling after the deciding entry
        size_t off = idx;
        for (size_t tix = idx / (static_cast<size_t>(n) * n); tix < tables.size(); ++tix) {
          const auto* tab = tables[tix];
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              const size_t pos = tix * n * n + x * n + y;
              if (pos >= off) cur[pos] = p[(*tab)[q[x] * n + q[y]]];
            }
        }
      }
      best = cur;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

}  // namespace

GroupTable canonical_group_form(const GroupTable& g) {
  if (g.identity != 0) {
    Perm p = identity_perm(g.n);
    std::swap(p[0], p[g.identity]);
    return canonical_group_form(relabel_group(g, p));
  }
  const std::vector<int> best = min_relabeling({&g.op}, g.n);
  return GroupTable{g.n, best, 0};
}

std::vector<GroupTable> enumerate_groups(int n) {
  if (n < 1 || n > 8) throw PreconditionError("group enumeration supported for 1 <= n <= 8");
  std::set<std::vector<int>> seen;
  std::vector<GroupTable> out;
  for (const GroupTable& g : all_group_tables(n)) {
    GroupTable canon = canonical_group_form(g);
    if (seen.insert(canon.op).second) out.push_back(std::move(canon));
  }
  std::sort(out.begin(), out.end(),
            [](const GroupTable& a, const GroupTable& b) { return a.op < b.op; });
  return out;
}

FiniteSkewBrace canonical_form(const FiniteSkewBrace& b) {
  if (b.n > 8) throw PreconditionError("canonical form supported up to order 8");
  const std::vector<int> best = min_relabeling({&b.add, &b.mul}, b.n);
  const size_t sq = static_cast<size_t>(b.n) * b.n;
  return make_skew_brace(b.n, std::vector<int>(best.begin(), best.begin() + sq),
                         std::vector<int>(best.begin() + sq, best.end()));
}

bool are_isomorphic(const FiniteSkewBrace& b1, const FiniteSkewBrace& b2) {
  if (b1.n != b2.n) throw PreconditionError("isomorphism test requires equal orders");
  return canonical_form(b1).tables_equal(canonical_form(b2));
}

namespace {

bool skew_distributive(const std::vector<int>& add, const std::vector<int>& mul, int n) {
  std::vector<int> neg(n, -1);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (add[a * n + x] == 0 && add[x * n + a] == 0) {
        neg[a] = x;
        break;
      }
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int lhs = mul[a * n + add[x * n + y]];
        const int rhs = add[add[mul[a * n + x] * n + neg[a]] * n + mul[a * n + y]];
        if (lhs != rhs) return false;
      }
  return true;
}

BraceCatalog finalize_catalog(int n, BraceEnumMethod method,
                              const std::vector<FiniteSkewBrace>& raw) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  BraceCatalog cat;
  cat.order = n;
  cat.method = method;
  for (const FiniteSkewBrace& b : raw) {
    FiniteSkewBrace canon = canonical_form(b);
    if (seen.insert({canon.add, canon.mul}).second) {
      if (!verify(canon).pass()) throw std::logic_error("enumerated brace failed verification");
      cat.members.push_back(std::move(canon));
    }
  }
  std::sort(cat.members.begin(), cat.members.end(),
            [](const FiniteSkewBrace& a, const FiniteSkewBrace& b) {
              return std::tie(a.add, a.mul) < std::tie(b.add, b.mul);
            });
  return cat;
}

std::vector<FiniteSkewBrace> braces_naive(int n) {
  const std::vector<GroupTable> tables = all_group_tables(n);
  std::vector<FiniteSkewBrace> out;
  for (const GroupTable& add : tables)
    for (const GroupTable& mul : tables)
      if (skew_distributive(add.op, mul.op, n)) out.push_back(make_skew_brace(n, add.op, mul.op));
  return out;
}

// Regular subgroups of Hol(A) = A x| Aut(A) are exactly the graphs of maps
// gamma : A -> Aut(A) with gamma(0) = id that are closed under the induced
// product a o b = a + gamma(a)(b), gamma(a o b) = gamma(a) gamma(b).
struct HolomorphSearch {
  const GroupTable& g;
  std::vector<Perm> auts;
  std::vector<std::vector<int>> comp;  // aut composition, comp[i][j] = i after j
  std::vector<int> ainv;
  std::vector<std::vector<int>> found;

  explicit HolomorphSearch(const GroupTable& group) : g(group) {
    auts = group_automorphisms(g);
    std::map<Perm, int> index;
    for (size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
    const int a = static_cast<int>(auts.size());
    comp.assign(a, std::vector<int>(a));
    ainv.assign(a, 0);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < a; ++j) comp[i][j] = index.at(compose(auts[i], auts[j]));
      ainv[i] = index.at(inverse_perm(auts[i]));
    }
  }

  bool propagate(std::vector<int>& gamma) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < g.n; ++u) {
        if (gamma[u] < 0) continue;
        for (int v = 0; v < g.n; ++v) {
          if (gamma[v] < 0) continue;
          const int w = g.at(u, auts[gamma[u]][v]);
          const int psi = comp[gamma[u]][gamma[v]];
          if (gamma[w] < 0) {
            gamma[w] = psi;
            changed = true;
          } else if (gamma[w] != psi) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void dfs(std::vector<int>& gamma) {
    int a = -1;
    for (int i = 0; i < g.n; ++i)
      if (gamma[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      found.push_back(gamma);
      return;
    }
    for (int phi = 0; phi < static_cast<int>(auts.size()); ++phi) {
      std::vector<int> next = gamma;
      next[a] = phi;
      if (propagate(next)) dfs(next);
    }
  }

  // Conjugating a regular subgroup by psi in Aut(A) transports its gamma to
  // x -> psi gamma(psi^-1(x)) psi^-1; orbit minima are the class labels.
  std::vector<int> orbit_min(const std::vector<int>& gamma) const {
    std::vector<int> best = gamma;
    std::vector<int> cur(g.n);
    for (int s = 0; s < static_cast<int>(auts.size()); ++s) {
      const Perm& psi = auts[s];
      const Perm psi_inv = inverse_perm(psi);
      for (int x = 0; x < g.n; ++x) cur[x] = comp[s][comp[gamma[psi_inv[x]]][ainv[s]]];
      if (cur < best) best = cur;
    }
    return best;
  }
};

std::vector<FiniteSkewBrace> braces_holomorph(int n) {
  std::vector<FiniteSkewBrace> out;
  for (const GroupTable& g : enumerate_groups(n)) {
    HolomorphSearch search(g);
    std::vector<int> gamma(n, -1);
    gamma[0] = 0;  // identity automorphism is first in lexicographic order
    search.dfs(gamma);

    std::set<std::vector<int>> classes;
    for (const auto& gm : search.found) classes.insert(search.orbit_min(gm));
    for (const auto& gm : classes) {
      std::vector<int> mul(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = g.at(a, search.auts[gm[a]][b]);
      out.push_back(make_skew_brace(n, g.op, std::move(mul)));
    }
  }
  return out;
}

}  // namespace

BraceCatalog enumerate_skew_braces(int n, BraceEnumMethod method) {
  if (method == BraceEnumMethod::naive) {
    if (n < 1 || n > 4) throw PreconditionError("naive brace enumeration supported for 1 <= n <= 4");
    return finalize_catalog(n, method, braces_naive(n));
  }
  if (n < 1 || n > 8) throw PreconditionError("brace enumeration supported for 1 <= n <= 8");
  return finalize_catalog(n, method, braces_holomorph(n));
}

std::vector<SolutionTable> enumerate_solutions(int n, bool require_nondegenerate,
                                               bool require_involutive) {
  if (n < 1 || n > 3) throw PreconditionError("solution enumeration supported for 1 <= n <= 3");
  const int sq = n * n;
  std::vector<int> image(sq);
  std::iota(image.begin(), image.end(), 0);
  std::vector<SolutionTable> out;
  SolutionTable sol;
  sol.n = n;
  sol.map.resize(sq);
  do {
    for (int idx = 0; idx < sq; ++idx) sol.map[idx] = {image[idx] / n, image[idx] % n};
    if (!is_ybe(sol)) continue;
    if (require_nondegenerate && !is_nondegenerate(sol)) continue;
    if (require_involutive && !is_involutive(sol)) continue;
    out.push_back(sol);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<SolutionTable> enumerate_solutions_sigma_tau(int n, bool require_involutive) {
  if (n < 1 || n > 3) throw PreconditionError("solution enumeration supported for 1 <= n <= 3");
  std::vector<Perm> perms;
  Perm p = identity_perm(n);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int np = static_cast<int>(perms.size());

  // odometer over 2n permutation choices: sigma_0..sigma_{n-1}, tau_0..tau_{n-1}
  std::vector<int> pick(2 * n, 0);
  std::vector<SolutionTable> out;
  SolutionTable sol;
  sol.n = n;
  sol.map.resize(static_cast<size_t>(n) * n);
  for (;;) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) sol.map[x * n + y] = {perms[pick[x]][y], perms[pick[n + y]][x]};
    if (is_bijective(sol) && is_ybe(sol) && (!require_involutive || is_involutive(sol)))
      out.push_back(sol);

    int d = 2 * n - 1;
    while (d >= 0 && pick[d] == np - 1) pick[d--] = 0;
    if (d < 0) break;
    ++pick[d];
  }
  std::sort(out.begin(), out.end(),
            [](const SolutionTable& a, const SolutionTable& b) { return a.map < b.map; });
  return out;
}

}  // namespace skewbrace
