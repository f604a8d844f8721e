#include "skewbrace/group.hpp"

#include <algorithm>
#include <numeric>

#include "skewbrace/errors.hpp"

namespace skewbrace {

void check_group_shape(const GroupTable& g) {
  if (g.n <= 0) throw FormatError("group order must be positive");
  if (g.op.size() != static_cast<size_t>(g.n) * g.n)
    throw FormatError("group table has " + std::to_string(g.op.size()) +
                      " entries, expected " + std::to_string(g.n * g.n));
  for (int v : g.op)
    if (v < 0 || v >= g.n) throw FormatError("group table entry out of range");
  if (g.identity < 0 || g.identity >= g.n)
    throw FormatError("group identity index out of range");
}

std::optional<std::string> group_violation(const GroupTable& g) {
  const int n = g.n, e = g.identity;
  for (int a = 0; a < n; ++a)
    if (g.at(e, a) != a || g.at(a, e) != a)
      return "identity law fails at element " + std::to_string(a);
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (g.at(a, b) == e && g.at(b, a) == e) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return "no inverse for element " + std::to_string(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")";
  return std::nullopt;
}

bool is_group(const GroupTable& g) { return !group_violation(g); }

std::vector<int> group_inverses(const GroupTable& g) {
  std::vector<int> inv(g.n, -1);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.at(a, b) == g.identity && g.at(b, a) == g.identity) {
        inv[a] = b;
        break;
      }
  return inv;
}

int group_element_order(const GroupTable& g, int a) {
  int x = a, k = 1;
  while (x != g.identity) {
    x = g.at(x, a);
    ++k;
  }
  return k;
}

int group_commutator(const GroupTable& g, int x, int y) {
  const std::vector<int> inv = group_inverses(g);
  return g.at(g.at(g.at(x, y), inv[x]), inv[y]);
}

std::vector<int> group_center(const GroupTable& g) {
  std::vector<int> out;
  for (int x = 0; x < g.n; ++x) {
    bool central = true;
    for (int y = 0; y < g.n && central; ++y)
      if (g.at(x, y) != g.at(y, x)) central = false;
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> upper_central_series(const GroupTable& g) {
  const std::vector<int> inv = group_inverses(g);
  auto comm = [&](int x, int y) { return g.at(g.at(g.at(x, y), inv[x]), inv[y]); };

  std::vector<std::vector<int>> series;
  std::vector<char> in_term(g.n, 0);
  in_term[g.identity] = 1;
  series.push_back({g.identity});
  for (;;) {
    std::vector<int> next;
    std::vector<char> next_mask(g.n, 0);
    for (int x = 0; x < g.n; ++x) {
      bool ok = true;
      for (int y = 0; y < g.n && ok; ++y)
        if (!in_term[comm(x, y)]) ok = false;
      if (ok) {
        next.push_back(x);
        next_mask[x] = 1;
      }
    }
    if (next_mask == in_term) break;
    series.push_back(next);
    in_term = next_mask;
  }
  return series;
}

std::vector<Perm> group_automorphisms(const GroupTable& g) {
  const int n = g.n;
  std::vector<Perm> out;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != g.identity) rest.push_back(i);

  // Exhaustive scan; n <= 8 keeps this at 5040 candidates.
  std::sort(rest.begin(), rest.end());
  do {
    Perm p(n);
    p[g.identity] = g.identity;
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (i != g.identity) p[i] = rest[k++];
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n && hom; ++b)
        if (p[g.at(a, b)] != g.at(p[a], p[b])) hom = false;
    if (hom) out.push_back(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

GroupTable opposite_group(const GroupTable& g) {
  GroupTable out{g.n, std::vector<int>(g.op.size()), g.identity};
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) out.op[a * g.n + b] = g.at(b, a);
  return out;
}

GroupTable relabel_group(const GroupTable& g, const Perm& p) {
  GroupTable out{g.n, std::vector<int>(g.op.size()), p[g.identity]};
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) out.op[p[a] * g.n + p[b]] = p[g.at(a, b)];
  return out;
}

GroupTable cyclic_group(int n) {
  GroupTable g{n, std::vector<int>(static_cast<size_t>(n) * n), 0};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.op[a * n + b] = (a + b) % n;
  return g;
}

GroupTable dihedral_group(int k) {
  // Element 2i is the rotation r^i, 2i+1 the reflection r^i s.
  const int n = 2 * k;
  GroupTable g{n, std::vector<int>(static_cast<size_t>(n) * n), 0};
  auto enc = [&](int rot, int flip) { return 2 * ((rot % k + k) % k) + flip; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ra = a / 2, fa = a % 2, rb = b / 2, fb = b % 2;
      // (r^ra s^fa)(r^rb s^fb) = r^(ra + rb or ra - rb) s^(fa xor fb)
      const int rot = fa ? ra - rb : ra + rb;
      g.op[a * n + b] = enc(rot, fa ^ fb);
    }
  return g;
}

GroupTable symmetric_group(int k) {
  // Elements are the permutations of {0..k-1} in lexicographic order.
  std::vector<Perm> elems;
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const Perm& q) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
  };
  GroupTable g{n, std::vector<int>(static_cast<size_t>(n) * n), 0};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.op[a * n + b] = index_of(compose(elems[a], elems[b]));
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.n * b.n;
  GroupTable g{n, std::vector<int>(static_cast<size_t>(n) * n), a.identity * b.n + b.identity};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xa = x / b.n, xb = x % b.n, ya = y / b.n, yb = y % b.n;
      g.op[x * n + y] = a.at(xa, ya) * b.n + b.at(xb, yb);
    }
  return g;
}

}  // namespace skewbrace
