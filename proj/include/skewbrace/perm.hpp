#pragma once

#include <vector>

namespace skewbrace {

// A map [n] -> [n] in one-line image notation. Only some of these are
// permutations; is_permutation tells them apart.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Composition convention used everywhere: (f*g)(x) = f(g(x)).
inline Perm compose(const Perm& f, const Perm& g) {
  Perm h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

inline Perm inverse_perm(const Perm& f) {
  Perm h(f.size());
  for (size_t x = 0; x < f.size(); ++x) h[f[x]] = static_cast<int>(x);
  return h;
}

}  // namespace skewbrace
