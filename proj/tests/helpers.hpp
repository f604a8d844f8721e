#pragma once

#include <map>

#include "skewbrace/brace.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace::testing {

// Enumerations are pure; cache them across test cases.
inline const std::vector<GroupTable>& groups_of_order(int n) {
  static std::map<int, std::vector<GroupTable>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_groups(n)).first;
  return it->second;
}

inline const BraceCatalog& brace_catalog(int n,
                                         BraceEnumMethod m = BraceEnumMethod::holomorph) {
  static std::map<std::pair<int, int>, BraceCatalog> cache;
  const auto key = std::make_pair(n, static_cast<int>(m));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_skew_braces(n, m)).first;
  return it->second;
}

inline FiniteSkewBrace trivial_z(int n) { return make_trivial(cyclic_group(n)); }

inline FiniteSkewBrace almost_trivial_s3() { return make_almost_trivial(symmetric_group(3)); }

inline FiniteSkewBrace relabel_brace(const FiniteSkewBrace& b, const Perm& p) {
  std::vector<int> add(b.add.size()), mul(b.mul.size());
  for (int a = 0; a < b.n; ++a)
    for (int c = 0; c < b.n; ++c) {
      add[p[a] * b.n + p[c]] = p[b.add_at(a, c)];
      mul[p[a] * b.n + p[c]] = p[b.mul_at(a, c)];
    }
  return make_skew_brace(b.n, std::move(add), std::move(mul));
}

}  // namespace skewbrace::testing
