#include "skewbrace/solution.hpp"

#include <string>

#include "skewbrace/errors.hpp"

namespace skewbrace {

void check_solution_shape(const SolutionTable& sol) {
  if (sol.n <= 0) throw FormatError("solution size must be positive");
  if (sol.map.size() != static_cast<size_t>(sol.n) * sol.n)
    throw FormatError("solution table has " + std::to_string(sol.map.size()) +
                      " entries, expected " + std::to_string(sol.n * sol.n));
  for (const auto& [k, l] : sol.map)
    if (k < 0 || k >= sol.n || l < 0 || l >= sol.n)
      throw FormatError("solution table entry out of range");
}

std::optional<std::array<int, 6>> bijectivity_witness(const SolutionTable& sol) {
  const int n = sol.n;
  std::vector<int> first_preimage(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [k, l] = sol.apply(i, j);
      int& slot = first_preimage[k * n + l];
      if (slot >= 0) return std::array<int, 6>{slot / n, slot % n, i, j, k, l};
      slot = i * n + j;
    }
  return std::nullopt;
}

bool is_bijective(const SolutionTable& sol) { return !bijectivity_witness(sol); }

DiagonalMaps extract_diagonal(const SolutionTable& sol) {
  const int n = sol.n;
  DiagonalMaps d;
  d.sigma.assign(n, std::vector<int>(n));
  d.tau.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [k, l] = sol.apply(x, y);
      d.sigma[x][y] = k;
      d.tau[y][x] = l;
    }
  return d;
}

namespace {

using Triple = std::array<int, 3>;

Triple apply_r12(const SolutionTable& sol, const Triple& t) {
  auto [k, l] = sol.apply(t[0], t[1]);
  return {k, l, t[2]};
}

Triple apply_r23(const SolutionTable& sol, const Triple& t) {
  auto [k, l] = sol.apply(t[1], t[2]);
  return {t[0], k, l};
}

}  // namespace

std::optional<std::array<int, 3>> ybe_witness(const SolutionTable& sol) {
  const int n = sol.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Triple t{a, b, c};
        const Triple lhs = apply_r12(sol, apply_r23(sol, apply_r12(sol, t)));
        const Triple rhs = apply_r23(sol, apply_r12(sol, apply_r23(sol, t)));
        if (lhs != rhs) return t;
      }
  return std::nullopt;
}

bool is_ybe(const SolutionTable& sol) { return !ybe_witness(sol); }

std::optional<std::array<int, 2>> nondegeneracy_witness(const SolutionTable& sol) {
  const DiagonalMaps d = extract_diagonal(sol);
  for (int x = 0; x < sol.n; ++x)
    if (!is_permutation(d.sigma[x])) return std::array<int, 2>{0, x};
  for (int y = 0; y < sol.n; ++y)
    if (!is_permutation(d.tau[y])) return std::array<int, 2>{1, y};
  return std::nullopt;
}

bool is_nondegenerate(const SolutionTable& sol) { return !nondegeneracy_witness(sol); }

std::optional<std::array<int, 2>> involutivity_witness(const SolutionTable& sol) {
  for (int x = 0; x < sol.n; ++x)
    for (int y = 0; y < sol.n; ++y) {
      auto [k, l] = sol.apply(x, y);
      if (sol.apply(k, l) != std::pair<int, int>{x, y}) return std::array<int, 2>{x, y};
    }
  return std::nullopt;
}

bool is_involutive(const SolutionTable& sol) { return !involutivity_witness(sol); }

SolutionTable make_flip(int n) {
  if (n < 1) throw PreconditionError("flip solution needs a non-empty carrier");
  SolutionTable sol;
  sol.n = n;
  sol.map.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sol.map[i * n + j] = {j, i};
  return sol;
}

SolutionTable relabel_solution(const SolutionTable& sol, const Perm& p) {
  SolutionTable out;
  out.n = sol.n;
  out.map.resize(sol.map.size());
  for (int x = 0; x < sol.n; ++x)
    for (int y = 0; y < sol.n; ++y) {
      auto [k, l] = sol.apply(x, y);
      out.map[p[x] * sol.n + p[y]] = {p[k], p[l]};
    }
  return out;
}

}  // namespace skewbrace
