#include "skewbrace/perm_brace.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "skewbrace/errors.hpp"

namespace skewbrace {

namespace {

PermPair pair_compose(const PermPair& a, const PermPair& b) {
  return {compose(a.first, b.first), compose(a.second, b.second)};
}

std::string gen_name(int i) { return "x" + std::to_string(i + 1); }

}  // namespace

PermBraceResult permutation_brace(const SolutionTable& sol) {
  check_solution_shape(sol);
  if (auto w = bijectivity_witness(sol))
    throw PreconditionError("solution table is not bijective");
  if (!is_ybe(sol)) throw PreconditionError("table does not satisfy the braid relation");
  if (!is_nondegenerate(sol)) throw PreconditionError("solution is degenerate");

  const int n = sol.n;
  const DiagonalMaps d = extract_diagonal(sol);

  std::vector<PermPair> gens(n);
  for (int x = 0; x < n; ++x) gens[x] = {d.sigma[x], inverse_perm(d.tau[x])};

  // Multiplicative closure from the identity, generators in index order.
  PermBraceResult res;
  std::map<PermPair, int> index;
  const PermPair id{identity_perm(n), identity_perm(n)};
  res.labels.push_back(id);
  index[id] = 0;
  for (size_t a = 0; a < res.labels.size(); ++a)
    for (int x = 0; x < n; ++x) {
      const PermPair next = pair_compose(res.labels[a], gens[x]);
      if (index.emplace(next, static_cast<int>(res.labels.size())).second)
        res.labels.push_back(next);
    }

  const int m = static_cast<int>(res.labels.size());
  res.generator_map.resize(n);
  for (int x = 0; x < n; ++x) res.generator_map[x] = index.at(gens[x]);

  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[a * m + b] = index.at(pair_compose(res.labels[a], res.labels[b]));

  // a + g_y = a o g_{f_a^-1(y)}, f_a the first component of a's label.
  auto add_generator = [&](int a, int y) {
    const int z = inverse_perm(res.labels[a].first)[y];
    return mul[a * m + res.generator_map[z]];
  };

  // Additive closure with one witnessing word per element. It must fill the
  // whole multiplicative carrier.
  res.additive_certificates.assign(m, {});
  std::vector<char> reached(m, 0);
  reached[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int y = 0; y < n; ++y) {
      const int t = add_generator(a, y);
      if (!reached[t]) {
        reached[t] = 1;
        res.additive_certificates[t] = res.additive_certificates[a];
        res.additive_certificates[t].push_back(y);
        queue.push_back(t);
      }
    }
  }
  for (int a = 0; a < m; ++a)
    if (!reached[a])
      throw std::logic_error("additive closure of the generators misses element " + std::to_string(a));

  std::vector<int> add(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int acc = a;
      for (int y : res.additive_certificates[b]) acc = add_generator(acc, y);
      add[a * m + b] = acc;
    }

  res.brace = make_skew_brace(m, std::move(add), std::move(mul));
  const VerifyReport rep = verify(res.brace);
  if (!rep.pass())
    throw std::logic_error("constructed permutation brace failed verification: " +
                           rep.violations.front().detail);
  return res;
}

SkewBracePresentation emit_mul_presentation(const SolutionTable& sol) {
  check_solution_shape(sol);
  const int n = sol.n;
  const DiagonalMaps d = extract_diagonal(sol);
  SkewBracePresentation p;
  for (int i = 0; i < n; ++i) p.generators.push_back(gen_name(i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const BWordRef lhs = BWord::prod(BWord::gen(gen_name(x)), BWord::gen(gen_name(y)));
      const BWordRef rhs = BWord::prod(BWord::gen(gen_name(d.sigma[x][y])),
                                       BWord::gen(gen_name(d.tau[y][x])));
      p.relators.push_back(BWord::prod(lhs, BWord::inv(rhs)));
    }
  return p;
}

SkewBracePresentation emit_add_presentation(const SolutionTable& sol) {
  check_solution_shape(sol);
  const int n = sol.n;
  const DiagonalMaps d = extract_diagonal(sol);
  SkewBracePresentation p;
  for (int i = 0; i < n; ++i) p.generators.push_back(gen_name(i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int s = d.sigma[x][y];
      const int t = d.sigma[s][d.tau[y][x]];
      const BWordRef lhs = BWord::sum(BWord::gen(gen_name(x)), BWord::gen(gen_name(s)));
      const BWordRef rhs = BWord::sum(BWord::gen(gen_name(s)), BWord::gen(gen_name(t)));
      p.relators.push_back(BWord::sum(lhs, BWord::neg(rhs)));
    }
  return p;
}

bool check_image_relations(const SolutionTable& sol, const PermBraceResult& pb) {
  Assignment assign;
  for (size_t x = 0; x < pb.generator_map.size(); ++x)
    assign[gen_name(static_cast<int>(x))] = pb.generator_map[x];
  return failing_relators(emit_mul_presentation(sol), pb.brace, assign).empty() &&
         failing_relators(emit_add_presentation(sol), pb.brace, assign).empty();
}

}  // namespace skewbrace
