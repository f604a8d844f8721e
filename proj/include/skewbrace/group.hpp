#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/perm.hpp"

namespace skewbrace {

// A finite group given by its full multiplication table.
struct GroupTable {
  int n = 0;
  std::vector<int> op;  // n*n, row-major
  int identity = 0;

  int at(int a, int b) const { return op[a * n + b]; }
  bool operator==(const GroupTable&) const = default;
};

// Throws FormatError on bad dimensions or out-of-range entries.
void check_group_shape(const GroupTable& g);

// One human-readable reason the table is not a group, or nullopt.
std::optional<std::string> group_violation(const GroupTable& g);
bool is_group(const GroupTable& g);

std::vector<int> group_inverses(const GroupTable& g);
int group_element_order(const GroupTable& g, int a);

// x y x^-1 y^-1
int group_commutator(const GroupTable& g, int x, int y);

std::vector<int> group_center(const GroupTable& g);

// Z_0 = {e}, Z_{k+1} = {x : [x,g] in Z_k for all g}, up to stabilization.
// Terms are sorted element lists; the first is always {identity}.
std::vector<std::vector<int>> upper_central_series(const GroupTable& g);

// All automorphisms as permutations of the carrier. Exhaustive over
// bijections fixing the identity; meant for small n.
std::vector<Perm> group_automorphisms(const GroupTable& g);

GroupTable opposite_group(const GroupTable& g);
GroupTable relabel_group(const GroupTable& g, const Perm& p);

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int k);    // order 2k, k >= 1
GroupTable symmetric_group(int k);   // order k!, k <= 5
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

}  // namespace skewbrace
