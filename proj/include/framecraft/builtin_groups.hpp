#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "framecraft/group.hpp"

namespace framecraft {

/// Parsed form of a builtin group name: "cyclic:n", "dihedral:n",
/// "symmetric:n" (n <= 5) or "product:<spec>x<spec>".
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Product };
  Kind kind = Kind::Cyclic;
  int n = 1;
  std::vector<GroupSpec> factors;  // two entries for products

  std::string to_string() const;
};

/// Throws Error{UnsupportedGroup} for anything it does not recognize.
GroupSpec parse_group_spec(std::string_view text);
bool looks_like_group_spec(std::string_view text);

GroupPtr builtin_group(const GroupSpec& spec);
GroupPtr builtin_group(std::string_view spec);

/// Element indices: cyclic k = g^k; dihedral k < n is a^k and n + k is a^k b
/// with b a b^-1 = a^-1; symmetric = permutations of {0..n-1} in
/// lexicographic order, composed as (s t)(x) = s(t(x)).
std::vector<std::vector<int>> symmetric_permutations(int n);

/// S_n acting on {0, ..., n-1}.
GroupAction symmetric_natural_action(int n);

}  // namespace framecraft
