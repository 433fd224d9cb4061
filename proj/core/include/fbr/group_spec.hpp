#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fbr/group.hpp"

namespace fbr {

inline constexpr int kDefaultOrderCap = 128;

/// How a group is supplied: a catalog name, permutation generators in cycle
/// notation on {1..d}, or an explicit Cayley table with identity at index 0.
struct GroupSpec {
  enum class Kind { Catalog, Permutations, Cayley };

  Kind kind = Kind::Catalog;
  std::string name;
  std::string catalog;
  std::vector<std::string> permutations;
  std::vector<std::vector<int>> cayley;

  static GroupSpec from_catalog(std::string name);
  static GroupSpec from_permutations(std::string name, std::vector<std::string> gens);
  static GroupSpec from_cayley(std::string name, std::vector<std::vector<int>> table);

  /// Parses the group file format:
  /// {"name": ..., "catalog": ...} | {"name": ..., "permutations": [...]} | {"name": ..., "cayley": [[...]]}
  static GroupSpec from_json_text(std::string_view text);
  /// A catalog name, or else a path to a group file.
  static GroupSpec from_argument(const std::string& arg);
};

GroupPtr load_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

/// The built-in sweep catalog: C1..C12, V4, S3, S4, D8, Q8, A4, C4xC2, C9xC3.
const std::vector<std::string>& catalog_names();
/// Accepts every name in catalog_names(), plus Cn for any n >= 1.
bool is_catalog_name(std::string_view name);
GroupPtr catalog_group(std::string_view name);

/// Cycle notation such as "(1 2)(3 4 5)" as an image list on {0..degree-1}.
std::vector<int> parse_cycles(std::string_view text, int degree);
/// Largest point mentioned in a cycle string (0 for the identity "()").
int max_point(std::string_view text);

GroupPtr group_from_permutations(std::string name, const std::vector<std::string>& gens,
                                 int order_cap = kDefaultOrderCap);

}  // namespace fbr
