#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/permutation.hpp"

namespace cayley {

inline constexpr long long kDefaultOrderCap = 10000;

enum class GroupFamily { Sym, Alt, Dih, Cyc, Generic };

/// Fully enumerated finite permutation group. Identity sits at index 0;
/// the remaining elements follow BFS layer order with lexicographic
/// tie-breaking on image tables, so indexing is deterministic.
/// Immutable after construction, safe to share across threads.
class GroupTable {
public:
  // BFS closure of the generators under right multiplication. Throws
  // std::runtime_error if the closure exceeds `order_cap`.
  static GroupTable generate(const std::vector<Permutation>& generators,
                             long long order_cap = kDefaultOrderCap);

  // Standard families. Generator choices:
  //   sym:n  (1 2), (1 2 ... n)
  //   alt:n  3-cycles (1 2 i), i = 3..n          (n >= 3)
  //   dih:n  (1 2 ... n) and the reflection i -> n+1-i   (n >= 3)
  //   cyc:n  (1 2 ... n)
  static GroupTable builtin(GroupFamily family, int n,
                            long long order_cap = kDefaultOrderCap);

  // Grammar: sym:N | alt:N | dih:N | cyc:N | gens:<cycles,comma-separated>[@degree]
  static GroupTable from_spec(const std::string& spec,
                              long long order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<int> find(const Permutation& p) const;
  int index_of(const Permutation& p) const;  // throws if not a member

  // Element-index product under the apply-left-then-right convention.
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[a]; }
  int power(int a, long long k) const;

  const std::vector<int>& generator_indices() const { return generator_indices_; }

  GroupFamily family() const { return family_; }
  int family_n() const { return family_n_; }
  const std::string& spec() const { return spec_; }

private:
  GroupTable() = default;

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<std::string, int> index_;  // Permutation::key() -> index
  std::vector<int> inverse_;
  std::vector<int> generator_indices_;
  GroupFamily family_ = GroupFamily::Generic;
  int family_n_ = 0;
  std::string spec_;
};

}  // namespace cayley
