#pragma once

#include <map>

#include "cayley/group.hpp"

namespace cayley {

/// Sparse integer vector in the group algebra: element index -> coefficient.
struct GroupAlgebraVector {
  std::map<int, long long> coeffs;

  long long at(int e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? 0 : it->second;
  }
  void add(int e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
  bool operator==(const GroupAlgebraVector&) const = default;
};

GroupAlgebraVector algebra_sum(const GroupAlgebraVector& u, const GroupAlgebraVector& v);
GroupAlgebraVector algebra_diff(const GroupAlgebraVector& u, const GroupAlgebraVector& v);

// Convolution: coeff(z) = sum over xy = z of u(x) v(y), exact integers.
GroupAlgebraVector algebra_product(const GroupTable& G, const GroupAlgebraVector& u,
                                   const GroupAlgebraVector& v);

// Checks, in Sym(n), that the 3-cycle sum a = sum_i (1 2 i) + (2 1 i)
// factors as d (b - c - d) for b = all transpositions, c = transpositions
// on points >= 3, d = (1 2), and that [c,d], [b,c], [b,d] all vanish.
bool verify_cor5_identity(int n, long long order_cap = kDefaultOrderCap);

}  // namespace cayley
