#include "cayley/group_algebra.hpp"

#include <stdexcept>

namespace cayley {

GroupAlgebraVector algebra_sum(const GroupAlgebraVector& u, const GroupAlgebraVector& v) {
  GroupAlgebraVector out = u;
  for (auto [e, c] : v.coeffs) out.add(e, c);
  return out;
}

GroupAlgebraVector algebra_diff(const GroupAlgebraVector& u, const GroupAlgebraVector& v) {
  GroupAlgebraVector out = u;
  for (auto [e, c] : v.coeffs) out.add(e, -c);
  return out;
}

GroupAlgebraVector algebra_product(const GroupTable& G, const GroupAlgebraVector& u,
                                   const GroupAlgebraVector& v) {
  GroupAlgebraVector out;
  for (auto [x, cu] : u.coeffs)
    for (auto [y, cv] : v.coeffs) {
      long long prod;
      if (__builtin_mul_overflow(cu, cv, &prod))
        throw std::overflow_error("group algebra coefficient overflow");
      out.add(G.mul(x, y), prod);
    }
  return out;
}

bool verify_cor5_identity(int n, long long order_cap) {
  if (n < 3) throw std::invalid_argument("verify_cor5_identity needs n >= 3");
  GroupTable G = GroupTable::builtin(GroupFamily::Sym, n, order_cap);

  auto transposition = [&](int i, int j) {
    return G.index_of(Permutation::parse("(" + std::to_string(i) + " " + std::to_string(j) + ")", n));
  };

  GroupAlgebraVector a;  // sum of (1 2 i) and (2 1 i), i = 3..n
  for (int i = 3; i <= n; ++i) {
    Permutation p = Permutation::parse("(1 2 " + std::to_string(i) + ")", n);
    a.add(G.index_of(p), 1);
    a.add(G.index_of(p.inverse()), 1);
  }

  GroupAlgebraVector b;  // all transpositions
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.add(transposition(i, j), 1);

  GroupAlgebraVector c;  // transpositions on points >= 3
  for (int i = 3; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) c.add(transposition(i, j), 1);

  GroupAlgebraVector d;
  d.add(transposition(1, 2), 1);

  GroupAlgebraVector rhs = algebra_product(G, d, algebra_diff(algebra_diff(b, c), d));
  if (!(a == rhs)) return false;

  auto commutes = [&](const GroupAlgebraVector& u, const GroupAlgebraVector& v) {
    return algebra_product(G, u, v) == algebra_product(G, v, u);
  };
  return commutes(c, d) && commutes(b, c) && commutes(b, d);
}

}  // namespace cayley
