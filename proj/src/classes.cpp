#include "cayley/classes.hpp"

#include <stdexcept>

namespace cayley {

ClassData conjugacy_classes(const GroupTable& G) {
  int n = G.order();
  ClassData C;
  C.class_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (C.class_of[e] != -1) continue;
    int cls = C.count();
    C.reps.push_back(e);
    C.sizes.push_back(0);
    // orbit of e under conjugation
    std::vector<int> stack{e};
    C.class_of[e] = cls;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++C.sizes[cls];
      for (int g : G.generator_indices()) {
        int y = G.mul(G.mul(G.inv(g), x), g);
        if (C.class_of[y] == -1) {
          C.class_of[y] = cls;
          stack.push_back(y);
        }
      }
    }
  }
  C.inverse_class.resize(C.count());
  for (int i = 0; i < C.count(); ++i)
    C.inverse_class[i] = C.class_of[G.inv(C.reps[i])];
  return C;
}

int power_class_map(const GroupTable& G, const ClassData& C, int class_index, long long k) {
  return C.class_of[G.power(C.reps[class_index], k)];
}

StructureConstants structure_constants(const GroupTable& G, const ClassData& C) {
  int k = C.count();
  StructureConstants A;
  A.k = k;
  A.a.assign(static_cast<size_t>(k) * k * k, 0);
  for (int r = 0; r < k; ++r) {
    int z = C.reps[r];
    for (int x = 0; x < G.order(); ++x) {
      int y = G.mul(G.inv(x), z);
      ++A.at(C.class_of[x], C.class_of[y], r);
    }
  }
  return A;
}

IntMatrix class_matrix(const StructureConstants& A, int i) {
  if (i < 0 || i >= A.k) throw std::out_of_range("class index out of range");
  IntMatrix M(A.k, std::vector<long long>(A.k, 0));
  for (int r = 0; r < A.k; ++r)
    for (int j = 0; j < A.k; ++j)
      M[r][j] = A.at(i, j, r);
  return M;
}

}  // namespace cayley
