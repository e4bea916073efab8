#pragma once

#include <vector>

#include "cayley/group.hpp"

namespace cayley {

using IntMatrix = std::vector<std::vector<long long>>;

/// Conjugacy class partition. Classes are numbered by the least element
/// index they contain, so class 0 is always {identity} and the numbering
/// is reproducible.
struct ClassData {
  std::vector<int> class_of;       // element index -> class index
  std::vector<int> reps;           // class index -> least element index
  std::vector<long long> sizes;    // |K_i|
  std::vector<int> inverse_class;  // i -> iota(i) with K_iota = K_i^{-1}

  int count() const { return static_cast<int>(reps.size()); }
};

/// Integer structure constants of the center of the group algebra:
/// a[i][j][k] = #{(x,y) in K_i x K_j : xy = z} for any fixed z in K_k.
struct StructureConstants {
  int k = 0;
  std::vector<long long> a;  // flattened k*k*k, index (i*k + j)*k + r

  long long at(int i, int j, int r) const { return a[(static_cast<size_t>(i) * k + j) * k + r]; }
  long long& at(int i, int j, int r) { return a[(static_cast<size_t>(i) * k + j) * k + r]; }
};

ClassData conjugacy_classes(const GroupTable& G);

// Class of rep(i)^k; well-defined since conjugation commutes with powers.
int power_class_map(const GroupTable& G, const ClassData& C, int class_index, long long k);

// One O(|G|) sweep per target class: fix z = rep(r), then every x in G
// contributes the pair (x, x^{-1} z).
StructureConstants structure_constants(const GroupTable& G, const ClassData& C);

// Matrix of multiplication by the class sum K_i on the class-sum basis;
// entry (r, j) = a[i][j][r].
IntMatrix class_matrix(const StructureConstants& A, int i);

}  // namespace cayley
