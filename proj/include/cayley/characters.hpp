#pragma once

#include <complex>
#include <vector>

#include "cayley/classes.hpp"

namespace cayley {

/// Central character values: one row per irreducible character chi, one
/// column per conjugacy class, entry omega_chi(class sum K_i); plus the
/// integer degrees chi(1). Rows are sorted by (degree, values) so output
/// is deterministic despite the randomized diagonalization inside.
struct CentralCharacterTable {
  int k = 0;
  std::vector<std::vector<std::complex<double>>> omega;  // k rows x k columns
  std::vector<long long> degrees;

  // Largest residual of omega_i * omega_j = sum_r a_ijr * omega_r over all
  // rows and class pairs, relative to the row scale.
  double homomorphism_residual(const StructureConstants& A) const;
};

struct CharacterOptions {
  int max_attempts = 5;
  double verify_tol = 1e-8;     // relative eigenrow verification
  double degree_tol = 1e-6;     // max defect when rounding degrees
  unsigned long long seed = 0x5eed'cafe'f00dULL;
};

// Simultaneous eigenrows of the class matrices via a random real linear
// combination; every candidate is re-verified against each class matrix and
// degrees are recovered from chi(1)^2 = |G| / sum_i omega_i omega_iota(i) / |K_i|.
// Throws std::runtime_error if verification keeps failing after retries.
CentralCharacterTable central_characters(const GroupTable& G, const ClassData& C,
                                         const StructureConstants& A,
                                         const CharacterOptions& opts = {});

}  // namespace cayley
