#pragma once

#include <set>
#include <string>
#include <vector>

#include "cayley/characters.hpp"
#include "cayley/charpoly.hpp"
#include "cayley/classes.hpp"
#include "cayley/subsets.hpp"

namespace cayley {

enum class SpectrumMethod { CentralCharacters, DirectOracle };

struct EigenvaluePair {
  double value = 0.0;          // numeric value (exact when is_exact)
  long long int_value = 0;     // meaningful when is_exact
  bool is_exact = false;
  long long multiplicity = 0;
};

struct SpectrumReport {
  std::vector<EigenvaluePair> pairs;  // sorted by value descending
  SpectrumMethod method = SpectrumMethod::DirectOracle;
  bool certified = false;  // exact integer certificate vs numeric verdict
  bool integral = false;
  double residual = 0.0;   // max distance to nearest integer (0 when exact)

  long long total_multiplicity() const;
};

struct SpectrumOptions {
  double tol = 1e-6;           // absolute eigenvalue tolerance
  double cluster_gap = 10.0;   // minimum gap, in units of tol, between clusters
  long long oracle_cap = 1500; // largest |G| for the dense oracle
};

// B = sum of the class matrices over `classes`. Eigenvalues of B are the
// central character values omega_chi(S-bar), one per irreducible.
IntMatrix subset_class_matrix(const StructureConstants& A, const std::set<int>& classes);

// Character-route spectrum of a normal symmetric identity-free set given as
// a class union: lambda_chi = sum over classes of omega, multiplicity
// sum of chi(1)^2 over characters sharing the value. When `exact_roots`
// is supplied (fully split certificate), values snap to those integers.
SpectrumReport spectrum_via_central_characters(const CentralCharacterTable& T,
                                               const std::set<int>& classes,
                                               const ClassData& C,
                                               const std::vector<std::pair<long long, int>>* exact_roots = nullptr,
                                               const SpectrumOptions& opts = {});

// Dense 0/1 adjacency of Cay(G, S): entry (g, h) = 1 iff g^{-1} h in S.
// Requires S symmetric and identity-free.
std::vector<std::vector<int>> adjacency_matrix(const GroupTable& G, const ElementSet& S,
                                               long long oracle_cap = 1500);

// Dense symmetric eigendecomposition with gap-based clustering.
SpectrumReport spectrum_direct(const std::vector<std::vector<int>>& adj,
                               const SpectrumOptions& opts = {});

struct ComponentsReport {
  long long component_count = 0;
  long long component_size = 0;
  bool lemma_check = false;  // BFS sizes + replicated-spectrum comparison
};

ComponentsReport components_report(const GroupTable& G, const ElementSet& S,
                                   const SpectrumOptions& opts = {});

// Integrality decision. Normal S: exact certificate through the class
// matrix charpoly (certified either way). Non-normal S: numeric verdict
// from the dense oracle (certified = false).
SpectrumReport certify_integrality(const GroupTable& G, const ClassData& C,
                                   const StructureConstants& A,
                                   const CentralCharacterTable& T, const ElementSet& S,
                                   const SpectrumOptions& opts = {});

// Consistency checks every report must satisfy: sum of multiplicities |G|,
// zero trace, A^2 trace |S||G|, top value |S|. Throws std::logic_error on
// violation.
void check_spectrum_invariants(const SpectrumReport& r, long long group_order,
                               long long set_size, double tol = 1e-6);

}  // namespace cayley
