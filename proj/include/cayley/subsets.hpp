#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cayley/classes.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Set of element indices into a GroupTable. Kept sorted.
struct ElementSet {
  std::set<int> members;

  bool contains(int e) const { return members.count(e) > 0; }
  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
};

struct SubsetAnalysis {
  int size = 0;
  bool excludes_identity = false;
  bool symmetric = false;  // S = S^{-1}
  bool normal = false;     // union of conjugacy classes
  bool euler = false;      // closed under coprime powers
  std::set<int> class_indices;            // populated iff normal
  std::map<long long, int> order_profile; // element order -> count
};

// Euler totient via the prime-power product formula.
long long euler_phi(long long m);

SubsetAnalysis analyze_subset(const GroupTable& G, const ClassData& C, const ElementSet& S);

// Smallest superset closed under s -> s^k for gcd(k, |s|) = 1; equivalently
// the union over s in S of the generator sets of <s>.
ElementSet euler_closure(const GroupTable& G, const ElementSet& S);

// Union of the conjugacy classes meeting S.
ElementSet normal_closure(const GroupTable& G, const ClassData& C, const ElementSet& S);

// Element set of <S> via BFS closure.
ElementSet generated_subgroup(const GroupTable& G, const ElementSet& S,
                              long long order_cap = kDefaultOrderCap);

// Set-spec grammar:
//   SPEC  := NAME | classof:CYCLES | elems:CYCLES(,CYCLES)* | stab:INT
//          | COMB[SPEC;SPEC] | UNARY[SPEC]
//   NAME  := transpositions | star | cycles12
//   COMB  := union | minus
//   UNARY := eulerclose | normalclose | invclose
// Named sets require a sym/alt builtin group; classof/elems/stab work for
// any group. Case-sensitive tokens.
ElementSet resolve_set_spec(const std::string& spec, const GroupTable& G,
                            const ClassData& C);

}  // namespace cayley
