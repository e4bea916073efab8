#pragma once

#include <utility>
#include <vector>

#include "cayley/classes.hpp"

namespace cayley {

/// Monic characteristic polynomial with exact integer coefficients,
/// stored low-to-high: coeffs[0] + coeffs[1] x + ... + coeffs[d] x^d,
/// coeffs[d] = 1.
struct CharPolyZ {
  std::vector<long long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Characteristic polynomial det(xI - B) by the Faddeev-LeVerrier
// recurrence; all divisions are exact, intermediates run in 128-bit with
// overflow checks. Throws std::overflow_error if a value leaves the
// representable range.
CharPolyZ charpoly_integer(const IntMatrix& B);

// Exact Cayley-Hamilton check: p(B) == 0.
bool cayley_hamilton_holds(const IntMatrix& B, const CharPolyZ& p);

struct IntegerRoots {
  std::vector<std::pair<long long, int>> roots;  // (root, multiplicity), sorted
  bool fully_split = false;                      // remaining quotient is 1
  CharPolyZ remainder;                           // non-split factor (monic)
};

// Strips the x^m factor, then tests divisors of the constant term under a
// Fujiwara root bound, deflating by synthetic division until no integer
// root remains.
IntegerRoots integer_roots(const CharPolyZ& p);

// Exact polynomial divisibility test (divisor monic).
bool divides_exactly(const CharPolyZ& p, const std::vector<long long>& monic_divisor);

}  // namespace cayley
