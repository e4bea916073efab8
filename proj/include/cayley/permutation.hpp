#pragma once

#include <string>
#include <vector>

namespace cayley {

/// Bijection on {0, ..., degree-1}. Points are 1-based in all user-facing
/// text (cycle notation); the conversion happens only at parse/format time.
class Permutation {
public:
  // Identity on `degree` points.
  explicit Permutation(int degree);

  // Takes 0-based images; validates that they form a bijection.
  explicit Permutation(std::vector<int> images);

  // Parses disjoint-cycle notation like "(1 2 3)(4 5)"; "()" is the identity.
  // Whitespace-insensitive. Throws std::invalid_argument on malformed text,
  // repeated points, or points exceeding `degree`.
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  // Composition convention is left-to-right application: (a.then(b))(x) =
  // b(a(x)). This matches the right Cayley action g -> gs.
  Permutation then(const Permutation& next) const;

  Permutation inverse() const;

  Permutation power(long long k) const;

  // Least m >= 1 with p^m = identity; lcm of cycle lengths.
  long long order() const;

  // Partition of the degree, fixed points included, sorted descending.
  std::vector<int> cycle_type() const;

  bool is_identity() const;

  // 1-based cycle notation; "()" for the identity. Fixed points omitted.
  std::string to_cycles() const;

  // Compact byte string usable as a hash key (degree <= 255 assumed upstream).
  std::string key() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

}  // namespace cayley
