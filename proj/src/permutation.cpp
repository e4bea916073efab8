#include "cayley/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cayley {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::parse(const std::string& text, int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };

  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point in cycle notation: " + text);
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > degree) throw std::invalid_argument("point exceeds degree in: " + text);
        ++pos;
      }
      if (value < 1) throw std::invalid_argument("points are 1-based in: " + text);
      int p = value - 1;
      if (used[p]) throw std::invalid_argument("repeated point across cycles in: " + text);
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in: " + text);
    ++pos;  // ')'
    saw_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  if (!saw_cycle) throw std::invalid_argument("empty cycle expression: " + text);
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> result(images_.size());
  for (int i = 0; i < degree(); ++i) result[i] = next.images_[images_[i]];
  return Permutation(std::move(result));
}

Permutation Permutation::inverse() const {
  std::vector<int> result(images_.size());
  for (int i = 0; i < degree(); ++i) result[images_[i]] = i;
  return Permutation(std::move(result));
}

Permutation Permutation::power(long long k) const {
  long long m = order();
  k %= m;
  if (k < 0) k += m;
  Permutation acc(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) acc = acc.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return acc;
}

long long Permutation::order() const {
  long long m = 1;
  for (int len : cycle_type()) m = std::lcm<long long>(m, len);
  return m;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) { seen[i] = true; continue; }
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string Permutation::key() const {
  std::string k(images_.size(), '\0');
  for (size_t i = 0; i < images_.size(); ++i) k[i] = static_cast<char>(images_[i]);
  return k;
}

}  // namespace cayley
