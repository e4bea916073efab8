#include "cayley/errors.hpp"
#include "cayley/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley {

GroupTable GroupTable::generate(const std::vector<Permutation>& generators,
                                long long order_cap) {
  if (generators.empty()) throw std::invalid_argument("generator list must be nonempty");
  int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generators have mixed degrees");
  if (degree > 255) throw std::invalid_argument("degree above 255 is unsupported");

  GroupTable table;
  table.degree_ = degree;

  Permutation identity(degree);
  table.elements_.push_back(identity);
  table.index_.emplace(identity.key(), 0);

  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<Permutation> next_layer;
    for (int idx : frontier) {
      for (const auto& g : generators) {
        Permutation product = table.elements_[idx].then(g);
        if (!table.index_.contains(product.key())) {
          // placeholder index; real index assigned after sorting the layer
          table.index_.emplace(product.key(), -1);
          next_layer.push_back(std::move(product));
        }
      }
    }
    std::sort(next_layer.begin(), next_layer.end(),
              [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
    frontier.clear();
    for (auto& p : next_layer) {
      if (static_cast<long long>(table.elements_.size()) >= order_cap)
        throw CapExceeded("group closure exceeds order cap " + std::to_string(order_cap));
      int idx = static_cast<int>(table.elements_.size());
      table.index_[p.key()] = idx;
      table.elements_.push_back(std::move(p));
      frontier.push_back(idx);
    }
  }

  table.inverse_.resize(table.elements_.size());
  for (size_t i = 0; i < table.elements_.size(); ++i)
    table.inverse_[i] = table.index_.at(table.elements_[i].inverse().key());

  for (const auto& g : generators)
    table.generator_indices_.push_back(table.index_.at(g.key()));

  return table;
}

namespace {

Permutation full_cycle(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

}  // namespace

GroupTable GroupTable::builtin(GroupFamily family, int n, long long order_cap) {
  std::vector<Permutation> gens;
  std::string spec;
  switch (family) {
    case GroupFamily::Sym: {
      if (n < 1) throw std::invalid_argument("sym:n requires n >= 1");
      spec = "sym:" + std::to_string(n);
      if (n == 1) {
        gens.push_back(Permutation(1));
      } else {
        gens.push_back(Permutation::parse("(1 2)", n));
        gens.push_back(full_cycle(n));
      }
      break;
    }
    case GroupFamily::Alt: {
      if (n < 3) throw std::invalid_argument("alt:n requires n >= 3");
      spec = "alt:" + std::to_string(n);
      for (int i = 3; i <= n; ++i)
        gens.push_back(Permutation::parse("(1 2 " + std::to_string(i) + ")", n));
      break;
    }
    case GroupFamily::Dih: {
      if (n < 3) throw std::invalid_argument("dih:n requires n >= 3");
      spec = "dih:" + std::to_string(n);
      gens.push_back(full_cycle(n));
      std::vector<int> refl(n);
      for (int i = 0; i < n; ++i) refl[i] = n - 1 - i;
      gens.push_back(Permutation(std::move(refl)));
      break;
    }
    case GroupFamily::Cyc: {
      if (n < 1) throw std::invalid_argument("cyc:n requires n >= 1");
      spec = "cyc:" + std::to_string(n);
      gens.push_back(n == 1 ? Permutation(1) : full_cycle(n));
      break;
    }
    case GroupFamily::Generic:
      throw std::invalid_argument("builtin() needs a named family");
  }
  GroupTable table = generate(gens, order_cap);
  table.family_ = family;
  table.family_n_ = n;
  table.spec_ = spec;
  return table;
}

GroupTable GroupTable::from_spec(const std::string& spec, long long order_cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad group spec (expected family:arg): " + spec);
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  if (head == "gens") {
    int degree = 0;
    std::string cycles = rest;
    if (auto at = rest.rfind('@'); at != std::string::npos) {
      degree = std::stoi(rest.substr(at + 1));
      cycles = rest.substr(0, at);
    }
    // split on commas that sit between cycles (outside parentheses)
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : cycles) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) parts.push_back(current);
    if (parts.empty()) throw std::invalid_argument("gens: spec needs at least one cycle");
    if (degree == 0) {
      for (const auto& p : parts)
        for (size_t i = 0; i < p.size(); ++i)
          if (isdigit(static_cast<unsigned char>(p[i]))) {
            size_t j = i;
            int v = 0;
            while (j < p.size() && isdigit(static_cast<unsigned char>(p[j]))) v = v * 10 + (p[j++] - '0');
            degree = std::max(degree, v);
            i = j;
          }
      if (degree == 0) degree = 1;
    }
    std::vector<Permutation> gens;
    for (const auto& p : parts) gens.push_back(Permutation::parse(p, degree));
    GroupTable table = generate(gens, order_cap);
    table.spec_ = spec;
    return table;
  }

  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad group spec argument: " + spec);
  }
  if (head == "sym") return builtin(GroupFamily::Sym, n, order_cap);
  if (head == "alt") return builtin(GroupFamily::Alt, n, order_cap);
  if (head == "dih") return builtin(GroupFamily::Dih, n, order_cap);
  if (head == "cyc") return builtin(GroupFamily::Cyc, n, order_cap);
  throw std::invalid_argument("unknown group family: " + head);
}

std::optional<int> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroupTable::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw std::invalid_argument("permutation is not a group member: " + p.to_cycles());
  return *idx;
}

int GroupTable::mul(int a, int b) const {
  return index_.at(elements_[a].then(elements_[b]).key());
}

int GroupTable::power(int a, long long k) const {
  long long m = elements_[a].order();
  k %= m;
  if (k < 0) k += m;
  int acc = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace cayley
