#include "cayley/errors.hpp"
#include "cayley/subsets.hpp"

#include <numeric>
#include <stdexcept>

namespace cayley {

long long euler_phi(long long m) {
  if (m < 1) throw std::invalid_argument("euler_phi needs m >= 1");
  long long result = 1;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    long long pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    result *= pk / p * (p - 1);
  }
  if (m > 1) result *= m - 1;
  return result;
}

SubsetAnalysis analyze_subset(const GroupTable& G, const ClassData& C, const ElementSet& S) {
  SubsetAnalysis out;
  out.size = S.size();
  out.excludes_identity = !S.contains(0);

  out.symmetric = true;
  for (int s : S.members)
    if (!S.contains(G.inv(s))) { out.symmetric = false; break; }

  // normal iff every class meeting S lies entirely in S
  std::map<int, long long> class_hits;
  for (int s : S.members) ++class_hits[C.class_of[s]];
  out.normal = true;
  for (auto [cls, hits] : class_hits)
    if (hits != C.sizes[cls]) { out.normal = false; break; }
  if (out.normal)
    for (auto [cls, hits] : class_hits) out.class_indices.insert(cls);

  out.euler = true;
  for (int s : S.members) {
    long long m = G.element(s).order();
    for (long long k = 1; k < m && out.euler; ++k)
      if (std::gcd(k, m) == 1 && !S.contains(G.power(s, k))) out.euler = false;
    if (!out.euler) break;
  }

  for (int s : S.members) ++out.order_profile[G.element(s).order()];
  return out;
}

ElementSet euler_closure(const GroupTable& G, const ElementSet& S) {
  ElementSet out;
  for (int s : S.members) {
    long long m = G.element(s).order();
    for (long long k = 0; k < m; ++k)
      if (std::gcd(k, m) == 1 || m == 1) out.members.insert(G.power(s, k));
  }
  return out;
}

ElementSet normal_closure(const GroupTable& G, const ClassData& C, const ElementSet& S) {
  std::set<int> classes;
  for (int s : S.members) classes.insert(C.class_of[s]);
  ElementSet out;
  for (int e = 0; e < G.order(); ++e)
    if (classes.count(C.class_of[e])) out.members.insert(e);
  return out;
}

ElementSet generated_subgroup(const GroupTable& G, const ElementSet& S, long long order_cap) {
  if (S.empty()) throw std::invalid_argument("generated_subgroup needs a nonempty set");
  ElementSet out;
  out.members.insert(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : S.members) {
      int y = G.mul(x, s);
      if (out.members.insert(y).second) {
        if (static_cast<long long>(out.members.size()) > order_cap)
          throw CapExceeded("subgroup closure exceeds order cap");
        stack.push_back(y);
      }
    }
  }
  return out;
}

namespace {

class SetSpecParser {
public:
  SetSpecParser(const std::string& text, const GroupTable& G, const ClassData& C)
      : text_(text), G_(G), C_(C) {}

  ElementSet parse() {
    ElementSet s = parse_spec();
    if (pos_ != text_.size())
      throw std::invalid_argument("trailing characters in set spec: " + text_);
    return s;
  }

private:
  const std::string& text_;
  const GroupTable& G_;
  const ClassData& C_;
  size_t pos_ = 0;

  bool at_terminator() const {
    return pos_ >= text_.size() || text_[pos_] == ';' || text_[pos_] == ']';
  }

  std::string take_token() {
    size_t start = pos_;
    while (pos_ < text_.size() && (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // One parenthesised cycle expression, e.g. "(1 2 3)(4 5)".
  std::string take_cycles() {
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] == '(') {
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      if (pos_ >= text_.size()) throw std::invalid_argument("unterminated cycle in set spec");
      ++pos_;
    }
    if (pos_ == start) throw std::invalid_argument("expected cycle notation in set spec: " + text_);
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in set spec: " + text_);
    ++pos_;
  }

  void require_sym_or_alt(const std::string& name) const {
    if (G_.family() != GroupFamily::Sym && G_.family() != GroupFamily::Alt)
      throw std::invalid_argument("named set '" + name + "' requires a sym:N or alt:N group");
  }

  ElementSet parse_spec() {
    std::string tok = take_token();
    if (tok.empty()) throw std::invalid_argument("empty set spec term in: " + text_);

    if (tok == "union" || tok == "minus") {
      expect('[');
      ElementSet a = parse_spec();
      expect(';');
      ElementSet b = parse_spec();
      expect(']');
      ElementSet out;
      if (tok == "union") {
        out = a;
        out.members.insert(b.members.begin(), b.members.end());
      } else {
        for (int e : a.members)
          if (!b.contains(e)) out.members.insert(e);
      }
      return out;
    }
    if (tok == "eulerclose" || tok == "normalclose" || tok == "invclose") {
      expect('[');
      ElementSet a = parse_spec();
      expect(']');
      if (tok == "eulerclose") return euler_closure(G_, a);
      if (tok == "normalclose") return normal_closure(G_, C_, a);
      ElementSet out = a;
      for (int e : a.members) out.members.insert(G_.inv(e));
      return out;
    }
    if (tok == "classof") {
      expect(':');
      Permutation p = Permutation::parse(take_cycles(), G_.degree());
      int cls = C_.class_of[G_.index_of(p)];
      ElementSet out;
      for (int e = 0; e < G_.order(); ++e)
        if (C_.class_of[e] == cls) out.members.insert(e);
      return out;
    }
    if (tok == "elems") {
      expect(':');
      ElementSet out;
      out.members.insert(G_.index_of(Permutation::parse(take_cycles(), G_.degree())));
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        out.members.insert(G_.index_of(Permutation::parse(take_cycles(), G_.degree())));
      }
      return out;
    }
    if (tok == "stab") {
      expect(':');
      std::string num = take_token();
      int point = std::stoi(num);
      if (point < 1 || point > G_.degree())
        throw std::invalid_argument("stab point out of range: " + num);
      ElementSet out;
      for (int e = 0; e < G_.order(); ++e)
        if (G_.element(e).apply(point - 1) == point - 1) out.members.insert(e);
      return out;
    }
    if (tok == "transpositions") {
      require_sym_or_alt(tok);
      ElementSet out;
      for (int e = 0; e < G_.order(); ++e) {
        auto ct = G_.element(e).cycle_type();
        if (!ct.empty() && ct[0] == 2 && (ct.size() < 2 || ct[1] == 1))
          out.members.insert(e);
      }
      return out;
    }
    if (tok == "star") {
      require_sym_or_alt(tok);
      ElementSet out;
      for (int i = 2; i <= G_.degree(); ++i) {
        auto p = Permutation::parse("(1 " + std::to_string(i) + ")", G_.degree());
        if (auto idx = G_.find(p)) out.members.insert(*idx);
      }
      return out;
    }
    if (tok == "cycles12") {
      require_sym_or_alt(tok);
      if (G_.degree() < 3) throw std::invalid_argument("cycles12 requires degree >= 3");
      ElementSet out;
      for (int i = 3; i <= G_.degree(); ++i) {
        auto p = Permutation::parse("(1 2 " + std::to_string(i) + ")", G_.degree());
        out.members.insert(G_.index_of(p));
        out.members.insert(G_.index_of(p.inverse()));
      }
      return out;
    }
    throw std::invalid_argument("unknown set spec token '" + tok + "' in: " + text_);
  }
};

}  // namespace

ElementSet resolve_set_spec(const std::string& spec, const GroupTable& G, const ClassData& C) {
  return SetSpecParser(spec, G, C).parse();
}

}  // namespace cayley
