#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "cayley/subsets.hpp"

using namespace cayley;

namespace {

struct Fixture {
  GroupTable G;
  ClassData C;
  explicit Fixture(const char* spec) : G(GroupTable::from_spec(spec)), C(conjugacy_classes(G)) {}
  ElementSet set(const std::string& spec) const { return resolve_set_spec(spec, G, C); }
};

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(97) == 96);
  CHECK(euler_phi(360) == 96);
}

TEST_CASE("analyze_subset flags") {
  Fixture s4("sym:4");
  auto transpositions = s4.set("transpositions");
  CHECK(transpositions.size() == 6);
  auto a = analyze_subset(s4.G, s4.C, transpositions);
  CHECK(a.symmetric);
  CHECK(a.normal);
  CHECK(a.euler);
  CHECK(a.excludes_identity);
  CHECK(a.order_profile == std::map<long long, int>{{2, 6}});

  auto single4cycle = s4.set("elems:(1 2 3 4)");
  auto b = analyze_subset(s4.G, s4.C, single4cycle);
  CHECK_FALSE(b.symmetric);
  CHECK_FALSE(b.normal);
  CHECK_FALSE(b.euler);

  Fixture c5("cyc:5");
  auto pair = c5.set("elems:(1 2 3 4 5),(1 5 4 3 2)");
  auto c = analyze_subset(c5.G, c5.C, pair);
  CHECK(c.symmetric);
  CHECK(c.normal);  // abelian
  CHECK_FALSE(c.euler);  // phi(5) = 4 > 2, squares are missing
}

TEST_CASE("euler closure") {
  Fixture c5("cyc:5");
  auto single = c5.set("elems:(1 2 3 4 5)");
  auto closed = euler_closure(c5.G, single);
  CHECK(closed.size() == 4);  // all four generators of C5
  CHECK(euler_closure(c5.G, closed).members == closed.members);

  Fixture s4("sym:4");
  auto four = s4.set("elems:(1 2 3 4)");
  auto closed4 = euler_closure(s4.G, four);
  CHECK(closed4.size() == 2);
  CHECK(closed4.contains(s4.G.index_of(Permutation::parse("(1 4 3 2)", 4))));
}

TEST_CASE("normal closure") {
  Fixture s3("sym:3");
  auto one = s3.set("elems:(1 2)");
  CHECK(normal_closure(s3.G, s3.C, one).size() == 3);

  Fixture a4("alt:4");
  auto c123 = a4.set("elems:(1 2 3)");
  auto closed = normal_closure(a4.G, a4.C, c123);
  CHECK(closed.size() == 4);  // only its own class, not the inverse class
  CHECK_FALSE(closed.contains(a4.G.index_of(Permutation::parse("(1 3 2)", 4))));
}

TEST_CASE("generated subgroup") {
  Fixture s4("sym:4");
  CHECK(generated_subgroup(s4.G, s4.set("transpositions")).size() == 24);
  CHECK(generated_subgroup(s4.G, s4.set("classof:(1 2 3)")).size() == 12);
  CHECK(generated_subgroup(s4.G, s4.set("elems:(1 2)")).size() == 2);
  CHECK_THROWS_AS(generated_subgroup(s4.G, ElementSet{}), std::invalid_argument);
}

TEST_CASE("named sets") {
  Fixture s4("sym:4");
  auto star = s4.set("star");
  CHECK(star.size() == 3);
  CHECK(star.contains(s4.G.index_of(Permutation::parse("(1 4)", 4))));

  Fixture a5("alt:5");
  CHECK(a5.set("cycles12").size() == 6);  // 2(n-2)

  Fixture s3("sym:3");
  CHECK(s3.set("minus[transpositions;classof:(1 2)]").empty());

  Fixture d5("dih:5");
  CHECK_THROWS_AS(d5.set("transpositions"), std::invalid_argument);
}

TEST_CASE("set spec combinators and primitives") {
  Fixture s4("sym:4");
  CHECK(s4.set("stab:1").size() == 6);  // point stabilizer is sym:3
  CHECK(s4.set("minus[star;star]").empty());
  CHECK(s4.set("union[star;classof:(1 2 3)]").size() == 3 + 8);
  CHECK(s4.set("invclose[elems:(1 2 3 4)]").size() == 2);
  CHECK(s4.set("normalclose[elems:(1 2)]").size() == 6);
  CHECK(s4.set("eulerclose[elems:(1 2 3 4)]").size() == 2);
  // Cor 4 shape: star = transpositions minus the point-1 stabilizer
  CHECK(s4.set("minus[transpositions;stab:1]").members == s4.set("star").members);

  CHECK_THROWS_AS(s4.set("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(s4.set("union[star]"), std::invalid_argument);
  CHECK_THROWS_AS(s4.set("star extra"), std::invalid_argument);
}

TEST_CASE("closures are idempotent, extensive, symmetry-preserving") {
  std::mt19937 rng(23);
  for (const char* spec : {"sym:3", "alt:4", "dih:6", "cyc:10"}) {
    Fixture f(spec);
    std::uniform_int_distribution<int> pick(1, f.G.order() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      ElementSet S;
      int count = 1 + trial % 4;
      for (int i = 0; i < count; ++i) S.members.insert(pick(rng));

      auto ec = euler_closure(f.G, S);
      auto nc = normal_closure(f.G, f.C, S);
      for (int e : S.members) {
        CHECK(ec.contains(e));
        CHECK(nc.contains(e));
      }
      CHECK(euler_closure(f.G, ec).members == ec.members);
      CHECK(normal_closure(f.G, f.C, nc).members == nc.members);

      // euler closure output is euler (and hence symmetric) even when S is not
      auto flags = analyze_subset(f.G, f.C, ec);
      CHECK(flags.euler);
      CHECK(flags.symmetric);
      CHECK(analyze_subset(f.G, f.C, nc).normal);
    }
  }
}

TEST_CASE("symmetric sets with orders in {2,3,4,6} are euler") {
  for (const char* spec : {"sym:4", "dih:6", "cyc:12", "alt:4"}) {
    Fixture f(spec);
    // take all elements of order 2,3,4,6 (symmetric, closed under inversion)
    ElementSet S;
    for (int e = 1; e < f.G.order(); ++e) {
      long long m = f.G.element(e).order();
      if (m == 2 || m == 3 || m == 4 || m == 6) S.members.insert(e);
    }
    if (S.empty()) continue;
    auto flags = analyze_subset(f.G, f.C, S);
    CHECK(flags.symmetric);
    CHECK(flags.euler);
  }
}
