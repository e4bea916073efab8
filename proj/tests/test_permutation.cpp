#include <doctest.h>

#include <numeric>
#include <random>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/permutation.hpp"

using namespace cayley;

TEST_CASE("cycle notation parsing") {
  CHECK(Permutation::parse("()", 4) == Permutation(4));
  CHECK(Permutation::parse("(1 2)", 3).images() == std::vector<int>{1, 0, 2});
  CHECK(Permutation::parse("(1 2 3)(4 5)", 5).images() == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(Permutation::parse(" ( 1 2 ) ", 2) == Permutation::parse("(1 2)", 2));

  CHECK_THROWS_AS(Permutation::parse("(1 2", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(0 1)", 3), std::invalid_argument);
}

TEST_CASE("composition is apply-left-then-right") {
  auto t12 = Permutation::parse("(1 2)", 3);
  auto t23 = Permutation::parse("(2 3)", 3);
  CHECK(t12.then(t12).is_identity());
  // 1 ->a 2 ->b 3, so the product sends 1 to 3: the cycle (1 3 2)
  CHECK(t12.then(t23) == Permutation::parse("(1 3 2)", 3));
  CHECK(t12.then(Permutation(3)) == t12);
}

TEST_CASE("inverse") {
  CHECK(Permutation(5).inverse().is_identity());
  CHECK(Permutation::parse("(1 2 3)", 3).inverse() == Permutation::parse("(1 3 2)", 3));
  CHECK(Permutation::parse("(1 2)", 4).inverse() == Permutation::parse("(1 2)", 4));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> im(8);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    Permutation p(im);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(p.inverse().then(p).is_identity());
  }
}

TEST_CASE("element order and cycle type") {
  CHECK(Permutation(4).order() == 1);
  CHECK(Permutation::parse("(1 2)(3 4 5)", 5).order() == 6);
  CHECK(Permutation::parse("(1 2 3 4)", 4).order() == 4);

  CHECK(Permutation(4).cycle_type() == std::vector<int>{1, 1, 1, 1});
  CHECK(Permutation::parse("(1 2)(3 4)", 4).cycle_type() == std::vector<int>{2, 2});
  CHECK(Permutation::parse("(1 2 3)", 5).cycle_type() == std::vector<int>{3, 1, 1});
}

TEST_CASE("group generation") {
  auto g2 = GroupTable::generate({Permutation::parse("(1 2)", 2)});
  CHECK(g2.order() == 2);

  auto s3 = GroupTable::generate({Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.element(0).is_identity());

  // <(1 2 3), (1 2)(4 5)> has order 6: each element acts evenly on {1,2,3}
  // with identity on {4,5}, or oddly with the swap (4 5).
  auto mixed = GroupTable::generate({Permutation::parse("(1 2 3)", 5),
                                     Permutation::parse("(1 2)(4 5)", 5)});
  CHECK(mixed.order() == 6);

  CHECK_THROWS_AS(GroupTable::generate({Permutation::parse("(1 2)", 4),
                                        Permutation::parse("(1 2 3 4)", 4)},
                                       10),
                  CapExceeded);
}

TEST_CASE("builtin families have the right orders") {
  CHECK(GroupTable::builtin(GroupFamily::Sym, 3).order() == 6);
  CHECK(GroupTable::builtin(GroupFamily::Alt, 4).order() == 12);
  CHECK(GroupTable::builtin(GroupFamily::Dih, 5).order() == 10);
  CHECK(GroupTable::builtin(GroupFamily::Cyc, 7).order() == 7);
  CHECK(GroupTable::builtin(GroupFamily::Sym, 5).order() == 120);
}

TEST_CASE("group table is closed and Lagrange-consistent") {
  for (const char* spec : {"sym:4", "alt:4", "dih:6", "cyc:9"}) {
    auto G = GroupTable::from_spec(spec);
    for (int a = 0; a < G.order(); ++a) {
      CHECK(G.order() % G.element(a).order() == 0);
      CHECK(G.mul(a, G.inv(a)) == 0);
      for (int b = 0; b < G.order(); ++b) {
        int c = G.mul(a, b);
        CHECK(c >= 0);
        CHECK(c < G.order());
      }
    }
  }
}

TEST_CASE("element set is independent of generator order") {
  auto a = GroupTable::generate({Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3 4)", 4)});
  auto b = GroupTable::generate({Permutation::parse("(1 2 3 4)", 4), Permutation::parse("(1 2)", 4)});
  REQUIRE(a.order() == b.order());
  for (int i = 0; i < a.order(); ++i) CHECK(b.find(a.element(i)).has_value());
}

TEST_CASE("group spec parsing") {
  CHECK(GroupTable::from_spec("gens:(1 2),(1 2 3)").order() == 6);
  CHECK(GroupTable::from_spec("gens:(1 2)@4").degree() == 4);
  CHECK_THROWS_AS(GroupTable::from_spec("sym"), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::from_spec("foo:3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::from_spec("sym:x"), std::invalid_argument);
}
