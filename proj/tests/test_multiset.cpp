#include <map>

#include "doctest.h"
#include "opn/multiset.hpp"

using namespace opn;

namespace {

// Every function dom -> cod, enumerated as image vectors.
std::vector<FinFunction> all_functions(const CarrierPtr& dom, const CarrierPtr& cod) {
  std::vector<FinFunction> out;
  std::vector<std::size_t> image(dom->size(), 0);
  if (cod->empty()) {
    if (dom->empty()) out.emplace_back(dom, cod, image);
    return out;
  }
  while (true) {
    out.emplace_back(dom, cod, image);
    std::size_t k = 0;
    while (k < image.size() && ++image[k] == cod->size()) image[k++] = 0;
    if (k == image.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("carrier rejects duplicates and sorts") {
  CHECK_THROWS_AS(Carrier({"A", "A"}), InvalidNet);
  Carrier c{"B", "A"};
  CHECK(c[0] == "A");
  CHECK(c.index("B") == 1);
  CHECK_THROWS(c.index("Z"));
}

TEST_CASE("empty multiset is the unit") {
  auto ab = make_carrier({"A", "B"});
  CHECK(empty(ab).is_zero());
  CHECK(empty(ab).count("A") == 0);
  CHECK(empty(empty_carrier()).total() == 0);
  CHECK(empty(empty_carrier()) == Multiset(empty_carrier()));
  auto a = make_carrier({"A"});
  Multiset m(a, {{"A", 4}});
  CHECK(add(empty(a), m) == m);
}

TEST_CASE("add is pointwise, commutative and associative") {
  auto abcd = make_carrier({"A", "B", "C", "D"});
  Multiset ab(abcd, {{"A", 1}, {"B", 1}});
  Multiset cd(abcd, {{"C", 1}, {"D", 1}});
  CHECK((ab + Multiset(abcd, {{"A", 1}})) == Multiset(abcd, {{"A", 2}, {"B", 1}}));
  CHECK((ab + cd) == Multiset(abcd, {{"A", 1}, {"B", 1}, {"C", 1}, {"D", 1}}));

  auto all = enumerate_bounded(make_carrier({"x", "y"}), 2);
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(a + b == b + a);
      for (const auto& c : all) CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("add rejects mismatched carriers") {
  Multiset a(make_carrier({"A"}), {{"A", 1}});
  Multiset b(make_carrier({"B"}), {{"B", 1}});
  CHECK_THROWS_AS(add(a, b), CarrierMismatch);
  CHECK_THROWS_AS(leq(a, b), CarrierMismatch);
}

TEST_CASE("counts overflow is detected") {
  auto a = make_carrier({"A"});
  Multiset big(a, std::vector<Count>{~Count{0}});
  CHECK_THROWS(add(big, Multiset(a, {{"A", 1}})));
}

TEST_CASE("subtract is the partial inverse of add") {
  auto ab = make_carrier({"A", "B"});
  auto r = subtract(Multiset(ab, {{"A", 2}, {"B", 1}}), Multiset(ab, {{"A", 1}}));
  REQUIRE(r);
  CHECK(*r == Multiset(ab, {{"A", 1}, {"B", 1}}));
  CHECK_FALSE(subtract(Multiset(ab, {{"A", 1}}), Multiset(ab, {{"A", 1}, {"B", 1}})));
  auto whole = Multiset(ab, {{"A", 1}, {"B", 1}});
  CHECK(subtract(whole, whole)->is_zero());

  auto all = enumerate_bounded(ab, 3);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto d = subtract(a, b);
      CHECK(d.has_value() == leq(b, a));
      if (d) CHECK(*d + b == a);
    }
}

TEST_CASE("leq is a partial order compatible with add") {
  auto ab = make_carrier({"A", "B"});
  CHECK(leq(Multiset(ab, {{"A", 1}}), Multiset(ab, {{"A", 1}, {"B", 1}})));
  CHECK_FALSE(leq(Multiset(ab, {{"A", 2}}), Multiset(ab, {{"A", 1}, {"B", 1}})));
  auto all = enumerate_bounded(ab, 2);
  for (const auto& a : all) {
    CHECK(leq(a, a));
    for (const auto& b : all) {
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      for (const auto& c : all) {
        if (leq(a, b)) CHECK(leq(a + c, b + c));
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
      }
    }
  }
}

TEST_CASE("map sums over preimages") {
  auto xy = make_carrier({"x", "y"});
  auto z = make_carrier({"z"});
  auto f = FinFunction::from_table(xy, z, {{"x", "z"}, {"y", "z"}});
  CHECK(map(f, Multiset(xy, {{"x", 1}, {"y", 2}})) == Multiset(z, {{"z", 3}}));
  CHECK_THROWS(FinFunction::from_table(xy, z, {{"x", "z"}}));
}

TEST_CASE("map is functorial and a monoid homomorphism, exhaustively on small carriers") {
  auto a = make_carrier({"a1", "a2"});
  auto b = make_carrier({"b1", "b2"});
  auto c = make_carrier({"c1", "c2", "c3"});
  auto ms = enumerate_bounded(a, 3);
  for (const auto& m : ms) CHECK(map(FinFunction::identity(a), m) == m);
  for (const auto& f : all_functions(a, b)) {
    CHECK(map(f, empty(a)) == empty(b));
    for (const auto& m : ms)
      for (const auto& n : ms) CHECK(map(f, m + n) == map(f, m) + map(f, n));
    for (const auto& g : all_functions(b, c))
      for (const auto& m : ms) CHECK(map(compose(g, f), m) == map(g, map(f, m)));
  }
}

TEST_CASE("map along a bijection is invertible") {
  auto a = make_carrier({"p", "q", "r"});
  auto f = FinFunction::from_table(a, a, {{"p", "q"}, {"q", "r"}, {"r", "p"}});
  REQUIRE(f.is_bijective());
  for (const auto& m : enumerate_bounded(a, 3)) CHECK(map(f.inverse(), map(f, m)) == m);
}

TEST_CASE("enumerate_bounded counts match the stars-and-bars formula") {
  // Multisets over k atoms with total ≤ n: C(n+k, k).
  auto binom = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < k; ++i) atoms.push_back(std::string(1, char('A' + i)));
    auto c = make_carrier(atoms);
    for (Count n = 0; n <= 4; ++n) CHECK(enumerate_bounded(c, n).size() == binom(n + k, k));
  }
}

TEST_CASE("multiset text form") {
  auto ab = make_carrier({"A", "B"});
  CHECK(Multiset(ab, {{"A", 2}, {"B", 1}}).to_string() == "A:2,B");
  CHECK(empty(ab).to_string() == "0");
}
