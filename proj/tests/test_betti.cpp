#include <doctest.h>

#include <vector>

#include "bettilab/betti.hpp"
#include "bettilab/verify.hpp"

using namespace bettilab;

namespace {

RingSpec kxyz() {
  return RingSpec({"x", "y", "z"},
                  {Cap::unbounded(), Cap::unbounded(), Cap::unbounded()});
}

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

BettiTable table_of(std::vector<std::tuple<int, int, long long>> entries,
                    TableMode mode = TableMode::OfIdeal) {
  BettiTable t;
  t.mode = mode;
  for (auto& [i, j, v] : entries) t.add(i, j, v);
  return t;
}

}  // namespace

TEST_CASE("table bookkeeping") {
  BettiTable t = table_of({{0, 1, 2}, {1, 2, 1}});
  CHECK(t.at(0, 1) == 2);
  CHECK(t.at(5, 5) == 0);
  CHECK(t.max_i() == 1);
  CHECK(t.max_j() == 2);
  CHECK(t.total() == 3);
  t.add(0, 1, -2);  // zero entries are erased
  CHECK(t.entries.count({0, 1}) == 0);
  CHECK(BettiTable{}.max_i() == -1);
}

TEST_CASE("mode shift law round trips") {
  BettiTable ideal = table_of({{0, 2, 2}, {1, 3, 1}});
  BettiTable quot = to_quotient(ideal);
  CHECK(quot.mode == TableMode::OfQuotient);
  CHECK(quot.at(0, 0) == 1);
  CHECK(quot.at(1, 2) == 2);
  CHECK(quot.at(2, 3) == 1);
  CHECK(to_ideal(quot).same_entries(ideal));

  CHECK_THROWS_AS(to_quotient(quot), Error);
  CHECK_THROWS_AS(to_ideal(ideal), Error);
  BettiTable broken = table_of({{0, 0, 1}, {0, 3, 1}}, TableMode::OfQuotient);
  CHECK_THROWS_AS(to_ideal(broken), Error);
}

TEST_CASE("table comparison with directional witnesses") {
  BettiTable a = table_of({{0, 2, 2}, {1, 3, 1}});
  BettiTable b = table_of({{0, 2, 3}, {1, 3, 1}});
  TableComparison le = table_compare(a, b);
  CHECK(le.order == TableOrder::LessEq);
  CHECK(le.first_below == std::make_pair(0, 2));

  TableComparison eq = table_compare(a, a);
  CHECK(eq.order == TableOrder::Equal);

  BettiTable c = table_of({{0, 2, 3}});
  TableComparison inc = table_compare(a, c);
  CHECK(inc.order == TableOrder::Incomparable);
  CHECK(inc.first_below == std::make_pair(0, 2));
  CHECK(inc.first_above == std::make_pair(1, 3));

  BettiTable q = to_quotient(a);
  CHECK_THROWS_AS(table_compare(a, q), Error);
}

TEST_CASE("table addition respects mode and characteristic") {
  BettiTable a = table_of({{0, 2, 1}});
  BettiTable b = table_of({{0, 2, 1}, {1, 3, 2}});
  CHECK(table_add(a, b).at(0, 2) == 2);
  BettiTable q = to_quotient(a);
  CHECK_THROWS_AS(table_add(a, q), Error);
  BettiTable p = a;
  p.characteristic = 2;
  CHECK_THROWS_AS(table_add(a, p), Error);
}

TEST_CASE("oracle on the maximal ideal is the Koszul complex") {
  MonomialIdeal j(kxyz(), {m({1, 0, 0}), m({0, 1, 0}), m({0, 0, 1})});
  BettiTable t = betti_oracle(j);
  CHECK(t.same_entries(table_of({{0, 1, 3}, {1, 2, 3}, {2, 3, 1}})));
}

TEST_CASE("oracle on two variables") {
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  BettiTable t = betti_oracle(MonomialIdeal(kxy, {m({1, 0}), m({0, 1})}));
  CHECK(t.same_entries(table_of({{0, 1, 2}, {1, 2, 1}})));
}

TEST_CASE("oracle on a mixed-degree ideal") {
  RingSpec kxz({"x", "z"}, {Cap::unbounded(), Cap::unbounded()});
  BettiTable t = betti_oracle(MonomialIdeal(kxz, {m({2, 0}), m({1, 1}), m({0, 3})}));
  CHECK(t.same_entries(table_of({{0, 2, 2}, {0, 3, 1}, {1, 3, 1}, {1, 4, 1}})));
}

TEST_CASE("oracle degenerate ideals") {
  CHECK(betti_oracle(MonomialIdeal::zero(kxyz())).entries.empty());
  BettiTable u = betti_oracle(MonomialIdeal::unit(kxyz()));
  CHECK(u.same_entries(table_of({{0, 0, 1}})));
}

TEST_CASE("oracle sees cap powers as generators") {
  RingSpec s({"x", "y"}, {Cap::bounded(2), Cap::bounded(2)});
  BettiTable t = betti_oracle(MonomialIdeal::zero(s));
  // (x^2, y^2) is a complete intersection.
  CHECK(t.same_entries(table_of({{0, 2, 2}, {1, 4, 1}})));
}

TEST_CASE("oracle multigraded refinement sums to the coarse table") {
  MonomialIdeal j(kxyz(), {m({2, 0, 0}), m({1, 1, 0}), m({0, 1, 1})});
  BettiTable t = betti_oracle(j);
  REQUIRE(t.fine.has_value());
  BettiTable coarse;
  for (const auto& [key, v] : *t.fine) {
    int deg = 0;
    for (int e : key.second) deg += e;
    coarse.add(key.first, deg, v);
  }
  CHECK(coarse.same_entries(t));
}

TEST_CASE("generator limit guards the lattice enumeration") {
  MonomialIdeal j(kxyz(), {m({1, 0, 0}), m({0, 1, 0}), m({0, 0, 1})});
  CHECK_THROWS_AS(betti_oracle(j, 0, 2), Error);
}

TEST_CASE("closed form matches the oracle on strongly stable ideals") {
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  MonomialIdeal j(kxy, {m({2, 0}), m({1, 1}), m({0, 2})});
  BettiTable ek = betti_ek(j);
  CHECK(ek.same_entries(table_of({{0, 2, 3}, {1, 3, 2}})));
  CHECK(ek.same_entries(betti_oracle(j)));

  RingSpec k3({"x1", "x2", "x3"},
              {Cap::unbounded(), Cap::unbounded(), Cap::unbounded()});
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    MonomialIdeal r = random_ideal(IdealKind::StronglyStable, k3, seed, GenBounds{9, 4});
    CHECK(betti_ek(r).same_entries(betti_oracle(r, 0, 32)));
  }
}

TEST_CASE("closed form rejects out-of-scope input") {
  RingSpec capped({"x", "y"}, {Cap::bounded(2), Cap::bounded(2)});
  CHECK_THROWS_AS(betti_ek(MonomialIdeal(capped, {m({1, 1})})), Error);
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  CHECK_THROWS_AS(betti_ek(MonomialIdeal(kxy, {m({0, 1})})), Error);
  CHECK(betti_ek(MonomialIdeal::unit(kxy)).same_entries(table_of({{0, 0, 1}})));
}

TEST_CASE("scaled Koszul table expands each count against the variables") {
  BettiTable t = scaled_koszul_table(HilbertSeries{{0, 0, 1}}, 2);
  CHECK(t.same_entries(table_of({{0, 2, 1}, {1, 3, 2}, {2, 4, 1}})));
  CHECK(scaled_koszul_table(HilbertSeries{{0}}, 3).entries.empty());
  CHECK_THROWS_AS(scaled_koszul_table(HilbertSeries{{-1}}, 2), Error);
}

TEST_CASE("layered formula agrees with the oracle") {
  RingSpec s({"x", "z"}, {Cap::unbounded(), Cap::bounded(2)});
  MonomialIdeal j(s, {m({2, 0}), m({1, 1})});
  REQUIRE(is_z_stable(j));
  BettiTable layered = betti_layered(j);
  CHECK(layered.same_entries(table_of({{0, 2, 3}, {1, 3, 2}})));
  CHECK(layered.same_entries(betti_oracle(j)));
}

TEST_CASE("mapping cone agrees with the oracle and logs its steps") {
  RingSpec kxz({"x", "z"}, {Cap::unbounded(), Cap::unbounded()});
  MonomialIdeal j(kxz, {m({2, 0}), m({1, 1}), m({0, 3})});
  REQUIRE(is_z_stable(j));
  ConeResult res = betti_cone(j);
  CHECK(res.table.same_entries(table_of({{0, 2, 2}, {0, 3, 1}, {1, 3, 1}, {1, 4, 1}})));
  CHECK(res.table.same_entries(betti_oracle(j)));
  REQUIRE(res.steps.size() == 2);
  CHECK(res.steps[0].generator == m({0, 3}));
  CHECK(res.steps[0].shift == 3);
  CHECK(res.steps[0].colon_ok);
  CHECK(res.steps[1].generator == m({1, 1}));
}

TEST_CASE("layered and cone require z-stability") {
  MonomialIdeal bad(kxyz(), {m({0, 1, 0}), m({1, 0, 2})});
  CHECK_THROWS_AS(betti_layered(bad), Error);
  CHECK_THROWS_AS(betti_cone(bad), Error);
}

TEST_CASE("one-layer quotient ring edge") {
  RingSpec s({"x", "z"}, {Cap::unbounded(), Cap::bounded(1)});
  MonomialIdeal j = MonomialIdeal::zero(s);
  BettiTable expect = table_of({{0, 1, 1}});
  CHECK(betti_layered(j).same_entries(expect));
  CHECK(betti_cone(j).table.same_entries(expect));
  CHECK(betti_oracle(j).same_entries(expect));
}

TEST_CASE("all methods agree on seeded z-stable ideals") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    RingSpec ring = random_layered_ring(seed, 3);
    MonomialIdeal j = random_ideal(IdealKind::ZStable, ring, seed, GenBounds{10, 4});
    BettiTable oracle = betti_oracle(j, 0, 32);
    CHECK(betti_layered(j, 32).same_entries(oracle));
    CHECK(betti_cone(j, 32).table.same_entries(oracle));
  }
}

TEST_CASE("adding a free last variable keeps the table") {
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  MonomialIdeal a(kxy, {m({2, 0}), m({1, 1})});
  MonomialIdeal extended(kxyz(), {m({2, 0, 0}), m({1, 1, 0})});
  CHECK(betti_oracle(a).same_entries(betti_oracle(extended)));
  CHECK(betti_oracle(extended).same_entries(betti_cone(extended).table));
}

TEST_CASE("characteristic changes only enlarge the table") {
  // Stanley-Reisner ideal of the six-vertex projective plane.
  RingSpec r6({"x1", "x2", "x3", "x4", "x5", "x6"},
              {Cap::unbounded(), Cap::unbounded(), Cap::unbounded(), Cap::unbounded(),
               Cap::unbounded(), Cap::unbounded()});
  std::vector<std::vector<int>> facets = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                          {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                          {2, 4, 5}, {3, 4, 5}};
  std::vector<char> is_facet_member(1 << 6, 0);
  for (const auto& f : facets) {
    int mask = 0;
    for (int v : f) mask |= 1 << v;
    for (int s = mask;; s = (s - 1) & mask) {
      is_facet_member[static_cast<size_t>(s)] = 1;
      if (s == 0) break;
    }
  }
  std::vector<Monomial> nonfaces;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        int mask = (1 << a) | (1 << b) | (1 << c);
        if (!is_facet_member[static_cast<size_t>(mask)]) {
          std::vector<int> e(6, 0);
          e[static_cast<size_t>(a)] = e[static_cast<size_t>(b)] = e[static_cast<size_t>(c)] = 1;
          nonfaces.emplace_back(std::move(e));
        }
      }
  REQUIRE(nonfaces.size() == 10);
  MonomialIdeal sr(r6, nonfaces);
  BettiTable t0 = betti_oracle(sr, 0);
  BettiTable t2 = betti_oracle(sr, 2);
  TableComparison cmp = table_compare(t0, t2);
  CHECK((cmp.order == TableOrder::LessEq));
  CHECK(t2.at(3, 6) == t0.at(3, 6) + 1);
  CHECK_FALSE(t0.same_entries(t2));
  BettiTable t5 = betti_oracle(sr, 5);
  CHECK(t0.same_entries(t5));
}

TEST_CASE("structural checks accept computed tables and reject corrupted ones") {
  MonomialIdeal j(kxyz(), {m({2, 0, 0}), m({1, 1, 0}), m({0, 1, 1})});
  BettiTable t = betti_oracle(j);
  CHECK(kpolynomial_check(t, j));
  CHECK(generator_row_check(t, j));
  CHECK(kpolynomial_check(to_quotient(t), j));

  BettiTable corrupted = t;
  corrupted.add(1, 3, 1);
  CHECK_FALSE(kpolynomial_check(corrupted, j));
  BettiTable wrong_row = t;
  wrong_row.add(0, 5, 1);
  CHECK_FALSE(generator_row_check(wrong_row, j));
}

TEST_CASE("oracle rejects invalid characteristics") {
  MonomialIdeal j(kxyz(), {m({1, 0, 0})});
  CHECK_THROWS_AS(betti_oracle(j, 6), Error);
  CHECK_THROWS_AS(betti_oracle(j, -3), Error);
}
