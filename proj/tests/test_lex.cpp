#include <doctest.h>

#include <vector>

#include "bettilab/lex.hpp"

using namespace bettilab;

namespace {

RingSpec kxyz() {
  return RingSpec({"x", "y", "z"},
                  {Cap::unbounded(), Cap::unbounded(), Cap::unbounded()});
}

RingSpec cl_ring() {
  // k[x,y]/(x^2,y^2) with a free z on top.
  return RingSpec({"x", "y", "z"}, {Cap::bounded(2), Cap::bounded(2), Cap::unbounded()});
}

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

HilbertSeries series(std::vector<long long> c) { return HilbertSeries{std::move(c)}; }

}  // namespace

TEST_CASE("ring classification for lex constructions") {
  CHECK(embedding_kind(kxyz()) == EmbeddingKind::Macaulay);
  CHECK(embedding_kind(cl_ring()) == EmbeddingKind::ClementsLindstrom);
  RingSpec bad({"x", "y"}, {Cap::bounded(3), Cap::bounded(2)});
  CHECK_THROWS_AS(embedding_kind(bad), Error);
}

TEST_CASE("lex segments take the lex-greatest standard monomials") {
  CHECK(lex_segment(kxyz(), 2, 2) == std::vector<Monomial>{m({2, 0, 0}), m({1, 1, 0})});
  CHECK(lex_segment(cl_ring(), 2, 2) == std::vector<Monomial>{m({1, 1, 0}), m({1, 0, 1})});
  CHECK(lex_segment(kxyz(), 3, 0).empty());
  CHECK_THROWS_AS(lex_segment(cl_ring(), 2, 5), Error);
}

TEST_CASE("lex ideal from a prescribed member count series") {
  // Same member counts as (xz, yz).
  MonomialIdeal built = lex_ideal_from_series(kxyz(), series({0, 0, 2, 5, 9}));
  CHECK(built.gens() == std::vector<Monomial>{m({2, 0, 0}), m({1, 1, 0})});
}

TEST_CASE("unachievable or non-lexifiable series are rejected") {
  // More members than monomials of the degree exist.
  CHECK_THROWS_AS(lex_ideal_from_series(kxyz(), series({0, 9})), Error);
  // Members vanish after appearing: no ideal does that.
  try {
    lex_ideal_from_series(kxyz(), series({0, 1, 0}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMacaulayLex);
  }
}

TEST_CASE("lex segment ideal recognition") {
  CHECK(is_lex_segment_ideal(MonomialIdeal(kxyz(), {m({2, 0, 0}), m({1, 1, 0})})));
  CHECK_FALSE(is_lex_segment_ideal(MonomialIdeal(kxyz(), {m({0, 2, 0})})));
  CHECK(is_lex_segment_ideal(MonomialIdeal::zero(kxyz())));
  CHECK(is_lex_segment_ideal(MonomialIdeal(cl_ring(), {m({1, 1, 0}), m({1, 0, 2})})));
}

TEST_CASE("embedding preserves the Hilbert function") {
  MonomialIdeal j(kxyz(), {m({1, 0, 1}), m({0, 1, 1})});
  MonomialIdeal l = embed(j);
  CHECK(l.gens() == std::vector<Monomial>{m({2, 0, 0}), m({1, 1, 0})});
  int top = 10;
  CHECK(hilbert_ideal(j, top) == hilbert_ideal(l, top));
}

TEST_CASE("embedding is idempotent on lex ideals") {
  // Generator degrees 2 and 5 with a long gap; the gap must not truncate
  // the construction.
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  MonomialIdeal sparse(kxy, {m({2, 0}), m({1, 4})});
  CHECK(is_lex_segment_ideal(sparse));
  CHECK(embed(sparse) == sparse);

  MonomialIdeal dense(kxyz(), {m({2, 0, 0}), m({1, 1, 0})});
  CHECK(embed(dense) == dense);
}

TEST_CASE("embedding a mixed ideal in three free variables") {
  MonomialIdeal j(kxyz(),
                  {m({2, 0, 0}), m({1, 1, 0}), m({0, 2, 0}), m({0, 1, 1}), m({1, 0, 2})});
  MonomialIdeal l = embed(j);
  CHECK(l.gens() == std::vector<Monomial>{m({2, 0, 0}), m({1, 1, 0}), m({1, 0, 1}),
                                          m({0, 2, 0}), m({0, 1, 2})});
  int top = 12;
  CHECK(hilbert_ideal(j, top) == hilbert_ideal(l, top));
}

TEST_CASE("embedding in the pure-power quotient") {
  MonomialIdeal j(cl_ring(), {m({0, 0, 2})});
  MonomialIdeal l = embed(j);
  CHECK(l.gens() == std::vector<Monomial>{m({1, 1, 0}), m({1, 0, 2}), m({0, 1, 2}),
                                          m({0, 0, 4})});
  int top = 12;
  CHECK(hilbert_ideal(j, top) == hilbert_ideal(l, top));
}

TEST_CASE("embedding needs ascending caps") {
  RingSpec bad({"x", "y", "z"}, {Cap::bounded(3), Cap::bounded(2), Cap::unbounded()});
  MonomialIdeal j(bad, {m({1, 1, 0})});
  CHECK_THROWS_AS(embed(j), Error);
}

TEST_CASE("layerwise embedding keeps z-stability") {
  MonomialIdeal j(kxyz(), {m({1, 0, 0}), m({0, 2, 0}), m({0, 1, 1})});
  REQUIRE(is_z_stable(j));
  MonomialIdeal l = layerwise_embed(j);
  CHECK(l == j);  // each layer is already lex

  MonomialIdeal notz(kxyz(), {m({0, 1, 0}), m({1, 0, 2})});
  CHECK_THROWS_AS(layerwise_embed(notz), Error);
}

TEST_CASE("restriction series counts members modulo a z power") {
  MonomialIdeal j(kxyz(), {m({1, 0, 0}), m({0, 2, 0}), m({0, 1, 1})});
  CHECK(series_truncate(restriction_series(j, 0), 4) == series({1, 3, 6, 10, 15}));
  CHECK(series_truncate(restriction_series(j, 1), 4) == series({0, 2, 6, 10, 15}));
  CHECK(series_truncate(restriction_series(j, 2), 4) == series({0, 1, 6, 10, 15}));

  RingSpec fin({"x", "y", "z"}, {Cap::bounded(2), Cap::bounded(2), Cap::bounded(2)});
  MonomialIdeal jf(fin, {m({1, 0, 1})});
  CHECK_NOTHROW(restriction_series(jf, 1));
  CHECK_THROWS_AS(restriction_series(jf, 2), Error);
  CHECK_THROWS_AS(restriction_series(jf, -1), Error);
}
