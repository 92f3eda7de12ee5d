#include <doctest.h>

#include <vector>

#include "bettilab/hilbert.hpp"

using namespace bettilab;

namespace {

RingSpec kxyz() {
  return RingSpec({"x", "y", "z"},
                  {Cap::unbounded(), Cap::unbounded(), Cap::unbounded()});
}

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

HilbertSeries series(std::vector<long long> c) { return HilbertSeries{std::move(c)}; }

}  // namespace

TEST_CASE("series arithmetic") {
  HilbertSeries a = series({1, 2, 3});
  HilbertSeries b = series({0, 1, 1, 9});
  CHECK(series_add(a, b) == series({1, 3, 4}));
  CHECK(series_sub(a, b) == series({1, 1, 2}));
  CHECK(series_shift(a, 2) == series({0, 0, 1, 2, 3}));
  CHECK(series_cumsum(a) == series({1, 3, 6}));
  CHECK(series_truncate(b, 1) == series({0, 1}));
  CHECK_THROWS_AS(series_truncate(a, 5), Error);
  CHECK(a.at(7) == 0);
  CHECK(a.certified_degree() == 2);
}

TEST_CASE("series comparison with directional witnesses") {
  SeriesComparison eq = compare_series(series({1, 2, 3}), series({1, 2, 3, 4}));
  CHECK(eq.order == SeriesOrder::Equal);
  CHECK(eq.certified == 2);

  SeriesComparison le = compare_series(series({1, 2, 3}), series({1, 4, 3}));
  CHECK(le.order == SeriesOrder::LessEq);
  CHECK(le.first_below == 1);
  CHECK_FALSE(le.first_above.has_value());

  SeriesComparison ge = compare_series(series({1, 2, 3}), series({1, 2, 0}));
  CHECK(ge.order == SeriesOrder::GreaterEq);
  CHECK(ge.first_above == 2);

  SeriesComparison inc = compare_series(series({0, 2, 3}), series({1, 2, 0}));
  CHECK(inc.order == SeriesOrder::Incomparable);
  CHECK(inc.first_below == 0);
  CHECK(inc.first_above == 2);
}

TEST_CASE("standard monomials are lex descending and cap filtered") {
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  CHECK(standard_monomials(kxy, 2) ==
        std::vector<Monomial>{m({2, 0}), m({1, 1}), m({0, 2})});

  RingSpec capped({"x", "y", "z"}, {Cap::bounded(2), Cap::bounded(2), Cap::unbounded()});
  CHECK(standard_monomials(capped, 2) ==
        std::vector<Monomial>{m({1, 1, 0}), m({1, 0, 1}), m({0, 1, 1}), m({0, 0, 2})});

  MonomialIdeal mod(kxy, {m({1, 0})});
  CHECK(standard_monomials(kxy, 2, &mod) == std::vector<Monomial>{m({0, 2})});
}

TEST_CASE("quotient counts of free rings are binomials") {
  HilbertSeries h = hilbert_quotient(MonomialIdeal::zero(kxyz()), 6);
  CHECK(h == series({1, 3, 6, 10, 15, 21, 28}));
}

TEST_CASE("artinian rings count down symmetrically") {
  RingSpec s({"x", "y", "z"}, {Cap::bounded(2), Cap::bounded(2), Cap::bounded(2)});
  CHECK(default_truncation(MonomialIdeal::zero(s)) == 3);
  CHECK(hilbert_quotient(MonomialIdeal::zero(s)) == series({1, 3, 3, 1}));
}

TEST_CASE("ideal plus quotient counts everything") {
  MonomialIdeal j(kxyz(), {m({2, 0, 0}), m({1, 1, 0}), m({0, 0, 3})});
  HilbertSeries all = hilbert_quotient(MonomialIdeal::zero(kxyz()), 8);
  HilbertSeries sum = series_add(hilbert_ideal(j, 8), hilbert_quotient(j, 8));
  CHECK(sum == all);
}

TEST_CASE("principal ideal series") {
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  MonomialIdeal j(kxy, {m({1, 0})});
  CHECK(hilbert_ideal(j, 5) == series({0, 1, 2, 3, 4, 5}));
  CHECK(hilbert_quotient(j, 5) == series({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("unit and zero edge cases") {
  CHECK(hilbert_ideal(MonomialIdeal::unit(kxyz()), 3) == series({1, 3, 6, 10}));
  CHECK(hilbert_quotient(MonomialIdeal::unit(kxyz()), 3) == series({0, 0, 0, 0}));
  CHECK(hilbert_ideal(MonomialIdeal::zero(kxyz()), 3) == series({0, 0, 0, 0}));
}

TEST_CASE("modded counts drop the modulus ideal from the ambient") {
  RingSpec kxy({"x", "y"}, {Cap::unbounded(), Cap::unbounded()});
  MonomialIdeal q(kxy, {m({1, 0})});
  HilbertSeries h = hilbert_quotient_mod(MonomialIdeal::zero(kxy), q, 4);
  CHECK(h == series({1, 1, 1, 1, 1}));
  MonomialIdeal j(kxy, {m({0, 2})});
  CHECK(hilbert_ideal_mod(j, q, 4) == series({0, 0, 1, 1, 1}));
}

TEST_CASE("ideal series decomposes over z-layers") {
  MonomialIdeal j(kxyz(), {m({1, 0, 0}), m({0, 2, 0}), m({0, 1, 1})});
  int top = 8;
  HilbertSeries direct = hilbert_ideal(j, top);
  int stab = layer_stabilization(j);
  HilbertSeries assembled = series_zero(top);
  for (int i = 0; i <= top; ++i) {
    MonomialIdeal li = layer(j, std::min(i, stab));
    HilbertSeries hi = hilbert_ideal(li, top - i);
    for (int d = i; d <= top; ++d)
      assembled.coeffs[static_cast<size_t>(d)] += hi.at(d - i);
  }
  CHECK(assembled == direct);
}

TEST_CASE("series formatting") {
  CHECK(format_series(series({0, 1, 3})) == "(0, 1, 3)");
}
