#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bettilab/ideal.hpp"

namespace bettilab {

// Truncated Hilbert series: coeffs[d] for d = 0..certified_degree(), exact
// on that range and unknown beyond it.
struct HilbertSeries {
  std::vector<long long> coeffs;

  int certified_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long at(int d) const {
    return (d >= 0 && d <= certified_degree()) ? coeffs[static_cast<size_t>(d)] : 0;
  }

  bool operator==(const HilbertSeries& o) const { return coeffs == o.coeffs; }
};

HilbertSeries series_zero(int certified);
// Truncation to min certified degree happens in all binary ops.
HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b);
// Multiply by the degree-k shift.
HilbertSeries series_shift(const HilbertSeries& a, int k);
// Partial sums: result[d] = sum_{e<=d} a[e].
HilbertSeries series_cumsum(const HilbertSeries& a);
HilbertSeries series_truncate(const HilbertSeries& a, int certified);

enum class SeriesOrder { Equal, LessEq, GreaterEq, Incomparable };

struct SeriesComparison {
  SeriesOrder order;
  int certified;                 // common certified range the verdict covers
  std::optional<int> first_above;  // least degree with a > b
  std::optional<int> first_below;  // least degree with a < b
};

// Coefficientwise comparison over the common certified range. Equal wins
// over the one-sided verdicts; Incomparable carries the first difference.
SeriesComparison compare_series(const HilbertSeries& a, const HilbertSeries& b);

// Standard monomials of one degree: strictly below every cap, outside the
// modulus ideal when given, lex-descending.
std::vector<Monomial> standard_monomials(const RingSpec& ring, int degree,
                                         const MonomialIdeal* modulus = nullptr);

// Default certified degree: the Artinian top when every cap is finite, else
// max generator degree + var count + a small persistence window.
int default_truncation(const MonomialIdeal& j);

// Counts standard monomials inside J (resp. outside J) per degree 0..truncate.
// A negative truncate means default_truncation(j).
HilbertSeries hilbert_ideal(const MonomialIdeal& j, int truncate = -1);
HilbertSeries hilbert_quotient(const MonomialIdeal& j, int truncate = -1);

// Same, with membership additionally restricted to monomials outside the
// modulus ideal q (the quotient-by-q view used by piecewise-lex mode).
HilbertSeries hilbert_ideal_mod(const MonomialIdeal& j, const MonomialIdeal& q, int truncate);
HilbertSeries hilbert_quotient_mod(const MonomialIdeal& j, const MonomialIdeal& q, int truncate);

std::string format_series(const HilbertSeries& h);

}  // namespace bettilab
