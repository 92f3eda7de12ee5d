#include "bettilab/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace bettilab {

HilbertSeries series_zero(int certified) {
  if (certified < 0) fail(Errc::MalformedInput, "certified degree must be >= 0");
  return HilbertSeries{std::vector<long long>(static_cast<size_t>(certified) + 1, 0)};
}

HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b) {
  int d = std::min(a.certified_degree(), b.certified_degree());
  HilbertSeries r = series_zero(d);
  for (int i = 0; i <= d; ++i) r.coeffs[static_cast<size_t>(i)] = a.at(i) + b.at(i);
  return r;
}

HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b) {
  int d = std::min(a.certified_degree(), b.certified_degree());
  HilbertSeries r = series_zero(d);
  for (int i = 0; i <= d; ++i) r.coeffs[static_cast<size_t>(i)] = a.at(i) - b.at(i);
  return r;
}

HilbertSeries series_shift(const HilbertSeries& a, int k) {
  if (k < 0) fail(Errc::MalformedInput, "shift must be >= 0");
  HilbertSeries r = series_zero(a.certified_degree() + k);
  for (int i = 0; i <= a.certified_degree(); ++i) r.coeffs[static_cast<size_t>(i + k)] = a.at(i);
  return r;
}

HilbertSeries series_cumsum(const HilbertSeries& a) {
  HilbertSeries r = a;
  for (size_t i = 1; i < r.coeffs.size(); ++i) r.coeffs[i] += r.coeffs[i - 1];
  return r;
}

HilbertSeries series_truncate(const HilbertSeries& a, int certified) {
  if (certified > a.certified_degree())
    fail(Errc::MalformedInput, "cannot certify beyond the known range");
  HilbertSeries r = a;
  r.coeffs.resize(static_cast<size_t>(certified) + 1);
  return r;
}

SeriesComparison compare_series(const HilbertSeries& a, const HilbertSeries& b) {
  int d = std::min(a.certified_degree(), b.certified_degree());
  std::optional<int> above, below;
  for (int i = 0; i <= d; ++i) {
    long long x = a.at(i), y = b.at(i);
    if (x > y && !above) above = i;
    if (x < y && !below) below = i;
  }
  SeriesOrder order = below ? (above ? SeriesOrder::Incomparable : SeriesOrder::LessEq)
                            : (above ? SeriesOrder::GreaterEq : SeriesOrder::Equal);
  return SeriesComparison{order, d, above, below};
}

namespace {

// Depth-first generation, first variable's exponent chosen largest first so
// the output comes out lex-descending.
void generate(const RingSpec& ring, int pos, int remaining, std::vector<int>& exps,
              const MonomialIdeal* modulus, std::vector<Monomial>& out) {
  int n = ring.var_count();
  if (pos == n - 1) {
    Cap c = ring.cap(pos);
    if (c.finite() && remaining >= c.value()) return;
    exps[static_cast<size_t>(pos)] = remaining;
    Monomial m(exps);
    if (!modulus || !modulus->contains(m)) out.push_back(std::move(m));
    exps[static_cast<size_t>(pos)] = 0;
    return;
  }
  Cap c = ring.cap(pos);
  int hi = c.finite() ? std::min(c.value() - 1, remaining) : remaining;
  for (int e = hi; e >= 0; --e) {
    exps[static_cast<size_t>(pos)] = e;
    generate(ring, pos + 1, remaining - e, exps, modulus, out);
  }
  exps[static_cast<size_t>(pos)] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const RingSpec& ring, int degree,
                                         const MonomialIdeal* modulus) {
  if (degree < 0) fail(Errc::MalformedInput, "degree must be >= 0");
  if (modulus && modulus->ring() != ring) fail(Errc::MalformedInput, "modulus ring mismatch");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<size_t>(ring.var_count()), 0);
  generate(ring, 0, degree, exps, modulus, out);
  return out;
}

int default_truncation(const MonomialIdeal& j) {
  const RingSpec& ring = j.ring();
  if (ring.artinian()) return ring.artinian_top_degree();
  return j.max_gen_degree() + ring.var_count() + 4;
}

namespace {

HilbertSeries count_members(const MonomialIdeal& j, const MonomialIdeal* q, int truncate,
                            bool inside) {
  if (truncate < 0) truncate = default_truncation(j);
  HilbertSeries h = series_zero(truncate);
  for (int d = 0; d <= truncate; ++d) {
    long long c = 0;
    for (const Monomial& m : standard_monomials(j.ring(), d, q))
      if (j.contains(m) == inside) ++c;
    h.coeffs[static_cast<size_t>(d)] = c;
  }
  return h;
}

}  // namespace

HilbertSeries hilbert_ideal(const MonomialIdeal& j, int truncate) {
  return count_members(j, nullptr, truncate, true);
}

HilbertSeries hilbert_quotient(const MonomialIdeal& j, int truncate) {
  return count_members(j, nullptr, truncate, false);
}

HilbertSeries hilbert_ideal_mod(const MonomialIdeal& j, const MonomialIdeal& q, int truncate) {
  return count_members(j, &q, truncate, true);
}

HilbertSeries hilbert_quotient_mod(const MonomialIdeal& j, const MonomialIdeal& q, int truncate) {
  return count_members(j, &q, truncate, false);
}

std::string format_series(const HilbertSeries& h) {
  std::ostringstream out;
  out << '(';
  for (int d = 0; d <= h.certified_degree(); ++d) {
    if (d) out << ", ";
    out << h.at(d);
  }
  out << ')';
  return out.str();
}

}  // namespace bettilab
