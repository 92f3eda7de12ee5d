#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bettilab/hilbert.hpp"
#include "bettilab/ideal.hpp"

namespace bettilab {

// Whether entries are indexed as beta_{i,j}(J) or beta_{i,j}(B/J). The two
// differ by the homological shift beta_{i,j}(B/J) = beta_{i-1,j}(J) plus the
// (0,0) unit entry.
enum class TableMode { OfIdeal, OfQuotient };

// Graded Betti table over the polynomial ambient: entries (i, j) -> positive
// multiplicity, zeros never stored. Characteristic records the field the
// numbers were computed over (0 = rationals).
struct BettiTable {
  TableMode mode = TableMode::OfIdeal;
  long characteristic = 0;
  std::map<std::pair<int, int>, long long> entries;
  // Multigraded refinement (i, exponent vector) -> multiplicity, populated
  // by the simplicial oracle only.
  std::optional<std::map<std::pair<int, std::vector<int>>, long long>> fine;

  void add(int i, int j, long long mult);
  long long at(int i, int j) const;
  int max_i() const;  // -1 when empty
  int max_j() const;  // -1 when empty
  long long total() const;

  bool same_entries(const BettiTable& o) const { return entries == o.entries; }
};

// Entrywise sum (modes must match; fine parts are dropped).
BettiTable table_add(const BettiTable& a, const BettiTable& b);
// Shift every (i, j) to (i, j + k).
BettiTable table_shift_degree(const BettiTable& a, int k);
// Mode conversions via the homological shift law.
BettiTable to_quotient(const BettiTable& ideal_table);
BettiTable to_ideal(const BettiTable& quotient_table);

enum class TableOrder { Equal, LessEq, GreaterEq, Incomparable };

struct TableComparison {
  TableOrder order;
  std::optional<std::pair<int, int>> first_above;  // least (i, j) with a > b
  std::optional<std::pair<int, int>> first_below;  // least (i, j) with a < b
};

// Entrywise comparison. Throws ModeMismatch when modes differ; differing
// characteristics are allowed (that comparison is the point of the
// semicontinuity checks).
TableComparison table_compare(const BettiTable& a, const BettiTable& b);

// beta_{i, b} via reduced simplicial homology of the upper Koszul complexes
// at the lcm-lattice multidegrees. Exact over Q (characteristic 0) or F_p.
// Refuses ideals with more than gen_limit minimal generators (cap powers
// included) rather than start an infeasible computation.
BettiTable betti_oracle(const MonomialIdeal& j, long characteristic = 0, int gen_limit = 16);

// Closed-form table for strongly stable ideals in an uncapped ring:
// beta_{i, deg(u)+i} += C(max_var(u) - 1, i) over minimal generators u.
// Errors: CapsPresent (any finite cap), NotStronglyStable.
BettiTable betti_ek(const MonomialIdeal& i);

// Table of a direct sum of shifted copies of the base field viewed as a
// module over an n-variable polynomial ring: h[d] copies of k(-d) give
// entries (i, d+i) -> h[d] * C(n, i).
BettiTable scaled_koszul_table(const HilbertSeries& h, int n);

// Layer-by-layer formula for z-stable ideals: the z-degree-0 part's table,
// plus the Koszul tables of the middle layer quotients, plus (finite z-cap
// t) the top quotient's table shifted by t. Agrees with betti_oracle.
BettiTable betti_layered(const MonomialIdeal& j, int gen_limit = 16);

struct ConeStep {
  Monomial generator;  // peeled generator, in the uncapped z-last ring
  int shift;           // total degree of the peeled generator
  bool colon_ok;       // the colon of the remainder by it was the full a-variable ideal
};

struct ConeResult {
  BettiTable table;
  std::vector<ConeStep> steps;
};

// Iterated-mapping-cone computation for z-stable ideals: peel generators of
// positive z-degree (ascending z-degree, ties lex-descending, topmost
// first), each contributing one Koszul block after its colon condition is
// verified, down to the z-degree-0 base. Agrees with betti_oracle.
ConeResult betti_cone(const MonomialIdeal& j, int gen_limit = 16);

// Structural validations used by tests and the verification suite.
// Alternating column sums against the quotient series times (1-z)^m.
bool kpolynomial_check(const BettiTable& t, const MonomialIdeal& j);
// Row 0 of the ideal-mode table equals the generator-degree histogram.
bool generator_row_check(const BettiTable& t, const MonomialIdeal& j);

}  // namespace bettilab
