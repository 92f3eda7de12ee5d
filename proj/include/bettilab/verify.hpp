#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bettilab/betti.hpp"
#include "bettilab/ideal.hpp"

namespace bettilab {

enum class Verdict { Holds, Fails, Inapplicable };

const char* verdict_name(Verdict v);

// Outcome of one checked claim on one instance. `witness` is empty unless
// the verdict is Fails, in which case it pins down the smallest exhibited
// discrepancy. Timing is informational and excluded from canonical output.
struct VerificationReport {
  std::string claim;
  std::string instance;
  Verdict verdict = Verdict::Holds;
  std::string witness;
  std::vector<std::string> notes;
  double millis = 0.0;
};

// One consecutive cancellation: at column j, n copies cancel between rows
// i and i+1.
struct Cancellation {
  int i = 0;
  int j = 0;
  long long count = 0;
};

struct CancellationCertificate {
  std::vector<Cancellation> cancellations;
};

struct CancellationResult {
  bool found = false;
  CancellationCertificate certificate;
  // When not found: the (i, j) where the forced count went negative.
  std::optional<std::pair<int, int>> obstruction;
};

// Decides whether `to` = `from` + sum of consecutive cancellations, i.e.
// to - from = sum over steps of n*(e_{i,j} + e_{i+1,j}). The certificate is
// unique when it exists and reconstructs `to` exactly from `from`.
CancellationResult cancellation_certificate(const BettiTable& from, const BettiTable& to);

// Betti-table dominance of the lex embedding over a z-stable ideal:
// beta(B/J) <= beta(B/embed(J)) entrywise, with a cancellation certificate
// recorded in the notes. Throws NotZStable.
VerificationReport check_theorem31(const MonomialIdeal& j, int gen_limit = 16);

// beta(B/I) <= beta(B/embed(I)) entrywise for any monomial ideal of an
// embeddable ring (no z-stability needed).
VerificationReport check_lex_dominance(const MonomialIdeal& i, int gen_limit = 16);

// For ideals generated by strongly stable monomials plus the cap powers:
// the Betti table is the same over Q and over every F_p given. Reports
// Inapplicable when the hypothesis fails.
VerificationReport check_char_independence(const MonomialIdeal& i, const std::vector<long>& primes,
                                           int gen_limit = 16);

// restriction_series(J, i) >= restriction_series(embed(J), i) for every i
// up to the z-cap (or layer stabilization + 1 when unbounded). Throws
// NotZStable.
VerificationReport check_restriction(const MonomialIdeal& j);

// The characteristic-p failure of the embedding inequality: in
// k[x,y]/(x^p, y^p)[z], the ideal (z^p) and its Hilbert-matching lex ideal
// L satisfy x^{p-1}*y in L, and beta(B/(z^p)) (computed through the
// hypersurface-section isomorphism) is dominated by and differs from
// beta(B/L). Also records that (z^p) is not z-stable, so the dominance
// theorem does not apply to it.
VerificationReport counterexample_charp(long p);

// Whether some strongly stable ideal of the uncapped ring restricts to i
// modulo the cap powers; the hypothesis behind the char-independence check.
bool strongly_stable_plus_powers(const MonomialIdeal& i);

// Piecewise-lex dominance: given lex pieces generating Q and an ideal I,
// beta(A/(I+Q)) <= beta(A/(L+Q)) where L realizes the Hilbert function of
// the quotient by I+Q among standard monomials outside Q. Empty pieces
// defer to check_lex_dominance.
VerificationReport check_shakin(const std::vector<MonomialIdeal>& pieces, const MonomialIdeal& i,
                                int gen_limit = 16);

// Deterministic pseudo-random stream with stdlib-independent range mapping.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  uint64_t next();
  // Uniform-ish integer in [lo, hi], inclusive. Requires lo <= hi.
  int range(int lo, int hi);
  // Pick one element index of a non-empty container size.
  int pick(size_t size) { return range(0, static_cast<int>(size) - 1); }

 private:
  uint64_t state_;
};

enum class IdealKind { Plain, StronglyStable, ZStable };

struct GenBounds {
  int max_gens = 8;
  int max_degree = 5;
};

// Seed-deterministic random ideal of the requested kind. StronglyStable
// closes random seeds under swaps (uncapped rings only); ZStable builds an
// increasing layer chain bottom-up so the result is z-stable by
// construction (asserted).
MonomialIdeal random_ideal(IdealKind kind, const RingSpec& ring, uint64_t seed, GenBounds bounds);

// Ring with ascending caps drawn from {2, 3, unbounded} over at most
// max_a_vars named variables plus a final z whose cap respects the
// ascending constraint.
RingSpec random_layered_ring(uint64_t seed, int max_a_vars);

// Greedily removes stored generators while pred stays true; used to shrink
// failing instances before reporting.
MonomialIdeal shrink_ideal(const MonomialIdeal& j,
                           const std::function<bool(const MonomialIdeal&)>& pred);

}  // namespace bettilab
