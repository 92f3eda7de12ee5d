#pragma once

#include <optional>

#include "bettilab/hilbert.hpp"
#include "bettilab/ideal.hpp"

namespace bettilab {

// Ring classes for which degreewise lex segments are known to produce
// ideals: all caps unbounded, caps ascending, or an explicit monomial
// modulus validated piecewise. Construction always re-verifies at runtime.
enum class EmbeddingKind { Macaulay, ClementsLindstrom, PiecewiseLex };

// Classifies the ring, ignoring any modulus. Throws NotMacaulayLex when the
// caps are not ascending.
EmbeddingKind embedding_kind(const RingSpec& ring);

// The lex-greatest `count` standard monomials of the given degree (outside
// the modulus when given). Throws NotEnoughMonomials when fewer exist.
std::vector<Monomial> lex_segment(const RingSpec& ring, int degree, long long count,
                                  const MonomialIdeal* modulus = nullptr);

// Degreewise lex-segment ideal with the prescribed ideal Hilbert function,
// built over d = 0..h.certified_degree(). Every segment is checked to span
// the next one's lower bound (NotMacaulayLex on failure) and the result's
// series is re-verified against h (NotAchievable on failure).
MonomialIdeal lex_ideal_from_series(const RingSpec& ring, const HilbertSeries& h,
                                    const MonomialIdeal* modulus = nullptr);

// True when the standard monomials of i form degreewise lex segments up to
// the given degree (default: max generator degree + 2).
bool is_lex_segment_ideal(const MonomialIdeal& i, int up_to = -1,
                          const MonomialIdeal* modulus = nullptr);

// The lex-segment ideal with the same Hilbert function as j. Requires a
// Macaulay or Clements-Lindstrom ring; enlarges the working truncation until
// the constructed ideal's generators sit safely inside it, and verifies
// Hilbert-function preservation.
MonomialIdeal embed(const MonomialIdeal& j);

// Applies embed to every z-layer and reassembles sum_i L_i * z^i. Requires
// is_z_stable(j); the result is again z-stable with the same layer sizes.
MonomialIdeal layerwise_embed(const MonomialIdeal& j);

// Ideal series of J + (z^i); i = 0 gives the unit ideal's series, i.e. the
// full standard-monomial count. Requires 0 <= i < z-cap.
HilbertSeries restriction_series(const MonomialIdeal& j, int i, int truncate = -1);

}  // namespace bettilab
