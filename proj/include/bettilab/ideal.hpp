#pragma once

#include <vector>

#include "bettilab/ring.hpp"

namespace bettilab {

// Monomial ideal in a capped ring, identified with its preimage in the
// polynomial ring over the same variables: the cap powers v^cap are always
// members, and the stored generating set holds only the minimal generators
// beyond those cap powers, each strictly below every cap, kept minimal and
// sorted lex-descending.
class MonomialIdeal {
 public:
  // Minimalizes gens against each other and against the cap powers.
  MonomialIdeal(RingSpec ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingSpec ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingSpec ring);

  const RingSpec& ring() const { return ring_; }
  // Minimal generators beyond the cap powers, lex-descending.
  const std::vector<Monomial>& gens() const { return gens_; }

  // Minimal generators of the preimage ideal: stored generators plus the
  // surviving cap powers, lex-descending.
  std::vector<Monomial> ambient_gens() const;

  // Membership: divisible by a stored generator or by some cap power.
  bool contains(const Monomial& m) const;

  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  // No generators beyond the cap powers.
  bool is_zero() const { return gens_.empty(); }

  int max_gen_degree() const;  // over stored gens; 0 when none

  bool operator==(const MonomialIdeal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  RingSpec ring_;
  std::vector<Monomial> gens_;
};

// Sum of ideals over the same ring.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// The same generators viewed in the uncapped ring (cap powers of the source
// ring become explicit generators).
MonomialIdeal preimage_ideal(const MonomialIdeal& j);

// (J : v^k) for variable index v. k >= cap(v) yields the unit ideal.
MonomialIdeal colon_power(const MonomialIdeal& j, int var, int k);

// z-layer i of a z-last ideal: the a-ring ideal (J : z^i) ∩ A, i.e. all
// a-monomials u with u*z^i in J. Requires 0 <= i < z-cap.
MonomialIdeal layer(const MonomialIdeal& j, int i);

// Largest z-exponent among stored generators: layers are constant at and
// beyond this index (within [0, z-cap)).
int layer_stabilization(const MonomialIdeal& j);

// layer(j, layer_stabilization(j)).
MonomialIdeal top_layer(const MonomialIdeal& j);

// Layers are increasing automatically; z-stability additionally asks
// m_A * layer(i) ⊆ layer(i-1) for all i >= 1.
bool is_z_stable(const MonomialIdeal& j);

// For every stored generator m with x_j | m and i < j, the swap x_i*m/x_j
// is again a member. Generator-level checking suffices (see tests).
bool is_strongly_stable(const MonomialIdeal& i);

// Smallest ideal containing i that is closed under the swaps above.
MonomialIdeal borel_closure(const MonomialIdeal& i);

}  // namespace bettilab
