#include "bettilab/lex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bettilab {

EmbeddingKind embedding_kind(const RingSpec& ring) {
  if (ring.all_unbounded()) return EmbeddingKind::Macaulay;
  if (ring.caps_ascending()) return EmbeddingKind::ClementsLindstrom;
  fail(Errc::NotMacaulayLex, "caps are not sorted ascending; lex segments need not span here");
}

std::vector<Monomial> lex_segment(const RingSpec& ring, int degree, long long count,
                                  const MonomialIdeal* modulus) {
  if (count < 0) fail(Errc::MalformedInput, "segment size must be >= 0");
  std::vector<Monomial> all = standard_monomials(ring, degree, modulus);
  if (count > static_cast<long long>(all.size()))
    fail(Errc::NotEnoughMonomials, "degree " + std::to_string(degree) + " has only " +
                                       std::to_string(all.size()) + " standard monomials, " +
                                       std::to_string(count) + " requested");
  all.erase(all.begin() + static_cast<long long>(count), all.end());
  return all;
}

MonomialIdeal lex_ideal_from_series(const RingSpec& ring, const HilbertSeries& h,
                                    const MonomialIdeal* modulus) {
  if (modulus && modulus->ring() != ring) fail(Errc::MalformedInput, "modulus ring mismatch");
  int top = h.certified_degree();
  std::vector<Monomial> gens;
  std::vector<Monomial> prev;
  for (int d = 0; d <= top; ++d) {
    long long need = h.at(d);
    if (need < 0) fail(Errc::MalformedInput, "negative series coefficient at degree " + std::to_string(d));
    std::vector<Monomial> all = standard_monomials(ring, d, modulus);
    if (need > static_cast<long long>(all.size()))
      fail(Errc::NotAchievable, "series wants " + std::to_string(need) + " monomials at degree " +
                                    std::to_string(d) + ", only " + std::to_string(all.size()) +
                                    " exist");
    std::map<Monomial, size_t, decltype(&lex_greater)> rank(&lex_greater);
    for (size_t r = 0; r < all.size(); ++r) rank.emplace(all[r], r);
    // Every standard multiple of the previous segment must land inside this
    // degree's segment, otherwise no lex ideal hits these sizes.
    std::vector<bool> spanned(all.size(), false);
    for (const Monomial& u : prev)
      for (int v = 0; v < ring.var_count(); ++v) {
        Monomial w = u.times_var(v);
        auto it = rank.find(w);
        if (it == rank.end()) continue;  // hit a cap or the modulus
        if (static_cast<long long>(it->second) >= need)
          fail(Errc::NotMacaulayLex,
               "segment multiple " + format_monomial(w, ring) + " falls outside the degree-" +
                   std::to_string(d) + " segment");
        spanned[it->second] = true;
      }
    for (size_t r = 0; r < static_cast<size_t>(need); ++r)
      if (!spanned[r]) gens.push_back(all[r]);
    prev.assign(all.begin(), all.begin() + static_cast<long long>(need));
  }
  MonomialIdeal result(ring, std::move(gens));
  HilbertSeries check = modulus ? hilbert_ideal_mod(result, *modulus, top) : hilbert_ideal(result, top);
  for (int d = 0; d <= top; ++d)
    if (check.at(d) != h.at(d))
      fail(Errc::NotAchievable, "constructed lex ideal realizes " + std::to_string(check.at(d)) +
                                    " instead of " + std::to_string(h.at(d)) + " at degree " +
                                    std::to_string(d));
  return result;
}

bool is_lex_segment_ideal(const MonomialIdeal& i, int up_to, const MonomialIdeal* modulus) {
  if (up_to < 0) up_to = i.max_gen_degree() + 2;
  for (int d = 1; d <= up_to; ++d) {
    bool seen_gap = false;
    for (const Monomial& m : standard_monomials(i.ring(), d, modulus)) {
      if (i.contains(m)) {
        if (seen_gap) return false;
      } else {
        seen_gap = true;
      }
    }
  }
  return true;
}

MonomialIdeal embed(const MonomialIdeal& j) {
  const RingSpec& ring = j.ring();
  embedding_kind(ring);
  if (ring.artinian())
    return lex_ideal_from_series(ring, hilbert_ideal(j, ring.artinian_top_degree()));
  // The certified range determines the result only up to its top; accept
  // once the constructed ideal is unchanged by a window extension.
  int d = default_truncation(j);
  MonomialIdeal cur = lex_ideal_from_series(ring, hilbert_ideal(j, d));
  for (int round = 0; round < 12; ++round) {
    int d2 = std::max(cur.max_gen_degree(), d) + ring.var_count() + 2;
    MonomialIdeal next = lex_ideal_from_series(ring, hilbert_ideal(j, d2));
    if (next.gens() == cur.gens()) return cur;
    cur = std::move(next);
    d = d2;
  }
  fail(Errc::NotAchievable, "lex embedding did not stabilize under truncation growth");
}

MonomialIdeal layerwise_embed(const MonomialIdeal& j) {
  if (!is_z_stable(j)) fail(Errc::NotZStable, "layerwise embedding needs a z-stable ideal");
  const RingSpec& ring = j.ring();
  embedding_kind(ring.a_ring());
  int stab = layer_stabilization(j);
  std::vector<Monomial> gens;
  for (int i = 0; i <= stab; ++i) {
    MonomialIdeal li = embed(layer(j, i));
    for (const Monomial& g : li.gens()) gens.push_back(g.append_last(i));
  }
  MonomialIdeal result(ring, std::move(gens));
  if (!is_z_stable(result)) fail(Errc::NotZStable, "internal: layerwise embedding lost z-stability");
  int d = std::max(default_truncation(j), default_truncation(result));
  if (!(hilbert_ideal(j, d) == hilbert_ideal(result, d)))
    fail(Errc::NotAchievable, "internal: layerwise embedding changed the Hilbert function");
  return result;
}

HilbertSeries restriction_series(const MonomialIdeal& j, int i, int truncate) {
  const RingSpec& ring = j.ring();
  if (ring.var_count() < 2) fail(Errc::MalformedInput, "restriction needs a distinguished last variable");
  Cap t = ring.z_cap();
  if (i < 0 || (t.finite() && i >= t.value()))
    fail(Errc::LayerOutOfRange, "restriction index " + std::to_string(i) + " outside [0, z-cap)");
  MonomialIdeal sum = i == 0 ? MonomialIdeal::unit(ring)
                             : ideal_sum(j, MonomialIdeal(ring, {Monomial::var_power(
                                                ring.var_count(), ring.var_count() - 1, i)}));
  if (truncate < 0) truncate = std::max(default_truncation(j), default_truncation(sum));
  return hilbert_ideal(sum, truncate);
}

}  // namespace bettilab
