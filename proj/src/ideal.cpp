#include "bettilab/ideal.hpp"

#include <algorithm>

namespace bettilab {

namespace {

bool hits_cap(const RingSpec& ring, const Monomial& m) {
  for (int i = 0; i < ring.var_count(); ++i) {
    Cap c = ring.cap(i);
    if (c.finite() && m.exp(i) >= c.value()) return true;
  }
  return false;
}

// Minimal generating set beyond the cap powers: cap-hitting candidates are
// absorbed, dominated candidates dropped, result lex-descending.
std::vector<Monomial> minimalize(const RingSpec& ring, std::vector<Monomial> gens) {
  std::vector<Monomial> below;
  for (auto& m : gens) {
    if (m.nvars() != ring.var_count()) fail(Errc::MalformedInput, "generator/ring arity mismatch");
    if (!hits_cap(ring, m)) below.push_back(std::move(m));
  }
  std::sort(below.begin(), below.end(), lex_greater);
  below.erase(std::unique(below.begin(), below.end()), below.end());
  std::vector<Monomial> keep;
  for (size_t a = 0; a < below.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < below.size() && !dominated; ++b)
      dominated = a != b && below[b].divides(below[a]);
    if (!dominated) keep.push_back(below[a]);
  }
  return keep;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(minimalize(ring_, std::move(gens))) {}

MonomialIdeal MonomialIdeal::unit(RingSpec ring) {
  int n = ring.var_count();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

std::vector<Monomial> MonomialIdeal::ambient_gens() const {
  std::vector<Monomial> all = gens_;
  for (int i = 0; i < ring_.var_count(); ++i)
    if (ring_.cap(i).finite())
      all.push_back(Monomial::var_power(ring_.var_count(), i, ring_.cap(i).value()));
  std::sort(all.begin(), all.end(), lex_greater);
  std::vector<Monomial> keep;
  for (size_t a = 0; a < all.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < all.size() && !dominated; ++b)
      dominated = a != b && all[b].divides(all[a]);
    if (!dominated) keep.push_back(all[a]);
  }
  return keep;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != ring_.var_count()) fail(Errc::MalformedInput, "monomial/ring arity mismatch");
  if (hits_cap(ring_, m)) return true;
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

int MonomialIdeal::max_gen_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) fail(Errc::MalformedInput, "ideal sum across different rings");
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal preimage_ideal(const MonomialIdeal& j) {
  return MonomialIdeal(j.ring().uncapped(), j.ambient_gens());
}

MonomialIdeal colon_power(const MonomialIdeal& j, int var, int k) {
  const RingSpec& ring = j.ring();
  if (var < 0 || var >= ring.var_count()) fail(Errc::MalformedInput, "colon variable out of range");
  if (k < 0) fail(Errc::MalformedInput, "colon exponent must be >= 0");
  if (k == 0) return j;
  Cap c = ring.cap(var);
  if (c.finite() && k >= c.value()) return MonomialIdeal::unit(ring);
  std::vector<Monomial> gens;
  for (const auto& g : j.gens()) {
    std::vector<int> e = g.exps();
    e[static_cast<size_t>(var)] = std::max(0, e[static_cast<size_t>(var)] - k);
    gens.emplace_back(std::move(e));
  }
  // The cap power of the colon variable divides down as well.
  if (c.finite()) gens.push_back(Monomial::var_power(ring.var_count(), var, c.value() - k));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal layer(const MonomialIdeal& j, int i) {
  const RingSpec& ring = j.ring();
  if (ring.var_count() < 2) fail(Errc::MalformedInput, "layers need a distinguished last variable");
  Cap t = ring.z_cap();
  if (i < 0 || (t.finite() && i >= t.value()))
    fail(Errc::LayerOutOfRange, "layer index " + std::to_string(i) + " outside [0, z-cap)");
  std::vector<Monomial> gens;
  for (const auto& g : j.gens())
    if (g.z_exp() <= i) gens.push_back(g.drop_last());
  return MonomialIdeal(ring.a_ring(), std::move(gens));
}

int layer_stabilization(const MonomialIdeal& j) {
  if (j.ring().var_count() < 2) fail(Errc::MalformedInput, "layers need a distinguished last variable");
  int s = 0;
  for (const auto& g : j.gens()) s = std::max(s, g.z_exp());
  return s;
}

MonomialIdeal top_layer(const MonomialIdeal& j) { return layer(j, layer_stabilization(j)); }

bool is_z_stable(const MonomialIdeal& j) {
  const RingSpec& ring = j.ring();
  if (ring.var_count() < 2) fail(Errc::MalformedInput, "z-stability needs a distinguished last variable");
  int top = layer_stabilization(j);
  MonomialIdeal below = layer(j, 0);
  for (int i = 1; i <= top; ++i) {
    MonomialIdeal li = layer(j, i);
    for (const auto& u : li.gens())
      for (int v = 0; v < li.ring().var_count(); ++v)
        if (!below.contains(u.times_var(v))) return false;
    below = std::move(li);
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& i) {
  for (const auto& m : i.gens())
    for (int j = 1; j < m.nvars(); ++j) {
      if (m.exp(j) == 0) continue;
      Monomial base = m.quotient(Monomial::var_power(m.nvars(), j, 1));
      for (int v = 0; v < j; ++v)
        if (!i.contains(base.times_var(v))) return false;
    }
  return true;
}

MonomialIdeal borel_closure(const MonomialIdeal& i) {
  MonomialIdeal cur = i;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Monomial> added;
    for (const auto& m : cur.gens())
      for (int j = 1; j < m.nvars(); ++j) {
        if (m.exp(j) == 0) continue;
        Monomial base = m.quotient(Monomial::var_power(m.nvars(), j, 1));
        for (int v = 0; v < j; ++v) {
          Monomial swapped = base.times_var(v);
          if (!cur.contains(swapped)) added.push_back(swapped);
        }
      }
    if (!added.empty()) {
      std::vector<Monomial> gens = cur.gens();
      gens.insert(gens.end(), added.begin(), added.end());
      cur = MonomialIdeal(cur.ring(), std::move(gens));
      grew = true;
    }
  }
  return cur;
}

}  // namespace bettilab
