#include "bettilab/betti.hpp"

#include <algorithm>
#include <set>

#include "bettilab/homology.hpp"

namespace bettilab {

void BettiTable::add(int i, int j, long long mult) {
  if (mult == 0) return;
  auto key = std::make_pair(i, j);
  long long& v = entries[key];
  v += mult;
  if (v == 0) entries.erase(key);
}

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::max_i() const {
  int m = -1;
  for (const auto& [k, v] : entries) m = std::max(m, k.first);
  return m;
}

int BettiTable::max_j() const {
  int m = -1;
  for (const auto& [k, v] : entries) m = std::max(m, k.second);
  return m;
}

long long BettiTable::total() const {
  long long t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

BettiTable table_add(const BettiTable& a, const BettiTable& b) {
  if (a.mode != b.mode) fail(Errc::ModeMismatch, "cannot add tables of different modes");
  if (a.characteristic != b.characteristic)
    fail(Errc::ModeMismatch, "cannot add tables of different characteristics");
  BettiTable r = a;
  r.fine.reset();
  for (const auto& [k, v] : b.entries) r.add(k.first, k.second, v);
  return r;
}

BettiTable table_shift_degree(const BettiTable& a, int k) {
  BettiTable r;
  r.mode = a.mode;
  r.characteristic = a.characteristic;
  for (const auto& [key, v] : a.entries) r.add(key.first, key.second + k, v);
  return r;
}

BettiTable to_quotient(const BettiTable& ideal_table) {
  if (ideal_table.mode != TableMode::OfIdeal)
    fail(Errc::ModeMismatch, "to_quotient expects an ideal-mode table");
  BettiTable r;
  r.mode = TableMode::OfQuotient;
  r.characteristic = ideal_table.characteristic;
  r.add(0, 0, 1);
  for (const auto& [k, v] : ideal_table.entries) r.add(k.first + 1, k.second, v);
  return r;
}

BettiTable to_ideal(const BettiTable& quotient_table) {
  if (quotient_table.mode != TableMode::OfQuotient)
    fail(Errc::ModeMismatch, "to_ideal expects a quotient-mode table");
  if (quotient_table.at(0, 0) != 1)
    fail(Errc::ModeMismatch, "quotient table must start with a single unit at (0,0)");
  BettiTable r;
  r.mode = TableMode::OfIdeal;
  r.characteristic = quotient_table.characteristic;
  for (const auto& [k, v] : quotient_table.entries) {
    if (k.first == 0) {
      if (k.second != 0) fail(Errc::ModeMismatch, "stray homological-degree-0 entry");
      continue;
    }
    r.add(k.first - 1, k.second, v);
  }
  return r;
}

TableComparison table_compare(const BettiTable& a, const BettiTable& b) {
  if (a.mode != b.mode) fail(Errc::ModeMismatch, "comparing tables of different modes");
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  std::optional<std::pair<int, int>> above, below;
  for (const auto& k : keys) {
    long long x = a.at(k.first, k.second), y = b.at(k.first, k.second);
    if (x > y && !above) above = k;
    if (x < y && !below) below = k;
  }
  TableOrder order = below ? (above ? TableOrder::Incomparable : TableOrder::LessEq)
                           : (above ? TableOrder::GreaterEq : TableOrder::Equal);
  return TableComparison{order, above, below};
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

BettiTable betti_oracle(const MonomialIdeal& j, long characteristic, int gen_limit) {
  if (characteristic != 0 && !is_prime(characteristic))
    fail(Errc::MalformedInput, "characteristic must be 0 or a prime");
  std::vector<Monomial> gens = j.ambient_gens();
  if (static_cast<int>(gens.size()) > gen_limit)
    fail(Errc::TooManyGenerators, std::to_string(gens.size()) + " generators exceed the limit " +
                                      std::to_string(gen_limit));
  BettiTable t;
  t.mode = TableMode::OfIdeal;
  t.characteristic = characteristic;
  t.fine.emplace();
  if (gens.empty()) return t;
  int n = j.ring().var_count();
  // Join-closure of the generator exponents: every multidegree carrying a
  // nonzero entry is a join of generators.
  std::set<std::vector<int>> lattice;
  lattice.insert(std::vector<int>(static_cast<size_t>(n), 0));
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> next = lattice;
    for (const auto& b : lattice)
      for (const auto& g : gens) {
        std::vector<int> l(b);
        for (int v = 0; v < n; ++v) l[static_cast<size_t>(v)] = std::max(l[static_cast<size_t>(v)], g.exp(v));
        if (next.insert(std::move(l)).second) grew = true;
      }
    lattice = std::move(next);
  }
  for (const auto& b : lattice) {
    Monomial xb{std::vector<int>(b)};
    if (!j.contains(xb)) continue;
    std::vector<int> active;
    for (int v = 0; v < n; ++v)
      if (b[static_cast<size_t>(v)] > 0) active.push_back(v);
    int nv = static_cast<int>(active.size());
    SimplicialComplex kx;
    kx.vertex_count = nv;
    kx.has_empty_face = true;  // x^b itself is a member
    for (uint32_t mask = 1; mask < (1u << nv); ++mask) {
      std::vector<int> e(b);
      for (int v = 0; v < nv; ++v)
        if (mask & (1u << v)) e[static_cast<size_t>(active[static_cast<size_t>(v)])] -= 1;
      if (!j.contains(Monomial{std::move(e)})) continue;
      int d = __builtin_popcount(mask) - 1;
      if (d >= static_cast<int>(kx.faces.size())) kx.faces.resize(static_cast<size_t>(d) + 1);
      kx.faces[static_cast<size_t>(d)].push_back(mask);
    }
    for (auto& level : kx.faces) std::sort(level.begin(), level.end());
    std::vector<long long> h = reduced_homology_ranks(kx, characteristic);
    int total = 0;
    for (int v : active) total += b[static_cast<size_t>(v)];
    for (size_t i = 0; i < h.size(); ++i)
      if (h[i] > 0) {
        t.add(static_cast<int>(i), total, h[i]);
        (*t.fine)[{static_cast<int>(i), b}] += h[i];
      }
  }
  return t;
}

BettiTable betti_ek(const MonomialIdeal& i) {
  if (!i.ring().all_unbounded())
    fail(Errc::CapsPresent, "the closed-form table needs an uncapped ring");
  if (!is_strongly_stable(i)) fail(Errc::NotStronglyStable, "ideal is not strongly stable");
  BettiTable t;
  t.mode = TableMode::OfIdeal;
  for (const auto& u : i.gens()) {
    if (u.is_one()) {
      t.add(0, 0, 1);
      continue;
    }
    int maxvar = 0;
    for (int v = 0; v < u.nvars(); ++v)
      if (u.exp(v) > 0) maxvar = v + 1;  // 1-based index of the last variable dividing u
    int d = u.degree();
    for (int q = 0; q < maxvar; ++q) t.add(q, d + q, binomial(maxvar - 1, q));
  }
  return t;
}

BettiTable scaled_koszul_table(const HilbertSeries& h, int n) {
  if (n < 0) fail(Errc::MalformedInput, "variable count must be >= 0");
  BettiTable t;
  t.mode = TableMode::OfIdeal;
  for (int d = 0; d <= h.certified_degree(); ++d) {
    long long c = h.at(d);
    if (c == 0) continue;
    if (c < 0) fail(Errc::MalformedInput, "negative multiplicity in the coefficient series");
    for (int i = 0; i <= n; ++i) t.add(i, d + i, c * binomial(n, i));
  }
  return t;
}

namespace {

// Contribution of the top-layer quotient, placed at degree shift t: the
// quotient's table re-indexed by the homological shift, unit entry included.
BettiTable top_quotient_block(const MonomialIdeal& top, int t, int gen_limit) {
  BettiTable block;
  block.mode = TableMode::OfIdeal;
  if (top.is_unit()) return block;  // quotient module is zero
  BettiTable inner = betti_oracle(top, 0, gen_limit);
  block.add(0, t, 1);
  for (const auto& [k, v] : inner.entries) block.add(k.first + 1, k.second + t, v);
  return block;
}

}  // namespace

BettiTable betti_layered(const MonomialIdeal& j, int gen_limit) {
  if (!is_z_stable(j)) fail(Errc::NotZStable, "layered formula needs a z-stable ideal");
  const RingSpec& ring = j.ring();
  Cap t = ring.z_cap();
  int n = ring.var_count() - 1;
  int top_q = t.finite() ? t.value() - 1 : layer_stabilization(j);
  std::vector<MonomialIdeal> layers;
  layers.reserve(static_cast<size_t>(top_q) + 1);
  for (int q = 0; q <= top_q; ++q) layers.push_back(layer(j, q));
  int da = 0;
  for (const auto& l : layers) da = std::max(da, default_truncation(l));
  // Middle layers contribute shifted vector-space slices; z-stability makes
  // each slice finite, supported in the layer's generator degrees.
  HilbertSeries m1 = series_zero(da + top_q);
  for (int q = 1; q <= top_q; ++q) {
    HilbertSeries hi = hilbert_ideal(layers[static_cast<size_t>(q)], da);
    HilbertSeries lo = hilbert_ideal(layers[static_cast<size_t>(q - 1)], da);
    for (int d = 0; d <= da; ++d) {
      long long diff = hi.at(d) - lo.at(d);
      if (diff < 0) fail(Errc::NotZStable, "internal: layers are not increasing");
      m1.coeffs[static_cast<size_t>(d + q)] += diff;
    }
  }
  BettiTable result = table_add(betti_oracle(layers[0], 0, gen_limit), scaled_koszul_table(m1, n));
  if (t.finite())
    result = table_add(result, top_quotient_block(layers[static_cast<size_t>(top_q)], t.value(), gen_limit));
  return result;
}

ConeResult betti_cone(const MonomialIdeal& j, int gen_limit) {
  if (!is_z_stable(j)) fail(Errc::NotZStable, "mapping-cone computation needs a z-stable ideal");
  const RingSpec& ring = j.ring();
  RingSpec flat = ring.uncapped();
  int m = ring.var_count();
  int n = m - 1;
  // The cone runs over the ideal with the a-variable cap powers made
  // explicit and the z cap removed.
  std::vector<Monomial> work = j.gens();
  for (int v = 0; v < n; ++v)
    if (ring.cap(v).finite()) work.push_back(Monomial::var_power(m, v, ring.cap(v).value()));
  MonomialIdeal cone(flat, std::move(work));
  std::vector<Monomial> order = cone.gens();
  std::stable_sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) {
    if (a.z_exp() != b.z_exp()) return a.z_exp() < b.z_exp();
    return lex_greater(a, b);
  });
  MonomialIdeal avars(flat, [&] {
    std::vector<Monomial> g;
    for (int v = 0; v < n; ++v) g.push_back(Monomial::var_power(m, v, 1));
    return g;
  }());
  ConeResult res;
  res.table.mode = TableMode::OfIdeal;
  while (!order.empty() && order.back().z_exp() > 0) {
    Monomial g = order.back();
    order.pop_back();
    // Removing one member of a minimal generating set keeps it minimal.
    MonomialIdeal rest(flat, order);
    std::vector<Monomial> colon;
    colon.reserve(order.size());
    for (const auto& u : rest.gens()) colon.push_back(Monomial::lcm(u, g).quotient(g));
    MonomialIdeal quot(flat, std::move(colon));
    bool ok = quot == avars;
    res.steps.push_back(ConeStep{g, g.degree(), ok});
    if (!ok)
      fail(Errc::ColonConditionFailed,
           "colon by " + format_monomial(g, flat) + " is not the full a-variable ideal");
    for (int i = 0; i <= n; ++i) res.table.add(i, g.degree() + i, binomial(n, i));
  }
  res.table = table_add(res.table, betti_oracle(layer(j, 0), 0, gen_limit));
  Cap t = ring.z_cap();
  if (t.finite())
    res.table = table_add(res.table, top_quotient_block(layer(j, t.value() - 1), t.value(), gen_limit));
  return res;
}

bool kpolynomial_check(const BettiTable& t, const MonomialIdeal& j) {
  int m = j.ring().var_count();
  int top = std::max(t.max_j(), 0) + m + 2;
  HilbertSeries hq = hilbert_quotient(j, top);
  for (int d = 0; d <= top; ++d) {
    long long lhs = 0;
    for (const auto& [k, v] : t.entries) {
      if (k.second != d) continue;
      int i = t.mode == TableMode::OfQuotient ? k.first : k.first + 1;
      lhs += (i % 2 == 0 ? v : -v);
    }
    if (t.mode == TableMode::OfIdeal && d == 0) lhs += 1;  // the implicit unit of the quotient
    long long rhs = 0;
    for (int e = std::max(0, d - m); e <= d; ++e) {
      long long c = hq.at(e) * binomial(m, d - e);
      rhs += ((d - e) % 2 == 0 ? c : -c);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool generator_row_check(const BettiTable& t, const MonomialIdeal& j) {
  std::map<int, long long> histogram;
  for (const auto& g : j.ambient_gens()) histogram[g.degree()] += 1;
  std::map<int, long long> row;
  for (const auto& [k, v] : t.entries) {
    int i = t.mode == TableMode::OfIdeal ? k.first : k.first - 1;
    if (i == 0) row[k.second] += v;
  }
  return histogram == row;
}

}  // namespace bettilab
