#include "bettilab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bettilab/lex.hpp"

namespace bettilab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "Unknown";
}

namespace {

class Timer {
 public:
  explicit Timer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    auto end = std::chrono::steady_clock::now();
    report_.millis = std::chrono::duration<double, std::milli>(end - start_).count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe_ring(const RingSpec& ring) {
  std::ostringstream out;
  out << "k[";
  for (int i = 0; i < ring.var_count(); ++i) {
    if (i) out << ",";
    out << ring.var_name(i);
  }
  out << "] caps (";
  for (int i = 0; i < ring.var_count(); ++i) {
    if (i) out << ",";
    if (ring.cap(i).finite())
      out << ring.cap(i).value();
    else
      out << "inf";
  }
  out << ")";
  return out.str();
}

std::string describe_ideal(const MonomialIdeal& j) {
  std::ostringstream out;
  out << describe_ring(j.ring()) << "; gens: ";
  if (j.gens().empty()) {
    out << "none";
  } else {
    for (size_t i = 0; i < j.gens().size(); ++i) {
      if (i) out << ", ";
      out << format_monomial(j.gens()[i], j.ring());
    }
  }
  return out.str();
}

std::string entry_str(std::pair<int, int> k, long long a, long long b) {
  std::ostringstream out;
  out << "(" << k.first << "," << k.second << "): " << a << " vs " << b;
  return out.str();
}

}  // namespace

CancellationResult cancellation_certificate(const BettiTable& from, const BettiTable& to) {
  if (from.mode != to.mode) fail(Errc::ModeMismatch, "certificate needs tables of one mode");
  if (from.characteristic != to.characteristic)
    fail(Errc::ModeMismatch, "certificate needs tables of one characteristic");
  std::map<std::pair<int, int>, long long> diff;
  for (const auto& [k, v] : to.entries) diff[k] += v;
  for (const auto& [k, v] : from.entries) diff[k] -= v;
  std::map<int, std::pair<int, int>> columns;  // j -> [min_i, max_i] with nonzero difference
  for (const auto& [k, v] : diff) {
    if (v == 0) continue;
    auto it = columns.find(k.second);
    if (it == columns.end())
      columns.emplace(k.second, std::make_pair(k.first, k.first));
    else {
      it->second.first = std::min(it->second.first, k.first);
      it->second.second = std::max(it->second.second, k.first);
    }
  }
  CancellationResult res;
  for (const auto& [j, span] : columns) {
    long long carry = 0;
    for (int i = std::min(span.first, 0); i <= span.second + 1; ++i) {
      auto it = diff.find({i, j});
      long long d = it == diff.end() ? 0 : it->second;
      long long n = d - carry;
      if (n < 0) {
        res.found = false;
        res.obstruction = std::make_pair(i, j);
        res.certificate.cancellations.clear();
        return res;
      }
      if (n > 0) res.certificate.cancellations.push_back(Cancellation{i, j, n});
      carry = n;
    }
    if (carry != 0) {
      res.found = false;
      res.obstruction = std::make_pair(span.second + 2, j);
      res.certificate.cancellations.clear();
      return res;
    }
  }
  res.found = true;
  return res;
}

VerificationReport check_theorem31(const MonomialIdeal& j, int gen_limit) {
  VerificationReport r;
  r.claim = "theorem31";
  r.instance = describe_ideal(j);
  Timer timer(r);
  if (!is_z_stable(j)) fail(Errc::NotZStable, "the dominance statement assumes a z-stable ideal");
  MonomialIdeal lexed = embed(j);
  r.notes.push_back("lex image: " + describe_ideal(lexed));
  BettiTable tj = to_quotient(betti_oracle(j, 0, gen_limit));
  BettiTable tl = to_quotient(betti_oracle(lexed, 0, gen_limit));
  TableComparison cmp = table_compare(tj, tl);
  if (cmp.order == TableOrder::Equal || cmp.order == TableOrder::LessEq) {
    r.verdict = Verdict::Holds;
    CancellationResult cert = cancellation_certificate(tj, tl);
    if (cert.found)
      r.notes.push_back("lex table reached by " + std::to_string(cert.certificate.cancellations.size()) +
                        " consecutive cancellations");
    else
      r.notes.push_back("no consecutive-cancellation certificate (unexpected)");
  } else {
    r.verdict = Verdict::Fails;
    auto k = *cmp.first_above;
    r.witness = "quotient table exceeds the lex side at " +
                entry_str(k, tj.at(k.first, k.second), tl.at(k.first, k.second));
  }
  return r;
}

VerificationReport check_lex_dominance(const MonomialIdeal& i, int gen_limit) {
  VerificationReport r;
  r.claim = "lex-dominance";
  r.instance = describe_ideal(i);
  Timer timer(r);
  MonomialIdeal lexed = embed(i);
  r.notes.push_back("lex image: " + describe_ideal(lexed));
  BettiTable ti = to_quotient(betti_oracle(i, 0, gen_limit));
  BettiTable tl = to_quotient(betti_oracle(lexed, 0, gen_limit));
  TableComparison cmp = table_compare(ti, tl);
  if (cmp.order == TableOrder::Equal || cmp.order == TableOrder::LessEq) {
    r.verdict = Verdict::Holds;
  } else {
    r.verdict = Verdict::Fails;
    auto k = *cmp.first_above;
    r.witness = "quotient table exceeds the lex side at " +
                entry_str(k, ti.at(k.first, k.second), tl.at(k.first, k.second));
  }
  return r;
}

bool strongly_stable_plus_powers(const MonomialIdeal& i) {
  MonomialIdeal closure = borel_closure(MonomialIdeal(i.ring().uncapped(), i.gens()));
  return MonomialIdeal(i.ring(), closure.gens()) == i;
}

VerificationReport check_char_independence(const MonomialIdeal& i, const std::vector<long>& primes,
                                           int gen_limit) {
  VerificationReport r;
  r.claim = "char-independence";
  r.instance = describe_ideal(i);
  Timer timer(r);
  if (!strongly_stable_plus_powers(i)) {
    r.verdict = Verdict::Inapplicable;
    r.notes.push_back("generators are not strongly stable modulo the cap powers");
    return r;
  }
  BettiTable base = betti_oracle(i, 0, gen_limit);
  for (long p : primes) {
    BettiTable tp = betti_oracle(i, p, gen_limit);
    if (!base.same_entries(tp)) {
      r.verdict = Verdict::Fails;
      TableComparison cmp = table_compare(base, tp);
      auto k = cmp.first_above ? *cmp.first_above : *cmp.first_below;
      r.witness = "table over F_" + std::to_string(p) + " differs at " +
                  entry_str(k, base.at(k.first, k.second), tp.at(k.first, k.second));
      return r;
    }
  }
  r.verdict = Verdict::Holds;
  std::ostringstream note;
  note << "table identical over the rationals and F_p for p in {";
  for (size_t q = 0; q < primes.size(); ++q) note << (q ? "," : "") << primes[q];
  note << "}";
  r.notes.push_back(note.str());
  return r;
}

VerificationReport check_restriction(const MonomialIdeal& j) {
  VerificationReport r;
  r.claim = "restriction";
  r.instance = describe_ideal(j);
  Timer timer(r);
  if (!is_z_stable(j)) fail(Errc::NotZStable, "the restriction statement assumes a z-stable ideal");
  MonomialIdeal lexed = embed(j);
  Cap t = j.ring().z_cap();
  int imax = t.finite() ? t.value() - 1 : layer_stabilization(j) + 1;
  int trunc = j.ring().artinian()
                  ? j.ring().artinian_top_degree()
                  : std::max({default_truncation(j), default_truncation(lexed),
                              imax + j.ring().var_count() + 4});
  for (int i = 0; i <= imax; ++i) {
    HilbertSeries a = restriction_series(j, i, trunc);
    HilbertSeries b = restriction_series(lexed, i, trunc);
    SeriesComparison cmp = compare_series(a, b);
    if (cmp.order != SeriesOrder::Equal && cmp.order != SeriesOrder::GreaterEq) {
      r.verdict = Verdict::Fails;
      int d = *cmp.first_below;
      r.witness = "restriction at z^" + std::to_string(i) + " dips below the lex side at degree " +
                  std::to_string(d) + ": " + std::to_string(a.at(d)) + " vs " + std::to_string(b.at(d));
      return r;
    }
  }
  r.verdict = Verdict::Holds;
  r.notes.push_back("checked z-powers 0.." + std::to_string(imax) + " at truncation " +
                    std::to_string(trunc));
  return r;
}

VerificationReport counterexample_charp(long p) {
  VerificationReport r;
  r.claim = "counterexample-char-p";
  Timer timer(r);
  {
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) fail(Errc::MalformedInput, "characteristic must be a prime");
  }
  int ip = static_cast<int>(p);
  RingSpec s({"x", "y", "z"}, {Cap::bounded(ip), Cap::bounded(ip), Cap::unbounded()});
  MonomialIdeal j(s, {Monomial::var_power(3, 2, ip)});
  r.instance = describe_ideal(j);
  MonomialIdeal lexed = embed(j);
  r.notes.push_back("lex image: " + describe_ideal(lexed));

  std::vector<std::string> broken;
  // A power of the last variable times the general linear form l = x + y
  // vanishes: l^p = x^p + y^p = 0, so modding out z + l leaves the
  // two-variable ring and the section series comes out by subtraction.
  RingSpec a = s.a_ring();
  int top = 3 * ip + 4;
  HilbertSeries hs = hilbert_quotient(MonomialIdeal::zero(s), top);
  HilbertSeries hr = hilbert_quotient(MonomialIdeal::zero(a), a.artinian_top_degree());
  HilbertSeries jside = series_zero(top);
  for (int d = 0; d <= top; ++d) jside.coeffs[static_cast<size_t>(d)] = hs.at(d) - hr.at(d);
  MonomialIdeal lz = ideal_sum(lexed, MonomialIdeal(s, {Monomial::var_power(3, 2, 1)}));
  HilbertSeries lside = hilbert_ideal(lz, top);

  Monomial xp1y = Monomial::var_power(3, 0, ip - 1).times_var(1);
  if (lexed.contains(xp1y))
    r.notes.push_back(format_monomial(xp1y, s) + " lies in the lex image");
  else
    broken.push_back(format_monomial(xp1y, s) + " should lie in the lex image");

  SeriesComparison cmp = compare_series(jside, lside);
  if (cmp.order == SeriesOrder::LessEq && cmp.first_below) {
    int d = *cmp.first_below;
    r.notes.push_back("section series " + std::to_string(jside.at(d)) + " < " +
                      std::to_string(lside.at(d)) + " at degree " + std::to_string(d) +
                      ": the general-form restriction inequality fails in characteristic " +
                      std::to_string(p));
  } else {
    broken.push_back("section series does not drop strictly below the lex side");
  }

  if (is_z_stable(j))
    broken.push_back("the instance is unexpectedly z-stable");
  else
    r.notes.push_back("instance is not z-stable, so the dominance statement does not cover it");

  if (broken.empty()) {
    r.verdict = Verdict::Holds;
  } else {
    r.verdict = Verdict::Fails;
    r.witness = broken.front();
  }
  return r;
}

VerificationReport check_shakin(const std::vector<MonomialIdeal>& pieces, const MonomialIdeal& i,
                                int gen_limit) {
  VerificationReport r;
  r.claim = "piecewise-lex-dominance";
  r.instance = describe_ideal(i);
  Timer timer(r);
  const RingSpec& ring = i.ring();
  bool any = false;
  for (const auto& p : pieces)
    if (!p.is_zero()) any = true;
  if (!any) {
    r = check_lex_dominance(i, gen_limit);
    r.claim = "piecewise-lex-dominance";
    r.notes.push_back("no pieces given; plain lex dominance applies");
    return r;
  }
  if (static_cast<int>(pieces.size()) > ring.var_count())
    fail(Errc::InvalidPieces, "more pieces than variables");
  std::vector<Monomial> qgens;
  for (size_t k = 0; k < pieces.size(); ++k) {
    const MonomialIdeal& piece = pieces[k];
    if (piece.ring() != ring) fail(Errc::InvalidPieces, "pieces must share the ambient ring");
    if (piece.is_zero()) continue;
    int width = static_cast<int>(k) + 1;
    std::vector<std::string> sub_vars(ring.vars().begin(), ring.vars().begin() + width);
    std::vector<Cap> sub_caps(ring.caps().begin(), ring.caps().begin() + width);
    RingSpec sub(std::move(sub_vars), std::move(sub_caps));
    std::vector<Monomial> sub_gens;
    for (const auto& g : piece.gens()) {
      for (int v = width; v < ring.var_count(); ++v)
        if (g.exp(v) != 0)
          fail(Errc::InvalidPieces, "piece " + std::to_string(k + 1) + " uses a variable past " +
                                        ring.var_name(width - 1));
      sub_gens.emplace_back(std::vector<int>(g.exps().begin(), g.exps().begin() + width));
      qgens.push_back(g);
    }
    if (!is_lex_segment_ideal(MonomialIdeal(sub, std::move(sub_gens))))
      fail(Errc::InvalidPieces, "piece " + std::to_string(k + 1) + " is not a lex-segment ideal");
  }
  MonomialIdeal q(ring, std::move(qgens));
  MonomialIdeal full = ideal_sum(i, q);
  MonomialIdeal lexed = [&] {
    if (ring.artinian()) {
      int top = ring.artinian_top_degree();
      return lex_ideal_from_series(ring, hilbert_ideal_mod(full, q, top), &q);
    }
    int d = std::max(default_truncation(full), default_truncation(q));
    MonomialIdeal cur = lex_ideal_from_series(ring, hilbert_ideal_mod(full, q, d), &q);
    for (int round = 0; round < 12; ++round) {
      int d2 = std::max(cur.max_gen_degree(), d) + ring.var_count() + 2;
      MonomialIdeal next = lex_ideal_from_series(ring, hilbert_ideal_mod(full, q, d2), &q);
      if (next.gens() == cur.gens()) return cur;
      cur = std::move(next);
      d = d2;
    }
    fail(Errc::NotAchievable, "piecewise lex ideal did not stabilize under truncation growth");
  }();
  MonomialIdeal lex_full = ideal_sum(lexed, q);
  r.notes.push_back("pieces ideal: " + describe_ideal(q));
  r.notes.push_back("lex image modulo pieces: " + describe_ideal(lexed));
  BettiTable ta = to_quotient(betti_oracle(full, 0, gen_limit));
  BettiTable tb = to_quotient(betti_oracle(lex_full, 0, gen_limit));
  TableComparison cmp = table_compare(ta, tb);
  if (cmp.order == TableOrder::Equal || cmp.order == TableOrder::LessEq) {
    r.verdict = Verdict::Holds;
  } else {
    r.verdict = Verdict::Fails;
    auto k = *cmp.first_above;
    r.witness = "quotient table exceeds the piecewise-lex side at " +
                entry_str(k, ta.at(k.first, k.second), tb.at(k.first, k.second));
  }
  return r;
}

Rng::Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

uint64_t Rng::next() {
  // splitmix64: deterministic across platforms, unlike the stdlib
  // distribution adaptors.
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
  if (lo > hi) fail(Errc::MalformedInput, "empty range");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(next() % span);
}

namespace {

// Random monomial of positive degree strictly below the caps, or nothing if
// the caps keep rejecting the sampled degrees.
std::optional<Monomial> random_monomial(Rng& rng, const RingSpec& ring, int max_degree) {
  int n = ring.var_count();
  for (int tries = 0; tries < 30; ++tries) {
    int d = rng.range(1, max_degree);
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int k = 0; k < d; ++k) e[static_cast<size_t>(rng.range(0, n - 1))] += 1;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      ok = !ring.cap(v).finite() || e[static_cast<size_t>(v)] < ring.cap(v).value();
    if (ok) return Monomial(std::move(e));
  }
  return std::nullopt;
}

MonomialIdeal random_plain(Rng& rng, const RingSpec& ring, GenBounds bounds) {
  int count = rng.range(1, std::max(1, bounds.max_gens));
  std::vector<Monomial> gens;
  for (int c = 0; c < count; ++c)
    if (auto m = random_monomial(rng, ring, bounds.max_degree)) gens.push_back(std::move(*m));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal random_z_stable(Rng& rng, const RingSpec& ring, GenBounds bounds) {
  RingSpec a = ring.a_ring();
  Cap t = ring.z_cap();
  int max_layers = t.finite() ? std::min(t.value(), 4) : 3;
  int nlayers = rng.range(1, max_layers);
  // Increasing chain of seed sets, then downward closure under the
  // a-variables so consecutive layers stay one multiplication apart.
  std::vector<std::vector<Monomial>> seeds(static_cast<size_t>(nlayers));
  std::vector<Monomial> acc;
  for (int q = 0; q < nlayers; ++q) {
    int extra = rng.range(q == 0 ? 0 : 1, 2);
    for (int c = 0; c < extra; ++c)
      if (auto m = random_monomial(rng, a, bounds.max_degree)) acc.push_back(std::move(*m));
    seeds[static_cast<size_t>(q)] = acc;
  }
  std::vector<MonomialIdeal> layers(static_cast<size_t>(nlayers), MonomialIdeal::zero(a));
  layers[static_cast<size_t>(nlayers - 1)] = MonomialIdeal(a, seeds[static_cast<size_t>(nlayers - 1)]);
  for (int q = nlayers - 2; q >= 0; --q) {
    std::vector<Monomial> gens = seeds[static_cast<size_t>(q)];
    for (const auto& u : layers[static_cast<size_t>(q + 1)].gens())
      for (int v = 0; v < a.var_count(); ++v) gens.push_back(u.times_var(v));
    layers[static_cast<size_t>(q)] = MonomialIdeal(a, std::move(gens));
  }
  std::vector<Monomial> gens;
  for (int q = 0; q < nlayers; ++q)
    for (const auto& g : layers[static_cast<size_t>(q)].gens()) gens.push_back(g.append_last(q));
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace

MonomialIdeal random_ideal(IdealKind kind, const RingSpec& ring, uint64_t seed, GenBounds bounds) {
  if (bounds.max_gens < 1 || bounds.max_degree < 1) fail(Errc::MalformedInput, "degenerate bounds");
  for (uint64_t attempt = 0; attempt < 40; ++attempt) {
    Rng rng(seed * 0x100000001b3ULL + attempt * 0x9e3779b9ULL);
    MonomialIdeal j = MonomialIdeal::zero(ring);
    switch (kind) {
      case IdealKind::Plain:
        j = random_plain(rng, ring, bounds);
        break;
      case IdealKind::StronglyStable: {
        if (!ring.all_unbounded())
          fail(Errc::MalformedInput, "strongly stable sampling expects an uncapped ring");
        GenBounds seed_bounds{std::max(1, bounds.max_gens / 4), bounds.max_degree};
        j = borel_closure(random_plain(rng, ring, seed_bounds));
        break;
      }
      case IdealKind::ZStable:
        if (ring.var_count() < 2)
          fail(Errc::MalformedInput, "z-stable sampling needs a distinguished last variable");
        j = random_z_stable(rng, ring, bounds);
        break;
    }
    if (static_cast<int>(j.gens().size()) <= bounds.max_gens) {
      if (kind == IdealKind::ZStable && !is_z_stable(j))
        fail(Errc::NotZStable, "internal: constructed layer chain is not z-stable");
      return j;
    }
  }
  // Small principal fallback keeps the stream total.
  Monomial g = Monomial::var_power(ring.var_count(), 0,
                                   ring.cap(0).finite() ? std::min(ring.cap(0).value() - 1, 1) : 2);
  if (g.degree() == 0) return MonomialIdeal::zero(ring);
  return MonomialIdeal(ring, {g});
}

RingSpec random_layered_ring(uint64_t seed, int max_a_vars) {
  if (max_a_vars < 1) fail(Errc::MalformedInput, "need at least one a-variable");
  Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  int n = rng.range(1, max_a_vars);
  const int menu[3] = {2, 3, 0};  // 0 encodes unbounded
  std::vector<int> picks;
  for (int i = 0; i < n; ++i) picks.push_back(menu[rng.range(0, 2)]);
  std::sort(picks.begin(), picks.end(), [](int x, int y) {
    if (x == 0) return false;
    if (y == 0) return true;
    return x < y;
  });
  int last = picks.back();
  std::vector<int> allowed;
  for (int v : {2, 3, 0})
    if (last == 0 ? v == 0 : (v == 0 || v >= last)) allowed.push_back(v);
  int tz = allowed[static_cast<size_t>(rng.range(0, static_cast<int>(allowed.size()) - 1))];
  std::vector<std::string> vars;
  std::vector<Cap> caps;
  for (int i = 0; i < n; ++i) {
    vars.push_back("x" + std::to_string(i + 1));
    caps.push_back(picks[static_cast<size_t>(i)] == 0 ? Cap::unbounded()
                                                      : Cap::bounded(picks[static_cast<size_t>(i)]));
  }
  vars.push_back("z");
  caps.push_back(tz == 0 ? Cap::unbounded() : Cap::bounded(tz));
  return RingSpec(std::move(vars), std::move(caps));
}

MonomialIdeal shrink_ideal(const MonomialIdeal& j,
                           const std::function<bool(const MonomialIdeal&)>& pred) {
  MonomialIdeal cur = j;
  bool improved = true;
  while (improved && cur.gens().size() > 1) {
    improved = false;
    for (size_t drop = 0; drop < cur.gens().size(); ++drop) {
      std::vector<Monomial> gens;
      for (size_t g = 0; g < cur.gens().size(); ++g)
        if (g != drop) gens.push_back(cur.gens()[g]);
      MonomialIdeal candidate(cur.ring(), std::move(gens));
      bool keep = false;
      try {
        keep = pred(candidate);
      } catch (const Error&) {
        keep = false;
      }
      if (keep) {
        cur = std::move(candidate);
        improved = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace bettilab
