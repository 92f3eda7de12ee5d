#include "bettilab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bettilab {

RingSpec::RingSpec(std::vector<std::string> vars, std::vector<Cap> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
  if (vars_.empty()) fail(Errc::MalformedInput, "ring needs at least one variable");
  if (vars_.size() != caps_.size()) fail(Errc::MalformedInput, "one cap per variable required");
  for (const auto& v : vars_) {
    if (v.empty()) fail(Errc::MalformedInput, "empty variable name");
    for (char c : v)
      if (!std::islower(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
        fail(Errc::MalformedInput, "variable names are lowercase identifiers: " + v);
    if (std::isdigit(static_cast<unsigned char>(v[0])))
      fail(Errc::MalformedInput, "variable name starts with a digit: " + v);
  }
  auto sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::MalformedInput, "duplicate variable name");
}

RingSpec RingSpec::a_ring() const {
  if (var_count() < 2) fail(Errc::MalformedInput, "no a-ring below one variable");
  return RingSpec(std::vector<std::string>(vars_.begin(), vars_.end() - 1),
                  std::vector<Cap>(caps_.begin(), caps_.end() - 1));
}

RingSpec RingSpec::uncapped() const {
  return RingSpec(vars_, std::vector<Cap>(caps_.size(), Cap::unbounded()));
}

bool RingSpec::all_unbounded() const {
  return std::none_of(caps_.begin(), caps_.end(), [](const Cap& c) { return c.finite(); });
}

bool RingSpec::artinian() const {
  return std::all_of(caps_.begin(), caps_.end(), [](const Cap& c) { return c.finite(); });
}

bool RingSpec::caps_ascending() const {
  for (size_t i = 1; i < caps_.size(); ++i)
    if (!(caps_[i - 1] <= caps_[i])) return false;
  return true;
}

int RingSpec::artinian_top_degree() const {
  if (!artinian()) fail(Errc::MalformedInput, "top degree needs all caps finite");
  int top = 0;
  for (const Cap& c : caps_) top += c.value() - 1;
  return top;
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) fail(Errc::MalformedInput, "monomial needs at least one variable slot");
  for (int e : exps_)
    if (e < 0) fail(Errc::MalformedInput, "negative exponent");
}

Monomial Monomial::var_power(int nvars, int i, int e) {
  if (i < 0 || i >= nvars) fail(Errc::MalformedInput, "variable index out of range");
  std::vector<int> v(static_cast<size_t>(nvars), 0);
  v[static_cast<size_t>(i)] = e;
  return Monomial(std::move(v));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  std::vector<int> v(exps_);
  for (size_t i = 0; i < v.size(); ++i) v[i] += m.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::times_var(int i, int e) const {
  std::vector<int> v(exps_);
  v[static_cast<size_t>(i)] += e;
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> v(a.exps_);
  for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], b.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::quotient(const Monomial& m) const {
  std::vector<int> v(exps_);
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] -= m.exps_[i];
    if (v[i] < 0) fail(Errc::MalformedInput, "quotient by a non-divisor");
  }
  return Monomial(std::move(v));
}

Monomial Monomial::drop_last() const {
  if (exps_.size() < 2) fail(Errc::MalformedInput, "cannot drop the only variable");
  return Monomial(std::vector<int>(exps_.begin(), exps_.end() - 1));
}

Monomial Monomial::append_last(int e) const {
  std::vector<int> v(exps_);
  v.push_back(e);
  return Monomial(std::move(v));
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  // First differing exponent decides; larger wins.
  return a.exps() > b.exps();
}

bool lex_less(const Monomial& a, const Monomial& b) { return a.exps() < b.exps(); }

std::string format_monomial(const Monomial& m, const RingSpec& ring) {
  if (m.nvars() != ring.var_count()) fail(Errc::MalformedInput, "monomial/ring arity mismatch");
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!first) out << '*';
    out << ring.var_name(i);
    if (e > 1) out << '^' << e;
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

namespace {

int var_index(const RingSpec& ring, const std::string& name) {
  for (int i = 0; i < ring.var_count(); ++i)
    if (ring.var_name(i) == name) return i;
  fail(Errc::MalformedInput, "unknown variable: " + name);
}

}  // namespace

Monomial parse_monomial(const std::string& text, const RingSpec& ring) {
  std::vector<int> exps(static_cast<size_t>(ring.var_count()), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1' &&
      (pos + 1 == text.size() || text.find_first_not_of(" \t", pos + 1) == std::string::npos))
    return Monomial(std::move(exps));
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_factor) {
      if (text[pos] != '*') fail(Errc::MalformedInput, "expected '*' in monomial: " + text);
      ++pos;
      skip_ws();
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail(Errc::MalformedInput, "expected a variable in monomial: " + text);
    std::string name = text.substr(start, pos - start);
    int idx = var_index(ring, name);
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (dstart == pos) fail(Errc::MalformedInput, "expected an exponent in monomial: " + text);
      e = std::stoi(text.substr(dstart, pos - dstart));
      if (e < 1) fail(Errc::MalformedInput, "exponent must be positive: " + text);
    }
    exps[static_cast<size_t>(idx)] += e;
    expect_factor = false;
    skip_ws();
  }
  if (expect_factor) fail(Errc::MalformedInput, "empty monomial text");
  return Monomial(std::move(exps));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::LayerOutOfRange: return "LayerOutOfRange";
    case Errc::NotEnoughMonomials: return "NotEnoughMonomials";
    case Errc::NotAchievable: return "NotAchievable";
    case Errc::NotMacaulayLex: return "NotMacaulayLex";
    case Errc::NotZStable: return "NotZStable";
    case Errc::NotStronglyStable: return "NotStronglyStable";
    case Errc::CapsPresent: return "CapsPresent";
    case Errc::TooManyGenerators: return "TooManyGenerators";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::ColonConditionFailed: return "ColonConditionFailed";
    case Errc::NoCertificate: return "NoCertificate";
    case Errc::InvalidPieces: return "InvalidPieces";
  }
  return "UnknownError";
}

}  // namespace bettilab
