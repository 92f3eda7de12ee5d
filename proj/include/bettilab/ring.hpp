#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bettilab/error.hpp"

namespace bettilab {

// Nilpotency bound for one variable: the exponent e with v^e = 0, or
// unbounded (an ordinary polynomial variable). Bounded caps are >= 1.
class Cap {
 public:
  static Cap unbounded() { return Cap(kUnbounded); }
  static Cap bounded(int e) {
    if (e < 1) fail(Errc::MalformedInput, "cap must be >= 1");
    return Cap(e);
  }

  bool finite() const { return value_ != kUnbounded; }
  // Only valid when finite().
  int value() const { return value_; }

  // Total order with unbounded as +infinity.
  bool operator==(const Cap& o) const { return value_ == o.value_; }
  bool operator!=(const Cap& o) const { return value_ != o.value_; }
  bool operator<=(const Cap& o) const {
    if (!o.finite()) return true;
    return finite() && value_ <= o.value_;
  }

 private:
  static constexpr int kUnbounded = -1;
  explicit Cap(int v) : value_(v) {}
  int value_;
};

// Ambient ring data: named variables with per-variable caps. By convention
// the distinguished variable z, when present, is positionally last; helpers
// that talk about "the a-ring" strip that last variable.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> vars, std::vector<Cap> caps);

  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Cap>& caps() const { return caps_; }
  const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }
  Cap cap(int i) const { return caps_[static_cast<size_t>(i)]; }

  // Last variable, in the z-last convention.
  Cap z_cap() const { return caps_.back(); }

  // Everything but the last variable. Requires var_count() >= 2.
  RingSpec a_ring() const;

  // Same variables, all caps removed.
  RingSpec uncapped() const;

  bool all_unbounded() const;
  bool artinian() const;  // all caps finite

  // Caps nondecreasing left to right (unbounded counts as +infinity), the
  // hypothesis under which lex segments are known to span.
  bool caps_ascending() const;

  // Sum of (cap - 1): the top degree carrying standard monomials.
  // Only valid when artinian().
  int artinian_top_degree() const;

  bool operator==(const RingSpec& o) const { return vars_ == o.vars_ && caps_ == o.caps_; }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

 private:
  std::vector<std::string> vars_;
  std::vector<Cap> caps_;
};

// Monomial as an exponent vector over a fixed ring's variables. Plain data;
// the ring association is by convention of the caller.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }
  static Monomial var_power(int nvars, int i, int e);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exp(int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int>& exps() const { return exps_; }

  int degree() const;
  // Exponent of the last variable (z in the z-last convention).
  int z_exp() const { return exps_.back(); }

  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const;

  Monomial times(const Monomial& m) const;
  Monomial times_var(int i, int e = 1) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  // this / m, requiring m.divides(*this).
  Monomial quotient(const Monomial& m) const;
  // this with the last variable's exponent dropped.
  Monomial drop_last() const;
  // this with an extra last variable appended at exponent e.
  Monomial append_last(int e) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

 private:
  std::vector<int> exps_;
};

// Lexicographic order with x1 > x2 > ... : the first differing exponent
// decides, larger exponent wins. Degrees are not compared first.
bool lex_greater(const Monomial& a, const Monomial& b);
bool lex_less(const Monomial& a, const Monomial& b);

// Renders "x^2*y" style; degree zero renders "1".
std::string format_monomial(const Monomial& m, const RingSpec& ring);

// Parses the format above (also accepts juxtaposed '*'-separated powers in
// any variable order; repeated variables accumulate).
Monomial parse_monomial(const std::string& text, const RingSpec& ring);

}  // namespace bettilab
