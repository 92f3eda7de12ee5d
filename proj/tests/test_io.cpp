#include <doctest.h>

#include "bettilab/io.hpp"

using namespace bettilab;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

RingSpec mixed_ring() {
  return RingSpec({"x", "y", "z"},
                  {Cap::bounded(2), Cap::bounded(3), Cap::unbounded()});
}

}  // namespace

TEST_CASE("ideal json round trip") {
  MonomialIdeal j(mixed_ring(), {m({1, 1, 0}), m({0, 1, 2})});
  MonomialIdeal back = ideal_from_json(ideal_to_json(j));
  CHECK(back == j);
  CHECK(ideal_from_text(dump_json(ideal_to_json(j))) == j);

  nlohmann::json doc = ideal_to_json(j);
  CHECK(doc["ring"]["vars"].size() == 3);
  CHECK(doc["ring"]["caps"][0] == 2);
  CHECK(doc["ring"]["caps"][2].is_null());
}

TEST_CASE("generators may be written as strings") {
  MonomialIdeal j = ideal_from_text(
      R"({"ring":{"vars":["x","y"]},"gens":["x^2*y","y^3"]})");
  CHECK(j.ring().all_unbounded());
  CHECK(j.gens() == std::vector<Monomial>{m({2, 1}), m({0, 3})});
  MonomialIdeal z = ideal_from_text(R"({"ring":{"vars":["x"]}})");
  CHECK(z.is_zero());
}

TEST_CASE("malformed ideal documents are rejected with positions") {
  auto code_of = [](const std::string& text) {
    try {
      ideal_from_text(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::NoCertificate;
  };
  CHECK(code_of("{oops") == Errc::MalformedInput);
  try {
    ideal_from_text("[1,");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("invalid JSON at byte") != std::string::npos);
  }
  CHECK(code_of("[]") == Errc::MalformedInput);
  CHECK(code_of(R"({"gens":[]})") == Errc::MalformedInput);
  CHECK(code_of(R"({"ring":{"vars":["x","y"]},"gens":[[1]]})") == Errc::MalformedInput);
  CHECK(code_of(R"({"ring":{"vars":["x","y"]},"gens":[[-1,0]]})") == Errc::MalformedInput);
  CHECK(code_of(R"({"ring":{"vars":["x","y"]},"gens":["w^2"]})") == Errc::MalformedInput);
  CHECK(code_of(R"({"ring":{"vars":["x","y"],"caps":[2]}})") == Errc::MalformedInput);
  CHECK(code_of(R"({"ring":{"vars":["x"],"caps":[0]}})") == Errc::MalformedInput);
}

TEST_CASE("series and table json fields") {
  HilbertSeries h;
  h.coeffs = {1, 2, 3};
  nlohmann::json hs = series_to_json(h);
  CHECK(hs["certified"] == 2);
  CHECK(hs["coeffs"] == nlohmann::json({1, 2, 3}));

  BettiTable t;
  t.mode = TableMode::OfQuotient;
  t.characteristic = 2;
  t.add(0, 0, 1);
  t.add(1, 2, 3);
  nlohmann::json tj = table_to_json(t);
  CHECK(tj["mode"] == "quotient");
  CHECK(tj["char"] == 2);
  CHECK(tj["entries"].size() == 2);
  CHECK(tj["entries"][1]["i"] == 1);
  CHECK(tj["entries"][1]["j"] == 2);
  CHECK(tj["entries"][1]["beta"] == 3);
}

TEST_CASE("report json includes timing only when asked") {
  VerificationReport r;
  r.claim = "lex-dominance";
  r.instance = "k[x,y]; gens: x^2";
  r.verdict = Verdict::Holds;
  r.notes = {"checked"};
  r.millis = 12.5;
  nlohmann::json plain = report_to_json(r);
  CHECK_FALSE(plain.contains("millis"));
  CHECK(plain["verdict"] == "Holds");
  CHECK(plain["notes"][0] == "checked");
  nlohmann::json timed = report_to_json(r, true);
  CHECK(timed["millis"] == 12.5);
}

TEST_CASE("certificate json lists each cancellation") {
  CancellationCertificate c;
  c.cancellations.push_back({0, 3, 1});
  c.cancellations.push_back({1, 4, 2});
  nlohmann::json doc = certificate_to_json(c);
  CHECK(doc["cancellations"].size() == 2);
  CHECK(doc["cancellations"][0]["i"] == 0);
  CHECK(doc["cancellations"][0]["j"] == 3);
  CHECK(doc["cancellations"][0]["count"] == 1);
  CHECK(doc["cancellations"][1]["count"] == 2);
}

TEST_CASE("table text layout is stable") {
  BettiTable t;
  t.mode = TableMode::OfQuotient;
  t.add(0, 0, 1);
  t.add(1, 2, 3);
  t.add(2, 3, 2);
  CHECK(table_to_text(t) ==
        "    0  1\n"
        "0:  1  .\n"
        "1:  .  3\n"
        "2:  .  2\n");
  CHECK(table_to_csv(t) == "i,j,beta\n0,0,1\n1,2,3\n2,3,2\n");

  BettiTable empty;
  CHECK(table_to_text(empty) == "(zero table, mode ideal)\n");
  empty.mode = TableMode::OfQuotient;
  CHECK(table_to_text(empty) == "(zero table, mode quotient)\n");
}

TEST_CASE("report text layout is stable") {
  VerificationReport r;
  r.claim = "restriction";
  r.instance = "k[x,y,z] caps (2,2,inf); gens: z^2";
  r.verdict = Verdict::Fails;
  r.witness = "series drop at layer 1";
  r.notes = {"first", "second"};
  r.millis = 3.5;
  CHECK(report_to_text(r) ==
        "claim: restriction\n"
        "instance: k[x,y,z] caps (2,2,inf); gens: z^2\n"
        "verdict: Fails\n"
        "witness: series drop at layer 1\n"
        "note: first\n"
        "note: second\n");
  std::string timed = report_to_text(r, true);
  CHECK(timed.find("time: 3.5 ms\n") != std::string::npos);
}

TEST_CASE("json dumps are deterministic with sorted keys") {
  nlohmann::json a{{"zeta", 1}, {"alpha", 2}};
  std::string s = dump_json(a);
  CHECK(s.find("alpha") < s.find("zeta"));
  CHECK(s.back() == '\n');
  CHECK(s == dump_json(nlohmann::json{{"alpha", 2}, {"zeta", 1}}));
}
