#include "bettilab/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace bettilab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::MalformedInput, msg);
}

Cap cap_from_json(const nlohmann::json& c) {
  if (c.is_null()) return Cap::unbounded();
  require(c.is_number_integer(), "cap entries must be integers or null");
  long long v = c.get<long long>();
  require(v >= 1, "finite caps must be at least 1");
  return Cap::bounded(static_cast<int>(v));
}

RingSpec ring_from_json(const nlohmann::json& doc) {
  require(doc.is_object(), "ring must be an object");
  require(doc.contains("vars") && doc["vars"].is_array(), "ring needs a \"vars\" array");
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    require(v.is_string(), "variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  std::vector<Cap> caps(vars.size(), Cap::unbounded());
  if (doc.contains("caps")) {
    require(doc["caps"].is_array() && doc["caps"].size() == vars.size(),
            "\"caps\" must list one entry per variable");
    caps.clear();
    for (const auto& c : doc["caps"]) caps.push_back(cap_from_json(c));
  }
  return RingSpec(std::move(vars), std::move(caps));
}

}  // namespace

nlohmann::json ideal_to_json(const MonomialIdeal& j) {
  nlohmann::json ring;
  ring["vars"] = j.ring().vars();
  nlohmann::json caps = nlohmann::json::array();
  for (const Cap& c : j.ring().caps()) {
    if (c.finite())
      caps.push_back(c.value());
    else
      caps.push_back(nullptr);
  }
  ring["caps"] = caps;
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : j.gens()) gens.push_back(g.exps());
  return nlohmann::json{{"ring", ring}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& doc) {
  require(doc.is_object(), "ideal must be an object");
  require(doc.contains("ring"), "ideal needs a \"ring\"");
  RingSpec ring = ring_from_json(doc["ring"]);
  std::vector<Monomial> gens;
  if (doc.contains("gens")) {
    require(doc["gens"].is_array(), "\"gens\" must be an array");
    for (const auto& g : doc["gens"]) {
      if (g.is_string()) {
        gens.push_back(parse_monomial(g.get<std::string>(), ring));
        continue;
      }
      require(g.is_array() && g.size() == static_cast<size_t>(ring.var_count()),
              "generators must be strings or exponent lists of length " +
                  std::to_string(ring.var_count()));
      std::vector<int> e;
      for (const auto& x : g) {
        require(x.is_number_integer() && x.get<long long>() >= 0,
                "exponents must be nonnegative integers");
        e.push_back(static_cast<int>(x.get<long long>()));
      }
      gens.emplace_back(std::move(e));
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal ideal_from_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::MalformedInput, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return ideal_from_json(doc);
}

nlohmann::json series_to_json(const HilbertSeries& h) {
  return nlohmann::json{{"certified", h.certified_degree()}, {"coeffs", h.coeffs}};
}

nlohmann::json table_to_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : t.entries)
    entries.push_back(nlohmann::json{{"i", k.first}, {"j", k.second}, {"beta", v}});
  return nlohmann::json{{"mode", t.mode == TableMode::OfIdeal ? "ideal" : "quotient"},
                        {"char", t.characteristic},
                        {"entries", entries}};
}

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json doc{{"claim", r.claim},
                     {"instance", r.instance},
                     {"verdict", verdict_name(r.verdict)},
                     {"witness", r.witness},
                     {"notes", r.notes}};
  if (with_timing) doc["millis"] = r.millis;
  return doc;
}

nlohmann::json certificate_to_json(const CancellationCertificate& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cancellation& x : c.cancellations)
    arr.push_back(nlohmann::json{{"i", x.i}, {"j", x.j}, {"count", x.count}});
  return nlohmann::json{{"cancellations", arr}};
}

std::string table_to_text(const BettiTable& t) {
  std::ostringstream out;
  if (t.entries.empty()) {
    out << "(zero table, mode " << (t.mode == TableMode::OfIdeal ? "ideal" : "quotient") << ")\n";
    return out.str();
  }
  int imax = 0;
  int dmin = t.entries.begin()->first.second - t.entries.begin()->first.first;
  int dmax = dmin;
  size_t width = 1;
  for (const auto& [k, v] : t.entries) {
    imax = std::max(imax, k.first);
    dmin = std::min(dmin, k.second - k.first);
    dmax = std::max(dmax, k.second - k.first);
    width = std::max(width, std::to_string(v).size());
  }
  width = std::max(width, std::to_string(dmax).size());
  size_t label = std::to_string(imax).size();
  out << std::string(label + 1, ' ');
  for (int d = dmin; d <= dmax; ++d) out << "  " << std::setw(static_cast<int>(width)) << d;
  out << "\n";
  for (int i = 0; i <= imax; ++i) {
    out << std::setw(static_cast<int>(label)) << i << ":";
    for (int d = dmin; d <= dmax; ++d) {
      long long v = t.at(i, i + d);
      out << "  " << std::setw(static_cast<int>(width));
      if (v == 0)
        out << ".";
      else
        out << v;
    }
    out << "\n";
  }
  return out.str();
}

std::string table_to_csv(const BettiTable& t) {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (const auto& [k, v] : t.entries) out << k.first << "," << k.second << "," << v << "\n";
  return out.str();
}

std::string report_to_text(const VerificationReport& r, bool with_timing) {
  std::ostringstream out;
  out << "claim: " << r.claim << "\n";
  out << "instance: " << r.instance << "\n";
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  if (!r.witness.empty()) out << "witness: " << r.witness << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  if (with_timing) out << "time: " << std::fixed << std::setprecision(1) << r.millis << " ms\n";
  return out.str();
}

std::string dump_json(const nlohmann::json& j) {
  // nlohmann::json already keeps object keys sorted.
  return j.dump(2) + "\n";
}

}  // namespace bettilab
