#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bettilab/betti.hpp"
#include "bettilab/hilbert.hpp"
#include "bettilab/ideal.hpp"
#include "bettilab/io.hpp"
#include "bettilab/lex.hpp"
#include "bettilab/verify.hpp"

using namespace bettilab;

namespace {

struct Options {
  std::string input = "-";
  std::string format = "table";
  int truncate = -1;
  int gen_limit = 16;
  bool timing = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::MalformedInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_doc(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::MalformedInput, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string ring_text(const RingSpec& ring) {
  std::ostringstream out;
  out << "k[";
  for (int i = 0; i < ring.var_count(); ++i) out << (i ? "," : "") << ring.var_name(i);
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

std::string gens_text(const MonomialIdeal& j) {
  if (j.gens().empty()) return "none";
  std::ostringstream out;
  for (size_t i = 0; i < j.gens().size(); ++i)
    out << (i ? ", " : "") << format_monomial(j.gens()[i], j.ring());
  return out.str();
}

void print_ideal(const MonomialIdeal& j, const Options& opt) {
  if (opt.format == "json") {
    std::cout << dump_json(ideal_to_json(j));
  } else {
    std::cout << "ring: " << ring_text(j.ring()) << "\n";
    std::cout << "gens: " << gens_text(j) << "\n";
  }
}

int print_report(const VerificationReport& r, const Options& opt) {
  if (opt.format == "json")
    std::cout << dump_json(report_to_json(r, opt.timing));
  else
    std::cout << report_to_text(r, opt.timing);
  return r.verdict == Verdict::Fails ? 1 : 0;
}

HilbertSeries series_from_json(const nlohmann::json& doc) {
  const nlohmann::json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("coeffs")) fail(Errc::MalformedInput, "series object needs \"coeffs\"");
    arr = &doc["coeffs"];
  }
  if (!arr->is_array()) fail(Errc::MalformedInput, "series must be an array of counts");
  HilbertSeries h;
  for (const auto& c : *arr) {
    if (!c.is_number_integer() || c.get<long long>() < 0)
      fail(Errc::MalformedInput, "series entries must be nonnegative integers");
    h.coeffs.push_back(c.get<long long>());
  }
  if (h.coeffs.empty()) fail(Errc::MalformedInput, "series must not be empty");
  return h;
}

int cmd_hilbert(const Options& opt) {
  MonomialIdeal j = ideal_from_text(slurp(opt.input));
  HilbertSeries hi = hilbert_ideal(j, opt.truncate);
  HilbertSeries hq = hilbert_quotient(j, opt.truncate);
  if (opt.format == "json") {
    std::cout << dump_json(
        nlohmann::json{{"ideal", series_to_json(hi)}, {"quotient", series_to_json(hq)}});
  } else {
    std::cout << "ideal:    " << format_series(hi) << "\n";
    std::cout << "quotient: " << format_series(hq) << "\n";
  }
  return 0;
}

int cmd_layers(const Options& opt) {
  MonomialIdeal j = ideal_from_text(slurp(opt.input));
  int stab = layer_stabilization(j);
  Cap t = j.ring().z_cap();
  int last = t.finite() ? t.value() - 1 : stab;
  if (opt.format == "json") {
    nlohmann::json layers = nlohmann::json::array();
    for (int i = 0; i <= last; ++i) layers.push_back(ideal_to_json(layer(j, i)));
    std::cout << dump_json(nlohmann::json{{"stabilizes_at", stab}, {"layers", layers}});
  } else {
    for (int i = 0; i <= last; ++i)
      std::cout << "layer " << i << ": " << gens_text(layer(j, i)) << "\n";
    std::cout << "stabilizes at " << stab << "\n";
  }
  return 0;
}

int cmd_stable_check(const Options& opt) {
  MonomialIdeal j = ideal_from_text(slurp(opt.input));
  bool has_z = j.ring().var_count() >= 2;
  bool zs = has_z && is_z_stable(j);
  bool ss = is_strongly_stable(j);
  bool ssp = strongly_stable_plus_powers(j);
  if (opt.format == "json") {
    nlohmann::json doc{{"strongly_stable", ss}, {"strongly_stable_plus_powers", ssp}};
    if (has_z)
      doc["z_stable"] = zs;
    else
      doc["z_stable"] = nullptr;
    std::cout << dump_json(doc);
  } else {
    std::cout << "z_stable: " << (has_z ? (zs ? "yes" : "no") : "n/a (one variable)") << "\n";
    std::cout << "strongly_stable: " << (ss ? "yes" : "no") << "\n";
    std::cout << "strongly_stable_plus_powers: " << (ssp ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_lex(const Options& opt) {
  nlohmann::json doc = parse_doc(slurp(opt.input));
  if (!doc.is_object() || !doc.contains("ring") || !doc.contains("series"))
    fail(Errc::MalformedInput, "lex input needs {\"ring\": ..., \"series\": [...]}");
  MonomialIdeal shell = ideal_from_json(nlohmann::json{{"ring", doc["ring"]}});
  HilbertSeries h = series_from_json(doc["series"]);
  print_ideal(lex_ideal_from_series(shell.ring(), h), opt);
  return 0;
}

int cmd_embed(const Options& opt) {
  MonomialIdeal j = ideal_from_text(slurp(opt.input));
  print_ideal(embed(j), opt);
  return 0;
}

int cmd_betti(const Options& opt, const std::string& method, long characteristic) {
  MonomialIdeal j = ideal_from_text(slurp(opt.input));
  BettiTable t;
  std::vector<ConeStep> steps;
  if (method == "oracle") {
    t = betti_oracle(j, characteristic, opt.gen_limit);
  } else if (method == "ek") {
    t = betti_ek(j);
  } else if (method == "layered") {
    t = betti_layered(j, opt.gen_limit);
  } else if (method == "cone") {
    ConeResult res = betti_cone(j, opt.gen_limit);
    t = std::move(res.table);
    steps = std::move(res.steps);
  } else {
    fail(Errc::MalformedInput, "unknown method " + method);
  }
  BettiTable q = to_quotient(t);
  if (opt.format == "json") {
    nlohmann::json doc = table_to_json(q);
    if (method == "cone") {
      nlohmann::json log = nlohmann::json::array();
      for (const ConeStep& s : steps)
        log.push_back(nlohmann::json{{"generator", format_monomial(s.generator, j.ring())},
                                     {"shift", s.shift},
                                     {"colon_ok", s.colon_ok}});
      doc["steps"] = log;
    }
    std::cout << dump_json(doc);
  } else if (opt.format == "csv") {
    std::cout << table_to_csv(q);
  } else {
    for (const ConeStep& s : steps)
      std::cout << "cone step: " << format_monomial(s.generator, j.ring()) << " (degree "
                << s.shift << ")\n";
    std::cout << table_to_text(q);
  }
  return 0;
}

int cmd_cancel(const Options& opt) {
  nlohmann::json doc = parse_doc(slurp(opt.input));
  if (!doc.is_object() || !doc.contains("from") || !doc.contains("to"))
    fail(Errc::MalformedInput, "cancel input needs {\"from\": ideal, \"to\": ideal}");
  MonomialIdeal a = ideal_from_json(doc["from"]);
  MonomialIdeal b = ideal_from_json(doc["to"]);
  BettiTable ta = to_quotient(betti_oracle(a, 0, opt.gen_limit));
  BettiTable tb = to_quotient(betti_oracle(b, 0, opt.gen_limit));
  CancellationResult res = cancellation_certificate(ta, tb);
  if (opt.format == "json") {
    nlohmann::json out = certificate_to_json(res.certificate);
    out["found"] = res.found;
    if (res.obstruction)
      out["obstruction"] = nlohmann::json{{"i", res.obstruction->first}, {"j", res.obstruction->second}};
    std::cout << dump_json(out);
  } else if (res.found) {
    if (res.certificate.cancellations.empty()) {
      std::cout << "tables agree; empty certificate\n";
    } else {
      for (const Cancellation& c : res.certificate.cancellations)
        std::cout << "cancel " << c.count << " at rows (" << c.i << "," << c.i + 1 << "), degree "
                  << c.j << "\n";
    }
  } else {
    std::cout << "no certificate: forced count goes negative at (" << res.obstruction->first << ","
              << res.obstruction->second << ")\n";
  }
  return res.found ? 0 : 1;
}

int cmd_shakin(const Options& opt) {
  nlohmann::json doc = parse_doc(slurp(opt.input));
  if (!doc.is_object() || !doc.contains("ring") || !doc.contains("ideal"))
    fail(Errc::MalformedInput,
         "shakin input needs {\"ring\": ..., \"ideal\": [...], \"pieces\": [[...], ...]}");
  MonomialIdeal j =
      ideal_from_json(nlohmann::json{{"ring", doc["ring"]}, {"gens", doc["ideal"]}});
  std::vector<MonomialIdeal> pieces;
  if (doc.contains("pieces")) {
    if (!doc["pieces"].is_array()) fail(Errc::MalformedInput, "\"pieces\" must be an array");
    for (const auto& p : doc["pieces"])
      pieces.push_back(ideal_from_json(nlohmann::json{{"ring", doc["ring"]}, {"gens", p}}));
  }
  return print_report(check_shakin(pieces, j, opt.gen_limit), opt);
}

struct FuzzOutcome {
  std::string text;
  bool failed = false;
};

FuzzOutcome fuzz_case(const std::string& kind, uint64_t seed, int gen_limit) {
  FuzzOutcome out;
  std::ostringstream os;
  auto run_check = [&](const char* name, const MonomialIdeal& inst, auto&& check) {
    VerificationReport r = check(inst);
    if (r.verdict != Verdict::Fails) {
      os << name << "=" << verdict_name(r.verdict) << " ";
      return;
    }
    out.failed = true;
    MonomialIdeal small = shrink_ideal(inst, [&](const MonomialIdeal& cand) {
      return check(cand).verdict == Verdict::Fails;
    });
    VerificationReport rs = check(small);
    os << "\n" << name << " FAILED, shrunk instance:\n" << report_to_text(rs, false);
  };
  try {
    if (kind == "plain") {
      RingSpec ring({"x1", "x2", "x3"},
                    {Cap::unbounded(), Cap::unbounded(), Cap::unbounded()});
      MonomialIdeal j = random_ideal(IdealKind::Plain, ring, seed, GenBounds{8, 5});
      os << "gens=" << j.gens().size() << " ";
      run_check("dominance", j,
                [&](const MonomialIdeal& x) { return check_lex_dominance(x, gen_limit); });
    } else if (kind == "stable") {
      std::vector<Cap> caps = (seed % 2 == 0)
                                  ? std::vector<Cap>{Cap::bounded(2), Cap::bounded(2), Cap::bounded(2)}
                                  : std::vector<Cap>{Cap::bounded(2), Cap::bounded(3), Cap::bounded(3)};
      RingSpec capped({"x1", "x2", "x3"}, caps);
      MonomialIdeal stable =
          random_ideal(IdealKind::StronglyStable, capped.uncapped(), seed, GenBounds{10, 3});
      MonomialIdeal j(capped, stable.gens());
      os << ring_text(capped) << " gens=" << j.gens().size() << " ";
      run_check("dominance", j,
                [&](const MonomialIdeal& x) { return check_lex_dominance(x, gen_limit); });
      run_check("charfree", j, [&](const MonomialIdeal& x) {
        return check_char_independence(x, {2, 3, 5}, gen_limit);
      });
    } else if (kind == "zstable") {
      RingSpec ring = random_layered_ring(seed, 3);
      MonomialIdeal j = random_ideal(IdealKind::ZStable, ring, seed, GenBounds{10, 4});
      os << ring_text(ring) << " gens=" << j.gens().size() << " ";
      run_check("theorem31", j,
                [&](const MonomialIdeal& x) { return check_theorem31(x, gen_limit); });
      run_check("restriction", j,
                [&](const MonomialIdeal& x) { return check_restriction(x); });
    } else {
      fail(Errc::MalformedInput, "unknown kind " + kind);
    }
  } catch (const Error& e) {
    out.failed = true;
    os << "ERROR " << errc_name(e.code()) << ": " << e.what();
  }
  out.text = os.str();
  return out;
}

int cmd_fuzz(const std::string& kind, uint64_t seed, int cases, int gen_limit) {
  if (kind != "plain" && kind != "stable" && kind != "zstable")
    fail(Errc::MalformedInput, "unknown kind " + kind);
  int threads = 1;
  if (const char* env = std::getenv("BETTI_LAB_THREADS"))
    threads = std::max(1, std::min(64, std::atoi(env)));
  threads = std::min(threads, std::max(1, cases));
  std::vector<FuzzOutcome> results(static_cast<size_t>(cases));
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= cases) return;
      results[static_cast<size_t>(i)] = fuzz_case(kind, seed + static_cast<uint64_t>(i), gen_limit);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  int fails = 0;
  for (int i = 0; i < cases; ++i) {
    const FuzzOutcome& r = results[static_cast<size_t>(i)];
    if (r.failed) ++fails;
    std::cout << "case " << i << " seed " << seed + static_cast<uint64_t>(i) << ": " << r.text
              << "\n";
  }
  std::cout << cases << " cases, " << fails << " failed\n";
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bettilab: exact graded Betti tables, lex embeddings, and dominance checks for "
      "monomial ideals in pure-power quotient rings"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--truncate", opt.truncate, "Series truncation degree (default: automatic)");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--limit-gens", opt.gen_limit,
                 "Refuse lattice enumeration past this many generators")
      ->capture_default_str();
  app.add_flag("--timing", opt.timing, "Include wall-clock timing in reports");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Ideal file, or - for stdin")->capture_default_str();
  };

  CLI::App* hilbert = app.add_subcommand("hilbert", "Ideal and quotient Hilbert series");
  add_input(hilbert);
  CLI::App* layers =
      app.add_subcommand("layers", "Layer ideals along the last variable and the stabilization");
  add_input(layers);
  CLI::App* stable = app.add_subcommand("stable-check", "Stability properties of an ideal");
  add_input(stable);
  CLI::App* lexc = app.add_subcommand(
      "lex", "Lex-segment ideal with a prescribed member-count series; input {ring, series}");
  add_input(lexc);
  CLI::App* embedc =
      app.add_subcommand("embed", "Lex-segment image with the same Hilbert series");
  add_input(embedc);

  std::string method = "oracle";
  long characteristic = 0;
  CLI::App* betti = app.add_subcommand("betti", "Graded Betti table of the quotient");
  betti->add_option("--method", method, "Computation method")
      ->check(CLI::IsMember({"oracle", "ek", "layered", "cone"}))
      ->capture_default_str();
  betti->add_option("--char", characteristic, "Coefficient field characteristic (0 or a prime)")
      ->capture_default_str();
  add_input(betti);

  CLI::App* verify = app.add_subcommand("verify", "Run one verification and report");
  verify->require_subcommand(1);
  CLI::App* v_thm = verify->add_subcommand("theorem31", "Betti dominance of the lex image");
  add_input(v_thm);
  CLI::App* v_dom = verify->add_subcommand("dominance", "Lex dominance without the z-layer gate");
  add_input(v_dom);
  CLI::App* v_res =
      verify->add_subcommand("restriction", "Sections along powers of the last variable");
  add_input(v_res);
  std::vector<long> primes{2, 3, 5};
  CLI::App* v_chr = verify->add_subcommand("charfree", "Betti table independence of characteristic");
  v_chr->add_option("--primes", primes, "Primes to compare against characteristic 0")
      ->capture_default_str();
  add_input(v_chr);
  CLI::App* v_can =
      verify->add_subcommand("cancel", "Consecutive-cancellation certificate between two ideals");
  add_input(v_can);
  long counter_p = 2;
  CLI::App* v_ctr =
      verify->add_subcommand("counterexample", "Reproduce the positive-characteristic failure");
  v_ctr->add_option("--char", counter_p, "Prime characteristic")->capture_default_str();
  CLI::App* v_shk =
      verify->add_subcommand("shakin", "Piecewise-lex dominance; input {ring, ideal, pieces}");
  add_input(v_shk);

  std::string kind = "plain";
  uint64_t seed = 1;
  int cases = 20;
  CLI::App* fuzz = app.add_subcommand("fuzz", "Randomized verification sweep");
  fuzz->add_option("--kind", kind, "Instance family")
      ->check(CLI::IsMember({"plain", "stable", "zstable"}))
      ->capture_default_str();
  fuzz->add_option("--seed", seed, "Base seed")->capture_default_str();
  fuzz->add_option("--cases", cases, "Number of cases")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hilbert->parsed()) return cmd_hilbert(opt);
    if (layers->parsed()) return cmd_layers(opt);
    if (stable->parsed()) return cmd_stable_check(opt);
    if (lexc->parsed()) return cmd_lex(opt);
    if (embedc->parsed()) return cmd_embed(opt);
    if (betti->parsed()) return cmd_betti(opt, method, characteristic);
    if (verify->parsed()) {
      if (v_thm->parsed())
        return print_report(check_theorem31(ideal_from_text(slurp(opt.input)), opt.gen_limit), opt);
      if (v_dom->parsed())
        return print_report(check_lex_dominance(ideal_from_text(slurp(opt.input)), opt.gen_limit),
                            opt);
      if (v_res->parsed())
        return print_report(check_restriction(ideal_from_text(slurp(opt.input))), opt);
      if (v_chr->parsed())
        return print_report(
            check_char_independence(ideal_from_text(slurp(opt.input)), primes, opt.gen_limit), opt);
      if (v_can->parsed()) return cmd_cancel(opt);
      if (v_ctr->parsed()) return print_report(counterexample_charp(counter_p), opt);
      if (v_shk->parsed()) return cmd_shakin(opt);
    }
    if (fuzz->parsed()) return cmd_fuzz(kind, seed, cases, opt.gen_limit);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
