#pragma once

#include <string>

#include <json.hpp>

#include "bettilab/betti.hpp"
#include "bettilab/hilbert.hpp"
#include "bettilab/ideal.hpp"
#include "bettilab/verify.hpp"

namespace bettilab {

// Document form of an ideal: {"ring": {"vars": [...], "caps": [int|null,...]},
// "gens": [[ints] | "x^2*y", ...]}. Serialization is canonical (stored
// generator order, exponent-list gens, lowercase variable names), so
// parse-then-serialize is the identity on canonical documents.
nlohmann::json ideal_to_json(const MonomialIdeal& j);
MonomialIdeal ideal_from_json(const nlohmann::json& doc);
MonomialIdeal ideal_from_text(const std::string& text);

nlohmann::json series_to_json(const HilbertSeries& h);
nlohmann::json table_to_json(const BettiTable& t);
nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = false);
nlohmann::json certificate_to_json(const CancellationCertificate& c);

// Fixed-width Macaulay-style text: rows are homological index i, columns
// are j - i.
std::string table_to_text(const BettiTable& t);
std::string table_to_csv(const BettiTable& t);

std::string report_to_text(const VerificationReport& r, bool with_timing = false);

// Canonical dump: 2-space indent, keys sorted, deterministic.
std::string dump_json(const nlohmann::json& j);

}  // namespace bettilab
