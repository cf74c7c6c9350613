#pragma once

// Text and JSON surfaces. All indices written or read here are 1-based.
//
// PLM text, either
//   d
//   a11 a12 … a1d        (d rows of 0/1)
//   …
// or the single line "plm d: i1 i2 … id" giving the column map.
//
// Stochastic matrix text: "d" then d rows of d entries, each "p/q", an
// integer, or a decimal.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "plm/plm.hpp"
#include "plm/spectral.hpp"
#include "plm/stochastic.hpp"

namespace plm {

/// Throws ParseError (with the offending line) or NotPlm.
Plm parse_plm(std::istream& in);
Plm parse_plm(const std::string& text);
/// Plain-text dense form, newline terminated.
std::string format_plm(const Plm& a);
/// "plm d: i1 … id"
std::string format_colmap(const Plm& a);

StochasticMatrix parse_stochastic(std::istream& in);
StochasticMatrix parse_stochastic(const std::string& text);
std::string format_stochastic(const StochasticMatrix& m);

nlohmann::json to_json(const Plm& a);
nlohmann::json to_json(const PlmClass& c);
nlohmann::json to_json(const PeriodicityVerdict& v);
nlohmann::json to_json(const EigenReport& r);
nlohmann::json to_json(const CharPoly& p);
/// {"dim": d, "terms": [{"lambda": "p/q", "colmap": [...]}, ...]}
nlohmann::json to_json(const Decomposition& dec);
/// Throws ParseError on schema violations.
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace plm
