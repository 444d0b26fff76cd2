#pragma once

#include "axtower/tower.hpp"
#include "axtower/twistrec.hpp"
#include "axtower/valuation.hpp"

#include <map>
#include <optional>
#include <string>

namespace axtower {

/// AX_PRECISION from the environment, or 0 when unset.
int precision_override();

Rational parse_rational(const std::string& text);
/// Inverse of Valuation::to_string.
Valuation parse_valuation(const std::string& text);

/// Element file: {"config": {p, f, modulus, e, eisenstein, precision_P},
/// "level", "shift", "coeffs", optional "cutoff"}.
TowerElement parse_element(const std::string& text, const std::string& where = "<input>");
TowerElement read_element(const std::string& path);
/// Canonical single-line JSON, readable by parse_element.
std::string element_to_json(const TowerElement& x);
std::string config_to_json(const Config& cfg);

/// "[[c_0,...],[...],...]"
std::string sequence_to_string(const std::vector<ResidueElement>& seq);

/// {"field": {p, f, modulus}, optional "sequence", "relation", "seed"}.
struct TwistFile {
    Field field;
    std::optional<TwistSequence> sequence;
    std::optional<TwistRelation> relation;
    std::optional<TwistSequence> seed;
};

TwistFile read_twist_file(const std::string& path);

/// {"config": {...}, "relation": [...], "digits": [...]}.
struct WitnessFile {
    Config config;
    TwistRelation relation;
    std::vector<ResidueElement> digits;
};

WitnessFile read_witness_file(const std::string& path);

/// {"valuations": {"0": "1", "1": "0", "2": "+inf", ...}}.
std::map<std::int64_t, Valuation> read_valuation_file(const std::string& path);

}  // namespace axtower
