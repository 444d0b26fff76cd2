#include "axtower/io.hpp"

#include "axtower/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace axtower {

namespace {

using i64 = std::int64_t;
using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

i64 as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<i64>();
}

std::vector<i64> as_int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of integers");
    std::vector<i64> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Field parse_field(const json& j, const std::string& where) {
    const i64 p = as_int(member(j, "p", where), where + ".p");
    std::vector<i64> modulus{0, 1};
    if (j.contains("modulus")) modulus = as_int_list(j.at("modulus"), where + ".modulus");
    if (j.contains("f") && as_int(j.at("f"), where + ".f") != static_cast<i64>(modulus.size()) - 1)
        throw ParseError(where + ": f does not match the modulus degree");
    return ResidueField::make(p, modulus);
}

Config parse_config(const json& j, const std::string& where) {
    Field field = parse_field(j, where);
    const int e = j.contains("e") ? static_cast<int>(as_int(j.at("e"), where + ".e")) : 1;
    int precision = j.contains("precision_P") ? static_cast<int>(as_int(j.at("precision_P"), where + ".precision_P")) : 0;
    if (const int o = precision_override()) precision = o;
    if (!j.contains("eisenstein")) return TowerConfig::pure(field, e, precision);
    const json& E = j.at("eisenstein");
    if (!E.is_array()) throw ParseError(where + ".eisenstein: expected a list of coefficient lists");
    std::vector<WCoeffs> coeffs;
    for (std::size_t i = 0; i < E.size(); ++i)
        coeffs.push_back(as_int_list(E[i], where + ".eisenstein[" + std::to_string(i) + "]"));
    return TowerConfig::make(field, e, coeffs, precision);
}

ResidueElement parse_residue(const Field& k, const json& j, const std::string& where) {
    auto c = as_int_list(j, where);
    if (static_cast<int>(c.size()) != k->degree())
        throw ParseError(where + ": expected " + std::to_string(k->degree()) + " coordinates");
    for (auto& v : c) v = ((v % k->p()) + k->p()) % k->p();
    return ResidueElement(k, c);
}

std::vector<ResidueElement> parse_residues(const Field& k, const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of coordinate lists");
    std::vector<ResidueElement> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_residue(k, j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

/// Representative in (-m/2, m/2], so -1 prints as -1 rather than p^P - 1.
std::vector<i64> centered(const std::vector<i64>& c, i64 m) {
    std::vector<i64> out;
    for (i64 v : c) out.push_back(v > m / 2 ? v - m : v);
    return out;
}

json field_json(const Field& k) { return {{"p", k->p()}, {"f", k->degree()}, {"modulus", k->modulus()}}; }

json config_json(const Config& cfg) {
    json j = field_json(cfg->field());
    j["e"] = cfg->e();
    json E = json::array();
    for (const auto& c : cfg->eisenstein()) E.push_back(centered(c, cfg->modulus()));
    j["eisenstein"] = E;
    j["precision_P"] = cfg->precision();
    return j;
}

}  // namespace

int precision_override() {
    const char* env = std::getenv("AX_PRECISION");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw ParseError(std::string("AX_PRECISION is not a positive integer: ") + env);
    return static_cast<int>(v);
}

Rational parse_rational(const std::string& text) {
    try {
        std::size_t pos = 0;
        const i64 num = std::stoll(text, &pos);
        if (pos == text.size()) return Rational(num);
        if (text[pos] != '/') throw ParseError("bad rational \"" + text + "\"");
        std::size_t pos2 = 0;
        const std::string rest = text.substr(pos + 1);
        const i64 den = std::stoll(rest, &pos2);
        if (pos2 != rest.size() || den == 0) throw ParseError("bad rational \"" + text + "\"");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw ParseError("bad rational \"" + text + "\"");
    }
}

Valuation parse_valuation(const std::string& text) {
    if (text == "+inf") return Valuation::infinite();
    if (text.rfind(">=", 0) == 0) {
        std::size_t i = 2;
        while (i < text.size() && text[i] == ' ') ++i;
        return Valuation::at_least(parse_rational(text.substr(i)));
    }
    return Valuation::exact(parse_rational(text));
}

TowerElement parse_element(const std::string& text, const std::string& where) {
    const json j = parse_json(text, where);
    const Config cfg = parse_config(member(j, "config", where), where + ": config");
    const int level = static_cast<int>(as_int(member(j, "level", where), where + ": level"));
    if (level < 0) throw ParseError(where + ": level must be >= 0");
    const i64 shift = j.contains("shift") ? as_int(j.at("shift"), where + ": shift") : 0;
    const json& cj = member(j, "coeffs", where);
    if (!cj.is_array()) throw ParseError(where + ": coeffs must be a list");
    std::vector<WCoeffs> coeffs;
    for (std::size_t i = 0; i < cj.size(); ++i) {
        auto c = as_int_list(cj[i], where + ": coeffs[" + std::to_string(i) + "]");
        if (static_cast<int>(c.size()) > cfg->f())
            throw ParseError(where + ": coeffs[" + std::to_string(i) + "] has more than f coordinates");
        coeffs.push_back(std::move(c));
    }
    TowerElement x = TowerElement::from_coeffs(cfg, level, shift, coeffs);
    if (j.contains("cutoff") && !j.at("cutoff").is_null()) x = x.with_cutoff(as_int(j.at("cutoff"), where + ": cutoff"));
    return x;
}

TowerElement read_element(const std::string& path) { return parse_element(slurp(path), path); }

std::string element_to_json(const TowerElement& x) {
    const auto& cfg = x.config();
    json j;
    j["config"] = config_json(cfg);
    j["level"] = x.level();
    j["shift"] = x.shift();
    json coeffs = json::array();
    for (i64 i = 0; i < x.width(); ++i) coeffs.push_back(centered(x.coefficient(i), cfg->modulus()));
    j["coeffs"] = coeffs;
    j["cutoff"] = x.is_exact_zero() ? json(nullptr) : json(x.cutoff());
    return j.dump();
}

std::string config_to_json(const Config& cfg) { return config_json(cfg).dump(); }

std::string sequence_to_string(const std::vector<ResidueElement>& seq) {
    std::string s = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + seq[i].to_string();
    return s + "]";
}

TwistFile read_twist_file(const std::string& path) {
    const json j = parse_json(slurp(path), path);
    TwistFile t{parse_field(member(j, "field", path), path + ": field"), {}, {}, {}};
    if (j.contains("sequence")) t.sequence = parse_residues(t.field, j.at("sequence"), path + ": sequence");
    if (j.contains("seed")) t.seed = parse_residues(t.field, j.at("seed"), path + ": seed");
    if (j.contains("relation")) {
        auto d = parse_residues(t.field, j.at("relation"), path + ": relation");
        if (d.empty()) throw ParseError(path + ": relation is empty");
        t.relation.emplace(t.field, std::move(d));
    }
    return t;
}

WitnessFile read_witness_file(const std::string& path) {
    const json j = parse_json(slurp(path), path);
    Config cfg = parse_config(member(j, "config", path), path + ": config");
    auto d = parse_residues(cfg->field(), member(j, "relation", path), path + ": relation");
    if (d.empty()) throw ParseError(path + ": relation is empty");
    TwistRelation rel(cfg->field(), std::move(d));
    auto digits = parse_residues(cfg->field(), member(j, "digits", path), path + ": digits");
    return {cfg, rel, digits};
}

std::map<i64, Valuation> read_valuation_file(const std::string& path) {
    const json j = parse_json(slurp(path), path);
    const json& v = member(j, "valuations", path);
    if (!v.is_object()) throw ParseError(path + ": valuations must be an object");
    std::map<i64, Valuation> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string where = path + ": valuations." + it.key();
        if (!it.value().is_string()) throw ParseError(where + ": expected a string");
        try {
            out.emplace(std::stoll(it.key()), parse_valuation(it.value().get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const std::logic_error&) {
            throw ParseError(where + ": degree is not an integer");
        }
    }
    return out;
}

}  // namespace axtower
