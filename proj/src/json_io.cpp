#include "hopfdiag/json_io.hpp"

#include <stdexcept>
#include <string>

namespace hopfdiag {

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw std::invalid_argument("bad JSON schema: " + msg); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing key '") + key + "'");
    return j.at(key);
}

} // namespace

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void from_json(const json& j, Rational& r) {
    if (j.is_string()) r = Rational::parse(j.get<std::string>());
    else if (j.is_number_integer()) r = Rational(BigInt(j.dump()));
    else schema_error("rational must be a \"p/q\" string or an integer");
}

void to_json(json& j, const EGFSeries& s) {
    j = json::object();
    j["order"] = s.order();
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c);
    j["coeffs"] = std::move(coeffs);
}

EGFSeries series_from_json(const json& j) {
    const auto order = member(j, "order").get<std::size_t>();
    const auto& coeffs = member(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1) schema_error("coeffs must hold order+1 entries");
    std::vector<Rational> c;
    for (const auto& v : coeffs) c.push_back(v.get<Rational>());
    return EGFSeries(std::move(c));
}

void to_json(json& j, const ZPolynomial& p) {
    j = json::object();
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) terms.push_back({{"zbar", key.first}, {"z", key.second}, {"coeff", c}});
    j["terms"] = std::move(terms);
    j["text"] = p.to_string();
}

ZPolynomial zpolynomial_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return ZPolynomial(j.get<Rational>());
    const auto& terms = member(j, "terms");
    if (!terms.is_array()) schema_error("terms must be an array");
    ZPolynomial p;
    for (const auto& t : terms)
        p.add({member(t, "zbar").get<unsigned>(), member(t, "z").get<unsigned>()}, member(t, "coeff").get<Rational>());
    return p;
}

void to_json(json& j, const NormalForm& f) {
    j = json::object();
    json terms = json::array();
    for (const auto& [key, c] : f.terms())
        terms.push_back({{"creation", key.first}, {"annihilation", key.second}, {"coeff", c.get_str()}});
    j["terms"] = std::move(terms);
    j["text"] = f.to_string();
}

void to_json(json& j, const DiagDiagram& d) { j = json{{"mult", d.matrix()}}; }

DiagDiagram diagram_from_json(const json& j) {
    const auto& m = member(j, "mult");
    if (!m.is_array()) schema_error("mult must be an array of rows");
    return canonicalize(m.get<MultMatrix>());
}

void to_json(json& j, const Generator& g) {
    if (const auto* b = std::get_if<BellGenerator>(&g)) j = json{{"bell", b->k}};
    else j = json{{"diag", std::get<DiagDiagram>(g)}};
}

Generator generator_from_json(const json& j) {
    if (j.is_object() && j.contains("bell")) {
        const auto k = j.at("bell").get<unsigned>();
        if (k == 0) schema_error("bell generator grade must be positive");
        return BellGenerator{k};
    }
    if (j.is_object() && j.contains("diag")) {
        auto d = diagram_from_json(j.at("diag"));
        if (!is_connected(d)) schema_error("diag generator must be a connected diagram");
        return d;
    }
    schema_error("generator must be {\"bell\": k} or {\"diag\": {...}}");
}

void to_json(json& j, const Monomial& m) {
    j = json::array();
    for (const auto& g : m.factors()) j.push_back(g);
}

Monomial monomial_from_json(const json& j) {
    if (!j.is_array()) schema_error("monomial must be an array of generators");
    std::vector<Generator> factors;
    for (const auto& g : j) factors.push_back(generator_from_json(g));
    return Monomial(std::move(factors));
}

void to_json(json& j, const HopfElement& h) {
    json terms = json::array();
    for (const auto& [m, c] : h.terms()) terms.push_back({{"monomial", m}, {"coeff", c}});
    j = json{{"terms", std::move(terms)}};
}

HopfElement hopf_element_from_json(const json& j) {
    const auto& terms = member(j, "terms");
    if (!terms.is_array()) schema_error("terms must be an array");
    HopfElement h;
    for (const auto& t : terms) h.add(monomial_from_json(member(t, "monomial")), member(t, "coeff").get<Rational>());
    return h;
}

void to_json(json& j, const CheckResult& r) {
    j = json::object();
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["checked"] = r.checked;
    if (r.passed) j["counterexample"] = nullptr;
    else j["counterexample"] = r.counterexample;
}

void to_json(json& j, const AxiomReport& r) {
    j = json::object();
    j["algebra"] = r.algebra;
    j["max_grade"] = r.max_grade;
    j["all_passed"] = r.all_passed();
    j["axioms"] = r.axioms;
}

void to_json(json& j, const MorphismReport& r) {
    j = json::object();
    j["map"] = r.map_name;
    j["max_grade"] = r.max_grade;
    j["all_passed"] = r.all_passed();
    j["conditions"] = r.conditions;
    j["surjective"] = r.surjective;
    j["missing_generators"] = r.missing_generators;
}

TabulatedGeneratorMap generator_map_from_json(const json& j) {
    if (!j.is_object()) schema_error("generator map must be an object");
    auto bell_image = [](const json& v) {
        auto h = hopf_element_from_json(v);
        for (const auto& [m, c] : h.terms())
            for (const auto& g : m.factors())
                if (!std::holds_alternative<BellGenerator>(g)) schema_error("images must lie in BELL");
        return h;
    };
    std::map<DiagDiagram, HopfElement> images;
    if (j.contains("entries")) {
        const auto& entries = j.at("entries");
        if (!entries.is_array()) schema_error("entries must be an array");
        for (const auto& e : entries) {
            auto d = diagram_from_json(member(e, "diag"));
            if (!is_connected(d)) schema_error("map entries must be connected diagrams");
            if (!images.emplace(d, bell_image(member(e, "image"))).second)
                schema_error("duplicate diagram in map entries");
        }
    }
    std::optional<HopfElement> fallback;
    if (j.contains("default")) fallback = bell_image(j.at("default"));
    return TabulatedGeneratorMap(std::move(images), std::move(fallback));
}

} // namespace hopfdiag
