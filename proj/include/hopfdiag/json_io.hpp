#pragma once

// nlohmann::json adapters for the external file schemas:
//   rational        "p/q" string ("0" and integers without "/1"); integer
//                   JSON numbers are accepted on input
//   EGFSeries       {"order": N, "coeffs": ["p/q", ...]}
//   ZPolynomial     {"terms": [{"zbar": p, "z": q, "coeff": "p/q"}]}
//   DiagDiagram     {"mult": [[...]]}
//   generator       {"bell": k} or {"diag": {"mult": [[...]]}}
//   HopfElement     {"terms": [{"monomial": [<generator>...], "coeff": "p/q"}]}

#include <json.hpp>

#include "hopfdiag/boson.hpp"
#include "hopfdiag/diagrams.hpp"
#include "hopfdiag/hopf.hpp"
#include "hopfdiag/rational.hpp"
#include "hopfdiag/series.hpp"

namespace hopfdiag {

using json = nlohmann::ordered_json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const EGFSeries& s);
EGFSeries series_from_json(const json& j);

/// Includes a "text" rendering next to the terms; input ignores it and also
/// accepts a bare rational for a constant polynomial.
void to_json(json& j, const ZPolynomial& p);
ZPolynomial zpolynomial_from_json(const json& j);

void to_json(json& j, const NormalForm& f);

void to_json(json& j, const DiagDiagram& d);
/// Canonicalizes whatever matrix is given.
DiagDiagram diagram_from_json(const json& j);

void to_json(json& j, const Generator& g);
Generator generator_from_json(const json& j);
void to_json(json& j, const Monomial& m);
Monomial monomial_from_json(const json& j);
void to_json(json& j, const HopfElement& h);
HopfElement hopf_element_from_json(const json& j);

void to_json(json& j, const CheckResult& r);
void to_json(json& j, const AxiomReport& r);
void to_json(json& j, const MorphismReport& r);

/// {"entries": [{"diag": {"mult": ...}, "image": <HopfElement>}...],
///  "default": <HopfElement>} with both keys optional. Diagrams must be
/// connected and images must lie in BELL.
TabulatedGeneratorMap generator_map_from_json(const json& j);

} // namespace hopfdiag
