#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfdiag/diagrams.hpp"
#include "hopfdiag/rational.hpp"

namespace hopfdiag {

/// Connected Bell graph: one black vertex receiving k lines from k white
/// vertices of degree one.
struct BellGenerator {
    unsigned k = 1;
    friend auto operator<=>(const BellGenerator&, const BellGenerator&) = default;
};

/// A generator is a connected diagram of either algebra.
using Generator = std::variant<BellGenerator, DiagDiagram>;

unsigned generator_grade(const Generator& g);

/// Multiset of generators (a juxtaposition of connected diagrams). The empty
/// monomial is the unit e.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Generator> factors);

    const std::vector<Generator>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    unsigned grade() const { return grade_; }
    bool is_unit() const { return factors_.empty(); }
    /// Factors grouped as (generator, multiplicity), in canonical order.
    std::vector<std::pair<Generator, unsigned>> grouped() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Generator> factors_;
    unsigned grade_ = 0;
};

/// Finite rational combination of monomials.
class HopfElement {
public:
    HopfElement() = default;
    static HopfElement of(const Monomial& m, const Rational& c = 1);
    static HopfElement of(const Generator& g, const Rational& c = 1);

    void add(const Monomial& m, const Rational& c);
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    HopfElement& operator+=(const HopfElement& o);
    HopfElement& operator-=(const HopfElement& o);
    friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
    friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
    friend HopfElement operator*(HopfElement a, const Rational& c);
    friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
    friend bool operator==(const HopfElement&, const HopfElement&) = default;

private:
    std::map<Monomial, Rational> terms_;
};

/// Element of the tensor square, keyed by (left, right) monomials.
class TensorElement {
public:
    using Key = std::pair<Monomial, Monomial>;

    TensorElement() = default;
    static TensorElement of(const Monomial& left, const Monomial& right, const Rational& c = 1);
    static TensorElement of(const HopfElement& left, const HopfElement& right);

    void add(const Key& key, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement& operator+=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    /// Componentwise product (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    std::map<Key, Rational> terms_;
};

HopfElement unit();
HopfElement product(const HopfElement& a, const HopfElement& b);
TensorElement coproduct(const HopfElement& h);
TensorElement coproduct(const Monomial& m);
Rational counit(const HopfElement& h);
HopfElement antipode(const HopfElement& h);
bool is_primitive(const HopfElement& h);

/// Multiplication map on the tensor square.
HopfElement multiply(const TensorElement& t);
TensorElement swap_factors(const TensorElement& t);

enum class Algebra { bell, diag };

std::string algebra_name(Algebra a);

/// table[k] lists the generators of grade k (table[0] is empty).
using GeneratorTable = std::vector<std::vector<Generator>>;

GeneratorTable generator_table(Algebra a, unsigned max_grade, std::size_t bound = diagram_grade_bound());

/// All monomials of grade exactly n in canonical order.
std::vector<Monomial> monomials_of_grade(const GeneratorTable& gens, unsigned n);

std::size_t graded_dimension(Algebra a, unsigned n, std::size_t bound = diagram_grade_bound());

/// Outcome of one checked identity.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    /// Monomial arguments of the first failing instance.
    std::vector<Monomial> counterexample;
};

struct AxiomReport {
    std::string algebra;
    unsigned max_grade = 0;
    std::vector<CheckResult> axioms;

    bool all_passed() const;
};

/// Exact check of the bialgebra and antipode identities on every monomial
/// (and every product pair) of grade <= max_grade.
AxiomReport check_hopf_axioms(Algebra a, unsigned max_grade, std::size_t bound = diagram_grade_bound());

/// Images of DIAG generators in BELL.
using GeneratorMap = std::function<HopfElement(const DiagDiagram&)>;

/// D -> b_{grade D} when every white vertex of D has degree one, else 0.
GeneratorMap phi_bell();
/// D -> prod over black vertices b of b_{deg b}.
GeneratorMap phi_contract();
/// D -> 0.
GeneratorMap phi_zero();

/// Explicit generator table with an optional image for unlisted generators.
class TabulatedGeneratorMap {
public:
    TabulatedGeneratorMap() = default;
    TabulatedGeneratorMap(std::map<DiagDiagram, HopfElement> images, std::optional<HopfElement> fallback)
        : images_(std::move(images)), fallback_(std::move(fallback)) {}

    /// Throws std::invalid_argument for a generator with no image.
    HopfElement operator()(const DiagDiagram& d) const;

private:
    std::map<DiagDiagram, HopfElement> images_;
    std::optional<HopfElement> fallback_;
};

struct MorphismReport {
    std::string map_name;
    unsigned max_grade = 0;
    std::vector<CheckResult> conditions;
    bool surjective = false;
    /// BELL generator grades outside the image span.
    std::vector<unsigned> missing_generators;

    bool all_passed() const;
};

/// Extends phi multiplicatively and linearly to DIAG and checks it against
/// the coproduct, counit and antipode on every DIAG monomial of grade <=
/// max_grade, plus whether every b_k (k <= max_grade) lies in the image span.
/// Throws std::invalid_argument if phi is undefined on a generator or maps
/// outside BELL.
MorphismReport check_hopf_morphism(const GeneratorMap& phi, unsigned max_grade, const std::string& map_name,
                                   std::size_t bound = diagram_grade_bound());

} // namespace hopfdiag
