#include "hopfdiag/hopf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hopfdiag/errors.hpp"

namespace hopfdiag {

unsigned generator_grade(const Generator& g) {
    return std::visit(
        [](const auto& x) -> unsigned {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, BellGenerator>) return x.k;
            else return x.grade();
        },
        g);
}

Monomial::Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (const auto& g : factors_) {
        const auto gr = generator_grade(g);
        if (gr == 0) throw std::invalid_argument("generators must have positive grade");
        grade_ += gr;
    }
}

std::vector<std::pair<Generator, unsigned>> Monomial::grouped() const {
    std::vector<std::pair<Generator, unsigned>> out;
    for (const auto& g : factors_) {
        if (!out.empty() && out.back().first == g) ++out.back().second;
        else out.emplace_back(g, 1u);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.size() + b.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
               std::back_inserter(m.factors_));
    m.grade_ = a.grade_ + b.grade_;
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.grade_ <=> b.grade_; c != 0) return c;
    if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
        if (auto c = a.factors_[i] <=> b.factors_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

HopfElement HopfElement::of(const Monomial& m, const Rational& c) {
    HopfElement h;
    h.add(m, c);
    return h;
}

HopfElement HopfElement::of(const Generator& g, const Rational& c) { return of(Monomial({g}), c); }

void HopfElement::add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational HopfElement::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

HopfElement operator*(HopfElement a, const Rational& c) {
    if (c.is_zero()) return {};
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
    HopfElement out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
}

TensorElement TensorElement::of(const Monomial& left, const Monomial& right, const Rational& c) {
    TensorElement t;
    t.add({left, right}, c);
    return t;
}

TensorElement TensorElement::of(const HopfElement& left, const HopfElement& right) {
    TensorElement t;
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) t.add({ml, mr}, cl * cr);
    return t;
}

void TensorElement::add(const Key& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
    return out;
}

HopfElement unit() { return HopfElement::of(Monomial()); }

HopfElement product(const HopfElement& a, const HopfElement& b) { return a * b; }

// Delta(g^a) = sum_j C(a,j) g^j ⊗ g^(a-j) for each distinct factor g, and
// the coproduct of a monomial is the product over its distinct factors.
TensorElement coproduct(const Monomial& m) {
    TensorElement out = TensorElement::of(Monomial(), Monomial());
    for (const auto& [g, a] : m.grouped()) {
        TensorElement factor;
        for (unsigned j = 0; j <= a; ++j) {
            Monomial left(std::vector<Generator>(j, g));
            Monomial right(std::vector<Generator>(a - j, g));
            factor.add({std::move(left), std::move(right)}, Rational(binomial(a, j)));
        }
        out = out * factor;
    }
    return out;
}

TensorElement coproduct(const HopfElement& h) {
    TensorElement out;
    for (const auto& [m, c] : h.terms()) {
        const auto delta = coproduct(m);
        for (const auto& [k, v] : delta.terms()) out.add(k, c * v);
    }
    return out;
}

Rational counit(const HopfElement& h) { return h.coefficient(Monomial()); }

HopfElement antipode(const HopfElement& h) {
    HopfElement out;
    for (const auto& [m, c] : h.terms()) out.add(m, m.size() % 2 == 0 ? c : -c);
    return out;
}

bool is_primitive(const HopfElement& h) {
    const HopfElement e = unit();
    return coproduct(h) == TensorElement::of(h, e) + TensorElement::of(e, h);
}

HopfElement multiply(const TensorElement& t) {
    HopfElement out;
    for (const auto& [k, c] : t.terms()) out.add(k.first * k.second, c);
    return out;
}

TensorElement swap_factors(const TensorElement& t) {
    TensorElement out;
    for (const auto& [k, c] : t.terms()) out.add({k.second, k.first}, c);
    return out;
}

std::string algebra_name(Algebra a) { return a == Algebra::bell ? "bell" : "diag"; }

GeneratorTable generator_table(Algebra a, unsigned max_grade, std::size_t bound) {
    GeneratorTable table(max_grade + 1);
    if (a == Algebra::diag && max_grade > bound) throw BoundExceeded("DIAG generator grade", max_grade, bound);
    for (unsigned k = 1; k <= max_grade; ++k) {
        if (a == Algebra::bell) {
            table[k].emplace_back(BellGenerator{k});
        } else {
            for (auto& d : connected_diagrams(k, bound)) table[k].emplace_back(std::move(d));
        }
    }
    return table;
}

std::vector<Monomial> monomials_of_grade(const GeneratorTable& gens, unsigned n) {
    std::vector<Generator> flat;
    for (unsigned k = 1; k <= n && k < gens.size(); ++k) flat.insert(flat.end(), gens[k].begin(), gens[k].end());
    std::vector<Monomial> out;
    std::vector<Generator> chosen;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned remaining) {
        if (remaining == 0) {
            out.emplace_back(chosen);
            return;
        }
        for (std::size_t i = start; i < flat.size(); ++i) {
            const auto g = generator_grade(flat[i]);
            if (g > remaining) continue;
            chosen.push_back(flat[i]);
            rec(i, remaining - g);
            chosen.pop_back();
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t graded_dimension(Algebra a, unsigned n, std::size_t bound) {
    if (a == Algebra::bell && n > kDefaultIntegerPartitionBound)
        throw BoundExceeded("BELL graded dimension", n, kDefaultIntegerPartitionBound);
    return monomials_of_grade(generator_table(a, n, bound), n).size();
}

namespace {

using Triple = std::array<Monomial, 3>;
using TripleTensor = std::map<Triple, Rational>;

void add_triple(TripleTensor& t, const Triple& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

TripleTensor coproduct_left(const TensorElement& t) {
    TripleTensor out;
    for (const auto& [k, c] : t.terms()) {
        const auto delta = coproduct(k.first);
        for (const auto& [kk, cc] : delta.terms()) add_triple(out, {kk.first, kk.second, k.second}, c * cc);
    }
    return out;
}

TripleTensor coproduct_right(const TensorElement& t) {
    TripleTensor out;
    for (const auto& [k, c] : t.terms()) {
        const auto delta = coproduct(k.second);
        for (const auto& [kk, cc] : delta.terms()) add_triple(out, {k.first, kk.first, kk.second}, c * cc);
    }
    return out;
}

HopfElement counit_left(const TensorElement& t) {
    HopfElement out;
    for (const auto& [k, c] : t.terms())
        if (k.first.is_unit()) out.add(k.second, c);
    return out;
}

HopfElement counit_right(const TensorElement& t) {
    HopfElement out;
    for (const auto& [k, c] : t.terms())
        if (k.second.is_unit()) out.add(k.first, c);
    return out;
}

HopfElement antipode_convolution(const TensorElement& t, bool left) {
    HopfElement out;
    for (const auto& [k, c] : t.terms()) {
        const auto& s_side = left ? k.first : k.second;
        const Rational sign = s_side.size() % 2 == 0 ? Rational(1) : Rational(-1);
        out.add(k.first * k.second, c * sign);
    }
    return out;
}

CheckResult named(const char* name) {
    CheckResult r;
    r.name = name;
    return r;
}

void record(CheckResult& r, bool ok, std::vector<Monomial> args) {
    ++r.checked;
    if (!ok && r.passed) {
        r.passed = false;
        r.counterexample = std::move(args);
    }
}

} // namespace

bool AxiomReport::all_passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const CheckResult& r) { return r.passed; });
}

AxiomReport check_hopf_axioms(Algebra a, unsigned max_grade, std::size_t bound) {
    const auto gens = generator_table(a, max_grade, bound);
    std::vector<Monomial> basis;
    for (unsigned n = 0; n <= max_grade; ++n) {
        auto ms = monomials_of_grade(gens, n);
        basis.insert(basis.end(), ms.begin(), ms.end());
    }

    auto coassoc = named("coassociativity"), counit_l = named("counit_left"), counit_r = named("counit_right"),
         delta_hom = named("coproduct_multiplicative"), eps_hom = named("counit_multiplicative"),
         anti_l = named("antipode_left"), anti_r = named("antipode_right"), cocomm = named("cocommutativity"),
         comm = named("commutativity");

    const HopfElement e = unit();
    {
        // Delta(e) = e ⊗ e and eps(e) = 1 are the empty-product cases.
        record(delta_hom, coproduct(e) == TensorElement::of(e, e), {Monomial()});
        record(eps_hom, counit(e) == Rational(1), {Monomial()});
    }
    for (const auto& m : basis) {
        const auto h = HopfElement::of(m);
        const auto delta = coproduct(m);
        record(coassoc, coproduct_left(delta) == coproduct_right(delta), {m});
        record(counit_l, counit_left(delta) == h, {m});
        record(counit_r, counit_right(delta) == h, {m});
        const auto eps_e = e * counit(h);
        record(anti_l, antipode_convolution(delta, true) == eps_e, {m});
        record(anti_r, antipode_convolution(delta, false) == eps_e, {m});
        record(cocomm, swap_factors(delta) == delta, {m});
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto& x = basis[i];
            const auto& y = basis[j];
            if (x.grade() + y.grade() > max_grade) continue;
            const auto hx = HopfElement::of(x), hy = HopfElement::of(y);
            const auto xy = product(hx, hy);
            record(delta_hom, coproduct(xy) == coproduct(x) * coproduct(y), {x, y});
            record(eps_hom, counit(xy) == counit(hx) * counit(hy), {x, y});
            record(comm, xy == product(hy, hx), {x, y});
        }
    }

    AxiomReport report;
    report.algebra = algebra_name(a);
    report.max_grade = max_grade;
    report.axioms = {coassoc, counit_l, counit_r, delta_hom, eps_hom, anti_l, anti_r, cocomm, comm};
    return report;
}

GeneratorMap phi_bell() {
    return [](const DiagDiagram& d) {
        const auto degs = d.white_degrees();
        if (std::all_of(degs.begin(), degs.end(), [](unsigned x) { return x == 1; }))
            return HopfElement::of(Generator(BellGenerator{d.grade()}));
        return HopfElement();
    };
}

GeneratorMap phi_contract() {
    return [](const DiagDiagram& d) {
        std::vector<Generator> factors;
        for (auto deg : d.black_degrees()) factors.emplace_back(BellGenerator{deg});
        return HopfElement::of(Monomial(std::move(factors)));
    };
}

GeneratorMap phi_zero() {
    return [](const DiagDiagram&) { return HopfElement(); };
}

HopfElement TabulatedGeneratorMap::operator()(const DiagDiagram& d) const {
    if (auto it = images_.find(d); it != images_.end()) return it->second;
    if (fallback_) return *fallback_;
    throw std::invalid_argument("generator map is undefined on a grade-" + std::to_string(d.grade()) +
                                " DIAG generator");
}

bool MorphismReport::all_passed() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const CheckResult& r) { return r.passed; });
}

namespace {

// Incremental row echelon basis over Q; each stored vector's smallest key is
// its pivot and no other stored vector has that pivot.
class SpanBasis {
public:
    void insert(HopfElement v) {
        reduce(v);
        if (!v.is_zero()) rows_.emplace(v.terms().begin()->first, std::move(v));
    }
    bool contains(HopfElement v) const {
        reduce(v);
        return v.is_zero();
    }

private:
    void reduce(HopfElement& v) const {
        while (!v.is_zero()) {
            bool changed = false;
            for (const auto& [m, c] : v.terms()) {
                auto it = rows_.find(m);
                if (it == rows_.end()) continue;
                v -= it->second * (c / it->second.coefficient(m));
                changed = true;
                break;
            }
            if (!changed) return;
        }
    }

    std::map<Monomial, HopfElement> rows_;
};

bool is_bell_element(const HopfElement& h) {
    for (const auto& [m, c] : h.terms())
        for (const auto& g : m.factors())
            if (!std::holds_alternative<BellGenerator>(g)) return false;
    return true;
}

} // namespace

MorphismReport check_hopf_morphism(const GeneratorMap& phi, unsigned max_grade, const std::string& map_name,
                                   std::size_t bound) {
    const auto gens = generator_table(Algebra::diag, max_grade, bound);
    std::map<DiagDiagram, HopfElement> images;
    for (const auto& level : gens) {
        for (const auto& g : level) {
            const auto& d = std::get<DiagDiagram>(g);
            auto img = phi(d);
            if (!is_bell_element(img)) throw std::invalid_argument("generator map has an image outside BELL");
            images.emplace(d, std::move(img));
        }
    }
    auto apply = [&](const HopfElement& h) {
        HopfElement out;
        for (const auto& [m, c] : h.terms()) {
            HopfElement term = unit() * c;
            for (const auto& g : m.factors()) term = term * images.at(std::get<DiagDiagram>(g));
            out += term;
        }
        return out;
    };
    auto apply2 = [&](const TensorElement& t) {
        TensorElement out;
        for (const auto& [k, c] : t.terms())
            out += TensorElement::of(apply(HopfElement::of(k.first, c)), apply(HopfElement::of(k.second)));
        return out;
    };

    auto coalgebra = named("coalgebra"), counit_cond = named("counit"), antipode_cond = named("antipode");
    SpanBasis span;
    for (unsigned n = 0; n <= max_grade; ++n) {
        for (const auto& m : monomials_of_grade(gens, n)) {
            const auto h = HopfElement::of(m);
            const auto image = apply(h);
            record(coalgebra, apply2(coproduct(m)) == coproduct(image), {m});
            record(counit_cond, counit(image) == counit(h), {m});
            record(antipode_cond, antipode(image) == apply(antipode(h)), {m});
            span.insert(image);
        }
    }

    MorphismReport report;
    report.map_name = map_name;
    report.max_grade = max_grade;
    report.conditions = {coalgebra, counit_cond, antipode_cond};
    for (unsigned k = 1; k <= max_grade; ++k)
        if (!span.contains(HopfElement::of(Generator(BellGenerator{k})))) report.missing_generators.push_back(k);
    report.surjective = report.missing_generators.empty();
    return report;
}

} // namespace hopfdiag
