#include "hopfdiag/boson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hopfdiag/errors.hpp"
#include "hopfdiag/series.hpp"

namespace hopfdiag {

BosonWord BosonWord::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
            ++pos;
        } else if (c == 'A') {
            letters.push_back(Letter::creation);
            ++pos;
        } else if (c == 'a') {
            if (text.substr(pos + 1, 1) == "+") {
                letters.push_back(Letter::creation);
                pos += 2;
            } else if (text.substr(pos + 1, 3) == "†") {
                letters.push_back(Letter::creation);
                pos += 4;
            } else {
                letters.push_back(Letter::annihilation);
                ++pos;
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in boson word", pos);
        }
    }
    return BosonWord(std::move(letters));
}

std::string BosonWord::to_string() const {
    std::string out;
    for (auto l : letters_) {
        if (!out.empty()) out += ' ';
        out += l == Letter::creation ? 'A' : 'a';
    }
    return out;
}

BosonWord operator*(const BosonWord& u, const BosonWord& v) {
    auto letters = u.letters_;
    letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
    return BosonWord(std::move(letters));
}

NormalForm NormalForm::identity() { return term(0, 0); }

NormalForm NormalForm::term(unsigned creation, unsigned annihilation, const BigInt& c) {
    NormalForm f;
    f.add({creation, annihilation}, c);
    return f;
}

void NormalForm::add(const Key& key, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BigInt NormalForm::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

namespace {

std::string power_token(const char* sym, unsigned p) {
    if (p == 1) return sym;
    return std::string(sym) + "^" + std::to_string(p);
}

// Joins "coefficient * body" terms into "t1 + t2 - t3".
void append_term(std::string& out, const std::string& coeff, const std::string& body) {
    const bool negative = !coeff.empty() && coeff[0] == '-';
    const std::string mag = negative ? coeff.substr(1) : coeff;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (body.empty()) out += mag;
    else if (mag == "1") out += body;
    else out += mag + "*" + body;
}

} // namespace

std::string NormalForm::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        std::string body;
        if (key.first > 0) body += power_token("A", key.first);
        if (key.second > 0) body += (body.empty() ? "" : " ") + power_token("a", key.second);
        append_term(out, c.get_str(), body);
    }
    return out;
}

NormalForm operator+(NormalForm a, const NormalForm& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
}

ZPolynomial::ZPolynomial(const Rational& c) {
    add({0, 0}, c);
}

ZPolynomial ZPolynomial::monomial(unsigned zbar_power, unsigned z_power, const Rational& c) {
    ZPolynomial p;
    p.add({zbar_power, z_power}, c);
    return p;
}

ZPolynomial ZPolynomial::y_power(unsigned k, const Rational& c) { return monomial(k, k, c); }

ZPolynomial ZPolynomial::in_y(const std::vector<Rational>& coeffs) {
    ZPolynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p.add({static_cast<unsigned>(k), static_cast<unsigned>(k)}, coeffs[k]);
    return p;
}

void ZPolynomial::add(const Key& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ZPolynomial::is_polynomial_in_y() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.first == t.first.second; });
}

std::string ZPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        std::string body;
        if (key.first == key.second) {
            if (key.first > 0) body = power_token("y", key.first);
        } else {
            if (key.first > 0) body += power_token("zb", key.first);
            if (key.second > 0) body += (body.empty() ? "" : "*") + power_token("z", key.second);
        }
        append_term(out, c.to_string(), body);
    }
    return out;
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
    ZPolynomial out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

ZPolynomial operator*(ZPolynomial a, const Rational& c) {
    if (c.is_zero()) return {};
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
}

NormalForm normal_order(const BosonWord& w) {
    // Each pass rewrites the leftmost "a a†" of every pending word.
    std::map<BosonWord, BigInt> pending{{w, BigInt(1)}};
    NormalForm result;
    while (!pending.empty()) {
        std::map<BosonWord, BigInt> next;
        for (const auto& [word, c] : pending) {
            const auto& l = word.letters();
            std::size_t i = 0;
            while (i + 1 < l.size() && !(l[i] == Letter::annihilation && l[i + 1] == Letter::creation)) ++i;
            if (i + 1 >= l.size()) {
                const auto creations = static_cast<unsigned>(std::count(l.begin(), l.end(), Letter::creation));
                result.add({creations, static_cast<unsigned>(l.size()) - creations}, c);
                continue;
            }
            auto swapped = l;
            std::swap(swapped[i], swapped[i + 1]);
            next[BosonWord(std::move(swapped))] += c;
            std::vector<Letter> contracted(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i));
            contracted.insert(contracted.end(), l.begin() + static_cast<std::ptrdiff_t>(i) + 2, l.end());
            next[BosonWord(std::move(contracted))] += c;
        }
        pending = std::move(next);
    }
    return result;
}

WordSum to_word_sum(const NormalForm& f) {
    WordSum out;
    for (const auto& [key, c] : f.terms()) {
        std::vector<Letter> letters(key.first, Letter::creation);
        letters.insert(letters.end(), key.second, Letter::annihilation);
        out.emplace_back(BosonWord(std::move(letters)), c);
    }
    return out;
}

NormalForm forget_normal_order(const WordSum& f) {
    NormalForm out;
    for (const auto& [word, c] : f) {
        const auto& l = word.letters();
        const auto creations = static_cast<unsigned>(std::count(l.begin(), l.end(), Letter::creation));
        out.add({creations, static_cast<unsigned>(l.size()) - creations}, c);
    }
    return out;
}

NormalForm forget_normal_order(const BosonWord& w) { return forget_normal_order(WordSum{{w, BigInt(1)}}); }

// (a†^i a^j)(a†^k a^l) = sum_{m=0}^{min(j,k)} C(j,m) k!/(k-m)! a†^{i+k-m} a^{j+l-m}
NormalForm normal_mul(const NormalForm& f, const NormalForm& g) {
    NormalForm out;
    for (const auto& [kf, cf] : f.terms()) {
        const auto [i, j] = kf;
        for (const auto& [kg, cg] : g.terms()) {
            const auto [k, l] = kg;
            BigInt falling = 1;
            for (unsigned m = 0; m <= std::min(j, k); ++m) {
                if (m > 0) falling *= (k - m + 1);
                out.add({i + k - m, j + l - m}, cf * cg * binomial(j, m) * falling);
            }
        }
    }
    return out;
}

NormalForm normal_power(const NormalForm& f, unsigned n) {
    NormalForm out = NormalForm::identity();
    for (unsigned k = 0; k < n; ++k) out = normal_mul(out, f);
    return out;
}

ZPolynomial coherent_expectation(const NormalForm& f) {
    ZPolynomial out;
    for (const auto& [key, c] : f.terms()) out.add(key, Rational(c));
    return out;
}

std::vector<ZPolynomial> word_moments(const BosonWord& w, std::size_t order, std::size_t bound) {
    if (order > bound) throw BoundExceeded("word moment order", order, bound);
    const auto nf = normal_order(w);
    std::vector<ZPolynomial> out;
    out.reserve(order + 1);
    NormalForm power = NormalForm::identity();
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) power = normal_mul(power, nf);
        out.push_back(coherent_expectation(power));
    }
    return out;
}

std::vector<ZPolynomial> moments_to_cumulants(const std::vector<ZPolynomial>& moments) {
    if (moments.empty() || moments[0] != ZPolynomial(1))
        throw std::domain_error("moments_to_cumulants requires W_0 == 1");
    auto f = detail::log_recursion<ZPolynomial>(moments, ZPolynomial());
    return {f.begin() + 1, f.end()};
}

std::vector<ZPolynomial> cumulants_to_moments(const std::vector<ZPolynomial>& cumulants) {
    std::vector<ZPolynomial> f;
    f.reserve(cumulants.size() + 1);
    f.emplace_back();
    f.insert(f.end(), cumulants.begin(), cumulants.end());
    return detail::exp_recursion<ZPolynomial>(f, ZPolynomial(1));
}

double free_boson_partition_function(double beta_eps) {
    if (!(beta_eps > 0.0))
        throw std::domain_error("free boson partition function needs beta*eps > 0 (the trace diverges)");
    return -1.0 / std::expm1(-beta_eps);
}

GeometricTrace free_boson_trace_sum(double beta_eps, double tol) {
    if (!(beta_eps > 0.0))
        throw std::domain_error("free boson trace needs beta*eps > 0 (the trace diverges)");
    constexpr std::size_t kMaxTerms = 100'000'000;
    const double tail_factor = -1.0 / std::expm1(-beta_eps);
    double sum = 0.0;
    double term = 1.0;
    std::size_t n = 0;
    // Kahan summation keeps the small terms of long sums.
    double carry = 0.0;
    while (n < kMaxTerms && term * tail_factor > tol) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        ++n;
        term = std::exp(-beta_eps * static_cast<double>(n));
    }
    return {sum, n};
}

} // namespace hopfdiag
