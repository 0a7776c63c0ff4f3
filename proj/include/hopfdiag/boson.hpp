#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfdiag/rational.hpp"

namespace hopfdiag {

inline constexpr std::size_t kDefaultMomentOrderBound = 10;

enum class Letter { annihilation, creation };

/// Product of single-mode boson operators, read left to right.
class BosonWord {
public:
    BosonWord() = default;
    explicit BosonWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Accepts "a" for the annihilator and "A", "a+" or "a†" for the creator,
    /// with or without separating whitespace ("A a A a", "AaAa", "a+ a").
    static BosonWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    /// Space separated "A"/"a" tokens.
    std::string to_string() const;

    friend BosonWord operator*(const BosonWord& u, const BosonWord& v);
    friend bool operator==(const BosonWord&, const BosonWord&) = default;
    friend auto operator<=>(const BosonWord&, const BosonWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Normally ordered operator sum_{i,j} c_ij (a†)^i a^j. Keys are
/// (creation power, annihilation power); zero coefficients are never stored.
class NormalForm {
public:
    using Key = std::pair<unsigned, unsigned>;

    NormalForm() = default;
    static NormalForm identity();
    static NormalForm term(unsigned creation, unsigned annihilation, const BigInt& c = 1);

    void add(const Key& key, const BigInt& c);
    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient_sum() const;

    /// "A^2 a^2 + A a" style rendering; "0" for the zero operator.
    std::string to_string() const;

    friend NormalForm operator+(NormalForm a, const NormalForm& b);
    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    std::map<Key, BigInt> terms_;
};

/// Polynomial in two commuting indeterminates zbar and z with rational
/// coefficients. Keys are (power of zbar, power of z).
class ZPolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;

    ZPolynomial() = default;
    ZPolynomial(const Rational& c);
    ZPolynomial(int c) : ZPolynomial(Rational(c)) {}
    static ZPolynomial monomial(unsigned zbar_power, unsigned z_power, const Rational& c = 1);
    /// c * y^k with y = zbar z.
    static ZPolynomial y_power(unsigned k, const Rational& c = 1);
    /// sum_k coeffs[k] y^k.
    static ZPolynomial in_y(const std::vector<Rational>& coeffs);

    void add(const Key& key, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when every term has equal zbar and z powers.
    bool is_polynomial_in_y() const;

    /// Ascending rendering with y = zbar*z where possible, e.g. "y + 3*y^2 + y^3".
    std::string to_string() const;

    ZPolynomial& operator+=(const ZPolynomial& o);
    ZPolynomial& operator-=(const ZPolynomial& o);
    friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
    friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator*(ZPolynomial a, const Rational& c);
    friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

private:
    std::map<Key, Rational> terms_;
};

/// Normal ordering under [a, a†] = 1, by repeated rewriting a a† -> a† a + 1.
NormalForm normal_order(const BosonWord& w);

/// Formal sum of words, each with an integer coefficient.
using WordSum = std::vector<std::pair<BosonWord, BigInt>>;
WordSum to_word_sum(const NormalForm& f);

/// Moves every a† to the left without applying the commutator.
NormalForm forget_normal_order(const WordSum& f);
NormalForm forget_normal_order(const BosonWord& w);

/// Operator product of two normal forms, re-normal-ordered.
NormalForm normal_mul(const NormalForm& f, const NormalForm& g);
NormalForm normal_power(const NormalForm& f, unsigned n);

/// <z| f |z> for normally ordered f: a† -> zbar, a -> z.
ZPolynomial coherent_expectation(const NormalForm& f);

/// W_n = <z| w^n |z> for n = 0..order.
std::vector<ZPolynomial> word_moments(const BosonWord& w, std::size_t order,
                                      std::size_t bound = kDefaultMomentOrderBound);

/// Cumulants V_1..V_N from moments W_0..W_N (W_0 must be 1):
/// exp(sum_n V_n x^n/n!) = sum_n W_n x^n/n!. Result index i holds V_{i+1}.
std::vector<ZPolynomial> moments_to_cumulants(const std::vector<ZPolynomial>& moments);
/// Moments W_0..W_N from cumulants V_1..V_N (index i holds V_{i+1}).
std::vector<ZPolynomial> cumulants_to_moments(const std::vector<ZPolynomial>& cumulants);

/// Z = Tr exp(-beta_eps a† a) = 1 / (1 - exp(-beta_eps)); beta_eps must be > 0.
double free_boson_partition_function(double beta_eps);

struct GeometricTrace {
    double value;
    std::size_t terms;
};
/// sum_{n>=0} exp(-beta_eps n), summed until the remaining tail is below tol.
GeometricTrace free_boson_trace_sum(double beta_eps, double tol = 1e-15);

} // namespace hopfdiag
