#include "hopfdiag/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "hopfdiag/errors.hpp"

namespace hopfdiag {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

namespace {

std::size_t scan_digits(std::string_view s, std::size_t pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digit in rational '" + std::string(s) + "'", pos);
    return pos;
}

} // namespace

Rational Rational::parse(std::string_view s) {
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    const std::size_t num_end = scan_digits(s, pos);
    std::string num(s.substr(0, num_end));
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (num_end == s.size()) return Rational(BigInt(num));
    if (s[num_end] != '/')
        throw ParseError("unexpected character in rational '" + std::string(s) + "'", num_end);
    const std::size_t den_end = scan_digits(s, num_end + 1);
    if (den_end != s.size())
        throw ParseError("trailing characters in rational '" + std::string(s) + "'", den_end);
    return Rational(BigInt(num), BigInt(std::string(s.substr(num_end + 1))));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace hopfdiag
