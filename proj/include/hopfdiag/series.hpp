#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfdiag/rational.hpp"

namespace hopfdiag {

/// Truncated exponential generating function f(x) = sum_n a_n x^n / n!,
/// n = 0..order. Arithmetic between series of different orders is rejected.
class EGFSeries {
public:
    /// The zero series of the given order.
    explicit EGFSeries(std::size_t order) : coeffs_(order + 1) {}
    /// Order is coeffs.size() - 1; an empty list is rejected.
    explicit EGFSeries(std::vector<Rational> coeffs);

    static EGFSeries one(std::size_t order);
    /// a_n = value for every n >= from.
    static EGFSeries constant_tail(std::size_t order, const Rational& value, std::size_t from = 1);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    friend bool operator==(const EGFSeries&, const EGFSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

EGFSeries series_add(const EGFSeries& f, const EGFSeries& g);
/// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}.
EGFSeries series_mul(const EGFSeries& f, const EGFSeries& g);
/// Requires f_0 == 0.
EGFSeries series_exp(const EGFSeries& f);
/// Requires f_0 == 1; inverse of series_exp.
EGFSeries series_log(const EGFSeries& f);

/// G(x, y) = sum_s G_s(x) y^s / s!, s = 0..yorder, every G_s of the same x-order.
class BivariatePoly {
public:
    explicit BivariatePoly(std::vector<EGFSeries> coeffs);

    /// G(x, y) = exp(sum_s v[s-1] y^s / s!) with x-independent coefficients.
    static BivariatePoly exp_in_y(std::span<const Rational> v, std::size_t yorder, std::size_t xorder);

    std::size_t yorder() const { return coeffs_.size() - 1; }
    std::size_t xorder() const { return coeffs_.front().order(); }
    const EGFSeries& operator[](std::size_t s) const { return coeffs_.at(s); }

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    std::vector<EGFSeries> coeffs_;
};

/// H(x) = [exp(sum_m L_m x^m/m! d^m/dy^m) G](x, y) at y = 0, truncated at
/// x-order N = weights.size(). weights[m-1] holds L_m. d/dy shifts the
/// y^s/s! basis down by one. Needs G.yorder() >= N and G.xorder() == N.
EGFSeries apply_diff_operator(std::span<const Rational> weights, const BivariatePoly& g);

namespace detail {

// Pascal row C(n, 0..n).
std::vector<BigInt> binomial_row(std::size_t n);

// g = exp(f) over any commutative ring T with f[0] ignored (taken as zero):
// g_0 = one, g_{n+1} = sum_{k=0}^{n} C(n,k) f_{k+1} g_{n-k}.
template <class T>
std::vector<T> exp_recursion(std::span<const T> f, const T& one) {
    std::vector<T> g;
    g.reserve(f.size());
    if (f.empty()) return g;
    g.push_back(one);
    for (std::size_t n = 0; n + 1 < f.size(); ++n) {
        const auto c = binomial_row(n);
        T acc = f[n + 1] * g[0];
        for (std::size_t k = 0; k < n; ++k) acc = acc + (f[k + 1] * g[n - k]) * Rational(c[k]);
        g.push_back(std::move(acc));
    }
    return g;
}

// Inverse of exp_recursion; g[0] is assumed to be one. Result[0] is zero.
// f_{n+1} = g_{n+1} - sum_{k=0}^{n-1} C(n,k) f_{k+1} g_{n-k}.
template <class T>
std::vector<T> log_recursion(std::span<const T> g, const T& zero) {
    std::vector<T> f;
    f.reserve(g.size());
    if (g.empty()) return f;
    f.push_back(zero);
    for (std::size_t n = 0; n + 1 < g.size(); ++n) {
        const auto c = binomial_row(n);
        T acc = g[n + 1];
        for (std::size_t k = 0; k < n; ++k) acc = acc - (f[k + 1] * g[n - k]) * Rational(c[k]);
        f.push_back(std::move(acc));
    }
    return f;
}

} // namespace detail
} // namespace hopfdiag
