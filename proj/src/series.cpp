#include "hopfdiag/series.hpp"

#include <algorithm>

namespace hopfdiag {

namespace {

void require_same_order(const EGFSeries& f, const EGFSeries& g, const char* op) {
    if (f.order() != g.order())
        throw std::invalid_argument(std::string(op) + ": series order mismatch (" +
                                    std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()) + ")");
}

} // namespace

namespace detail {

std::vector<BigInt> binomial_row(std::size_t n) {
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

} // namespace detail

EGFSeries::EGFSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("EGFSeries needs at least one coefficient");
}

EGFSeries EGFSeries::one(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    return EGFSeries(std::move(c));
}

EGFSeries EGFSeries::constant_tail(std::size_t order, const Rational& value, std::size_t from) {
    std::vector<Rational> c(order + 1);
    for (std::size_t n = from; n <= order; ++n) c[n] = value;
    return EGFSeries(std::move(c));
}

EGFSeries series_add(const EGFSeries& f, const EGFSeries& g) {
    require_same_order(f, g, "series_add");
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) c[n] = f[n] + g[n];
    return EGFSeries(std::move(c));
}

EGFSeries series_mul(const EGFSeries& f, const EGFSeries& g) {
    require_same_order(f, g, "series_mul");
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        const auto row = detail::binomial_row(n);
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k)
            if (!f[k].is_zero() && !g[n - k].is_zero()) acc += Rational(row[k]) * f[k] * g[n - k];
        c[n] = acc;
    }
    return EGFSeries(std::move(c));
}

EGFSeries series_exp(const EGFSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("exp requires vanishing constant term");
    return EGFSeries(detail::exp_recursion<Rational>(f.coeffs(), Rational(1)));
}

EGFSeries series_log(const EGFSeries& f) {
    if (f[0] != Rational(1)) throw std::domain_error("log requires constant term 1");
    return EGFSeries(detail::log_recursion<Rational>(f.coeffs(), Rational(0)));
}

BivariatePoly::BivariatePoly(std::vector<EGFSeries> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("BivariatePoly needs at least one y-coefficient");
    const auto xo = coeffs_.front().order();
    if (std::any_of(coeffs_.begin(), coeffs_.end(), [xo](const EGFSeries& s) { return s.order() != xo; }))
        throw std::invalid_argument("BivariatePoly: y-coefficients have mixed x-orders");
}

BivariatePoly BivariatePoly::exp_in_y(std::span<const Rational> v, std::size_t yorder, std::size_t xorder) {
    if (v.size() < yorder)
        throw std::invalid_argument("exp_in_y: need " + std::to_string(yorder) + " vertex weights, got " +
                                    std::to_string(v.size()));
    std::vector<Rational> f(yorder + 1);
    std::copy_n(v.begin(), yorder, f.begin() + 1);
    const auto c = series_exp(EGFSeries(std::move(f)));
    std::vector<EGFSeries> rows;
    rows.reserve(yorder + 1);
    for (std::size_t s = 0; s <= yorder; ++s) {
        std::vector<Rational> xs(xorder + 1);
        xs[0] = c[s];
        rows.emplace_back(std::move(xs));
    }
    return BivariatePoly(std::move(rows));
}

// exp(sum_m L_m (x d/dy)^m / m!) = sum_n e_n x^n/n! d^n/dy^n with e = exp(L), and
// d^n/dy^n G at y = 0 is G_n(x). So H = sum_n (e_n x^n/n!) * G_n(x).
EGFSeries apply_diff_operator(std::span<const Rational> weights, const BivariatePoly& g) {
    const std::size_t order = weights.size();
    if (g.yorder() < order)
        throw std::invalid_argument("apply_diff_operator: y-order " + std::to_string(g.yorder()) +
                                    " is below target order " + std::to_string(order));
    if (g.xorder() != order)
        throw std::invalid_argument("apply_diff_operator: x-order " + std::to_string(g.xorder()) +
                                    " does not match target order " + std::to_string(order));
    std::vector<Rational> l(order + 1);
    std::copy(weights.begin(), weights.end(), l.begin() + 1);
    const auto e = series_exp(EGFSeries(std::move(l)));

    EGFSeries h(order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (e[n].is_zero()) continue;
        std::vector<Rational> m(order + 1);
        m[n] = e[n];
        h = series_add(h, series_mul(EGFSeries(std::move(m)), g[n]));
    }
    return h;
}

} // namespace hopfdiag
