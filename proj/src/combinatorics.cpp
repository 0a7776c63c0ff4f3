#include "hopfdiag/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "hopfdiag/errors.hpp"

namespace hopfdiag {

IntegerPartition::IntegerPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
        throw std::invalid_argument("integer partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (auto p : parts_) n_ += p;
}

unsigned IntegerPartition::multiplicity(unsigned j) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), j));
}

SetPartition::SetPartition(std::size_t n, std::vector<std::vector<unsigned>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(n + 1, false);
    std::size_t covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("set partition has an empty block");
        std::sort(b.begin(), b.end());
        for (auto e : b) {
            if (e < 1 || e > n) throw std::invalid_argument("set partition element out of range 1..n");
            if (seen[e]) throw std::invalid_argument("set partition blocks are not disjoint");
            seen[e] = true;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("set partition does not cover 1..n");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_rgs(const std::vector<unsigned>& rgs) {
    SetPartition p;
    p.n_ = rgs.size();
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] > p.blocks_.size()) throw std::invalid_argument("not a restricted-growth string");
        if (rgs[i] == p.blocks_.size()) p.blocks_.emplace_back();
        p.blocks_[rgs[i]].push_back(static_cast<unsigned>(i + 1));
    }
    return p;
}

std::vector<unsigned> SetPartition::block_of() const {
    std::vector<unsigned> out(n_);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (auto e : blocks_[b]) out[e - 1] = static_cast<unsigned>(b);
    return out;
}

std::vector<unsigned> SetPartition::block_sizes() const {
    std::vector<unsigned> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(static_cast<unsigned>(b.size()));
    return out;
}

std::vector<std::vector<BigInt>> stirling2_table(unsigned max_n) {
    std::vector<std::vector<BigInt>> s(max_n + 1);
    s[0] = {BigInt(1)};
    for (unsigned n = 1; n <= max_n; ++n) {
        s[n].assign(n + 1, BigInt(0));
        for (unsigned k = 1; k <= n; ++k) {
            BigInt v = s[n - 1][k - 1];
            if (k <= n - 1) v += s[n - 1][k] * k;
            s[n][k] = v;
        }
    }
    return s;
}

BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    return stirling2_table(n)[n][k];
}

BigInt bell_number(unsigned n) {
    const auto row = stirling2_table(n)[n];
    BigInt sum = 0;
    for (const auto& v : row) sum += v;
    return sum;
}

std::vector<Rational> bell_polynomial(unsigned n) {
    const auto row = stirling2_table(n)[n];
    return {row.begin(), row.end()};
}

std::vector<std::vector<unsigned>> enumerate_rgs(std::size_t n, std::size_t bound) {
    if (n > bound) throw BoundExceeded("set partition enumeration", n, bound);
    std::vector<std::vector<unsigned>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // a[i] <= 1 + max(a[0..i-1]), a[0] = 0
    std::vector<unsigned> a(n, 0), prefix_max(n, 0);
    while (true) {
        out.push_back(a);
        std::size_t i = n - 1;
        while (i > 0 && a[i] > prefix_max[i - 1]) --i;
        if (i == 0) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n, std::size_t bound) {
    const auto strings = enumerate_rgs(n, bound);
    std::vector<SetPartition> out;
    out.reserve(strings.size());
    for (const auto& s : strings) out.push_back(SetPartition::from_rgs(s));
    return out;
}

std::vector<IntegerPartition> enumerate_integer_partitions(std::size_t n, std::size_t bound) {
    if (n > bound) throw BoundExceeded("integer partition enumeration", n, bound);
    std::vector<IntegerPartition> out;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(static_cast<unsigned>(n), static_cast<unsigned>(n));
    return out;
}

BigInt partition_type_multiplicity(const IntegerPartition& lambda) {
    BigInt denom = 1;
    std::map<unsigned, unsigned> mult;
    for (auto p : lambda.parts()) {
        denom *= factorial(p);
        ++mult[p];
    }
    for (const auto& [part, m] : mult) denom *= factorial(m);
    return factorial(lambda.n()) / denom;
}

} // namespace hopfdiag
