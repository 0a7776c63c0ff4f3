#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hopfdiag/rational.hpp"

namespace hopfdiag {

inline constexpr std::size_t kDefaultSetPartitionBound = 9;
inline constexpr std::size_t kDefaultIntegerPartitionBound = 40;

/// Partition of the integer n into non-increasing positive parts.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Parts are sorted into non-increasing order; zero parts are rejected.
    explicit IntegerPartition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned n() const { return n_; }
    /// multiplicity(j): number of parts equal to j.
    unsigned multiplicity(unsigned j) const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// Set partition of {1..n}, blocks ordered by their minimum element and each
/// block sorted ascending.
class SetPartition {
public:
    SetPartition() = default;
    /// Validates disjointness and coverage of {1..n}, then canonicalizes.
    SetPartition(std::size_t n, std::vector<std::vector<unsigned>> blocks);
    /// From a restricted-growth string (rgs[i] = block index of element i+1).
    static SetPartition from_rgs(const std::vector<unsigned>& rgs);

    std::size_t n() const { return n_; }
    const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
    /// block_of()[i] is the block index holding element i+1.
    std::vector<unsigned> block_of() const;
    std::vector<unsigned> block_sizes() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<unsigned>> blocks_;
};

BigInt stirling2(unsigned n, unsigned k);
BigInt bell_number(unsigned n);
/// Rows S(n, 0..n) for every n <= max_n.
std::vector<std::vector<BigInt>> stirling2_table(unsigned max_n);
/// Coefficients of y^0..y^n in B_n(y) = sum_k S(n,k) y^k.
std::vector<Rational> bell_polynomial(unsigned n);

/// All set partitions of {1..n} in restricted-growth-string lexicographic order.
std::vector<SetPartition> enumerate_set_partitions(std::size_t n,
                                                   std::size_t bound = kDefaultSetPartitionBound);
/// Restricted-growth strings of length n in lexicographic order.
std::vector<std::vector<unsigned>> enumerate_rgs(std::size_t n,
                                                 std::size_t bound = kDefaultSetPartitionBound);

/// Partitions of n in reverse lexicographic order ([n] first, [1,...,1] last).
std::vector<IntegerPartition> enumerate_integer_partitions(std::size_t n,
                                                           std::size_t bound = kDefaultIntegerPartitionBound);

/// Number of set partitions whose block sizes form lambda:
/// n! / (prod_i lambda_i! * prod_j m_j!).
BigInt partition_type_multiplicity(const IntegerPartition& lambda);

} // namespace hopfdiag
