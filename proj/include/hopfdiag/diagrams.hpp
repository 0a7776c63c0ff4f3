#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfdiag/combinatorics.hpp"
#include "hopfdiag/rational.hpp"
#include "hopfdiag/series.hpp"

namespace hopfdiag {

inline constexpr std::size_t kDefaultDiagramGradeBound = 7;

/// Diagram grade bound, honoring a HOPFDIAG_MAX_GRADE environment override.
std::size_t diagram_grade_bound();

using MultMatrix = std::vector<std::vector<unsigned>>;

/// Bipartite multigraph between white vertices (rows) and black vertices
/// (columns), stored in canonical form. Only canonicalize() builds one.
class DiagDiagram {
public:
    /// The empty diagram (grade 0).
    DiagDiagram() = default;

    std::size_t whites() const { return rows_; }
    std::size_t blacks() const { return cols_; }
    unsigned at(std::size_t w, std::size_t b) const { return entries_[w * cols_ + b]; }
    unsigned grade() const { return grade_; }
    unsigned white_degree(std::size_t w) const;
    unsigned black_degree(std::size_t b) const;
    std::vector<unsigned> white_degrees() const;
    std::vector<unsigned> black_degrees() const;
    MultMatrix matrix() const;

    friend bool operator==(const DiagDiagram&, const DiagDiagram&) = default;
    friend std::strong_ordering operator<=>(const DiagDiagram& a, const DiagDiagram& b);

private:
    friend DiagDiagram canonicalize(const MultMatrix& m);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned grade_ = 0;
    std::vector<unsigned> entries_;
};

/// Canonical representative of the isomorphism class of m under independent
/// row and column permutations. Rows and columns are first split into
/// classes by iterated degree refinement (classes ordered by their
/// invariant); the result is the lexicographically least row-major
/// flattening over all permutations within those classes. Throws on a zero
/// row or column or a ragged matrix.
DiagDiagram canonicalize(const MultMatrix& m);

/// Pair of set partitions of the lines {1..n}: white blocks and black blocks.
struct LabelledConfiguration {
    SetPartition white;
    SetPartition black;
};

/// Entry (w, b) counts the lines shared by white block w and black block b.
DiagDiagram configuration_to_diagram(const LabelledConfiguration& c);

/// Canonical diagrams of one grade with their labelled-configuration counts.
using WeightedDiagramSet = std::map<DiagDiagram, BigInt>;

/// Aggregates all B(n)^2 pairs of set partitions of {1..n}.
WeightedDiagramSet enumerate_diag_diagrams(std::size_t n, std::size_t bound = diagram_grade_bound());

/// Connected diagrams of grade n in canonical order.
std::vector<DiagDiagram> connected_diagrams(std::size_t n, std::size_t bound = diagram_grade_bound());

bool is_connected(const DiagDiagram& d);

/// prod_w L_{deg w} * prod_b V_{deg b}; l[m-1] holds L_m, v[s-1] holds V_s.
Rational diagram_weight(const DiagDiagram& d, std::span<const Rational> l, std::span<const Rational> v);

/// Weighted diagram sets for grades 0..max_grade, reusable across many
/// weight choices.
struct DiagramCensus {
    std::vector<WeightedDiagramSet> grades;

    static DiagramCensus build(std::size_t max_grade, std::size_t bound = diagram_grade_bound());
    std::size_t max_grade() const { return grades.size() - 1; }
};

/// F_n = sum over grade-n diagrams of multiplicity * weight, n = 0..order.
EGFSeries pfi_by_diagrams(std::size_t order, std::span<const Rational> l, std::span<const Rational> v,
                          std::size_t bound = diagram_grade_bound());
EGFSeries pfi_by_diagrams(const DiagramCensus& census, std::size_t order, std::span<const Rational> l,
                          std::span<const Rational> v);

/// exp(sum_m L_m x^m/m! d^m/dy^m) exp(sum_s V_s y^s/s!) at y = 0.
EGFSeries pfi_by_series(std::size_t order, std::span<const Rational> l, std::span<const Rational> v);

/// Connected-diagram sums per grade: index n holds the grade-n sum (index 0 is 0).
std::vector<Rational> connected_diagram_sums(const DiagramCensus& census, std::size_t order,
                                             std::span<const Rational> l, std::span<const Rational> v);

/// log of the series evaluation equals the connected-diagram sum at every grade <= order.
bool connected_generating_check(std::size_t order, std::span<const Rational> l, std::span<const Rational> v,
                                std::size_t bound = diagram_grade_bound());
bool connected_generating_check(const DiagramCensus& census, std::size_t order, std::span<const Rational> l,
                                std::span<const Rational> v);

/// Bell graph shapes: one entry per integer partition of n (block sizes of the
/// black vertices), with the number of labelled graphs of that shape.
std::vector<std::pair<IntegerPartition, BigInt>> enumerate_bell_diagrams(std::size_t n,
                                                                         std::size_t bound = diagram_grade_bound());

/// Graphviz rendering; vertices w0.. and b0.., one edge line per line of the diagram.
std::string to_dot(const DiagDiagram& d, const std::string& graph_name);

} // namespace hopfdiag
