#include "hopfdiag/diagrams.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hopfdiag/errors.hpp"

namespace hopfdiag {

std::size_t diagram_grade_bound() {
    if (const char* env = std::getenv("HOPFDIAG_MAX_GRADE")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultDiagramGradeBound;
}

unsigned DiagDiagram::white_degree(std::size_t w) const {
    unsigned s = 0;
    for (std::size_t b = 0; b < cols_; ++b) s += at(w, b);
    return s;
}

unsigned DiagDiagram::black_degree(std::size_t b) const {
    unsigned s = 0;
    for (std::size_t w = 0; w < rows_; ++w) s += at(w, b);
    return s;
}

std::vector<unsigned> DiagDiagram::white_degrees() const {
    std::vector<unsigned> out(rows_);
    for (std::size_t w = 0; w < rows_; ++w) out[w] = white_degree(w);
    return out;
}

std::vector<unsigned> DiagDiagram::black_degrees() const {
    std::vector<unsigned> out(cols_);
    for (std::size_t b = 0; b < cols_; ++b) out[b] = black_degree(b);
    return out;
}

MultMatrix DiagDiagram::matrix() const {
    MultMatrix m(rows_, std::vector<unsigned>(cols_));
    for (std::size_t w = 0; w < rows_; ++w)
        for (std::size_t b = 0; b < cols_; ++b) m[w][b] = at(w, b);
    return m;
}

std::strong_ordering operator<=>(const DiagDiagram& a, const DiagDiagram& b) {
    if (auto c = a.grade_ <=> b.grade_; c != 0) return c;
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.entries_ <=> b.entries_;
}

namespace {

using Signature = std::pair<unsigned, std::vector<std::pair<unsigned, unsigned>>>;

// Replaces each signature by its rank among the distinct signatures.
std::vector<unsigned> rank_signatures(const std::vector<Signature>& sigs, std::size_t& distinct) {
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    distinct = sorted.size();
    std::vector<unsigned> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        out[i] = static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return out;
}

std::vector<std::vector<std::size_t>> group_by_color(const std::vector<unsigned>& color) {
    std::vector<std::size_t> idx(color.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return color[x] < color[y]; });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k == 0 || color[idx[k]] != color[idx[k - 1]]) groups.emplace_back();
        groups.back().push_back(idx[k]);
    }
    return groups;
}

} // namespace

DiagDiagram canonicalize(const MultMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("multiplicity matrix is not rectangular");

    std::vector<unsigned> row_color(rows, 0), col_color(cols, 0);
    unsigned grade = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            row_color[i] += m[i][j];
            col_color[j] += m[i][j];
            grade += m[i][j];
        }
    for (std::size_t i = 0; i < rows; ++i)
        if (row_color[i] == 0) throw std::invalid_argument("diagram has an isolated white vertex (zero row)");
    for (std::size_t j = 0; j < cols; ++j)
        if (col_color[j] == 0) throw std::invalid_argument("diagram has an isolated black vertex (zero column)");

    // Colour refinement, starting from degrees. Classes only ever split, so a
    // round that leaves both class counts unchanged is stable.
    std::size_t row_classes = 0, col_classes = 0;
    {
        std::vector<Signature> rs(rows), cs(cols);
        for (std::size_t i = 0; i < rows; ++i) rs[i].first = row_color[i];
        for (std::size_t j = 0; j < cols; ++j) cs[j].first = col_color[j];
        row_color = rank_signatures(rs, row_classes);
        col_color = rank_signatures(cs, col_classes);
    }
    while (true) {
        std::vector<Signature> rs(rows), cs(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            rs[i].first = row_color[i];
            for (std::size_t j = 0; j < cols; ++j)
                if (m[i][j] > 0) rs[i].second.emplace_back(col_color[j], m[i][j]);
            std::sort(rs[i].second.begin(), rs[i].second.end());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            cs[j].first = col_color[j];
            for (std::size_t i = 0; i < rows; ++i)
                if (m[i][j] > 0) cs[j].second.emplace_back(row_color[i], m[i][j]);
            std::sort(cs[j].second.begin(), cs[j].second.end());
        }
        std::size_t nr = 0, nc = 0;
        auto new_rows = rank_signatures(rs, nr);
        auto new_cols = rank_signatures(cs, nc);
        const bool stable = nr == row_classes && nc == col_classes;
        row_color = std::move(new_rows);
        col_color = std::move(new_cols);
        row_classes = nr;
        col_classes = nc;
        if (stable) break;
    }

    const auto row_groups = group_by_color(row_color);
    auto col_groups = group_by_color(col_color);

    // Identical columns are interchangeable; permuting over the multiset of
    // column contents visits each distinct arrangement once.
    auto column = [&](std::size_t j) {
        std::vector<unsigned> c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = m[i][j];
        return c;
    };
    std::vector<std::vector<unsigned>> columns(cols);
    for (std::size_t j = 0; j < cols; ++j) columns[j] = column(j);
    auto col_less = [&](std::size_t x, std::size_t y) { return columns[x] < columns[y]; };
    for (auto& g : col_groups) std::sort(g.begin(), g.end(), col_less);

    std::vector<unsigned> best, candidate(rows * cols);
    std::vector<std::size_t> col_order;
    col_order.reserve(cols);
    std::vector<std::vector<unsigned>> block;

    auto evaluate = [&]() {
        std::size_t out = 0;
        for (const auto& g : row_groups) {
            block.assign(g.size(), std::vector<unsigned>(cols));
            for (std::size_t r = 0; r < g.size(); ++r)
                for (std::size_t c = 0; c < cols; ++c) block[r][c] = m[g[r]][col_order[c]];
            std::sort(block.begin(), block.end());
            for (const auto& r : block)
                for (auto v : r) candidate[out++] = v;
        }
        if (best.empty() || candidate < best) best = candidate;
    };

    std::function<void(std::size_t)> visit = [&](std::size_t gi) {
        if (gi == col_groups.size()) {
            evaluate();
            return;
        }
        auto& g = col_groups[gi];
        do {
            const auto mark = col_order.size();
            col_order.insert(col_order.end(), g.begin(), g.end());
            visit(gi + 1);
            col_order.resize(mark);
        } while (std::next_permutation(g.begin(), g.end(), col_less));
    };
    visit(0);

    DiagDiagram d;
    d.rows_ = rows;
    d.cols_ = cols;
    d.grade_ = grade;
    d.entries_ = std::move(best);
    return d;
}

DiagDiagram configuration_to_diagram(const LabelledConfiguration& c) {
    if (c.white.n() != c.black.n())
        throw std::invalid_argument("configuration partitions have different ground sets");
    const auto wb = c.white.block_of();
    const auto bb = c.black.block_of();
    MultMatrix m(c.white.blocks().size(), std::vector<unsigned>(c.black.blocks().size(), 0));
    for (std::size_t i = 0; i < wb.size(); ++i) ++m[wb[i]][bb[i]];
    return canonicalize(m);
}

WeightedDiagramSet enumerate_diag_diagrams(std::size_t n, std::size_t bound) {
    if (n > bound) throw BoundExceeded("diagram grade", n, bound);
    const auto strings = enumerate_rgs(n, std::max(n, kDefaultSetPartitionBound));
    std::vector<unsigned> block_count(strings.size());
    for (std::size_t k = 0; k < strings.size(); ++k)
        block_count[k] = strings[k].empty() ? 0 : *std::max_element(strings[k].begin(), strings[k].end()) + 1;

    // Count labelled configurations per row/column-sorted matrix, then
    // canonicalize each distinct matrix once.
    std::unordered_map<std::string, std::uint64_t> raw_counts;
    MultMatrix m;
    std::vector<std::vector<unsigned>> cols_buf;
    for (std::size_t a = 0; a < strings.size(); ++a) {
        for (std::size_t b = 0; b < strings.size(); ++b) {
            const std::size_t rows = block_count[a], cols = block_count[b];
            cols_buf.assign(cols, std::vector<unsigned>(rows, 0));
            for (std::size_t i = 0; i < n; ++i) ++cols_buf[strings[b][i]][strings[a][i]];
            std::sort(cols_buf.begin(), cols_buf.end());
            m.assign(rows, std::vector<unsigned>(cols));
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols_buf[j][i];
            std::sort(m.begin(), m.end());
            std::string key;
            key.reserve(2 + rows * cols);
            key.push_back(static_cast<char>(rows));
            key.push_back(static_cast<char>(cols));
            for (const auto& r : m)
                for (auto v : r) key.push_back(static_cast<char>(v));
            ++raw_counts[key];
        }
    }

    WeightedDiagramSet out;
    for (const auto& [key, count] : raw_counts) {
        const std::size_t rows = static_cast<unsigned char>(key[0]);
        const std::size_t cols = static_cast<unsigned char>(key[1]);
        MultMatrix mm(rows, std::vector<unsigned>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) mm[i][j] = static_cast<unsigned char>(key[2 + i * cols + j]);
        out[canonicalize(mm)] += BigInt(static_cast<unsigned long>(count));
    }
    return out;
}

std::vector<DiagDiagram> connected_diagrams(std::size_t n, std::size_t bound) {
    std::vector<DiagDiagram> out;
    for (const auto& [d, mult] : enumerate_diag_diagrams(n, bound))
        if (is_connected(d)) out.push_back(d);
    return out;
}

bool is_connected(const DiagDiagram& d) {
    const std::size_t rows = d.whites(), cols = d.blacks();
    if (rows + cols == 0) return false;
    // vertices 0..rows-1 white, rows..rows+cols-1 black
    std::vector<bool> seen(rows + cols, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t u) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        };
        if (v < rows) {
            for (std::size_t b = 0; b < cols; ++b)
                if (d.at(v, b) > 0) visit(rows + b);
        } else {
            for (std::size_t w = 0; w < rows; ++w)
                if (d.at(w, v - rows) > 0) visit(w);
        }
    }
    return reached == rows + cols;
}

Rational diagram_weight(const DiagDiagram& d, std::span<const Rational> l, std::span<const Rational> v) {
    Rational w = 1;
    for (auto deg : d.white_degrees()) {
        if (deg > l.size()) throw std::invalid_argument("missing white vertex weight L_" + std::to_string(deg));
        w *= l[deg - 1];
    }
    for (auto deg : d.black_degrees()) {
        if (deg > v.size()) throw std::invalid_argument("missing black vertex weight V_" + std::to_string(deg));
        w *= v[deg - 1];
    }
    return w;
}

DiagramCensus DiagramCensus::build(std::size_t max_grade, std::size_t bound) {
    if (max_grade > bound) throw BoundExceeded("diagram grade", max_grade, bound);
    DiagramCensus c;
    for (std::size_t n = 0; n <= max_grade; ++n) c.grades.push_back(enumerate_diag_diagrams(n, bound));
    return c;
}

namespace {

void require_weights(std::size_t order, std::span<const Rational> l, std::span<const Rational> v) {
    if (l.size() < order || v.size() < order)
        throw std::invalid_argument("need at least " + std::to_string(order) + " L and V weights, got " +
                                    std::to_string(l.size()) + " and " + std::to_string(v.size()));
}

} // namespace

EGFSeries pfi_by_diagrams(const DiagramCensus& census, std::size_t order, std::span<const Rational> l,
                          std::span<const Rational> v) {
    require_weights(order, l, v);
    if (census.grades.size() <= order)
        throw std::invalid_argument("diagram census does not reach order " + std::to_string(order));
    std::vector<Rational> f(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        for (const auto& [d, mult] : census.grades[n]) f[n] += Rational(mult) * diagram_weight(d, l, v);
    return EGFSeries(std::move(f));
}

EGFSeries pfi_by_diagrams(std::size_t order, std::span<const Rational> l, std::span<const Rational> v,
                          std::size_t bound) {
    require_weights(order, l, v);
    return pfi_by_diagrams(DiagramCensus::build(order, bound), order, l, v);
}

EGFSeries pfi_by_series(std::size_t order, std::span<const Rational> l, std::span<const Rational> v) {
    require_weights(order, l, v);
    const auto g = BivariatePoly::exp_in_y(v, order, order);
    return apply_diff_operator(l.first(order), g);
}

std::vector<Rational> connected_diagram_sums(const DiagramCensus& census, std::size_t order,
                                             std::span<const Rational> l, std::span<const Rational> v) {
    require_weights(order, l, v);
    if (census.grades.size() <= order)
        throw std::invalid_argument("diagram census does not reach order " + std::to_string(order));
    std::vector<Rational> sums(order + 1);
    for (std::size_t n = 1; n <= order; ++n)
        for (const auto& [d, mult] : census.grades[n])
            if (is_connected(d)) sums[n] += Rational(mult) * diagram_weight(d, l, v);
    return sums;
}

bool connected_generating_check(const DiagramCensus& census, std::size_t order, std::span<const Rational> l,
                                std::span<const Rational> v) {
    const auto log_f = series_log(pfi_by_series(order, l, v));
    const auto sums = connected_diagram_sums(census, order, l, v);
    for (std::size_t n = 0; n <= order; ++n)
        if (log_f[n] != sums[n]) return false;
    return true;
}

bool connected_generating_check(std::size_t order, std::span<const Rational> l, std::span<const Rational> v,
                                std::size_t bound) {
    require_weights(order, l, v);
    return connected_generating_check(DiagramCensus::build(order, bound), order, l, v);
}

std::vector<std::pair<IntegerPartition, BigInt>> enumerate_bell_diagrams(std::size_t n, std::size_t bound) {
    if (n > bound) throw BoundExceeded("Bell diagram grade", n, bound);
    std::vector<std::pair<IntegerPartition, BigInt>> out;
    for (auto& lambda : enumerate_integer_partitions(n, std::max(n, kDefaultIntegerPartitionBound))) {
        auto mult = partition_type_multiplicity(lambda);
        out.emplace_back(std::move(lambda), std::move(mult));
    }
    return out;
}

std::string to_dot(const DiagDiagram& d, const std::string& graph_name) {
    std::ostringstream os;
    os << "graph " << graph_name << " {\n";
    for (std::size_t w = 0; w < d.whites(); ++w)
        os << "  w" << w << " [shape=circle style=filled fillcolor=white];\n";
    for (std::size_t b = 0; b < d.blacks(); ++b)
        os << "  b" << b << " [shape=circle style=filled fillcolor=black];\n";
    for (std::size_t w = 0; w < d.whites(); ++w)
        for (std::size_t b = 0; b < d.blacks(); ++b)
            for (unsigned k = 0; k < d.at(w, b); ++k) os << "  w" << w << " -- b" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace hopfdiag
