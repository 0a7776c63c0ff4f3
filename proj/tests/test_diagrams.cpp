#include <doctest.h>

#include <random>
#include <set>

#include "hopfdiag/diagrams.hpp"
#include "hopfdiag/errors.hpp"
#include "oracles.hpp"

using namespace hopfdiag;

namespace {

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

std::vector<Rational> unit_l(std::size_t n) {
    std::vector<Rational> l(n, Rational(0));
    l[0] = 1;
    return l;
}

BigInt total_multiplicity(const WeightedDiagramSet& s) {
    BigInt t = 0;
    for (const auto& [d, m] : s) t += m;
    return t;
}

} // namespace

TEST_CASE("canonicalize") {
    CHECK(canonicalize({{2}}).matrix() == MultMatrix{{2}});
    const auto swapped = canonicalize({{0, 1}, {1, 0}});
    CHECK(swapped == canonicalize({{1, 0}, {0, 1}}));
    CHECK(swapped.matrix() == MultMatrix{{0, 1}, {1, 0}});
    CHECK(swapped.grade() == 2);
    CHECK(canonicalize({{1, 1}}) != canonicalize({{1}, {1}}));

    CHECK_THROWS_AS(canonicalize({{1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{1, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize({{1, 1}, {1}}), std::invalid_argument);
    CHECK(canonicalize({}) == DiagDiagram());

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = oracle::random_mult_matrix(rng);
        const auto d = canonicalize(m);
        CHECK(canonicalize(oracle::shuffle(m, rng)) == d);
        CHECK(canonicalize(d.matrix()) == d);
    }
}

TEST_CASE("canonical classes coincide with isomorphism classes") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::map<std::vector<unsigned>, std::set<DiagDiagram>> by_lexmin;
        std::map<DiagDiagram, std::set<std::vector<unsigned>>> by_canon;
        for (const auto& w : enumerate_set_partitions(n))
            for (const auto& b : enumerate_set_partitions(n)) {
                MultMatrix m(w.blocks().size(), std::vector<unsigned>(b.blocks().size(), 0));
                const auto wb = w.block_of(), bb = b.block_of();
                for (std::size_t line = 0; line < n; ++line) ++m[wb[line]][bb[line]];
                const auto key = oracle::global_lexmin(m);
                const auto d = canonicalize(m);
                by_lexmin[key].insert(d);
                by_canon[d].insert(key);
            }
        for (const auto& [key, ds] : by_lexmin) CHECK(ds.size() == 1);
        for (const auto& [d, keys] : by_canon) CHECK(keys.size() == 1);
    }
}

TEST_CASE("configuration_to_diagram") {
    const SetPartition single(1, {{1}});
    CHECK(configuration_to_diagram({single, single}).matrix() == MultMatrix{{1}});
    const SetPartition joined(2, {{1, 2}}), split(2, {{1}, {2}});
    const auto star = configuration_to_diagram({joined, split});
    CHECK(star.whites() == 1);
    CHECK(star.blacks() == 2);
    CHECK(star.white_degrees() == std::vector<unsigned>{2});
    CHECK(star.black_degrees() == std::vector<unsigned>{1, 1});
    CHECK(configuration_to_diagram({joined, joined}).matrix() == MultMatrix{{2}});
}

TEST_CASE("enumerate_diag_diagrams") {
    const auto one = enumerate_diag_diagrams(1);
    REQUIRE(one.size() == 1);
    CHECK(one.begin()->first.matrix() == MultMatrix{{1}});
    CHECK(one.begin()->second == 1);

    const auto two = enumerate_diag_diagrams(2);
    CHECK(two.size() == 4);
    for (const auto& [d, m] : two) CHECK(m == 1);

    CHECK(total_multiplicity(enumerate_diag_diagrams(3)) == 25);
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto b = bell_number(n);
        CHECK(total_multiplicity(enumerate_diag_diagrams(n)) == b * b);
        for (const auto& [d, m] : enumerate_diag_diagrams(n)) {
            CHECK(m >= 1);
            CHECK(d.grade() == n);
        }
    }
    CHECK_THROWS_AS(enumerate_diag_diagrams(8), BoundExceeded);
    CHECK_THROWS_AS(enumerate_diag_diagrams(4, 3), BoundExceeded);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(canonicalize({{1}})));
    CHECK_FALSE(is_connected(canonicalize({{1, 0}, {0, 1}})));
    CHECK(is_connected(canonicalize({{1, 1}, {1, 0}})));
    CHECK_FALSE(is_connected(DiagDiagram()));
    CHECK(connected_diagrams(2).size() == 3);
    for (const auto& d : connected_diagrams(3)) CHECK(is_connected(d));
}

TEST_CASE("diagram_weight") {
    const std::vector<Rational> l{Rational(2), Rational(3), Rational(5)};
    const std::vector<Rational> v{Rational(7), Rational(11), Rational(13)};
    CHECK(diagram_weight(canonicalize({{1}}), l, v) == Rational(2 * 7));
    CHECK(diagram_weight(canonicalize({{2}}), l, v) == Rational(3 * 11));
    CHECK(diagram_weight(canonicalize({{1, 1}}), l, v) == Rational(3 * 7 * 7));
    CHECK_THROWS_AS(diagram_weight(canonicalize({{2, 2}}), l, v), std::invalid_argument);
}

TEST_CASE("product formula") {
    std::mt19937_64 rng(42);
    const auto l = oracle::random_rationals(rng, 3), v = oracle::random_rationals(rng, 3);
    const auto f = pfi_by_diagrams(2, l, v);
    CHECK(f[0] == Rational(1));
    CHECK(f[1] == l[0] * v[0]);
    CHECK(f[2] == (l[0] * l[0] + l[1]) * (v[0] * v[0] + v[1]));
    CHECK(pfi_by_series(2, l, v) == f);

    const auto bell = pfi_by_diagrams(6, unit_l(6), ones(6));
    for (std::size_t n = 0; n <= 6; ++n) CHECK(bell[n] == Rational(bell_number(n)));
    CHECK(pfi_by_series(6, unit_l(6), ones(6)) == bell);
    CHECK(pfi_by_diagrams(0, {}, {}).order() == 0);

    const auto census = DiagramCensus::build(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto lt = oracle::random_rationals(rng, 5), vt = oracle::random_rationals(rng, 5);
        CHECK(pfi_by_diagrams(census, 5, lt, vt) == pfi_by_series(5, lt, vt));
    }
    CHECK_THROWS_AS(pfi_by_diagrams(8, ones(8), ones(8)), BoundExceeded);
}

TEST_CASE("connected generating check") {
    std::mt19937_64 rng(43);
    const auto l = oracle::random_rationals(rng, 2), v = oracle::random_rationals(rng, 2);
    CHECK(connected_generating_check(2, l, v));
    const auto sums = connected_diagram_sums(DiagramCensus::build(2), 2, l, v);
    CHECK(sums[2] == l[1] * v[1] + l[1] * v[0] * v[0] + l[0] * l[0] * v[1]);

    CHECK(connected_generating_check(4, unit_l(4), ones(4)));
    const auto bell_sums = connected_diagram_sums(DiagramCensus::build(4), 4, unit_l(4), ones(4));
    for (std::size_t n = 1; n <= 4; ++n) CHECK(bell_sums[n] == Rational(1));
    CHECK(connected_generating_check(0, {}, {}));

    const auto census = DiagramCensus::build(5);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(connected_generating_check(census, 5, oracle::random_rationals(rng, 5), oracle::random_rationals(rng, 5)));
}

TEST_CASE("enumerate_bell_diagrams") {
    using Table = std::vector<std::pair<IntegerPartition, BigInt>>;
    CHECK(enumerate_bell_diagrams(1) == Table{{IntegerPartition({1}), 1}});
    CHECK(enumerate_bell_diagrams(2) == Table{{IntegerPartition({2}), 1}, {IntegerPartition({1, 1}), 1}});
    CHECK(enumerate_bell_diagrams(3) ==
          Table{{IntegerPartition({3}), 1}, {IntegerPartition({2, 1}), 3}, {IntegerPartition({1, 1, 1}), 1}});

    // white degrees all one: black degrees give the shape
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<IntegerPartition, BigInt> restricted;
        for (const auto& [d, m] : enumerate_diag_diagrams(n)) {
            const auto wd = d.white_degrees();
            if (std::all_of(wd.begin(), wd.end(), [](unsigned x) { return x == 1; }))
                restricted[IntegerPartition(d.black_degrees())] += m;
        }
        const auto table = enumerate_bell_diagrams(n);
        CHECK(std::map<IntegerPartition, BigInt>(table.begin(), table.end()) == restricted);
        BigInt total = 0;
        for (const auto& [shape, m] : table) total += m;
        CHECK(total == bell_number(n));
    }
}

TEST_CASE("to_dot") {
    const auto dot = to_dot(canonicalize({{2, 1}}), "d");
    CHECK(dot ==
          "graph d {\n"
          "  w0 [shape=circle style=filled fillcolor=white];\n"
          "  b0 [shape=circle style=filled fillcolor=black];\n"
          "  b1 [shape=circle style=filled fillcolor=black];\n"
          "  w0 -- b0;\n"
          "  w0 -- b1;\n"
          "  w0 -- b1;\n"
          "}\n");
}
