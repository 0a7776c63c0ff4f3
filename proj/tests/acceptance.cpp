// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfdiag/boson.hpp"
#include "hopfdiag/combinatorics.hpp"
#include "hopfdiag/diagrams.hpp"
#include "hopfdiag/hopf.hpp"
#include "hopfdiag/series.hpp"
#include "oracles.hpp"

#ifndef HOPFDIAG_CLI_PATH
#error "HOPFDIAG_CLI_PATH must name the hopfdiag executable"
#endif

using namespace hopfdiag;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << id << ' ' << title << ": " << detail << std::endl;
    if (!ok) ++failures;
}

template <typename F>
void criterion(int id, const std::string& title, F&& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, title, ok, detail);
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& y) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
}

// Shared (L, V) sample for the product-formula criteria.
std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> weight_sample() {
    std::mt19937_64 rng(2024);
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> out;
    for (int t = 0; t < 50; ++t) {
        auto l = oracle::random_rationals(rng, 6);
        auto v = oracle::random_rationals(rng, 6);
        out.emplace_back(std::move(l), std::move(v));
    }
    return out;
}

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

struct Capture {
    int status;
    std::string out;
};

Capture run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(HOPFDIAG_CLI_PATH);
    for (const auto& a : args) cmd += ' ' + shell_quote(a);
    cmd += " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot start " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    return {pclose(pipe), out};
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ifstream f(e.path(), std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        files[e.path().filename().string()] = s.str();
    }
    return files;
}

} // namespace

int main() {
    criterion(1, "Bell/Stirling consistency", [](std::string& detail) {
        for (unsigned n = 0; n <= 8; ++n) {
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k);
            const auto b = bell_number(n);
            if (sum != b || BigInt(enumerate_set_partitions(n).size()) != b) {
                detail = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "sum_k S(n,k) == B(n) == #set partitions for n <= 8";
        return true;
    });

    criterion(2, "Bell polynomial generating function", [](std::string& detail) {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 5; ++trial) {
            const auto y = oracle::random_rational(rng);
            const auto g = series_exp(EGFSeries::constant_tail(10, y));
            for (unsigned n = 0; n <= 10; ++n)
                if (g[n] != eval_poly(bell_polynomial(n), y)) {
                    detail = "mismatch at y=" + y.to_string() + ", n=" + std::to_string(n);
                    return false;
                }
        }
        detail = "exp(y(e^x-1)) coefficients equal B_n(y), n <= 10, 5 random y";
        return true;
    });

    criterion(3, "Normal ordering and Bell polynomials", [](std::string& detail) {
        const auto number = NormalForm::term(1, 1);
        for (unsigned n = 0; n <= 8; ++n) {
            std::vector<Letter> letters;
            for (unsigned k = 0; k < n; ++k) letters.insert(letters.end(), {Letter::creation, Letter::annihilation});
            const auto direct = normal_order(BosonWord(letters));
            if (direct != normal_power(number, n) ||
                coherent_expectation(direct) != ZPolynomial::in_y(bell_polynomial(n))) {
                detail = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "<z|N((a+a)^n)|z> == B_n(y) for n <= 8";
        return true;
    });

    criterion(4, "Moments and cumulants", [](std::string& detail) {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<ZPolynomial> w{ZPolynomial(1)};
            for (int n = 1; n <= 6; ++n) {
                ZPolynomial p;
                for (int t = 0; t < 3; ++t)
                    p.add({static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4)},
                          oracle::random_rational(rng));
                w.push_back(p);
            }
            if (cumulants_to_moments(moments_to_cumulants(w)) != w) {
                detail = "roundtrip failed in trial " + std::to_string(trial);
                return false;
            }
        }
        std::vector<ZPolynomial> bell;
        for (unsigned n = 0; n <= 6; ++n) bell.push_back(ZPolynomial::in_y(bell_polynomial(n)));
        for (const auto& v : moments_to_cumulants(bell))
            if (v != ZPolynomial::y_power(1)) {
                detail = "free boson cumulant differs from y";
                return false;
            }
        detail = "25 random roundtrips (N=6) exact; W_n = B_n(y) gives V_n = y";
        return true;
    });

    const auto sample = weight_sample();
    const auto census = DiagramCensus::build(6);

    criterion(5, "Product formula dual evaluation", [&](std::string& detail) {
        for (unsigned n = 0; n <= 6; ++n) {
            BigInt total = 0;
            for (const auto& [d, m] : census.grades[n]) total += m;
            const auto b = bell_number(n);
            if (total != b * b) {
                detail = "census mismatch at grade " + std::to_string(n);
                return false;
            }
        }
        for (std::size_t t = 0; t < sample.size(); ++t)
            for (std::size_t order = 0; order <= 6; ++order) {
                const auto& [l, v] = sample[t];
                if (pfi_by_diagrams(census, order, l, v) != pfi_by_series(order, l, v)) {
                    detail = "sample " + std::to_string(t) + ", N=" + std::to_string(order);
                    return false;
                }
            }
        detail = "diagram sum == operator series for N <= 6 over 50 samples; census B(n)^2 for n <= 6";
        return true;
    });

    criterion(6, "Connected graph theorem", [&](std::string& detail) {
        for (std::size_t t = 0; t < sample.size(); ++t)
            if (!connected_generating_check(census, 6, sample[t].first, sample[t].second)) {
                detail = "sample " + std::to_string(t);
                return false;
            }
        detail = "log F == connected diagram sums for N <= 6 over 50 samples";
        return true;
    });

    criterion(7, "Bell diagram shapes", [](std::string& detail) {
        const int expected[] = {1, 2, 5};
        std::ostringstream s;
        for (unsigned n = 1; n <= 3; ++n) {
            BigInt total = 0;
            for (const auto& [shape, m] : enumerate_bell_diagrams(n)) total += m;
            s << (n > 1 ? ", " : "") << "n=" << n << " total " << total;
            if (total != expected[n - 1]) {
                detail = s.str();
                return false;
            }
        }
        detail = s.str();
        return true;
    });

    criterion(8, "Hopf axioms", [](std::string& detail) {
        for (const auto& [a, grade] : {std::pair{Algebra::bell, 5u}, std::pair{Algebra::diag, 4u}}) {
            const auto r = check_hopf_axioms(a, grade);
            for (const auto& c : r.axioms)
                if (!c.passed) {
                    detail = r.algebra + " fails " + c.name;
                    return false;
                }
        }
        detail = "all axioms incl. antipode laws exact for bell (<= 5) and diag (<= 4)";
        return true;
    });

    criterion(9, "Morphism onto the Bell algebra", [](std::string& detail) {
        const auto bell = check_hopf_morphism(phi_bell(), 4, "bell");
        if (!bell.all_passed() || !bell.surjective) {
            detail = "phi_bell is not a surjective morphism";
            return false;
        }
        const auto contract = check_hopf_morphism(phi_contract(), 4, "contract");
        for (const auto& c : contract.conditions)
            if (c.name == "coalgebra" && !c.passed && !c.counterexample.empty()) {
                detail = "phi_bell passes and is surjective; phi_contract fails coalgebra with a counterexample";
                return true;
            }
        detail = "phi_contract did not report a coalgebra counterexample";
        return false;
    });

    criterion(10, "Free boson partition function", [](std::string& detail) {
        double worst = 0;
        for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            const auto trace = free_boson_trace_sum(x);
            worst = std::max(worst, std::fabs(trace.value - free_boson_partition_function(x)));
        }
        std::ostringstream s;
        s << "max |closed - trace| = " << worst << " (tolerance 1e-10)";
        detail = s.str();
        return worst < 1e-10;
    });

    criterion(11, "CLI determinism", [](std::string& detail) {
        const auto scratch = fs::temp_directory_path() / "hopfdiag_acceptance";
        fs::remove_all(scratch);
        fs::create_directories(scratch);
        const auto moments = (scratch / "moments.json").string();
        std::ofstream(moments) << R"({"moments": ["1", "1/2", "3", "-2/7"]})";
        const auto zero_map = (scratch / "zero.json").string();
        std::ofstream(zero_map) << R"({"default": {"terms": []}})";

        const std::vector<std::vector<std::string>> commands = {
            {"bell", "--n", "12"},
            {"bell", "--n", "6", "--format", "text"},
            {"normal-order", "--word", "A A a a A a"},
            {"pfi", "--N", "5", "--L", "1,-2/3", "--V", "1,1/2,3"},
            {"pfi", "--N", "4", "--word", "a A A a"},
            {"diagrams", "--n", "4"},
            {"diagrams", "--n", "3", "--connected-only", "--format", "text"},
            {"hopf-check", "--algebra", "bell", "--grade", "4"},
            {"hopf-check", "--algebra", "diag", "--grade", "3"},
            {"morphism-check", "--map", "bell", "--grade", "3"},
            {"morphism-check", "--map", "contract", "--grade", "2"},
            {"morphism-check", "--map", zero_map, "--grade", "3"},
            {"cumulants", "--word", "A a", "--N", "5"},
            {"cumulants", "--moments", moments},
            {"partition-function", "--beta-eps", "1.5"},
        };
        for (const auto& args : commands) {
            const auto first = run_cli(args), second = run_cli(args);
            if (first.status != second.status || first.out != second.out || first.out.empty()) {
                detail = "output differs for " + args[0];
                return false;
            }
        }
        const auto dir_a = scratch / "dot_a", dir_b = scratch / "dot_b";
        run_cli({"diagrams", "--n", "4", "--dot", dir_a.string()});
        run_cli({"diagrams", "--n", "4", "--dot", dir_b.string()});
        const auto dots = read_dir(dir_a);
        const bool same_dot = dots == read_dir(dir_b) && dots.size() == enumerate_diag_diagrams(4).size();
        fs::remove_all(scratch);
        if (!same_dot) {
            detail = "DOT files differ between runs";
            return false;
        }
        detail = std::to_string(commands.size()) + " invocations and " + std::to_string(dots.size()) +
                 " DOT files byte-identical across two runs";
        return true;
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
