#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "hopfdiag/boson.hpp"
#include "hopfdiag/combinatorics.hpp"
#include "hopfdiag/diagrams.hpp"
#include "hopfdiag/errors.hpp"
#include "hopfdiag/hopf.hpp"
#include "hopfdiag/json_io.hpp"
#include "hopfdiag/series.hpp"

namespace hopfdiag::cli {

namespace {

constexpr unsigned kBellTableBound = 25;
constexpr unsigned kBellCheckBound = 12;

struct Options {
    std::string format = "json";

    unsigned bell_n = 10;

    std::string word;

    std::size_t order = 4;
    std::string l_list;
    std::string v_list;
    std::string pfi_word;
    bool pfi_has_word = false;

    unsigned diag_grade = 2;
    bool connected_only = false;
    std::string dot_dir;

    std::string algebra = "bell";
    unsigned check_grade = 4;

    std::string map = "bell";
    unsigned map_grade = 3;

    std::string moments_file;
    std::string cumulant_word;
    std::size_t cumulant_order = 6;
    bool invert = false;

    double beta_eps = 1.0;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

// Comma separated rationals, padded to `order` entries by repeating the last.
std::vector<Rational> parse_weights(const std::string& text, std::size_t order, const char* name) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (out.empty() && order > 0) throw std::invalid_argument(std::string("--") + name + " needs at least one weight");
    while (out.size() < order) out.push_back(out.back());
    return out;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

int cmd_bell(const Options& o, std::ostream& out) {
    if (o.bell_n > kBellTableBound) throw BoundExceeded("bell table", o.bell_n, kBellTableBound);
    const auto table = stirling2_table(o.bell_n);
    if (o.format == "text") {
        out << pad("n", 3) << "  " << pad("B(n)", 20) << "  S(n,k) k=0..n\n";
        for (unsigned n = 0; n <= o.bell_n; ++n) {
            BigInt b = 0;
            for (const auto& s : table[n]) b += s;
            out << pad(std::to_string(n), 3) << "  " << pad(b.get_str(), 20) << " ";
            for (const auto& s : table[n]) out << ' ' << s.get_str();
            out << '\n';
        }
        return kOk;
    }
    json rows = json::array();
    for (unsigned n = 0; n <= o.bell_n; ++n) {
        BigInt b = 0;
        json row = json::array();
        for (const auto& s : table[n]) {
            b += s;
            row.push_back(s.get_str());
        }
        rows.push_back({{"n", n}, {"bell", b.get_str()}, {"stirling2", std::move(row)}});
    }
    emit(out, json{{"max_n", o.bell_n}, {"rows", std::move(rows)}});
    return kOk;
}

int cmd_normal_order(const Options& o, std::ostream& out) {
    const auto w = BosonWord::parse(o.word);
    const auto nf = normal_order(w);
    const auto forgetful = forget_normal_order(w);
    if (o.format == "text") {
        out << "word:         " << (w.empty() ? "(identity)" : w.to_string()) << '\n';
        out << "normal order: " << nf.to_string() << '\n';
        out << "<z|.|z>:      " << coherent_expectation(nf).to_string() << '\n';
        out << "forgetful:    " << forgetful.to_string() << '\n';
        out << "<z|:.:|z>:    " << coherent_expectation(forgetful).to_string() << '\n';
        return kOk;
    }
    json j;
    j["word"] = w.to_string();
    j["normal_form"] = nf;
    j["expectation"] = coherent_expectation(nf);
    j["forgetful_normal_form"] = forgetful;
    j["forgetful_expectation"] = coherent_expectation(forgetful);
    emit(out, j);
    return kOk;
}

int cmd_pfi_word(const Options& o, std::ostream& out) {
    const auto w = BosonWord::parse(o.pfi_word);
    const auto moments = word_moments(w, o.order);
    // Second route: normal order the concatenated word w^n directly.
    bool agree = true;
    BosonWord power;
    for (std::size_t n = 0; n <= o.order; ++n) {
        if (n > 0) power = power * w;
        agree = agree && coherent_expectation(normal_order(power)) == moments[n];
    }
    const auto cumulants = moments_to_cumulants(moments);
    if (o.format == "text") {
        out << "F(x) = sum_n W_n x^n/n! for w = " << (w.empty() ? "(identity)" : w.to_string()) << '\n';
        for (std::size_t n = 0; n <= o.order; ++n) out << "W_" << n << " = " << moments[n].to_string() << '\n';
        for (std::size_t n = 1; n <= o.order; ++n)
            out << "V_" << n << " = " << cumulants[n - 1].to_string() << '\n';
        out << "evaluations agree: " << (agree ? "yes" : "no") << '\n';
        return agree ? kOk : kCheckFailed;
    }
    json j;
    j["mode"] = "word";
    j["word"] = w.to_string();
    j["order"] = o.order;
    j["moments"] = moments;
    j["cumulants"] = cumulants;
    j["evaluations_agree"] = agree;
    emit(out, j);
    return agree ? kOk : kCheckFailed;
}

int cmd_pfi(const Options& o, std::ostream& out) {
    if (o.pfi_has_word) return cmd_pfi_word(o, out);
    const auto bound = diagram_grade_bound();
    if (o.order > bound) throw BoundExceeded("pfi order", o.order, bound);
    const auto l = parse_weights(o.l_list, o.order, "L");
    const auto v = parse_weights(o.v_list, o.order, "V");
    const auto census = DiagramCensus::build(o.order, bound);
    const auto by_series = pfi_by_series(o.order, l, v);
    const auto by_diagrams = pfi_by_diagrams(census, o.order, l, v);
    const auto connected = connected_diagram_sums(census, o.order, l, v);
    const bool agree = by_series == by_diagrams;

    json grades = json::array();
    for (std::size_t n = 0; n <= o.order; ++n) {
        std::size_t count = 0, conn = 0;
        BigInt total = 0;
        for (const auto& [d, mult] : census.grades[n]) {
            ++count;
            conn += is_connected(d) ? 1 : 0;
            total += mult;
        }
        grades.push_back({{"grade", n},
                          {"diagrams", count},
                          {"connected", conn},
                          {"total_multiplicity", total.get_str()},
                          {"F_n", by_series[n]},
                          {"connected_sum", connected[n]}});
    }
    if (o.format == "text") {
        out << pad("n", 3) << pad("diagrams", 10) << pad("connected", 11) << pad("sum mult", 10) << pad("F_n", 16)
            << pad("connected", 16) << '\n';
        for (const auto& g : grades)
            out << pad(std::to_string(g["grade"].get<std::size_t>()), 3)
                << pad(std::to_string(g["diagrams"].get<std::size_t>()), 10)
                << pad(std::to_string(g["connected"].get<std::size_t>()), 11)
                << pad(g["total_multiplicity"].get<std::string>(), 10) << pad(g["F_n"].get<std::string>(), 16)
                << pad(g["connected_sum"].get<std::string>(), 16) << '\n';
        out << "evaluations agree: " << (agree ? "yes" : "no") << '\n';
        return agree ? kOk : kCheckFailed;
    }
    json j;
    j["mode"] = "product_formula";
    j["order"] = o.order;
    j["L"] = l;
    j["V"] = v;
    j["series"] = by_series;
    j["diagram_sum"] = by_diagrams;
    j["evaluations_agree"] = agree;
    j["grades"] = std::move(grades);
    emit(out, j);
    return agree ? kOk : kCheckFailed;
}

int cmd_diagrams(const Options& o, std::ostream& out) {
    const auto bound = diagram_grade_bound();
    const auto set = enumerate_diag_diagrams(o.diag_grade, bound);
    const BigInt bell = bell_number(o.diag_grade);
    BigInt total = 0;
    std::size_t connected = 0;
    json listing = json::array();
    std::vector<std::pair<std::string, std::string>> dot_files;
    std::size_t index = 0;
    for (const auto& [d, mult] : set) {
        const bool conn = is_connected(d);
        total += mult;
        connected += conn ? 1 : 0;
        const std::string name = "diag_n" + std::to_string(o.diag_grade) + "_" + std::to_string(index);
        if (!o.connected_only || conn) {
            listing.push_back({{"index", index},
                               {"mult", d.matrix()},
                               {"multiplicity", mult.get_str()},
                               {"connected", conn},
                               {"white_degrees", d.white_degrees()},
                               {"black_degrees", d.black_degrees()}});
            dot_files.emplace_back(name + ".dot", to_dot(d, name));
        }
        ++index;
    }
    if (!o.dot_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(o.dot_dir, ec);
        if (ec) throw std::runtime_error("cannot create DOT directory '" + o.dot_dir + "': " + ec.message());
        for (const auto& [file, text] : dot_files) {
            const auto path = fs::path(o.dot_dir) / file;
            std::ofstream f(path);
            if (!(f << text)) throw std::runtime_error("cannot write '" + path.string() + "'");
        }
    }
    const bool consistent = total == bell * bell;
    json census{{"count", set.size()},
                {"connected", connected},
                {"total_multiplicity", total.get_str()},
                {"bell_squared", BigInt(bell * bell).get_str()},
                {"consistent", consistent}};
    if (o.format == "text") {
        for (const auto& e : listing) {
            out << pad(std::to_string(e["index"].get<std::size_t>()), 4) << "  mult=" << e["mult"].dump()
                << "  multiplicity=" << e["multiplicity"].get<std::string>()
                << (e["connected"].get<bool>() ? "  connected" : "") << '\n';
        }
        out << "grade " << o.diag_grade << ": " << set.size() << " diagrams, " << connected
            << " connected, total multiplicity " << total.get_str() << " (B(n)^2 = " << BigInt(bell * bell).get_str()
            << ")\n";
    } else {
        emit(out, json{{"grade", o.diag_grade}, {"diagrams", std::move(listing)}, {"census", std::move(census)}});
    }
    return consistent ? kOk : kCheckFailed;
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked)";
        if (!c.passed) out << "  counterexample " << json(c.counterexample).dump();
        out << '\n';
    }
}

int cmd_hopf_check(const Options& o, std::ostream& out) {
    const Algebra a = o.algebra == "bell" ? Algebra::bell : Algebra::diag;
    const std::size_t bound = a == Algebra::bell ? kBellCheckBound : diagram_grade_bound();
    if (o.check_grade > bound) throw BoundExceeded("hopf check grade", o.check_grade, bound);
    const auto report = check_hopf_axioms(a, o.check_grade, bound);
    if (o.format == "text") {
        out << report.algebra << " up to grade " << report.max_grade << '\n';
        print_checks(out, report.axioms);
    } else {
        emit(out, json(report));
    }
    return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_morphism_check(const Options& o, std::ostream& out) {
    const auto bound = diagram_grade_bound();
    if (o.map_grade > bound) throw BoundExceeded("morphism check grade", o.map_grade, bound);
    GeneratorMap phi;
    if (o.map == "bell") phi = phi_bell();
    else if (o.map == "contract") phi = phi_contract();
    else if (o.map == "zero") phi = phi_zero();
    else phi = generator_map_from_json(read_json_file(o.map));
    const auto report = check_hopf_morphism(phi, o.map_grade, o.map, bound);
    if (o.format == "text") {
        out << "map " << report.map_name << " up to grade " << report.max_grade << '\n';
        print_checks(out, report.conditions);
        out << "surjective onto BELL generators: " << (report.surjective ? "yes" : "no") << '\n';
    } else {
        emit(out, json(report));
    }
    return report.all_passed() ? kOk : kCheckFailed;
}

std::vector<ZPolynomial> read_sequence(const json& j, const char* key) {
    const auto& seq = j.is_array() ? j : (j.is_object() && j.contains(key) ? j.at(key) : json());
    if (!seq.is_array()) throw std::invalid_argument(std::string("bad JSON schema: expected an array under '") + key + "'");
    std::vector<ZPolynomial> out;
    for (const auto& v : seq) out.push_back(zpolynomial_from_json(v));
    return out;
}

int cmd_cumulants(const Options& o, std::ostream& out) {
    std::vector<ZPolynomial> moments, cumulants;
    if (!o.moments_file.empty()) {
        const auto j = read_json_file(o.moments_file);
        if (o.invert) {
            cumulants = read_sequence(j, "cumulants");
            moments = cumulants_to_moments(cumulants);
        } else {
            moments = read_sequence(j, "moments");
            cumulants = moments_to_cumulants(moments);
        }
    } else {
        moments = word_moments(BosonWord::parse(o.cumulant_word), o.cumulant_order);
        cumulants = moments_to_cumulants(moments);
    }
    const bool roundtrip = o.invert ? moments_to_cumulants(moments) == cumulants
                                    : cumulants_to_moments(cumulants) == moments;
    if (o.format == "text") {
        for (std::size_t n = 0; n < moments.size(); ++n) out << "W_" << n << " = " << moments[n].to_string() << '\n';
        for (std::size_t n = 0; n < cumulants.size(); ++n)
            out << "V_" << n + 1 << " = " << cumulants[n].to_string() << '\n';
        out << "roundtrip: " << (roundtrip ? "exact" : "MISMATCH") << '\n';
    } else {
        json j;
        j["order"] = cumulants.size();
        j["moments"] = moments;
        j["cumulants"] = cumulants;
        j["roundtrip"] = roundtrip;
        emit(out, j);
    }
    return roundtrip ? kOk : kCheckFailed;
}

int cmd_partition_function(const Options& o, std::ostream& out) {
    const double z = free_boson_partition_function(o.beta_eps);
    const auto trace = free_boson_trace_sum(o.beta_eps);
    const double delta = std::fabs(z - trace.value);
    if (o.format == "text") {
        out << std::setprecision(17) << "Z(beta*eps=" << o.beta_eps << ") = " << z << '\n'
            << "geometric trace (" << trace.terms << " terms) = " << trace.value << '\n'
            << "delta = " << delta << '\n';
    } else {
        json j;
        j["beta_eps"] = o.beta_eps;
        j["closed_form"] = z;
        j["geometric_sum"] = trace.value;
        j["terms"] = trace.terms;
        j["delta"] = delta;
        emit(out, j);
    }
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics, boson normal ordering, diagram expansions and the BELL/DIAG Hopf algebras"};
    app.name("hopfdiag");
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed = {"json", "text"}) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
    };

    auto* bell = app.add_subcommand("bell", "Bell numbers and Stirling numbers of the second kind");
    bell->add_option("--n", o.bell_n, "Largest n in the table (<= 25)")->capture_default_str();
    add_format(bell);

    auto* normal = app.add_subcommand("normal-order", "Normal ordering of a boson word, both variants");
    normal->add_option("--word", o.word, "Word over a (annihilator) and A or a+ (creator)")->required();
    add_format(normal);

    auto* pfi = app.add_subcommand("pfi", "Partition function integrand via the product formula or a boson word");
    pfi->add_option("--N", o.order, "Truncation order")->capture_default_str();
    auto* l_opt = pfi->add_option("--L", o.l_list, "Comma separated L_1,L_2,...; the last value repeats");
    auto* v_opt = pfi->add_option("--V", o.v_list, "Comma separated V_1,V_2,...; the last value repeats");
    auto* w_opt = pfi->add_option("--word", o.pfi_word, "Boson word w; F(x) = sum <z|w^n|z> x^n/n!");
    l_opt->needs(v_opt);
    v_opt->needs(l_opt);
    w_opt->excludes(l_opt)->excludes(v_opt);
    add_format(pfi);

    auto* diagrams = app.add_subcommand("diagrams", "Enumerate DIAG diagrams of one grade");
    diagrams->add_option("--n", o.diag_grade, "Grade (number of lines)")->capture_default_str();
    diagrams->add_flag("--connected-only", o.connected_only, "List connected diagrams only");
    diagrams->add_option("--dot", o.dot_dir, "Write one DOT file per listed diagram into this directory");
    add_format(diagrams);

    auto* hopf = app.add_subcommand("hopf-check", "Check the Hopf algebra axioms up to a grade");
    hopf->add_option("--algebra", o.algebra, "bell or diag")
        ->check(CLI::IsMember({"bell", "diag"}))
        ->capture_default_str();
    hopf->add_option("--grade", o.check_grade, "Largest grade checked")->capture_default_str();
    add_format(hopf);

    auto* morph = app.add_subcommand("morphism-check", "Check a DIAG -> BELL generator map for the Hopf morphism laws");
    morph->add_option("--map", o.map, "bell, contract, zero, or a JSON map file")->capture_default_str();
    morph->add_option("--grade", o.map_grade, "Largest grade checked")->capture_default_str();
    add_format(morph);

    auto* cum = app.add_subcommand("cumulants", "Moments <-> cumulants conversion");
    auto* mf = cum->add_option("--moments", o.moments_file, "JSON file with \"moments\" (or \"cumulants\" with --invert)");
    auto* cw = cum->add_option("--word", o.cumulant_word, "Boson word whose moments are converted");
    cum->add_option("--N", o.cumulant_order, "Order used with --word")->capture_default_str();
    cum->add_flag("--invert", o.invert, "Input file holds cumulants; output moments");
    mf->excludes(cw);
    add_format(cum);

    auto* zf = app.add_subcommand("partition-function", "Free boson partition function");
    zf->add_option("--beta-eps", o.beta_eps, "beta * epsilon (> 0)")->required();
    add_format(zf);

    try {
        app.parse(argc, argv);
        if (*cum && o.moments_file.empty() && cw->count() == 0)
            throw CLI::RequiredError("cumulants needs --moments FILE or --word W");
        if (*cum && o.invert && o.moments_file.empty())
            throw CLI::ValidationError("--invert needs --moments FILE");
        if (*pfi && l_opt->count() == 0 && w_opt->count() == 0)
            throw CLI::RequiredError("pfi needs --L and --V, or --word");
        o.pfi_has_word = w_opt->count() > 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*bell) return cmd_bell(o, out);
        if (*normal) return cmd_normal_order(o, out);
        if (*pfi) return cmd_pfi(o, out);
        if (*diagrams) return cmd_diagrams(o, out);
        if (*hopf) return cmd_hopf_check(o, out);
        if (*morph) return cmd_morphism_check(o, out);
        if (*cum) return cmd_cumulants(o, out);
        if (*zf) return cmd_partition_function(o, out);
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBound;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace hopfdiag::cli
