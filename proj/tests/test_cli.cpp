#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hopfdiag/json_io.hpp"

using namespace hopfdiag;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hopfdiag");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("hopfdiag_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> coeffs(const json& series) { return series.at("coeffs").get<std::vector<std::string>>(); }

} // namespace

TEST_CASE("cli bell") {
    const auto r = run({"bell", "--n", "7"});
    REQUIRE(r.code == cli::kOk);
    const auto rows = r.parsed().at("rows");
    CHECK(rows.size() == 8);
    CHECK(rows[0].at("bell") == "1");
    CHECK(rows[3].at("bell") == "5");
    CHECK(rows[7].at("bell") == "877");
    CHECK(run({"bell", "--n", "0"}).parsed().at("rows")[0].at("bell") == "1");
    CHECK(run({"bell", "--n", "26"}).code == cli::kBound);
    CHECK(run({"bell", "--n", "3", "--format", "text"}).out.find("5") != std::string::npos);
}

TEST_CASE("cli normal-order") {
    auto r = run({"normal-order", "--word", "a A"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.parsed().at("normal_form").at("text") == "1 + A a");
    CHECK(r.parsed().at("forgetful_normal_form").at("text") == "A a");

    r = run({"normal-order", "--word", "A a A a"});
    CHECK(r.parsed().at("normal_form").at("text") == "A a + A^2 a^2");
    CHECK(r.parsed().at("expectation").at("text") == "y + y^2");

    CHECK(run({"normal-order", "--word", ""}).parsed().at("normal_form").at("text") == "1");

    r = run({"normal-order", "--word", "A x"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("position 2") != std::string::npos);
}

TEST_CASE("cli pfi") {
    auto r = run({"pfi", "--N", "4", "--L", "1,0", "--V", "1,1,1"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.parsed();
    CHECK(coeffs(j.at("series")) == std::vector<std::string>{"1", "1", "2", "5", "15"});
    CHECK(j.at("evaluations_agree") == true);
    CHECK(j.at("grades").size() == 5);

    r = run({"pfi", "--N", "0", "--L", "1", "--V", "1"});
    CHECK(coeffs(r.parsed().at("series")) == std::vector<std::string>{"1"});

    r = run({"pfi", "--N", "3", "--word", "A a"});
    REQUIRE(r.code == cli::kOk);
    j = r.parsed();
    CHECK(j.at("moments")[3].at("text") == "y + 3*y^2 + y^3");

    CHECK(run({"pfi", "--N", "8", "--L", "1", "--V", "1"}).code == cli::kBound);
    CHECK(run({"pfi", "--N", "2", "--L", "1/0", "--V", "1"}).code == cli::kUsage);
    CHECK(run({"pfi", "--N", "2", "--L", "1", "--V", "1", "--word", "A a"}).code == cli::kUsage);
}

TEST_CASE("cli diagrams") {
    auto r = run({"diagrams", "--n", "2"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.parsed().at("diagrams").size() == 4);
    CHECK(r.parsed().at("census").at("connected") == 3);
    CHECK(run({"diagrams", "--n", "2", "--connected-only"}).parsed().at("diagrams").size() == 3);
    CHECK(run({"diagrams", "--n", "1"}).parsed().at("diagrams").size() == 1);

    r = run({"diagrams", "--n", "3"});
    CHECK(r.parsed().at("census").at("total_multiplicity") == "25");
    CHECK(r.parsed().at("census").at("consistent") == true);

    const auto dir = scratch_dir("dot");
    REQUIRE(run({"diagrams", "--n", "2", "--dot", dir.string()}).code == cli::kOk);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        CHECK(e.path().filename().string().rfind("diag_n2_", 0) == 0);
        ++files;
    }
    CHECK(files == 4);
    std::ifstream first(dir / "diag_n2_0.dot");
    std::string line;
    std::getline(first, line);
    CHECK(line.rfind("graph ", 0) == 0);
    fs::remove_all(dir);

    CHECK(run({"diagrams", "--n", "8"}).code == cli::kBound);
}

TEST_CASE("cli hopf-check") {
    auto r = run({"hopf-check", "--algebra", "bell", "--grade", "4"});
    CHECK(r.code == cli::kOk);
    CHECK(r.parsed().at("all_passed") == true);
    CHECK(run({"hopf-check", "--algebra", "diag", "--grade", "3"}).code == cli::kOk);
    CHECK(run({"hopf-check", "--algebra", "bell", "--grade", "0"}).code == cli::kOk);
    CHECK(run({"hopf-check", "--algebra", "bell", "--grade", "13"}).code == cli::kBound);
    CHECK(run({"hopf-check", "--algebra", "other"}).code == cli::kUsage);
}

TEST_CASE("cli morphism-check") {
    auto r = run({"morphism-check", "--map", "bell", "--grade", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.parsed().at("surjective") == true);

    r = run({"morphism-check", "--map", "contract", "--grade", "2"});
    CHECK(r.code == cli::kCheckFailed);
    const auto j = r.parsed();
    bool found = false;
    for (const auto& c : j.at("conditions"))
        if (c.at("name") == "coalgebra") {
            found = true;
            CHECK(c.at("passed") == false);
            CHECK(c.at("counterexample").size() > 0);
        }
    CHECK(found);

    const auto dir = scratch_dir("map");
    const auto zero = dir / "zero.json";
    std::ofstream(zero) << R"({"default": {"terms": []}})";
    r = run({"morphism-check", "--map", zero.string(), "--grade", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.parsed().at("all_passed") == true);
    CHECK(r.parsed().at("surjective") == false);

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << R"({"entries": 5})";
    CHECK(run({"morphism-check", "--map", bad.string()}).code == cli::kUsage);
    CHECK(run({"morphism-check", "--map", (dir / "missing.json").string()}).code == cli::kUsage);
    fs::remove_all(dir);
}

TEST_CASE("cli cumulants") {
    auto r = run({"cumulants", "--word", "A a", "--N", "5"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.parsed();
    CHECK(j.at("cumulants").size() == 5);
    for (const auto& v : j.at("cumulants")) CHECK(v.at("text") == "y");
    CHECK(j.at("roundtrip") == true);

    const auto dir = scratch_dir("cumulants");
    const auto ones = dir / "ones.json";
    std::ofstream(ones) << R"({"moments": ["1", "1", "1", "1"]})";
    r = run({"cumulants", "--moments", ones.string()});
    REQUIRE(r.code == cli::kOk);
    j = r.parsed();
    CHECK(j.at("cumulants")[0].at("text") == "1");
    CHECK(j.at("cumulants")[1].at("text") == "0");
    CHECK(j.at("cumulants")[2].at("text") == "0");

    const auto inv = dir / "inv.json";
    std::ofstream(inv) << R"({"cumulants": ["1", "0", "0"]})";
    r = run({"cumulants", "--moments", inv.string(), "--invert"});
    REQUIRE(r.code == cli::kOk);
    for (const auto& w : r.parsed().at("moments")) CHECK(w.at("text") == "1");

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << R"({"moments": ["2", "1"]})";
    CHECK(run({"cumulants", "--moments", bad.string()}).code == cli::kUsage);
    fs::remove_all(dir);
}

TEST_CASE("cli partition-function") {
    auto r = run({"partition-function", "--beta-eps", "0.6931471805599453"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.parsed().at("closed_form").get<double>() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(run({"partition-function", "--beta-eps", "700"}).parsed().at("closed_form").get<double>() == 1.0);
    r = run({"partition-function", "--beta-eps", "1"});
    CHECK(r.parsed().at("closed_form").get<double>() == doctest::Approx(1.5819767068693265));
    CHECK(std::abs(r.parsed().at("delta").get<double>()) < 1e-12);
    CHECK(run({"partition-function", "--beta-eps", "0"}).code == cli::kUsage);
    CHECK(run({"partition-function", "--beta-eps", "-2"}).code == cli::kUsage);
}

TEST_CASE("cli usage") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({"bell", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}
