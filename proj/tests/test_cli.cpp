#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "cigenus/rational.hpp"

using namespace cigenus;

namespace {

struct Result {
    int exit_code;
    std::string out;
    std::string err;
};

Result run(const std::string& args) {
    const std::string err_path = "cli_stderr.txt";
    const std::string cmd = std::string(CIGENUS_CLI) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    std::ifstream ef(err_path);
    std::stringstream es;
    es << ef.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, es.str()};
}

nlohmann::json compute(const std::string& args) {
    const Result r = run("compute " + args);
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.out);
}

void require_no_floats(const nlohmann::json& j) {
    if (j.is_number_float()) {
        FAIL("floating-point literal in JSON output");
    }
    if (j.is_structured()) {
        for (const auto& item : j) {
            require_no_floats(item);
        }
    }
}

} // namespace

TEST_CASE("compute emits the documented record") {
    const auto j = compute("-n 2 -d 4 --genus ahat");
    CHECK(j["value"] == "2");
    CHECK(j["dimension"] == 2);
    CHECK(j["degrees"] == nlohmann::json::array({4}));
    CHECK(j["genus"] == "ahat");
    CHECK(j["c1"] == 0);
    CHECK(j["spin"] == true);
    CHECK(j["method"] == "residue");
    CHECK(j["params"].is_object());
    require_no_floats(j);

    CHECK(compute("-n 3 --genus todd")["value"] == "1");
    CHECK(compute("-n 2 -d 4 --genus signature --method oracle")["value"] == "-16");
    CHECK(compute("-n 2 -d 4 --genus euler --method closed")["value"] == "24");
    CHECK(compute("-n 2 -d 3 --genus ahat --method closed")["value"] == "5/8");
}

TEST_CASE("compute with genus parameters") {
    const auto ty = compute("-n 3 -d 2 --genus ty --y 1/2");
    CHECK(ty["value"] == "5/8");
    CHECK(ty["params"]["y"] == "1/2");
    const auto ak = compute("-n 4 -d 2,3 --genus ak --k 3 --method closed");
    CHECK(ak["value"] == "7");
    CHECK(ak["params"]["k"] == 3);
    const auto custom = compute(std::string("-n 4 -d 3 --genus custom --custom ") + CIGENUS_TEST_DATA + "/todd.genus");
    CHECK(custom["value"] == compute("-n 4 -d 3 --genus todd")["value"]);
    CHECK(custom["params"]["name"] == "todd-custom");
}

TEST_CASE("compute alpha") {
    const auto a = compute("-n 5 -d 7 --genus alpha");
    CHECK(a["value"] == "1");
    CHECK(a["alpha_kind"] == "mod2");
    CHECK(compute("-n 5 -d 3 --genus alpha")["value"] == "0");
    CHECK(compute("-n 7 -d 5,5 --genus alpha")["alpha_kind"] == "zero");
    CHECK(compute("-n 2 -d 4 --genus alpha")["value"] == "1");

    const Result bad = run("compute -n 4 -d 2,4 --genus alpha");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("not spin") != std::string::npos);
}

TEST_CASE("compute usage errors exit with 2") {
    CHECK(run("compute -n 2 --genus ty").exit_code == 2);
    CHECK(run("compute -n 2 --genus ak --k 0").exit_code == 2);
    CHECK(run("compute -n 2 --genus bogus").exit_code == 2);
    CHECK(run("compute -n x --genus todd").exit_code == 2);
    CHECK(run("compute -n 2 -d 0 --genus todd").exit_code == 2);
    CHECK(run("compute -n 2 --genus signature --method closed").exit_code == 2);
    CHECK(run("compute -n 2 --genus todd --method nope").exit_code == 2);
    CHECK(run("compute --genus todd").exit_code == 2);
    CHECK(run("compute -n 2 --genus ty --y 1/0").exit_code == 2);
    CHECK(run(std::string("compute -n 2 --genus custom --custom ") + CIGENUS_TEST_DATA + "/bad_rational.genus")
              .exit_code == 2);
    // too few custom coefficients for the requested dimension
    CHECK(run(std::string("compute -n 9 --genus custom --custom ") + CIGENUS_TEST_DATA + "/todd.genus").exit_code ==
          2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("table output") {
    const Result r = run("table -n 1..2 --dmax 2 --rmax 1 --genus todd");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,degrees,c1,spin,genus,value\n", 0) == 0);
    CHECK(r.out.find("2,\"[]\",3,false,todd,1\n") != std::string::npos);
    CHECK(r.out.find("1,\"[2]\",1,false,todd,1\n") != std::string::npos);

    const Result again = run("table -n 1..2 --dmax 2 --rmax 1 --genus todd");
    CHECK(again.out == r.out);

    const Result jsonl = run("table -n 0..3 --dmax 3 --rmax 2 --genus signature,ty,ak --y -1/3 --k 2 --format jsonl");
    REQUIRE(jsonl.exit_code == 0);
    std::istringstream lines(jsonl.out);
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line);) {
        const auto j = nlohmann::json::parse(line);
        require_no_floats(j);
        CHECK_NOTHROW(rat_parse(j["value"].get<std::string>()));
        ++count;
    }
    CHECK(count == 4 * 10 * 3);

    const Result threaded =
        run("table -n 0..3 --dmax 3 --rmax 2 --genus signature,ty,ak --y -1/3 --k 2 --format jsonl --jobs 3");
    CHECK(threaded.out == jsonl.out);
}

TEST_CASE("table usage errors") {
    CHECK(run("table -n 1..2 --genus \"\"").exit_code == 2);
    CHECK(run("table -n 3..1 --genus todd").exit_code == 2);
    CHECK(run("table -n 1 --dmax 0 --genus todd").exit_code == 2);
    CHECK(run("table -n 1 --genus todd --format xml").exit_code == 2);
    CHECK(run("table -n 1 --genus alpha").exit_code == 2);
}

TEST_CASE("verify") {
    const Result only = run("verify --only thm1.3 --nmax 4");
    CHECK(only.exit_code == 0);
    CHECK(only.out.find("# ahat-iterated:") != std::string::npos);
    CHECK(only.out.find("# engine-oracle") == std::string::npos);

    const Result small = run("verify --nmax 4 --dmax 3 --rmax 2 --all");
    CHECK(small.exit_code == 0);
    CHECK(small.out.find(" 0 failed\n") != std::string::npos);

    const Result fault = run("verify --nmax 4 --dmax 3 --rmax 2 --inject-fault");
    CHECK(fault.exit_code == 1);
    const auto first = nlohmann::json::parse(fault.out.substr(0, fault.out.find('\n')));
    CHECK(first["pass"] == false);
    CHECK(first["lhs"] != first["rhs"]);

    CHECK(run("verify --only nonsense").exit_code == 2);
    CHECK(run("verify --dmax 0").exit_code == 2);
}
