#include "polycong/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = polycong::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Scoped override of CONGRUENCE_ORACLE_BUDGET; restores the old state on exit.
struct BudgetGuard {
    explicit BudgetGuard(const char* value) {
        if (const char* old = std::getenv("CONGRUENCE_ORACLE_BUDGET")) saved = old;
        setenv("CONGRUENCE_ORACLE_BUDGET", value, 1);
    }
    ~BudgetGuard() {
        if (saved.empty())
            unsetenv("CONGRUENCE_ORACLE_BUDGET");
        else
            setenv("CONGRUENCE_ORACLE_BUDGET", saved.c_str(), 1);
    }
    std::string saved;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("alpha output formats") {
    auto r = cli({"alpha", "--poly", "x^2+y^2", "--n", "45"});
    CHECK(r.code == 0);
    CHECK(r.out == "35\n");
    CHECK(r.err.empty());

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "45", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out == "35\ncheck: multiplicative vs oracle: agree\n");

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "45", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"poly":"x^2+y^2","n":45,"alpha":35,"method":"multiplicative"})"
                   "\n");

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "45", "--verify", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"poly":"x^2+y^2","n":45,"alpha":35,"method":"multiplicative","checked":{"against":"oracle","agree":true}})"
          "\n");

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "8", "--json"});
    CHECK(r.out == R"({"poly":"x^2+y^2","n":8,"alpha":5,"method":"closed-form"})"
                   "\n");

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "8", "--method", "oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");

    r = cli({"--seed", "7", "alpha", "--poly", "x^2+y^2", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
}

TEST_CASE("alpha rejects bad usage") {
    auto r = cli({"alpha", "--poly", "x+x", "--n", "8"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err == "error: repeated variable 'x' (byte 2)\n");

    r = cli({"alpha", "--poly", "x\xc2\xb2", "--n", "8"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: non-ASCII byte (byte 1)\n");

    r = cli({"alpha", "--poly", "0x+5y", "--n", "8"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: zero coefficient (byte 0)\n");

    r = cli({"alpha", "--poly", "x^2+y^3", "--n", "8", "--method", "closed"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: alpha: only the oracle route applies to general polynomials\n");

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "0"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: alpha: modulus must be positive\n");

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "8", "--method", "sideways"});
    CHECK(r.code == 1);  // not in the allowed set

    r = cli({"alpha", "--n", "8"});
    CHECK(r.code == 1);  // --poly is required
}

TEST_CASE("set output formats") {
    auto r = cli({"set", "--poly", "x^2+y^2", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"modulus":8,"members":[0,1,2,4,5]})"
                   "\n");

    r = cli({"set", "--poly", "x^2+y^2", "--n", "8", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1,2,4,5\n");

    r = cli({"set", "--poly", "x^2+y^2", "--n", "8", "--format", "bits"});
    CHECK(r.code == 0);
    CHECK(r.out == "37\n");

    r = cli({"set", "--poly", "x^2+y^3", "--n", "9", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1,2,3,4,5,6,7,8\n");

    r = cli({"set", "--poly", "x^2+y^2", "--n", "8", "--format", "yaml"});
    CHECK(r.code == 1);
}

TEST_CASE("nset lists unattainable lifts per level") {
    auto r = cli({"nset", "--poly", "x^2+y^2", "--p", "2", "--max-level", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "2: {3}\n3: {6}\n4: {12}\n");

    r = cli({"nset", "--poly", "x^2+y^2", "--p", "2", "--max-level", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"poly":"x^2+y^2","p":2,"levels":{"2":[3],"3":[6]}})"
                   "\n");

    r = cli({"nset", "--poly", "x^2", "--p", "3", "--max-level", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2: {3,6}\n");

    // general polynomials take the enumeration route; these levels are all full
    r = cli({"nset", "--poly", "x^2+y^3", "--p", "3", "--max-level", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "2: {}\n3: {}\n");

    r = cli({"nset", "--poly", "x^2+y^2", "--p", "4", "--max-level", "3"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: n_set_oracle: p must be prime\n");

    r = cli({"nset", "--poly", "x^2+y^3", "--p", "4", "--max-level", "3"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: nset: --p must be prime\n");

    r = cli({"nset", "--poly", "x^2+y^2", "--p", "2", "--max-level", "1"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: nset: --max-level must be at least 2\n");
}

TEST_CASE("surjective single and range modes") {
    auto r = cli({"surjective", "--poly", "x^2+y^2", "--n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    r = cli({"surjective", "--poly", "x^2+y^2", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");

    r = cli({"surjective", "--poly", "x^2+y^2", "--max-n", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n3\n5\n6\n7\n10\n11\n13\n14\n15\n17\n19\n");

    r = cli({"surjective", "--poly", "x^2+y^2+z^2", "--max-n", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n3\n4\n5\n6\n7\n9\n10\n11\n12\n13\n14\n15\n17\n18\n19\n20\n");

    r = cli({"surjective", "--poly", "x^2-y^2", "--max-n", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n3\n5\n6\n7\n9\n10\n11\n13\n14\n15\n17\n18\n19\n");

    r = cli({"surjective", "--poly", "x^2+y^2"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: surjective needs exactly one of --n and --max-n\n");

    r = cli({"surjective", "--poly", "x^2+y^2", "--n", "4", "--max-n", "20"});
    CHECK(r.code == 1);  // the options exclude each other
}

TEST_CASE("table emits CSV with per-row methods") {
    const std::string expected =
        "n,alpha,method\n"
        "1,1,multiplicative\n"
        "2,2,closed-form\n"
        "3,3,nr-recurrence\n"
        "4,3,closed-form\n"
        "5,5,closed-form\n"
        "6,6,multiplicative\n"
        "7,3,closed-form\n"
        "8,5,closed-form\n"
        "9,3,nr-recurrence\n"
        "10,10,multiplicative\n"
        "11,11,closed-form\n"
        "12,9,multiplicative\n";

    auto r = cli({"table", "--poly", "x^3", "--max-n", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == expected);

    const auto path = std::filesystem::temp_directory_path() / "polycong_table_test.csv";
    r = cli({"table", "--poly", "x^3", "--max-n", "12", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == expected);
    std::filesystem::remove(path);

    r = cli({"table", "--poly", "x^3", "--max-n", "12", "--out",
             "/nonexistent-dir/table.csv"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: table: cannot open /nonexistent-dir/table.csv\n");

    r = cli({"table", "--poly", "x^3", "--max-n", "0"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: table: --max-n must be at least 1\n");
}

TEST_CASE("verify cross-checks every route") {
    auto r = cli({"verify", "--poly", "x^2+y^2", "--max-n", "512"});
    CHECK(r.code == 0);
    CHECK(r.out == "verified: all routes agree for n <= 512\n");

    r = cli({"verify", "--poly", "x^2-y^2", "--max-n", "256"});
    CHECK(r.code == 0);
    CHECK(r.out == "verified: all routes agree for n <= 256\n");

    r = cli({"verify", "--poly", "x^3", "--max-n", "256"});
    CHECK(r.code == 0);
    CHECK(r.out == "verified: all routes agree for n <= 256\n");

    r = cli({"verify", "--poly", "x^2+y^3", "--max-n", "64"});
    CHECK(r.code == 0);
    CHECK(r.out == "verified: all routes agree for n <= 64\n");
}

TEST_CASE("the budget environment variable is honored") {
    {
        BudgetGuard guard("100");
        auto r = cli({"nset", "--poly", "x^2+y^2", "--p", "2", "--max-level", "9"});
        CHECK(r.code == 1);
        CHECK(r.err ==
              "error: n_set_oracle: modulus 128 exceeds the enumeration budget of 100\n");
        // within budget everything still works
        r = cli({"set", "--poly", "x^2+y^2", "--n", "8", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "0,1,2,4,5\n");
    }
    {
        BudgetGuard guard("not-a-number");
        auto r = cli({"alpha", "--poly", "x^2+y^2", "--n", "8"});
        CHECK(r.code == 1);
        CHECK(r.err == "error: CONGRUENCE_ORACLE_BUDGET must be an unsigned 64-bit integer\n");
    }
    // restored: the default budget applies again
    auto r = cli({"alpha", "--poly", "x^2+y^2", "--n", "8"});
    CHECK(r.code == 0);
}

TEST_CASE("top-level usage") {
    auto r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("alpha") != std::string::npos);
    CHECK(r.out.find("surjective") != std::string::npos);

    r = cli({});
    CHECK(r.code == 1);  // a subcommand is required

    r = cli({"frobnicate"});
    CHECK(r.code == 1);

    r = cli({"alpha", "--poly", "x^2+y^2", "--n", "8", "--frobnicate"});
    CHECK(r.code == 1);
}

}  // TEST_SUITE
