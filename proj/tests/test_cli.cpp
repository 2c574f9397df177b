/*
   Copyright 2026 The lehmer-ff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lehmer_ff/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = lehmer_ff::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("lehmer sweep prints a table")
{
    auto r = run({"lehmer", "--q", "3", "--max-degree", "8", "--expand-units"});
    CHECK(r.code == 0);
    // Heading, column header, six rows.
    CHECK(count_lines(r.out) == 8);
    CHECK(r.out.find("6 member(s)") != std::string::npos);
    CHECK(r.out.find("2*x^2+2*x") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({"verify", "--suite", "prop36", "--n-max", "30"}).code == 0);
    CHECK(run({"zsigmondy", "--a", "2", "--b", "1", "--n", "6"}).code == 0);
    CHECK(run({"--help"}).code == 0);

    // Verification failure: the totient bound fails at small n.
    auto bounds = run({"verify", "--suite", "bounds", "--n-max", "100"});
    CHECK(bounds.code == 1);
    CHECK(bounds.out.find("FAIL") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"totient", "x^2+", "--q", "2"}).code == 2);
    CHECK(run({"totient", "x^2+1"}).code == 2);
    CHECK(run({"totient", "x^2+1", "--q", "6"}).code == 2);
    CHECK(run({"totient", "1", "--q", "2"}).code == 2);
    CHECK(run({"zsigmondy", "--a", "2", "--b", "2", "--n", "3"}).code == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({"--format", "xml", "candidates"}).code == 2);
    CHECK(run({"--workers", "0", "candidates"}).code == 2);

    CHECK(run({"zsigmondy", "--a", "3", "--n", "60"}).code == 3);
    CHECK(run({"zsigmondy", "--a", "2", "--n", "20", "--factoring-budget", "1000"}).code == 3);
    CHECK(run({"totient", "x^30+1", "--q", "2", "--bruteforce"}).code == 3);
}

TEST_CASE("zsigmondy text output")
{
    auto r = run({"zsigmondy", "--a", "2", "--b", "1", "--n", "6"});
    CHECK(r.out.find("N6") != std::string::npos);
    auto s = run({"zsigmondy", "--a", "2", "--n", "11"});
    CHECK(s.out.find("23") != std::string::npos);
    CHECK(s.out.find("89") != std::string::npos);
}

TEST_CASE("JSON output is stable under a parse and dump round trip")
{
    const std::vector<std::vector<std::string>> commands = {
        {"--format", "json", "totient", "x*(x+1)*(x^2+x+1)", "--q", "2", "--bruteforce"},
        {"--format", "json", "totient", "t*x^2+1", "--p", "2", "--k", "2"},
        {"--format", "json", "lehmer", "--q", "2", "--max-degree", "6"},
        {"--format", "json", "cyclotomic", "--n", "12", "--eval", "2"},
        {"--format", "json", "zsigmondy", "--a", "2", "--n", "6"},
        {"--format", "json", "partitions", "--a", "3", "--n-max", "6"},
        {"--format", "json", "candidates"},
        {"--format", "json", "verify", "--suite", "prop36"},
    };
    for (const auto& args : commands) {
        auto r = run(args);
        CAPTURE(args[2]);
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.dump(2) + "\n" == r.out);
        CHECK(j["schema"] == 1);
        CHECK(j["command"] == args[2]);
    }

    auto t = nlohmann::json::parse(run({"--format", "json", "totient", "x^2+x", "--q", "3"}).out);
    CHECK(t["report"]["phi"] == "4");
    CHECK(t["in_L"] == true);
    auto z = nlohmann::json::parse(run({"--format", "json", "zsigmondy", "--a", "2", "--n", "6"}).out);
    CHECK(z["result"]["exception"] == "N6");
    CHECK(z["result"]["primitive_primes"].empty());
}

TEST_CASE("CSV output has a header row")
{
    auto r = run({"--format", "csv", "lehmer", "--q", "3", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q,degree,poly,phi,modulus_value,divides,reducible,factors\n", 0) == 0);
    CHECK(count_lines(r.out) == 4);
    auto t = run({"--format", "csv", "totient", "x^2+1", "--q", "2"});
    CHECK(count_lines(t.out) == 2);
}

TEST_CASE("results do not depend on the worker count")
{
    const std::vector<std::string> base = {"--format", "json", "verify", "--suite", "main-theorem", "--q", "2",
                                           "--max-degree", "10"};
    auto one = run([&] { auto a = base; a.insert(a.end(), {"--workers", "1"}); return a; }());
    auto four = run([&] { auto a = base; a.insert(a.end(), {"--workers", "4"}); return a; }());
    CHECK(one.code == 0);
    CHECK(one.out == four.out);

    auto l1 = run({"--workers", "1", "lehmer", "--q", "2", "--max-degree", "9"});
    auto l3 = run({"--workers", "3", "lehmer", "--q", "2", "--max-degree", "9"});
    CHECK(l1.out == l3.out);
}

TEST_CASE("worker count from the environment")
{
    ::setenv("LEHMER_FF_WORKERS", "3", 1);
    auto ok = run({"verify", "--suite", "prop36"});
    ::setenv("LEHMER_FF_WORKERS", "zero", 1);
    auto bad = run({"verify", "--suite", "prop36"});
    auto flag_wins = run({"--workers", "2", "verify", "--suite", "prop36"});
    ::setenv("LEHMER_FF_WORKERS", "0", 1);
    auto out_of_range = run({"verify", "--suite", "prop36"});
    ::unsetenv("LEHMER_FF_WORKERS");

    CHECK(ok.code == 0);
    CHECK(bad.code == 2);
    CHECK(bad.err.find("LEHMER_FF_WORKERS") != std::string::npos);
    CHECK(flag_wins.code == 0);
    CHECK(out_of_range.code == 2);
}
