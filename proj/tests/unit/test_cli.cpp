#include <doctest.h>

#include <sstream>

#include "nchilbert/cli.hpp"
#include "nchilbert/errors.hpp"
#include "support.hpp"

using namespace nchilbert;
using nchilbert::testing::w;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

ErrorKind parse_failure(std::string_view text) {
    try {
        (void)cli::parse_input(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a parse error");
    return ErrorKind::invalid_argument;
}

std::string parse_message(std::string_view text) {
    try {
        (void)cli::parse_input(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("input parsing") {
    const auto in = cli::parse_input("vars x y\ngen: x*x\n");
    CHECK(in.alphabet == Alphabet({"x", "y"}));
    CHECK(in.generators == std::vector<Word>{w("xx")});
    CHECK(in.kind == IdealKind::two_sided);

    const auto r = cli::parse_input("# right ideal\nvars a b\nkind right\na*b   # trailing comment\n\n1\n");
    CHECK(r.kind == IdealKind::right);
    CHECK(r.generators == std::vector<Word>{w("ab", "ab"), Word{}});

    const auto g = testing::load_fixture("grassmann_d10.txt");
    CHECK(g.alphabet.size() == 3);
    CHECK(g.generators.size() == 13 + 2 * 7);
}

TEST_CASE("parse errors") {
    CHECK(parse_failure("vars x y z\nz*w\n") == ErrorKind::parse_error);
    CHECK(parse_message("vars x y z\nz*w\n").find("'w'") != std::string::npos);
    CHECK(parse_message("vars x y z\nz*w\n").rfind("2:", 0) == 0);
    CHECK(parse_failure("x*y\n") == ErrorKind::parse_error);
    CHECK(parse_failure("vars x x\n") == ErrorKind::parse_error);
    CHECK(parse_failure("vars x\nkind left\n") == ErrorKind::parse_error);
    CHECK(parse_failure("vars x\nx**x\n") == ErrorKind::parse_error);
    CHECK(parse_failure("vars x\nvars y\n") == ErrorKind::parse_error);
    CHECK(parse_failure("# nothing but variables\nvars x y\n") == ErrorKind::parse_error);
}

TEST_CASE("exit codes") {
    const std::string fib = testing::fixture_path("fibonacci.txt");
    const std::string grass = testing::fixture_path("grassmann_d10.txt");
    CHECK(run_cli({fib}).code == 0);
    CHECK(run_cli({fib, "--affine", "--multigraded"}).code == 5);
    CHECK(run_cli({fib, "--truncate", "3", "--degree-bound", "4"}).code == 5);
    CHECK(run_cli({fib, "--bogus"}).code == 5);
    CHECK(run_cli({fib, "--max-orbit", "2"}).code == 3);
    CHECK(run_cli({grass, "--degree-bound", "6"}).code == 5);
    CHECK(run_cli({testing::fixture_path("budget.txt"), "--degree-bound", "8"}).code == 4);
    CHECK(run_cli({testing::fixture_path("no_such_file.txt")}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("text report") {
    const auto r = run_cli({testing::fixture_path("grassmann_d10.txt"), "--multigraded", "--degree-bound", "10"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("mode: degree-bound 10, multigraded, two-sided\n", 0) == 0);
    CHECK(r.out.find("orbit size: 7\n") != std::string::npos);
    CHECK(r.out.find("series: N(t1*t2 + t1*t3 + t2*t3 + 1) / D(") != std::string::npos);
    CHECK(r.out.find("HEURISTIC") != std::string::npos);

    const auto exact = run_cli({testing::fixture_path("fibonacci.txt")});
    CHECK(exact.out.find("HEURISTIC") == std::string::npos);
}

TEST_CASE("JSON report") {
    const auto r = run_cli(
        {testing::fixture_path("grassmann_d10.txt"), "--multigraded", "--truncate", "10", "--schur", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["mode"] == "truncate");
    CHECK(j["orbit_size"] == 51);
    CHECK(j["series"]["kind"] == "polynomial");
    CHECK(j["series"]["numerator"].size() == 286);
    CHECK_FALSE(j["series"].contains("denominator"));
    CHECK(j["schur"].size() == 28);
    for (const auto& row : j["schur"]) CHECK(row["mult"] == "1");
    CHECK(j["vars"] == nlohmann::ordered_json::array({"x", "y", "z"}));
}

TEST_CASE("JSON series round trip") {
    const auto in = testing::load_fixture("grassmann_d10.txt");
    const auto req = testing::request_from(in, DegreeBoundMode{10}, true);
    const auto res = hilbert_series(req);
    const auto j = cli::render_json({&req, &res, std::nullopt, nullptr});
    CHECK(j["series"]["kind"] == "rational");
    CHECK(cli::series_from_json(j["series"], 3) == res.series);
    CHECK(j["heuristic"] == true);
}

TEST_CASE("oracle flag") {
    const auto r = run_cli({testing::fixture_path("fibonacci.txt"), "--oracle", "3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::uint64_t total = 0;
    for (const auto& row : j["oracle"]) total += std::stoull(row["count"].get<std::string>());
    CHECK(total == 1 + 2 + 3 + 5);
}
