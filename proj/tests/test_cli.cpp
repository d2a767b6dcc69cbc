#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "ztk/modular.hpp"
#include "ztk/serialize.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(ZTK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 256> buf{};
    while (fgets(buf.data(), buf.size(), pipe))
        r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    while (!r.output.empty() && (r.output.back() == '\n' || r.output.back() == '\r'))
        r.output.pop_back();
    return r;
}

} // namespace

TEST_CASE("cli: exact values print exactly")
{
    RunResult r = run_cli("bernoulli 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1/30");

    r = run_cli("zeta --even 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/6 * pi^2");

    r = run_cli("zeta --negative 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/120");
}

TEST_CASE("cli: usage errors exit 2")
{
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("bernoulli").exit_code == 2);
    CHECK(run_cli("zeta").exit_code == 2);
    CHECK(run_cli("zeta --even 2 --negative 1").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: domain errors exit 1 and never 0")
{
    CHECK(run_cli("padic-zeta 5 0 1").exit_code == 1);
    CHECK(run_cli("class-number -5").exit_code == 1);
    CHECK(run_cli("zeta --even 3").exit_code == 1);
    RunResult r = run_cli("--json class-number -5");
    CHECK(r.exit_code == 1);
    auto j = ztk::json::parse(r.output);
    CHECK(j.at("error") == "InvalidDiscriminant");
}

TEST_CASE("cli: json output round-trips through the library parsers")
{
    RunResult r = run_cli("--json bernoulli 12");
    CHECK(r.exit_code == 0);
    auto j = ztk::json::parse(r.output);
    CHECK(ztk::rational_from_json(j.at("value")) == ztk::make_rational(-691, 2730));

    r = run_cli("--json padic-zeta 5 2 -1 --precision 1");
    auto jr = ztk::json::parse(r.output);
    ztk::PAdic x = ztk::padic_from_json(jr);
    CHECK(ztk::PAdic::congruent(x, ztk::padic_embed(ztk::make_rational(1, 3), 5, 2), 2));

    r = run_cli("--json delta --order 6");
    ztk::TruncatedSeries d = ztk::series_from_json(ztk::json::parse(r.output));
    CHECK(d == ztk::discriminant_series(6));

    r = run_cli("--json zeta --even 6");
    CHECK(ztk::pipower_from_json(ztk::json::parse(r.output)) == ztk::zeta_even(6));

    r = run_cli("--json kummer 5 2 22 1");
    auto jk = ztk::json::parse(r.output);
    CHECK(jk.at("holds") == true);
    CHECK(jk.at("modulus") == "25");
}

TEST_CASE("cli: character-driven commands")
{
    RunResult r = run_cli("gen-bernoulli 1 --kronecker -4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1/2");

    r = run_cli("gen-bernoulli 2 --char-modulus 5 --char-order 2 --char-values x,0,1,1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4/5");

    r = run_cli("padic-l 5 1 --kronecker -4 --precision 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 (mod 5^3)");

    CHECK(run_cli("gen-bernoulli 2").exit_code == 2); // no character given
}

TEST_CASE("cli: every subcommand emits one well-formed json document")
{
    const std::vector<std::string> invocations{
        "bernoulli 4",
        "bernoulli-poly 4",
        "gen-bernoulli 1 --kronecker -4",
        "voronoi 2 7 1",
        "kummer 5 2 6 0",
        "zeta --even 2",
        "polylog 2 0.5",
        "lvalue 1 --kronecker -4 --tol 1e-4",
        "class-number -4",
        "mzv 2,2 --limit 2000",
        "cmzv 2 --twists 1 --level 2 --limit 2000",
        "stuffle 2 2 --tol 1e-3",
        "iterint --tol 1e-4",
        "padic-embed 1/3 5",
        "teichmuller 2 5",
        "distribution 1 5 0 1",
        "padic-zeta 5 2 -1",
        "padic-l 5 2 --char-modulus 1 --char-order 1 --char-values 0",
        "sigma 3 2",
        "eisenstein 2 --order 3",
        "delta --order 3",
        "j --order 2",
    };
    for (const auto& inv : invocations) {
        RunResult r = run_cli("--json " + inv);
        CHECK_MESSAGE(r.exit_code == 0, inv);
        CHECK_MESSAGE(ztk::json::accept(r.output), inv);
    }
}
