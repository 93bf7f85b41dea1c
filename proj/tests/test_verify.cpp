#include "helpers.hpp"

#include "charclass/errors.hpp"
#include "charclass/verify.hpp"

using namespace charclass;

TEST_CASE("every suite passes a short run")
{
    for (const auto& suite : verify_suites()) {
        CAPTURE(suite);
        VerifyOptions opt;
        opt.trials = 3;
        opt.seed = 1;
        const auto report = run_verify(suite, opt);
        CHECK(report.ok());
        CHECK(report.trials == 3);
    }
}

TEST_CASE("zero trials give an empty passing report")
{
    VerifyOptions opt;
    opt.trials = 0;
    const auto report = run_verify("whitney", opt);
    CHECK(report.ok());
    CHECK(report.failures.empty());
}

TEST_CASE("reports are reproducible and independent of the thread count")
{
    VerifyOptions opt;
    opt.trials = 12;
    opt.seed = 99;
    opt.signed_variant = true;
    const auto a = run_verify("pcurv-theorem", opt);
    opt.jobs = 4;
    const auto b = run_verify("pcurv-theorem", opt);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
    // The signed form fails for odd p, so the flag produces failures.
    CHECK_FALSE(a.ok());
    for (std::size_t i = 1; i < a.failures.size(); ++i) CHECK(a.failures[i - 1].trial <= a.failures[i].trial);
}

TEST_CASE("signed variant agrees for p = 2")
{
    VerifyOptions opt;
    opt.trials = 20;
    opt.primes = {2};
    opt.signed_variant = true;
    const auto report = run_verify("pcurv-theorem", opt);
    CHECK(report.ok());
    CHECK(report.tallies.at("signed form holds (p=2)") == 20);
}

TEST_CASE("unknown suites and bad primes are rejected")
{
    CHECK_FALSE(is_verify_suite("nope"));
    CHECK_THROWS_AS(run_verify("nope", {}), PreconditionError);
    VerifyOptions opt;
    opt.primes = {4};
    CHECK_THROWS_AS(run_verify("dlog", opt), PreconditionError);
}
