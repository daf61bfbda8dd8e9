#include <catch2/catch_amalgamated.hpp>

#include "cfeg/verify.hpp"

using namespace cfeg;

namespace {

VerifyOptions small_options() {
    VerifyOptions opts;
    opts.max_n = 5;
    opts.rm_max_n = 5;
    opts.samples = 100;
    opts.graph6_samples = 100;
    opts.grid_limit = 2;
    opts.jobs = 1;
    opts.seed = 7;
    return opts;
}

}  // namespace

TEST_CASE("theorem scan at n <= 5 is clean") {
    auto r = run_theorem_scan(small_options());
    // Connected labeled graphs on 1..5 vertices: 1 + 1 + 4 + 38 + 728.
    REQUIRE(r.agreement.checked == 772);
    REQUIRE(r.agreement.failures == 0);
    REQUIRE(r.exposed.failures == 0);
    REQUIRE(r.connectivity.failures == 0);
    REQUIRE(r.matching_removal.failures == 0);
    REQUIRE(r.exposed.checked > 0);
    REQUIRE(r.certificates.checked > 0);
    REQUIRE(r.certificates.failures == 0);
}

TEST_CASE("scan results do not depend on the job count") {
    auto opts = small_options();
    auto one = run_theorem_scan(opts);
    opts.jobs = 3;
    auto three = run_theorem_scan(opts);
    REQUIRE(one.agreement.checked == three.agreement.checked);
    REQUIRE(one.agreement.failures == three.agreement.failures);
    REQUIRE(one.exposed.checked == three.exposed.checked);
    REQUIRE(one.matching_removal.checked == three.matching_removal.checked);
    REQUIRE(one.agreement.offenders == three.agreement.offenders);
}

TEST_CASE("criterion equivalence suite") {
    auto r = run_criterion_equivalence(small_options());
    REQUIRE(r.failures == 0);
    REQUIRE(r.checked > 100);  // exhaustive part plus 100 samples

    // Same seed, same outcome.
    auto again = run_criterion_equivalence(small_options());
    REQUIRE(again.checked == r.checked);
    REQUIRE(again.offenders == r.offenders);
}

TEST_CASE("family grid suite") {
    auto r = run_family_grid(small_options());
    REQUIRE(r.soundness.failures == 0);
    REQUIRE(r.round_trip.failures == 0);
    REQUIRE(r.membership.failures == 0);
    REQUIRE(r.closure.failures == 0);
    REQUIRE(r.soundness.checked > 20);
}

TEST_CASE("randomly matchable suite at n <= 5") {
    auto r = run_randomly_matchable_scan(small_options());
    REQUIRE(r.equivalence.failures == 0);
    REQUIRE(r.equivalence.checked == 772);
    REQUIRE(r.sumner.failures == 0);
    REQUIRE(r.sumner.checked > 0);
}

TEST_CASE("graph6 round trip suite") {
    auto r = run_graph6_roundtrip(small_options());
    REQUIRE(r.failures == 0);
    REQUIRE(r.checked == 2131020 + 100);  // sum of 2^C(n,2) for n = 0..7, plus samples
}

TEST_CASE("report formatting") {
    SuiteResult ok;
    ok.name = "demo";
    ok.checked = 3;
    VerifyReport rep;
    rep.suites.push_back(ok);
    REQUIRE_THAT(format_report(rep, false), Catch::Matchers::ContainsSubstring("[PASS] demo"));
    SuiteResult bad = ok;
    bad.failures = 1;
    bad.offenders.push_back("Cl");
    rep.suites.push_back(bad);
    auto text = format_report(rep, false);
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("[FAIL]"));
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("offender: Cl"));
    REQUIRE_FALSE(rep.all_passed());
}
