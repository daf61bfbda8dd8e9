#include <catch2/catch_amalgamated.hpp>

#include "cfeg/families.hpp"
#include "cfeg/oracle.hpp"
#include "cfeg/recognizer.hpp"

using namespace cfeg;

namespace {

Graph bull() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }

FamilyParams make(FamilyId id, int p = 0, int q = 0, int x = 0, int y = 0, int p2 = 0, int x2 = 0) {
    FamilyParams fp{id, p};
    fp.q = q;
    fp.x = x;
    fp.y = y;
    fp.p2 = p2;
    fp.x2 = x2;
    return fp;
}

}  // namespace

TEST_CASE("fixed cases") {
    auto k1 = classify(Graph(1));
    REQUIRE(k1.accepted);
    REQUIRE(k1.classification->id == FamilyId::AlphaLe2);

    auto c4 = classify(Graph::cycle(4));
    REQUIRE(c4.accepted);
    REQUIRE(c4.classification->id == FamilyId::C4);
    REQUIRE(c4.diag.step == "even: C4");

    auto k6 = classify(Graph::complete(6));
    REQUIRE(k6.accepted);
    REQUIRE(*k6.classification == make(FamilyId::EvenClique, 3));

    auto k7 = classify(Graph::complete(7));  // odd clique: alpha = 1
    REQUIRE(k7.accepted);
    REQUIRE(k7.classification->id == FamilyId::AlphaLe2);

    auto c5 = classify(Graph::cycle(5));  // alpha(C5) = 2
    REQUIRE(c5.accepted);
    REQUIRE(c5.classification->id == FamilyId::AlphaLe2);

    auto c7 = classify(Graph::cycle(7));
    REQUIRE(c7.accepted);
    REQUIRE(c7.classification->id == FamilyId::C7);

    auto g11 = classify(base_graph(FamilyId::G11).graph);
    REQUIRE(g11.accepted);
    REQUIRE(g11.classification->id == FamilyId::G11);
}

TEST_CASE("rejections carry validated certificates") {
    const Graph p4 = Graph::path(4);
    auto vp4 = classify(p4);
    REQUIRE_FALSE(vp4.accepted);
    REQUIRE(vp4.reason == RejectReason::EVEN_NOT_CLIQUE_NOR_C4);
    REQUIRE(vp4.certificate.has_value());
    REQUIRE(certificate_kind(*vp4.certificate) == std::string("unequal_matchings"));
    REQUIRE(validate_certificate(p4, *vp4.certificate));

    const Graph claw = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto vclaw = classify(claw);
    REQUIRE_FALSE(vclaw.accepted);
    REQUIRE(certificate_kind(*vclaw.certificate) == std::string("claw"));
    REQUIRE(validate_certificate(claw, *vclaw.certificate));

    auto vbull = classify(bull());
    REQUIRE_FALSE(vbull.accepted);
    REQUIRE(vbull.reason == RejectReason::NO_FAMILY_MATCH);
    REQUIRE(vbull.certificate.has_value());
    REQUIRE(validate_certificate(bull(), *vbull.certificate));

    auto vc6 = classify(Graph::cycle(6));
    REQUIRE_FALSE(vc6.accepted);
    REQUIRE(vc6.reason == RejectReason::EVEN_NOT_CLIQUE_NOR_C4);

    // C9 is claw-free, odd, connected but not equimatchable; below the
    // brute-force gate the witness is a pair of unequal maximal matchings.
    auto vc9 = classify(Graph::cycle(9));
    REQUIRE_FALSE(vc9.accepted);
    REQUIRE(vc9.reason == RejectReason::NO_FAMILY_MATCH);
    REQUIRE(certificate_kind(*vc9.certificate) == std::string("unequal_matchings"));
    REQUIRE(validate_certificate(Graph::cycle(9), *vc9.certificate));

    // Above the brute-force gate (n > 14) the structural criterion supplies
    // the bad-triple witness instead.
    auto vc15 = classify(Graph::cycle(15));
    REQUIRE_FALSE(vc15.accepted);
    REQUIRE(certificate_kind(*vc15.certificate) == std::string("bad_independent_triple"));
    REQUIRE(validate_certificate(Graph::cycle(15), *vc15.certificate));
}

TEST_CASE("P5 is equimatchable and classifies as the smallest G12") {
    auto v = classify(Graph::path(5));
    REQUIRE(v.accepted);
    REQUIRE(*v.classification == make(FamilyId::G12, 1, 0, 1, 0, 1, 1));
    REQUIRE(is_equimatchable_bruteforce(Graph::path(5)).equimatchable);
}

TEST_CASE("generated members classify back to their parameters") {
    auto v = classify(generate(make(FamilyId::G3, 1, 2)));
    REQUIRE(v.accepted);
    REQUIRE(*v.classification == make(FamilyId::G3, 1, 2));

    auto g22 = classify(generate(make(FamilyId::G22, 2, 0, 1, 1)));
    REQUIRE(g22.accepted);
    REQUIRE(*g22.classification == make(FamilyId::G22, 2, 0, 1, 1));
    REQUIRE(g22.diag.quotient_size == 6);

    // Parameter recovery canonicalizes across automorphisms: swapping the
    // x/y attachments of G22 yields the lexicographically smaller tuple.
    auto swapped = classify(generate(make(FamilyId::G22, 3, 1, 3, 1)));
    REQUIRE(swapped.accepted);
    REQUIRE(*swapped.classification == make(FamilyId::G22, 3, 1, 1, 3));

    // Zero-slot instances classify through the relevant subgraph.
    auto g13 = classify(generate(make(FamilyId::G13, 2, 0, 0)));
    REQUIRE(g13.accepted);
    REQUIRE(*g13.classification == make(FamilyId::G13, 2, 0, 0));
    REQUIRE(g13.diag.quotient_size == 6);

    // x + y = 2q + 1 leaves the shared slot empty; the C6 mirror swaps the
    // two attachment blobs, so (x,y) canonicalizes to (1,2).
    auto vz = classify(generate(make(FamilyId::G23, 0, 1, 2, 1)));
    REQUIRE(vz.accepted);
    REQUIRE(*vz.classification == make(FamilyId::G23, 0, 1, 1, 2));
}

TEST_CASE("all-families diagnostics") {
    ClassifyOptions opts;
    opts.all_families = true;
    auto v = classify(generate(make(FamilyId::G22, 2, 1, 1, 1)), opts);
    REQUIRE(v.accepted);
    REQUIRE(v.diag.all_matches.size() == 1);
    REQUIRE(v.diag.all_matches[0].id == FamilyId::G22);
}

TEST_CASE("disconnected input is decided componentwise") {
    Graph k2_k1(3);
    k2_k1.add_edge(0, 1);
    auto v = classify(k2_k1);
    REQUIRE(v.accepted);
    REQUIRE_FALSE(v.classification.has_value());
    REQUIRE(v.components.size() == 2);
    REQUIRE(v.components[0].classification->id == FamilyId::EvenClique);
    REQUIRE(v.components[1].classification->id == FamilyId::AlphaLe2);

    // claw + K2: rejected, with the component split as certificate.
    Graph bad(6);
    bad.add_edge(0, 1);
    bad.add_edge(0, 2);
    bad.add_edge(0, 3);
    bad.add_edge(4, 5);
    auto vb = classify(bad);
    REQUIRE_FALSE(vb.accepted);
    REQUIRE(vb.reason == RejectReason::NOT_CONNECTED);
    REQUIRE(certificate_kind(*vb.certificate) == std::string("disconnected"));
    REQUIRE(validate_certificate(bad, *vb.certificate));
    REQUIRE(vb.components.size() == 2);
    REQUIRE_FALSE(vb.components[0].accepted);
    REQUIRE(vb.components[1].accepted);

    REQUIRE(classify(Graph(0)).accepted);  // vacuous componentwise accept
}

TEST_CASE("explain names the deciding step and shows the evidence") {
    REQUIRE_THAT(explain(classify(Graph::cycle(4))),
                 Catch::Matchers::ContainsSubstring("even: C4"));

    auto report = explain(classify(generate(make(FamilyId::G22, 2, 0, 1, 1))));
    REQUIRE_THAT(report, Catch::Matchers::ContainsSubstring("(2p-x-y, x, y, 1, 1, 2q+1)"));
    REQUIRE_THAT(report, Catch::Matchers::ContainsSubstring("[2,1,1,1,1,1]"));

    auto claw_report = explain(classify(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    REQUIRE_THAT(claw_report, Catch::Matchers::ContainsSubstring("claw"));
}

TEST_CASE("certificates can be suppressed") {
    ClassifyOptions opts;
    opts.want_certificate = false;
    auto v = classify(Graph::path(4), opts);
    REQUIRE_FALSE(v.accepted);
    REQUIRE_FALSE(v.certificate.has_value());
}
