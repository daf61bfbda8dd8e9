#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfeg/families.hpp"
#include "cfeg/graph.hpp"
#include "cfeg/oracle.hpp"
#include "cfeg/twins.hpp"

namespace cfeg {

enum class RejectReason { NOT_CONNECTED, EVEN_NOT_CLIQUE_NOR_C4, NO_FAMILY_MATCH };

inline const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::NOT_CONNECTED: return "NOT_CONNECTED";
        case RejectReason::EVEN_NOT_CLIQUE_NOR_C4: return "EVEN_NOT_CLIQUE_NOR_C4";
        case RejectReason::NO_FAMILY_MATCH: return "NO_FAMILY_MATCH";
    }
    return "?";
}

// Rejection certificates are produced only below these sizes (best effort;
// larger graphs get a reason-only verdict).
inline constexpr int kCertificateBruteForceMaxN = 14;
inline constexpr int kCertificateClawScanMaxN = 128;
inline constexpr int kCertificateTripleScanMaxN = 128;

struct ClassifyOptions {
    bool all_families = false;      // also collect every other matching family
    bool want_certificate = true;   // attach a checkable witness on rejection
};

struct Diagnostics {
    std::string step;                        // which recognition step decided
    int quotient_size = -1;                  // twin-free quotient, when computed
    std::vector<int> multiplicities;         // quotient multiplicities
    int twin_rounds = 0;
    long isomorphisms_tried = 0;
    std::vector<FamilyParams> all_matches;   // with ClassifyOptions::all_families
};

struct Verdict {
    bool accepted = false;
    std::optional<FamilyParams> classification;  // present iff accepted and connected
    std::optional<RejectReason> reason;
    std::optional<Certificate> certificate;
    std::vector<Verdict> components;  // per-component verdicts for disconnected input
    Diagnostics diag;
};

inline const char* family_pattern_text(FamilyId id) {
    switch (id) {
        case FamilyId::G3: return "(1, 2p, 1, 1, 1, 2q, 1)";
        case FamilyId::G21: return "(1, 1, 1, 1, x, 2q+1-x)";
        case FamilyId::G22: return "(2p-x-y, x, y, 1, 1, 2q+1)";
        case FamilyId::G23: return "(1, 1, 1, 1, x, y, 2q+1-x-y)";
        case FamilyId::G12: return "(x, 2p-x, 1, 2p'-x', x')";
        case FamilyId::G13: return "(x, 2p-x, 1, 1, 1, 1, 1)";
        case FamilyId::G11: return "(1, 1, 1, 1, 1, 1, 1, 1, 1)";
        default: return "";
    }
}

namespace detail {

// All parameter recoveries for one family against the reduced quotient,
// trying every isomorphism onto the base and, when the family has a
// zero-allowed slot, onto the relevant subgraph with that slot deleted.
inline std::vector<FamilyParams> match_family(const TwinReduction& tr, FamilyId fam,
                                              long& isomorphisms_tried) {
    std::vector<FamilyParams> out;
    const BaseGraph& base = base_graph(fam);
    const Graph& h = tr.quotient;
    const int k = base.graph.vertex_count();
    if (h.vertex_count() == k) {
        for_each_isomorphism(h, base.graph, [&](const std::vector<int>& map) {
            ++isomorphisms_tried;
            std::vector<int> aligned(k, 0);
            for (int v = 0; v < k; ++v) aligned[map[v]] = tr.multiplicity[v];
            if (auto fp = pattern_match(fam, aligned)) out.push_back(*fp);
            return true;
        });
    }
    if (base.zero_slot >= 0 && h.vertex_count() == k - 1) {
        const auto sub = delete_vertex(base.graph, base.zero_slot);
        for_each_isomorphism(h, sub.graph, [&](const std::vector<int>& map) {
            ++isomorphisms_tried;
            std::vector<int> aligned(k, 0);
            for (int v = 0; v < k - 1; ++v) aligned[sub.original[map[v]]] = tr.multiplicity[v];
            if (auto fp = pattern_match(fam, aligned)) out.push_back(*fp);
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::optional<Certificate> rejection_certificate(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCertificateClawScanMaxN) return std::nullopt;
    auto cf = is_claw_free(g);
    if (!cf.claw_free) return Certificate{*cf.claw};
    if (n <= kCertificateBruteForceMaxN) {
        auto bf = is_equimatchable_bruteforce(g);
        if (!bf.overflow && !bf.equimatchable) return Certificate{*bf.witness};
    }
    if (n % 2 == 1 && n <= kCertificateTripleScanMaxN && is_connected(g)) {
        auto cr = criterion_equimatchable_cfodd(g);
        if (!cr.equimatchable) return Certificate{*cr.violation};
    }
    return std::nullopt;
}

inline Verdict classify_connected(const Graph& g, const ClassifyOptions& opts) {
    Verdict v;
    const int n = g.vertex_count();

    auto accept = [&](FamilyParams fp, std::string step) {
        v.accepted = true;
        v.classification = fp;
        v.diag.step = std::move(step);
        return v;
    };
    auto reject = [&](RejectReason why, std::string step) {
        v.accepted = false;
        v.reason = why;
        v.diag.step = std::move(step);
        if (opts.want_certificate) v.certificate = rejection_certificate(g);
        return v;
    };

    if (n % 2 == 0) {
        if (n >= 2 && is_complete(g))
            return accept({FamilyId::EvenClique, n / 2}, "even: clique");
        if (is_cycle_c4(g)) return accept({FamilyId::C4}, "even: C4");
        return reject(RejectReason::EVEN_NOT_CLIQUE_NOR_C4, "even: neither clique nor C4");
    }
    if (alpha_at_most_2(g)) return accept({FamilyId::AlphaLe2}, "odd: alpha <= 2");
    if (n == 7 && isomorphic_small(g, Graph::cycle(7))) return accept({FamilyId::C7}, "fixed: C7");
    if (n == 9 && isomorphic_small(g, base_graph(FamilyId::G11).graph))
        return accept({FamilyId::G11}, "fixed: G11");

    const TwinReduction tr = twin_reduce(g);
    v.diag.quotient_size = tr.quotient.vertex_count();
    v.diag.multiplicities = tr.multiplicity;
    v.diag.twin_rounds = tr.rounds;

    std::optional<FamilyParams> chosen;
    if (tr.quotient.vertex_count() <= 9) {
        for (FamilyId fam : kBlowUpFamilies) {
            auto candidates = match_family(tr, fam, v.diag.isomorphisms_tried);
            if (candidates.empty()) continue;
            // Lexicographically smallest parameter tuple within the family.
            if (!chosen) chosen = candidates.front();
            if (!opts.all_families) break;
            v.diag.all_matches.push_back(candidates.front());
        }
    }
    if (chosen) return accept(*chosen, std::string("pattern: ") + family_name(chosen->id));
    return reject(RejectReason::NO_FAMILY_MATCH, "reject: no family match");
}

}  // namespace detail

// Algorithm: even graphs are accepted iff clique or C4; odd graphs with
// alpha <= 2 are accepted outright; then C7 and G11 by direct isomorphism;
// otherwise the twin-free quotient is matched against each blow-up family
// base (or its relevant subgraph) and the multiplicity pattern decides.
// Disconnected input is decided componentwise: maximal matchings are exactly
// unions of per-component maximal matchings, so the graph is claw-free
// equimatchable iff every component is.
inline Verdict classify(const Graph& g, const ClassifyOptions& opts = {}) {
    auto comps = connected_components(g);
    if (comps.size() == 1) return detail::classify_connected(g, opts);

    Verdict v;
    v.diag.step = "componentwise";
    v.accepted = true;
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        v.components.push_back(detail::classify_connected(sub.graph, opts));
        v.accepted = v.accepted && v.components.back().accepted;
    }
    if (!v.accepted) {
        v.reason = RejectReason::NOT_CONNECTED;
        if (opts.want_certificate) v.certificate = Certificate{DisconnectedCertificate{comps}};
    }
    return v;
}

// ---- reporting ----------------------------------------------------------

inline const char* certificate_kind(const Certificate& c) {
    if (std::holds_alternative<ClawCertificate>(c)) return "claw";
    if (std::holds_alternative<UnequalMatchingsCertificate>(c)) return "unequal_matchings";
    if (std::holds_alternative<BadTripleCertificate>(c)) return "bad_independent_triple";
    return "disconnected";
}

inline std::string to_string(const Matching& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i].first) + "-" + std::to_string(m[i].second);
    }
    return s + "]";
}

inline std::string to_string(const Certificate& c) {
    if (const auto* claw = std::get_if<ClawCertificate>(&c)) {
        return "claw center=" + std::to_string(claw->center) + " leaves=" +
               std::to_string(claw->leaves[0]) + "," + std::to_string(claw->leaves[1]) + "," +
               std::to_string(claw->leaves[2]);
    }
    if (const auto* um = std::get_if<UnequalMatchingsCertificate>(&c))
        return "unequal_matchings m1=" + to_string(um->first) + " m2=" + to_string(um->second);
    if (const auto* bad = std::get_if<BadTripleCertificate>(&c)) {
        return "bad_independent_triple vertices=" + std::to_string(bad->vertices[0]) + "," +
               std::to_string(bad->vertices[1]) + "," + std::to_string(bad->vertices[2]);
    }
    const auto& disc = std::get<DisconnectedCertificate>(c);
    std::string s = "disconnected components=";
    for (std::size_t i = 0; i < disc.components.size(); ++i) {
        s += i ? ";{" : "{";
        for (std::size_t j = 0; j < disc.components[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(disc.components[i][j]);
        }
        s += "}";
    }
    return s;
}

// Human-readable trace of a verdict.
inline std::string explain(const Verdict& v) {
    std::string s;
    s += v.accepted ? "accepted" : "rejected";
    if (v.classification) s += " " + to_string(*v.classification);
    if (v.reason) s += std::string(" reason=") + reject_reason_name(*v.reason);
    s += "\n  step: " + v.diag.step + "\n";
    if (v.diag.quotient_size >= 0) {
        s += "  twin-free quotient: " + std::to_string(v.diag.quotient_size) +
             " vertices, multiplicities [";
        for (std::size_t i = 0; i < v.diag.multiplicities.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v.diag.multiplicities[i]);
        }
        s += "] after " + std::to_string(v.diag.twin_rounds) + " rounds\n";
        s += "  isomorphisms tried: " + std::to_string(v.diag.isomorphisms_tried) + "\n";
    }
    if (v.classification) {
        const char* pat = family_pattern_text(v.classification->id);
        if (pat[0]) s += std::string("  pattern: ") + pat + "\n";
    }
    if (!v.diag.all_matches.empty()) {
        s += "  all matching families:";
        for (const auto& fp : v.diag.all_matches) s += " " + to_string(fp);
        s += "\n";
    }
    if (v.certificate) s += "  certificate: " + to_string(*v.certificate) + "\n";
    for (std::size_t i = 0; i < v.components.size(); ++i) {
        s += "  component " + std::to_string(i) + ": ";
        const Verdict& c = v.components[i];
        s += c.accepted ? "accepted" : "rejected";
        if (c.classification) s += " " + to_string(*c.classification);
        if (c.reason) s += std::string(" reason=") + reject_reason_name(*c.reason);
        s += "\n";
    }
    return s;
}

}  // namespace cfeg
