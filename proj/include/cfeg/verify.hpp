#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cfeg/enumeration.hpp"
#include "cfeg/families.hpp"
#include "cfeg/graph.hpp"
#include "cfeg/graph6.hpp"
#include "cfeg/matching.hpp"
#include "cfeg/oracle.hpp"
#include "cfeg/recognizer.hpp"
#include "cfeg/twins.hpp"

namespace cfeg {

struct VerifyOptions {
    int max_n = 7;                    // exhaustive bound of the recognizer-vs-oracle scan
    int rm_max_n = 8;                 // exhaustive bound of the randomly-matchable scan
    std::uint64_t samples = 100000;   // random criterion samples at n = 9
    std::uint64_t graph6_samples = 10000;
    std::uint64_t seed = 20250810;
    int jobs = 0;                     // 0 = hardware concurrency
    int grid_limit = 4;               // family grid: all parameters <= grid_limit
    std::uint64_t offender_cap = 20;  // offending samples kept per suite
};

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> offenders;
    std::string detail;
    double seconds = 0;

    bool passed() const { return failures == 0; }
};

namespace detail {

inline void note(SuiteResult& r, std::uint64_t cap, const std::string& what) {
    ++r.failures;
    if (r.offenders.size() < cap) r.offenders.push_back(what);
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Matching-removal structure of an equimatchable claw-free odd graph:
// removing V(M) for any matching M of size <= 2 leaves exactly one odd
// component, that component is equimatchable, and even components are
// randomly matchable.
inline bool matching_removal_holds(const Graph& g) {
    const auto edges = g.edges();
    auto check = [&](std::initializer_list<std::pair<int, int>> m) {
        VertexSet removed;
        for (auto [u, v] : m) {
            removed.push_back(u);
            removed.push_back(v);
        }
        std::sort(removed.begin(), removed.end());
        auto sub = delete_vertices(g, removed);
        auto comps = connected_components(sub.graph);
        int odd_seen = 0;
        for (const auto& comp : comps) {
            auto part = induced_subgraph(sub.graph, comp).graph;
            if (part.vertex_count() % 2) {
                ++odd_seen;
                if (odd_seen > 1) return false;
                if (!is_equimatchable_bruteforce(part).equimatchable) return false;
            } else if (!is_randomly_matchable(part).value) {
                return false;
            }
        }
        return odd_seen == 1;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!check({edges[i]})) return false;
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (!check({edges[i], edges[j]})) return false;
        }
    }
    return true;
}

}  // namespace detail

// ---- criterion 1 / 4 / 5 scan -------------------------------------------

struct TheoremScanResult {
    SuiteResult agreement;      // classify == claw-free && equimatchable (criterion 1)
    SuiteResult exposed;        // exposed profile of accepted odd graphs is {1} (criterion 4)
    SuiteResult connectivity;   // accepted odd, alpha >= 3 implies kappa <= 3 (criterion 5)
    SuiteResult matching_removal;  // spot check of the matching-removal structure
    SuiteResult certificates;   // rejection certificates exist and re-validate (subsampled)
};

inline TheoremScanResult run_theorem_scan(const VerifyOptions& opts) {
    detail::Stopwatch watch;
    TheoremScanResult out;
    out.agreement.name = "theorem-4.1-exhaustive";
    out.exposed.name = "exposed-count-profile";
    out.connectivity.name = "connectivity-bound";
    out.matching_removal.name = "matching-removal-spot";
    out.certificates.name = "rejection-certificates-spot";

    struct Chunk {
        std::uint64_t connected = 0, accepted = 0, odd_accepted = 0, alpha3 = 0, spot = 0,
                      certs = 0;
        SuiteResult agree, isol, conn, parts, certsuite;
    };

    std::uint64_t total_connected = 0;
    for (int n = 1; n <= opts.max_n; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        auto chunks = run_partitioned<Chunk>(total, opts.jobs, [&](Chunk& c, std::uint64_t b,
                                                                   std::uint64_t e) {
            const ClassifyOptions copts{false, false};
            for (std::uint64_t mask = b; mask < e; ++mask) {
                Graph g = Graph::from_edge_mask(n, mask);
                if (!is_connected(g)) continue;
                ++c.connected;
                const bool claw_free = is_claw_free(g).claw_free;
                const bool equi = is_equimatchable_bruteforce(g).equimatchable;
                const bool expected = claw_free && equi;
                const Verdict v = classify(g, copts);
                if (v.accepted != expected)
                    detail::note(c.agree, opts.offender_cap,
                                 write_graph6(g) + (expected ? " oracle=yes" : " oracle=no") +
                                     " classify=" + (v.accepted ? "yes" : "no"));
                if (!expected) {
                    // Rejected graphs of this size must carry a certificate
                    // that re-validates; subsampled 1-in-127.
                    if (mask % 127 == 0) {
                        ++c.certs;
                        const Verdict vc = classify(g);
                        if (!vc.certificate || !validate_certificate(g, *vc.certificate))
                            detail::note(c.certsuite, opts.offender_cap, write_graph6(g));
                    }
                    continue;
                }
                ++c.accepted;
                if (n % 2 == 0) continue;
                ++c.odd_accepted;
                auto profile = exposed_count_profile(g);
                if (profile.overflow || profile.counts != std::set<int>{1})
                    detail::note(c.isol, opts.offender_cap, write_graph6(g));
                const int alpha = independence_number(g);
                if (alpha >= 3) {
                    ++c.alpha3;
                    if (!vertex_connectivity_capped(g, 3))
                        detail::note(c.conn, opts.offender_cap, write_graph6(g));
                }
                // Parts ii/iii are a spot check: all alpha >= 3 graphs plus a
                // deterministic 1-in-61 subsample of the alpha <= 2 bulk.
                if (alpha >= 3 || mask % 61 == 0) {
                    ++c.spot;
                    if (!detail::matching_removal_holds(g))
                        detail::note(c.parts, opts.offender_cap, write_graph6(g));
                }
            }
        });
        for (const auto& c : chunks) {
            total_connected += c.connected;
            out.agreement.checked += c.connected;
            out.exposed.checked += c.odd_accepted;
            out.connectivity.checked += c.alpha3;
            out.matching_removal.checked += c.spot;
            out.certificates.checked += c.certs;
            auto merge = [&](SuiteResult& into, const SuiteResult& from) {
                into.failures += from.failures;
                for (const auto& s : from.offenders)
                    if (into.offenders.size() < opts.offender_cap) into.offenders.push_back(s);
            };
            merge(out.agreement, c.agree);
            merge(out.exposed, c.isol);
            merge(out.connectivity, c.conn);
            merge(out.matching_removal, c.parts);
            merge(out.certificates, c.certsuite);
        }
    }
    out.agreement.detail = "connected labeled graphs, n <= " + std::to_string(opts.max_n);
    out.agreement.seconds = watch.seconds();
    return out;
}

// ---- criterion 2: structural criterion vs brute force --------------------

inline SuiteResult run_criterion_equivalence(const VerifyOptions& opts) {
    detail::Stopwatch watch;
    SuiteResult r;
    r.name = "criterion-vs-bruteforce";

    struct Chunk {
        SuiteResult local;
        std::uint64_t checked = 0;
    };

    for (int n = 1; n <= std::min(opts.max_n, 7); n += 2) {
        const std::uint64_t total = labeled_graph_count(n);
        auto chunks =
            run_partitioned<Chunk>(total, opts.jobs, [&](Chunk& c, std::uint64_t b, std::uint64_t e) {
                for (std::uint64_t mask = b; mask < e; ++mask) {
                    Graph g = Graph::from_edge_mask(n, mask);
                    if (!is_connected(g) || !is_claw_free(g).claw_free) continue;
                    ++c.checked;
                    const bool by_criterion = criterion_equimatchable_cfodd(g).equimatchable;
                    const bool by_brute = is_equimatchable_bruteforce(g).equimatchable;
                    if (by_criterion != by_brute)
                        detail::note(c.local, opts.offender_cap, write_graph6(g));
                }
            });
        for (const auto& c : chunks) {
            r.checked += c.checked;
            r.failures += c.local.failures;
            for (const auto& s : c.local.offenders)
                if (r.offenders.size() < opts.offender_cap) r.offenders.push_back(s);
        }
    }

    const std::uint64_t exhaustive = r.checked;
    auto chunks = run_partitioned<Chunk>(opts.samples, opts.jobs,
                                         [&](Chunk& c, std::uint64_t b, std::uint64_t e) {
                                             for (std::uint64_t i = b; i < e; ++i) {
                                                 std::mt19937_64 rng(mix_seed(opts.seed, i));
                                                 Graph g = random_connected_claw_free(9, rng);
                                                 ++c.checked;
                                                 const bool by_criterion =
                                                     criterion_equimatchable_cfodd(g).equimatchable;
                                                 const bool by_brute =
                                                     is_equimatchable_bruteforce(g).equimatchable;
                                                 if (by_criterion != by_brute)
                                                     detail::note(c.local, opts.offender_cap,
                                                                  "sample " + std::to_string(i) + " " +
                                                                      write_graph6(g));
                                             }
                                         });
    for (const auto& c : chunks) {
        r.checked += c.checked;
        r.failures += c.local.failures;
        for (const auto& s : c.local.offenders)
            if (r.offenders.size() < opts.offender_cap) r.offenders.push_back(s);
    }
    r.detail = std::to_string(exhaustive) + " exhaustive (claw-free odd, n <= " +
               std::to_string(std::min(opts.max_n, 7)) + ") + " + std::to_string(r.checked - exhaustive) +
               " random n=9";
    r.seconds = watch.seconds();
    return r;
}

// ---- criterion 3 / 7 and family invariants --------------------------------

inline std::vector<FamilyParams> grid_params(int limit) {
    std::vector<FamilyParams> out;
    for (int p = 1; p <= limit; ++p) out.push_back({FamilyId::EvenClique, p});
    out.push_back({FamilyId::C4});
    out.push_back({FamilyId::C7});
    out.push_back({FamilyId::G11});
    for (int p = 1; p <= limit; ++p)
        for (int x = 1; x <= std::min(limit, 2 * p - 1); ++x)
            for (int p2 = 1; p2 <= limit; ++p2)
                for (int x2 = 1; x2 <= std::min(limit, 2 * p2 - 1); ++x2) {
                    FamilyParams fp{FamilyId::G12, p};
                    fp.x = x;
                    fp.p2 = p2;
                    fp.x2 = x2;
                    out.push_back(fp);
                }
    for (int p = 1; p <= limit; ++p)
        for (int x = 0; x <= std::min(limit, 2 * p - 1); ++x) {
            FamilyParams fp{FamilyId::G13, p};
            fp.x = x;
            out.push_back(fp);
        }
    for (int q = 1; q <= limit; ++q)
        for (int x = 2; x <= std::min(limit, 2 * q); ++x) {
            FamilyParams fp{FamilyId::G21};
            fp.q = q;
            fp.x = x;
            out.push_back(fp);
        }
    for (int p = 1; p <= limit; ++p)
        for (int q = 0; q <= limit; ++q)
            for (int x = 1; x <= limit; ++x)
                for (int y = 1; y <= limit && x + y <= 2 * p - 1; ++y) {
                    FamilyParams fp{FamilyId::G22, p};
                    fp.q = q;
                    fp.x = x;
                    fp.y = y;
                    out.push_back(fp);
                }
    for (int q = 1; q <= limit; ++q)
        for (int x = 1; x <= limit; ++x)
            for (int y = 1; y <= limit && x + y <= 2 * q + 1; ++y) {
                FamilyParams fp{FamilyId::G23};
                fp.q = q;
                fp.x = x;
                fp.y = y;
                out.push_back(fp);
            }
    for (int p = 1; p <= limit; ++p)
        for (int q = 1; q <= limit; ++q) {
            FamilyParams fp{FamilyId::G3, p};
            fp.q = q;
            out.push_back(fp);
        }
    return out;
}

inline std::optional<int> expected_family_connectivity(FamilyId id) {
    switch (id) {
        case FamilyId::G11:
        case FamilyId::G12:
        case FamilyId::G13:
            return 1;
        case FamilyId::C7:
        case FamilyId::G21:
        case FamilyId::G22:
        case FamilyId::G23:
            return 2;
        case FamilyId::G3:
            return 3;
        default:
            return std::nullopt;
    }
}

// Variable (blob) slots of each family's multiplicity pattern.
inline std::vector<int> variable_slots(FamilyId id) {
    switch (id) {
        case FamilyId::G3: return {1, 5};
        case FamilyId::G21: return {4, 5};
        case FamilyId::G22: return {0, 1, 2, 5};
        case FamilyId::G23: return {4, 5, 6};
        case FamilyId::G12: return {0, 1, 3, 4};
        case FamilyId::G13: return {0, 1};
        default: return {};
    }
}

struct FamilyGridResult {
    SuiteResult soundness;   // criterion 3
    SuiteResult round_trip;  // criterion 7
    SuiteResult membership;  // definitional membership agrees with the generated family
    SuiteResult closure;     // +2 on any blob multiplicity stays in the family
};

inline FamilyGridResult run_family_grid(const VerifyOptions& opts) {
    detail::Stopwatch watch;
    FamilyGridResult out;
    out.soundness.name = "generator-grid-soundness";
    out.round_trip.name = "generate-classify-round-trip";
    out.membership.name = "definitional-membership";
    out.closure.name = "blow-up-closure";

    const auto grid = grid_params(opts.grid_limit);
    for (const auto& params : grid) {
        const Graph g = generate(params);
        const std::string tag = to_string(params);
        const bool parameterized = expected_family_connectivity(params.id).has_value();

        // --- criterion 3: oracle-confirmed soundness
        ++out.soundness.checked;
        bool sound = is_connected(g) && is_claw_free(g).claw_free;
        if (sound) {
            if (g.vertex_count() <= 12) {
                sound = is_equimatchable_bruteforce(g).equimatchable;
            } else {
                sound = criterion_equimatchable_cfodd(g).equimatchable;
            }
        }
        if (sound && parameterized) {
            auto kappa = vertex_connectivity_capped(g, 3);
            sound = kappa && *kappa == *expected_family_connectivity(params.id);
            if (sound) sound = independence_number(g) >= 3;
        }
        if (!sound) detail::note(out.soundness, opts.offender_cap, tag);

        // --- criterion 7: classify round trip
        ++out.round_trip.checked;
        const Verdict v = classify(g);
        bool ok = v.accepted && v.classification && v.classification->id == params.id;
        if (ok) {
            const Graph regen = generate(*v.classification);
            const Verdict v2 = classify(regen);
            ok = v2.accepted && v2.classification && *v2.classification == *v.classification;
            if (ok && g.vertex_count() <= kIsomorphismMaxVertices)
                ok = isomorphic_small(g, regen).has_value();
            if (ok && regen.vertex_count() != g.vertex_count()) ok = false;
        }
        if (!ok) detail::note(out.round_trip, opts.offender_cap, tag);

        // --- definitional membership (blow-up families only)
        const bool definitional =
            std::find(kBlowUpFamilies.begin(), kBlowUpFamilies.end(), params.id) !=
            kBlowUpFamilies.end();
        if (definitional) {
            ++out.membership.checked;
            if (!membership_by_definition(g, params.id))
                detail::note(out.membership, opts.offender_cap, tag);
        }

        // --- blow-up closure on every variable slot
        for (int slot : variable_slots(params.id)) {
            ++out.closure.checked;
            auto vec = multiplicity_vector(params);
            vec[slot] += 2;
            const Graph bigger = expand(base_graph(params.id).graph, vec);
            const Verdict vb = classify(bigger);
            if (!(vb.accepted && vb.classification && vb.classification->id == params.id))
                detail::note(out.closure, opts.offender_cap,
                             tag + " slot " + std::to_string(slot) + " +2");
        }
    }
    out.soundness.detail = std::to_string(grid.size()) + " instances, parameters <= " +
                           std::to_string(opts.grid_limit);
    out.soundness.seconds = watch.seconds();
    return out;
}

// ---- criterion 6 and the Sumner check -------------------------------------

struct RandomlyMatchableScanResult {
    SuiteResult equivalence;  // oracle == (K_2p or K_pp), criterion 6
    SuiteResult sumner;       // connected claw-free even graphs have perfect matchings
};

inline RandomlyMatchableScanResult run_randomly_matchable_scan(const VerifyOptions& opts) {
    detail::Stopwatch watch;
    RandomlyMatchableScanResult out;
    out.equivalence.name = "randomly-matchable-structure";
    out.sumner.name = "sumner-perfect-matching";

    struct Chunk {
        std::uint64_t checked = 0, sumner_checked = 0;
        SuiteResult equiv, sumner;
    };
    for (int n = 1; n <= opts.rm_max_n; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        auto chunks = run_partitioned<Chunk>(total, opts.jobs, [&](Chunk& c, std::uint64_t b,
                                                                   std::uint64_t e) {
            for (std::uint64_t mask = b; mask < e; ++mask) {
                Graph g = Graph::from_edge_mask(n, mask);
                if (!is_connected(g)) continue;
                ++c.checked;
                const auto oracle = is_randomly_matchable(g);
                const bool structural = is_randomly_matchable_structural(g);
                if (oracle.overflow || oracle.value != structural)
                    detail::note(c.equiv, opts.offender_cap, write_graph6(g));
                if (n % 2 == 0 && is_claw_free(g).claw_free) {
                    ++c.sumner_checked;
                    if (2 * static_cast<int>(maximum_matching(g).size()) != n)
                        detail::note(c.sumner, opts.offender_cap, write_graph6(g));
                }
            }
        });
        for (const auto& c : chunks) {
            out.equivalence.checked += c.checked;
            out.sumner.checked += c.sumner_checked;
            out.equivalence.failures += c.equiv.failures;
            out.sumner.failures += c.sumner.failures;
            for (const auto& s : c.equiv.offenders)
                if (out.equivalence.offenders.size() < opts.offender_cap)
                    out.equivalence.offenders.push_back(s);
            for (const auto& s : c.sumner.offenders)
                if (out.sumner.offenders.size() < opts.offender_cap) out.sumner.offenders.push_back(s);
        }
    }
    out.equivalence.detail = "connected labeled graphs, n <= " + std::to_string(opts.rm_max_n);
    out.equivalence.seconds = watch.seconds();
    return out;
}

// ---- criterion 9: graph6 round trip ---------------------------------------

inline SuiteResult run_graph6_roundtrip(const VerifyOptions& opts) {
    detail::Stopwatch watch;
    SuiteResult r;
    r.name = "graph6-round-trip";
    for (int n = 0; n <= 7; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = Graph::from_edge_mask(n, mask);
            ++r.checked;
            const std::string s = write_graph6(g);
            if (parse_graph6(s) != g || write_graph6(parse_graph6(s)) != s)
                detail::note(r, opts.offender_cap, s);
        }
    }
    for (std::uint64_t i = 0; i < opts.graph6_samples; ++i) {
        std::mt19937_64 rng(mix_seed(opts.seed ^ 0x67726170683665ULL, i));
        const int n = 1 + static_cast<int>(rng() % 62);
        Graph g = random_graph(n, next_unit(rng), rng);
        ++r.checked;
        const std::string s = write_graph6(g);
        if (parse_graph6(s) != g)
            detail::note(r, opts.offender_cap, "sample " + std::to_string(i) + " " + s);
    }
    r.detail = "all labeled graphs n <= 7 plus " + std::to_string(opts.graph6_samples) +
               " random graphs n <= 62";
    r.seconds = watch.seconds();
    return r;
}

// ---- criterion 8: performance ----------------------------------------------

inline constexpr double kLargeClassifySecondsBudget = 5.0;
inline constexpr int kLargeClassifyVertices = 1001;

inline SuiteResult run_performance(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "large-instance-performance";
    FamilyParams params{FamilyId::G22, 250};
    params.q = 249;
    params.x = 100;
    params.y = 150;
    const Graph g = generate(params);
    ++r.checked;

    detail::Stopwatch watch;
    const Verdict v = classify(g);
    const double elapsed = watch.seconds();
    r.seconds = elapsed;

    if (g.vertex_count() != kLargeClassifyVertices)
        detail::note(r, opts.offender_cap, "instance size mismatch");
    if (!(v.accepted && v.classification && *v.classification == params))
        detail::note(r, opts.offender_cap, "misclassified G22 instance");
    if (elapsed >= kLargeClassifySecondsBudget)
        detail::note(r, opts.offender_cap,
                     "classify took " + std::to_string(elapsed) + "s (budget " +
                         std::to_string(kLargeClassifySecondsBudget) + "s)");
    // Each contraction round touches a vertex pair O(1) times inside a row
    // sort, so the round count bounds per-pair work; log2(1001) < 10.
    if (v.diag.twin_rounds > 10)
        detail::note(r, opts.offender_cap,
                     "twin reduction used " + std::to_string(v.diag.twin_rounds) + " rounds");
    std::ostringstream d;
    d << "classify(G22, n=1001) in " << elapsed << "s, budget " << kLargeClassifySecondsBudget << "s";
    r.detail = d.str();
    return r;
}

// ---- full report ------------------------------------------------------------

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const {
        for (const auto& s : suites)
            if (!s.passed()) return false;
        return true;
    }
};

// Runs every suite; on_suite (when given) sees each result as soon as it is
// available, so long runs report progress incrementally.
template <typename OnSuite>
VerifyReport run_all_suites(const VerifyOptions& opts, OnSuite&& on_suite) {
    VerifyReport report;
    auto add = [&](const SuiteResult& s) {
        report.suites.push_back(s);
        on_suite(s);
    };
    auto theorem = run_theorem_scan(opts);
    add(theorem.agreement);
    add(theorem.exposed);
    add(theorem.connectivity);
    add(theorem.matching_removal);
    add(theorem.certificates);
    add(run_criterion_equivalence(opts));
    auto grid = run_family_grid(opts);
    add(grid.soundness);
    add(grid.round_trip);
    add(grid.membership);
    add(grid.closure);
    auto rm = run_randomly_matchable_scan(opts);
    add(rm.equivalence);
    add(rm.sumner);
    add(run_performance(opts));
    add(run_graph6_roundtrip(opts));
    return report;
}

inline VerifyReport run_all_suites(const VerifyOptions& opts) {
    return run_all_suites(opts, [](const SuiteResult&) {});
}

inline std::string format_suite(const SuiteResult& s, bool with_timing) {
    std::ostringstream out;
    out << (s.passed() ? "[PASS] " : "[FAIL] ") << s.name << " checked=" << s.checked
        << " failures=" << s.failures;
    if (!s.detail.empty()) out << " (" << s.detail << ")";
    if (with_timing && s.seconds > 0) out << " [" << s.seconds << "s]";
    out << "\n";
    for (const auto& o : s.offenders) out << "       offender: " << o << "\n";
    return out.str();
}

inline std::string format_report(const VerifyReport& report, bool with_timing) {
    std::string out;
    for (const auto& s : report.suites) out += format_suite(s, with_timing);
    out += report.all_passed() ? "PASS: all suites clean\n" : "FAIL: mismatches found\n";
    return out;
}

}  // namespace cfeg
