// cfeg: recognize, generate, and verify connected claw-free equimatchable
// graphs. Subcommands: classify, generate, verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cfeg/families.hpp"
#include "cfeg/graph.hpp"
#include "cfeg/graph6.hpp"
#include "cfeg/isomorphism.hpp"
#include "cfeg/recognizer.hpp"
#include "cfeg/verify.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;

std::string certificate_record(const cfeg::Certificate& c) {
    using namespace cfeg;
    if (const auto* claw = std::get_if<ClawCertificate>(&c)) {
        return "claw:" + std::to_string(claw->center) + ":" + std::to_string(claw->leaves[0]) + "," +
               std::to_string(claw->leaves[1]) + "," + std::to_string(claw->leaves[2]);
    }
    if (const auto* um = std::get_if<UnequalMatchingsCertificate>(&c)) {
        auto edges = [](const Matching& m) {
            std::string s;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(m[i].first) + "-" + std::to_string(m[i].second);
            }
            return s;
        };
        return "unequal_matchings:" + edges(um->first) + ":" + edges(um->second);
    }
    if (const auto* bad = std::get_if<BadTripleCertificate>(&c)) {
        return "bad_independent_triple:" + std::to_string(bad->vertices[0]) + "," +
               std::to_string(bad->vertices[1]) + "," + std::to_string(bad->vertices[2]);
    }
    const auto& disc = std::get<DisconnectedCertificate>(c);
    std::string s = "disconnected:";
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

std::string params_record(const cfeg::FamilyParams& fp) {
    std::string s;
    for (auto [name, value] : fp.fields()) {
        if (!s.empty()) s += ",";
        s += std::string(name) + "=" + std::to_string(value);
    }
    return s;
}

std::string component_summary(const cfeg::Verdict& v) {
    std::string s;
    for (std::size_t i = 0; i < v.components.size(); ++i) {
        if (i) s += "|";
        const auto& c = v.components[i];
        if (c.accepted && c.classification)
            s += cfeg::to_string(*c.classification);
        else if (c.reason)
            s += std::string("!") + cfeg::reject_reason_name(*c.reason);
    }
    return s;
}

void print_verdict(std::ostream& out, std::uint64_t index, const cfeg::Verdict& v, bool records,
                   bool with_explain) {
    if (records) {
        out << "index=" << index << " accepted=" << (v.accepted ? "true" : "false");
        if (v.classification) {
            out << " family=" << cfeg::family_name(v.classification->id);
            const std::string params = params_record(*v.classification);
            if (!params.empty()) out << " params=" << params;
        }
        if (!v.components.empty()) out << " components=" << component_summary(v);
        if (v.reason) out << " reason=" << cfeg::reject_reason_name(*v.reason);
        if (v.certificate) out << " certificate=" << certificate_record(*v.certificate);
        if (!v.diag.all_matches.empty()) {
            out << " all_families=";
            for (std::size_t i = 0; i < v.diag.all_matches.size(); ++i)
                out << (i ? "|" : "") << cfeg::to_string(v.diag.all_matches[i]);
        }
        out << "\n";
        return;
    }
    out << "#" << index << " " << (v.accepted ? "accepted" : "rejected");
    if (v.classification) out << " family=" << cfeg::to_string(*v.classification);
    if (!v.components.empty()) out << " components=" << component_summary(v);
    if (v.reason) out << " reason=" << cfeg::reject_reason_name(*v.reason);
    if (v.certificate) out << " certificate=" << cfeg::to_string(*v.certificate);
    out << "\n";
    if (with_explain) out << cfeg::explain(v);
}

struct ClassifyConfig {
    std::string path;
    std::string format = "graph6";
    std::string output = "text";
    bool all_families = false;
    bool with_explain = false;
};

int run_classify(const ClassifyConfig& cfg) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!cfg.path.empty() && cfg.path != "-") {
        file.open(cfg.path);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.path << "\n";
            return kExitInputError;
        }
        in = &file;
    }
    const bool records = cfg.output == "records";
    cfeg::ClassifyOptions opts;
    opts.all_families = cfg.all_families;

    bool any_rejected = false, any_error = false;
    std::uint64_t index = 0;

    if (cfg.format == "graph6") {
        std::string line;
        std::uint64_t line_no = 0;
        while (std::getline(*in, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            ++index;
            try {
                const cfeg::Graph g = cfeg::parse_graph6(line);
                const cfeg::Verdict v = cfeg::classify(g, opts);
                any_rejected = any_rejected || !v.accepted;
                print_verdict(std::cout, index, v, records, cfg.with_explain);
            } catch (const std::exception& e) {
                std::cerr << "line " << line_no << ": " << e.what() << "\n";
                any_error = true;
            }
        }
    } else {
        // Edge-list records, concatenated: "n m" header then m "u v" lines.
        while (true) {
            long long n = 0, m = 0;
            if (!(*in >> n)) break;
            ++index;
            try {
                if (!(*in >> m) || n < 0 || m < 0) throw std::invalid_argument("malformed header");
                std::ostringstream record;
                record << n << ' ' << m << '\n';
                for (long long i = 0; i < m; ++i) {
                    long long u, v;
                    if (!(*in >> u >> v)) throw std::invalid_argument("truncated edge list");
                    record << u << ' ' << v << '\n';
                }
                const cfeg::Graph g = cfeg::parse_edge_list(record.str());
                const cfeg::Verdict v = cfeg::classify(g, opts);
                any_rejected = any_rejected || !v.accepted;
                print_verdict(std::cout, index, v, records, cfg.with_explain);
            } catch (const std::exception& e) {
                std::cerr << "record " << index << ": " << e.what() << "\n";
                return kExitInputError;  // no reliable resync point in this format
            }
        }
    }
    if (any_error) return kExitInputError;
    return any_rejected ? kExitRejected : kExitAccepted;
}

struct GenerateConfig {
    std::string family;
    int p = 0, q = 0, x = 0, y = 0, p2 = 0, x2 = 0;
    std::string format = "graph6";
    bool self_check = false;
};

int run_generate(const GenerateConfig& cfg) {
    const auto id = cfeg::family_from_name(cfg.family);
    if (!id) {
        std::cerr << "error: unknown family \"" << cfg.family << "\"\n";
        return kExitInputError;
    }
    cfeg::FamilyParams params{*id, cfg.p};
    params.q = cfg.q;
    params.x = cfg.x;
    params.y = cfg.y;
    params.p2 = cfg.p2;
    params.x2 = cfg.x2;
    cfeg::Graph g;
    try {
        g = cfeg::generate(params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (cfg.format == "graph6") {
        if (g.vertex_count() > cfeg::kGraph6MaxVertices) {
            std::cerr << "error: n = " << g.vertex_count()
                      << " exceeds graph6 short form; use --format edgelist\n";
            return kExitInputError;
        }
        std::cout << cfeg::write_graph6(g) << "\n";
    } else {
        std::cout << cfeg::write_edge_list(g);
    }
    if (cfg.self_check) {
        const cfeg::Verdict v = cfeg::classify(g);
        bool ok = v.accepted && v.classification && v.classification->id == *id;
        if (ok) {
            const cfeg::Graph regen = cfeg::generate(*v.classification);
            ok = regen.vertex_count() == g.vertex_count() && regen.edge_count() == g.edge_count();
            if (ok && g.vertex_count() <= cfeg::kIsomorphismMaxVertices)
                ok = cfeg::isomorphic_small(g, regen).has_value();
        }
        if (!ok) {
            std::cerr << "self-check failed: classify returned "
                      << (v.classification ? cfeg::to_string(*v.classification)
                                           : std::string("rejection"))
                      << "\n";
            return kExitRejected;
        }
        std::cerr << "self-check: " << cfeg::to_string(*v.classification) << " ok\n";
    }
    return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognizer for connected claw-free equimatchable graphs"};
    app.require_subcommand(1);

    ClassifyConfig ccfg;
    auto* cls = app.add_subcommand("classify", "classify graphs from a file or stdin");
    cls->add_option("path", ccfg.path, "input path (default: stdin)");
    cls->add_option("--format", ccfg.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cls->add_option("--output", ccfg.output, "output style")
        ->check(CLI::IsMember({"text", "records"}));
    cls->add_flag("--all-families", ccfg.all_families, "report every matching family");
    cls->add_flag("--explain", ccfg.with_explain, "print the full recognition trace");

    GenerateConfig gcfg;
    auto* gen = app.add_subcommand("generate", "emit a member of a characterized family");
    gen->add_option("--family", gcfg.family, "family name, e.g. G22")->required();
    gen->add_option("--p", gcfg.p, "parameter p");
    gen->add_option("--q", gcfg.q, "parameter q");
    gen->add_option("--x", gcfg.x, "parameter x");
    gen->add_option("--y", gcfg.y, "parameter y");
    gen->add_option("--p2", gcfg.p2, "parameter p'");
    gen->add_option("--x2", gcfg.x2, "parameter x'");
    gen->add_option("--format", gcfg.format, "output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_flag("--self-check", gcfg.self_check, "classify the output and cross-check");

    cfeg::VerifyOptions vopts;
    bool no_timing = false;
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--max-n", vopts.max_n, "exhaustive recognizer scan bound")
        ->check(CLI::Range(1, 7));
    ver->add_option("--rm-max-n", vopts.rm_max_n, "randomly-matchable scan bound")
        ->check(CLI::Range(1, 8));
    ver->add_option("--samples", vopts.samples, "random criterion samples at n=9");
    ver->add_option("--graph6-samples", vopts.graph6_samples, "random graph6 round-trip samples");
    ver->add_option("--seed", vopts.seed, "random seed");
    ver->add_option("--jobs", vopts.jobs, "worker threads (0 = hardware)");
    ver->add_option("--grid-limit", vopts.grid_limit, "family grid parameter bound")
        ->check(CLI::Range(1, 6));
    ver->add_flag("--no-timing", no_timing, "omit timing fields (byte-stable output)");

    CLI11_PARSE(app, argc, argv);

    if (*cls) return run_classify(ccfg);
    if (*gen) return run_generate(gcfg);
    const auto report = cfeg::run_all_suites(vopts, [&](const cfeg::SuiteResult& s) {
        std::cout << cfeg::format_suite(s, !no_timing) << std::flush;
    });
    std::cout << (report.all_passed() ? "PASS: all suites clean\n" : "FAIL: mismatches found\n");
    return report.all_passed() ? 0 : 1;
}
