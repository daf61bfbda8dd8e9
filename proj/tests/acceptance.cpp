// Acceptance suite: one pass/fail line per criterion. Criteria can be
// selected by number on the command line; the default runs all nine plus
// the auxiliary invariant suites.
//
//   1  recognizer == oracle on every connected labeled graph, n <= 7
//   2  structural criterion == brute force (exhaustive n <= 7 + 1e5 random n = 9)
//   3  generator grid soundness (all parameters <= 4)
//   4  accepted odd graphs expose exactly one vertex
//   5  accepted odd graphs with alpha >= 3 have connectivity <= 3
//   6  randomly-matchable oracle == K_{2p} / K_{p,p}, n <= 8
//   7  generate -> classify -> generate round trip over the grid
//   8  classify a G22 instance with n = 1001 in under 5 seconds
//   9  graph6 round trip (all n <= 6 plus 1e4 random n <= 62)

#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "cfeg/verify.hpp"

namespace {

struct Line {
    std::string label;
    cfeg::SuiteResult result;
};

void print_line(const Line& line) {
    const auto& r = line.result;
    std::printf("%s %s %s checked=%llu failures=%llu%s%s\n", line.label.c_str(),
                r.passed() ? "[PASS]" : "[FAIL]", r.name.c_str(),
                static_cast<unsigned long long>(r.checked),
                static_cast<unsigned long long>(r.failures),
                r.detail.empty() ? "" : (" (" + r.detail + ")").c_str(),
                r.seconds > 0 ? (" [" + std::to_string(r.seconds) + "s]").c_str() : "");
    for (const auto& o : r.offenders) std::printf("    offender: %s\n", o.c_str());
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    bool extras = true;
    for (int i = 1; i < argc; ++i) {
        wanted.insert(std::atoi(argv[i]));
        extras = false;
    }
    auto selected = [&](int criterion) { return wanted.empty() || wanted.count(criterion); };

    cfeg::VerifyOptions opts;  // defaults are the acceptance bounds
    std::vector<Line> lines;
    bool failed = false;

    auto push = [&](std::string label, const cfeg::SuiteResult& r) {
        failed = failed || !r.passed();
        lines.push_back({std::move(label), r});
        print_line(lines.back());
    };

    if (selected(1) || selected(4) || selected(5)) {
        auto theorem = cfeg::run_theorem_scan(opts);
        if (selected(1)) push("criterion 1", theorem.agreement);
        if (selected(4)) push("criterion 4", theorem.exposed);
        if (selected(5)) push("criterion 5", theorem.connectivity);
        if (extras) {
            push("invariant  ", theorem.matching_removal);
            push("invariant  ", theorem.certificates);
        }
    }
    if (selected(2)) push("criterion 2", cfeg::run_criterion_equivalence(opts));
    if (selected(3) || selected(7)) {
        auto grid = cfeg::run_family_grid(opts);
        if (selected(3)) push("criterion 3", grid.soundness);
        if (selected(7)) push("criterion 7", grid.round_trip);
        if (extras) {
            push("invariant  ", grid.membership);
            push("invariant  ", grid.closure);
        }
    }
    if (selected(6)) {
        auto rm = cfeg::run_randomly_matchable_scan(opts);
        push("criterion 6", rm.equivalence);
        if (extras) push("invariant  ", rm.sumner);
    }
    if (selected(8)) push("criterion 8", cfeg::run_performance(opts));
    if (selected(9)) push("criterion 9", cfeg::run_graph6_roundtrip(opts));

    std::stable_sort(lines.begin(), lines.end(),
                     [](const Line& a, const Line& b) { return a.label < b.label; });
    std::printf("---- summary ----\n");
    for (const auto& line : lines)
        std::printf("%s %s %s\n", line.label.c_str(), line.result.passed() ? "[PASS]" : "[FAIL]",
                    line.result.name.c_str());
    std::printf("%s\n", failed ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
    return failed ? 1 : 0;
}
