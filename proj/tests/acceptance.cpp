// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
//
// Usage: acceptance [path-to-cli-binary] [path-to-data-dir]
// The CLI path and data dir are needed only for the determinism criterion;
// without them that criterion is exercised through a temporary copy.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "confspace/config.hpp"
#include "confspace/theta.hpp"
#include "confspace/tower.hpp"
#include "confspace/verify.hpp"
#include "confspace/whitehead.hpp"

using namespace confspace;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int index, const std::string& name, bool pass, double seconds, double budget,
            const std::string& detail) {
    const bool in_budget = budget <= 0 || seconds <= budget;
    const bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::string timing = std::to_string(seconds).substr(0, 4) + "s";
    if (budget > 0) timing += "/" + std::to_string(static_cast<int>(budget)) + "s";
    std::printf("[%s] %d/8 %-18s %-10s %s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                timing.c_str(), detail.c_str());
}

ManifoldSpec r1_p3(int L) {
    ManifoldSpec m;
    m.group.hat_rank = 1;
    m.window = L;
    m.p3.push_back(Primitive3{"x1", false});
    return m;
}

ManifoldSpec r1_p4(int L) {
    ManifoldSpec m;
    m.group.hat_rank = 1;
    m.window = L;
    m.p4.push_back("y1");
    return m;
}

std::string run_command(const std::string& cmd, int* exit_code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    *exit_code = pclose(pipe);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string data = argc > 2 ? argv[2] : "";

    // 1. Relation suite: all decoration pairs in the L=2, r=1 window.
    {
        Timer t;
        const SuiteReport rep = run_suite("relations", r1_p3(2));
        report(1, "relations", rep.pass && rep.checks == 3 * 17 * 17, t.seconds(), 10.0,
               rep.pass ? "17x17 pairs expand to zero and both displayed forms agree"
                        : rep.detail);
    }

    // 2. Coface containment: every level-2 Whitehead-pair basis element maps
    //    into span(N) under each of the four cofaces, on both configurations.
    {
        Timer t;
        const SuiteReport a = run_suite("n-membership", ManifoldSpec::s1xd3(2));
        const SuiteReport b = run_suite("n-membership", r1_p3(1));
        report(2, "coface-in-N", a.pass && b.pass, t.seconds(), 60.0,
               a.pass && b.pass ? std::to_string(a.checks + b.checks) +
                                      " membership checks exact, zero failures"
                                : (a.pass ? b.detail : a.detail));
    }

    // 3. Dual basis: the Theta evaluation matrix on Whitehead-pair symbols of
    //    the S1xD3 preset at L=2 is a signed permutation, entrywise.
    {
        Timer t;
        const SuiteReport rep = run_suite("dual-basis", ManifoldSpec::s1xd3(2));
        report(3, "dual-basis", rep.pass, t.seconds(), 10.0,
               rep.pass ? rep.detail : rep.detail);
    }

    // 4. Kernel-diagonal: with p4 = {y1}, L=1 the kernel of d1(3,1) has
    //    dimension exactly 5 and equals the diagonal embedding.
    {
        Timer t;
        Tower tower(r1_p4(1));
        const auto info = tower.e2_31_kernel();
        const bool pass = info.basis.size() == 5 && info.is_diagonal;
        report(4, "kernel-diagonal", pass, t.seconds(), 0,
               "kernel dim " + std::to_string(info.basis.size()) + ", diagonal=" +
                   (info.is_diagonal ? "yes" : "no"));
    }

    // 5. Equivariance: 20 random window words commute with the cosimplicial
    //    maps and descend to the e3 chart, on both configurations.
    {
        Timer t;
        const SuiteReport a = run_suite("equivariance", ManifoldSpec::s1xd3(2));
        const SuiteReport b = run_suite("equivariance", r1_p3(1));
        report(5, "equivariance", a.pass && b.pass, t.seconds(), 0,
               a.pass && b.pass
                   ? std::to_string(a.checks + b.checks) + " exact commutation/descent checks"
                   : (a.pass ? b.detail : a.detail));
    }

    // 6. Rank growth: frozen chart dimensions at L = 1, 2, 3, strictly
    //    increasing (golden numbers from the elimination pipeline).
    {
        Timer t;
        const std::vector<int> expected = {3, 11, 25};
        std::vector<int> got;
        for (int L : {1, 2, 3})
            got.push_back(static_cast<int>(Tower(ManifoldSpec::s1xd3(L)).e3_chart().size()));
        const bool frozen = got == expected;
        const bool monotone = got[0] < got[1] && got[1] < got[2];
        report(6, "rank-growth", frozen && monotone, t.seconds(), 300.0,
               "chart dims L=1,2,3: " + std::to_string(got[0]) + ", " + std::to_string(got[1]) +
                   ", " + std::to_string(got[2]) + " (expected 3, 11, 25)");
    }

    // 7. N_0 functoriality: the four level-2 cofaces map every N_0^{(2)}
    //    window symbol into span(N_0^{(3)}).
    {
        Timer t;
        const ManifoldSpec m = r1_p3(2);
        const auto n03 = build_N0(m, 3);
        const std::set<BasisSymbol> set3(n03.begin(), n03.end());
        bool pass = true;
        long checks = 0;
        std::string detail;
        for (const BasisSymbol& b : build_N0(m, 2)) {
            for (int i = 0; i <= 3; ++i) {
                for (const auto& [s, c] : coface_tw(2, i, sym_single(b), m))
                    if (!set3.count(s)) {
                        pass = false;
                        detail = "coface " + std::to_string(i) + " of " + symbol_str(b, m);
                    }
                ++checks;
            }
        }
        report(7, "N0-functoriality", pass, t.seconds(), 0,
               pass ? std::to_string(checks) + " coface images inside span(N_0^{(3)})" : detail);
    }

    // 8. Determinism: byte-identical certificates across 5 runs and thread
    //    counts {1, 4}.
    {
        Timer t;
        bool pass = true;
        std::string detail;
        if (cli.empty() || data.empty()) {
            pass = false;
            detail = "cli path and data dir not supplied";
        } else {
            std::set<std::string> outputs;
            int runs = 0;
            for (int threads : {1, 4}) {
                for (int rep = 0; rep < 5; ++rep) {
                    int code = 0;
                    const std::string cmd = "CONFSPACE_THREADS=" + std::to_string(threads) + " \"" +
                                            cli + "\" --config \"" + data +
                                            "/config_s1xd3_L1.json\" rank --classes \"" + data +
                                            "/classes_sample.json\" --mode quotient 2>/dev/null";
                    outputs.insert(run_command(cmd, &code));
                    if (code != 0) pass = false;
                    ++runs;
                }
            }
            pass = pass && outputs.size() == 1 && !outputs.begin()->empty();
            detail = pass ? "10 runs over threads {1,4}, one distinct certificate"
                          : "certificates differ across runs or a run failed";
        }
        report(8, "determinism", pass, t.seconds(), 0, detail);
    }

    return failures == 0 ? 0 : 1;
}
