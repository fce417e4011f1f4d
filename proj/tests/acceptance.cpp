// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Bounds (lengths, truncation orders, time limits) are pinned here.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "perm5/bijections.hpp"
#include "perm5/classes.hpp"
#include "perm5/genfun.hpp"
#include "perm5/invseq.hpp"
#include "perm5/verify.hpp"

using namespace perm5;
using Clock = std::chrono::steady_clock;

namespace {

int g_threads = 1;
bool g_all_pass = true;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("[%s] criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), secs);
    std::fflush(stdout);
    g_all_pass = g_all_pass && pass;
}

// criterion 1: the four classes reproduce 1,2,6,24,116,632,3720 for n = 1..7,
// each brute-force path under 60 s.
void criterion1() {
    const std::vector<std::uint64_t> expected = {1, 2, 6, 24, 116, 632, 3720};
    auto start = Clock::now();
    bool pass = true;
    std::string what = "series 1,2,6,24,116,632,3720 for n=1..7 across all four classes";
    struct Path {
        const char* name;
        const char* patterns;  // nullptr = inversion sequences
    } paths[] = {
        {"I201210", nullptr},
        {"S(31245,32145,31254,32154)", "31245,32145,31254,32154"},
        {"S(31425,32415,31524,32514)", "31425,32415,31524,32514"},
        {"S(45312,45321,54312,54321)", "45312,45321,54312,54321"},
    };
    for (const Path& path : paths) {
        auto path_start = Clock::now();
        for (int n = 1; n <= 7; ++n) {
            std::uint64_t got = path.patterns == nullptr
                                    ? inv_class_size_201_210(n)
                                    : class_size(n, PatternSet::parse(path.patterns), g_threads);
            if (got != expected[n - 1]) {
                pass = false;
                what += std::string(" | MISMATCH ") + path.name + " n=" + std::to_string(n) +
                        " got " + std::to_string(got);
            }
        }
        if (seconds_since(path_start) >= 60.0) {
            pass = false;
            what += std::string(" | ") + path.name + " exceeded 60 s";
        }
    }
    report(1, pass, what, seconds_since(start));
}

// criterion 2: the 13 conjectured classes agree for n <= 8 within 15 minutes.
void criterion2() {
    auto start = Clock::now();
    SuiteReport rep = verify_conjecture13(8, g_threads);
    bool pass = rep.pass();
    double secs = seconds_since(start);
    if (secs >= 900.0) pass = false;
    std::string what = "thirteen-class count equality for n <= 8 within 15 min";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    report(2, pass, what, secs);
}

// criterion 3: round trips with zero failures for n <= 9.
void criterion3() {
    auto start = Clock::now();
    SuiteReport rep = verify_roundtrip(9, g_threads);
    std::string what = "beta.alpha, alpha.beta and psi.phi are identities for n <= 9";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    report(3, rep.pass(), what, seconds_since(start));
}

// criterion 4: statistic preservation as set equalities for n <= 9.
void criterion4() {
    auto start = Clock::now();
    SuiteReport rep = verify_stat_preservation(9, g_threads);
    std::string what = "alpha preserves (Ides,Lrmax,Lrmin,Rlmax,Iar), phi preserves "
                       "(Br,Ides,Lrmax,Lrmin,Iar), n <= 9";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    report(4, rep.pass(), what, seconds_since(start));
}

// criterion 5: the printed images of the worked examples, verbatim.
void criterion5() {
    auto start = Clock::now();
    Word w20 = Word::parse("2 6 4 7 10 14 9 15 17 20 19 16 18 11 12 13 8 3 5 1");
    Word v20 = Word::parse("2 6 4 3 1 5 7 10 14 9 8 11 12 13 15 17 20 19 16 18");
    Word w23 = Word::parse("23 1 3 10 18 2 22 21 19 16 14 20 15 11 17 12 9 6 13 7 8 4 5");
    Word v23 = Word::parse("23 1 3 10 18 2 9 6 16 14 15 11 22 21 19 20 17 12 13 7 8 4 5");
    bool pass = phi(w20) == v20 && alpha(w23) == v23 && beta(v23) == w23;
    report(5, pass, "worked 20- and 23-letter examples reproduce verbatim",
           seconds_since(start));
}

// criterion 6: coding identities for n <= 8.
void criterion6() {
    auto start = Clock::now();
    SuiteReport rep = verify_codings(8, g_threads);
    std::string what = "coding triple transfer, restriction bijection and distribution "
                       "identities for n <= 8";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    report(6, rep.pass(), what, seconds_since(start));
}

// criterion 7: the succession rule, counts, and the n = 1000 timing gate.
void criterion7() {
    auto start = Clock::now();
    SuiteReport rep = verify_succession(7, 10, 20);
    bool pass = rep.pass();
    std::string what = "succession rule children (n <= 7), counts vs brute force (n <= 10) "
                       "and f_n(1,1) (n <= 20), count(1000) < 10 s";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    auto big_start = Clock::now();
    mpz_class big = count_by_succession(1000);
    double big_secs = seconds_since(big_start);
    if (big_secs >= 10.0) {
        pass = false;
        what += " | count_by_succession(1000) took " + std::to_string(big_secs) + " s";
    }
    // sanity: the value has the expected magnitude (8^n growth ~ 0.903 n digits)
    size_t digits = big.get_str().size();
    if (digits < 850 || digits > 910) {
        pass = false;
        what += " | count_by_succession(1000) has implausible size " + std::to_string(digits);
    }
    report(7, pass, what, seconds_since(start));
}

// criterion 8: exact generating-function checks.
void criterion8() {
    auto start = Clock::now();
    SuiteReport rep = verify_algebraic(50, 7);
    bool pass = rep.pass();
    std::string what = "closed form vs succession (n <= 50), zero residual (N = 50), "
                       "satu equation (n <= 7), distribution identities (n <= 6)";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    if (!verify_section21(6)) {
        pass = false;
        what += " | FAILED distribution-series identities";
    }
    report(8, pass, what, seconds_since(start));
}

// criterion 9: structural lemmas and adjacency observations for n <= 9.
void criterion9() {
    auto start = Clock::now();
    SuiteReport rep = verify_structural(9, g_threads);
    std::string what = "unique classification tags and adjacency observations for n <= 9";
    for (const CheckResult& c : rep.checks)
        if (!c.pass) what += " | FAILED " + c.name + ": " + c.detail;
    report(9, rep.pass(), what, seconds_since(start));
}

}  // namespace

int main() {
    g_threads = [] {
        if (const char* env = std::getenv("PERM5_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    std::printf("acceptance suite, %d worker thread(s)\n", g_threads);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%s\n", g_all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return g_all_pass ? 0 : 1;
}
