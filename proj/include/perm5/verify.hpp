#pragma once

#include <string>
#include <vector>

namespace perm5 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or a short summary
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string summary() const;  // one line per check
};

// Round trips: beta(alpha(w)) = w on the source class, alpha(beta(v)) = v on
// the target class, psi(phi(w)) = w on S_n(3124,3214), and phi maps
// S_n(3124,3214) onto exactly S_n(3142,3241); all for n <= n_max.
SuiteReport verify_roundtrip(int n_max, int threads);

// alpha preserves (Ides,Lrmax,Lrmin,Rlmax,Iar); phi preserves
// (Br,Ides,Lrmax,Lrmin,Iar); as set equalities for n <= n_max.
SuiteReport verify_stat_preservation(int n_max, int threads);

// classify assigns exactly one tag to every member of both length-5 classes,
// and the adjacency/relative-order observations hold under alpha, as does the
// descent-adjacency property of phi; n <= n_max.
SuiteReport verify_structural(int n_max, int threads);

// The succession rule: direct child labels match the rule for every
// e in I_n(201,210) with n <= n_children; level totals and
// count_by_succession match brute force (n <= n_brute) and f_n(1,1)
// (n <= n_fpoly).
SuiteReport verify_succession(int n_children, int n_brute, int n_fpoly);

// closed_form_series matches count_by_succession through n_max and the
// algebraic equation has identically zero residual; the saturated-entry
// functional equation holds through n_satu.
SuiteReport verify_algebraic(int n_max, int n_satu);

// All thirteen conjectured classes have equal counts for n <= n_max.
SuiteReport verify_conjecture13(int n_max, int threads);

// The block-decomposition generating-function identities of the
// {3142,3241} class, through z^n_max.
SuiteReport verify_section21_suite(int n_max);

// The coding identities: the triple transfer of ms_code on all of S_n, its
// restriction to a bijection onto I_n(201,210), the distribution identities
// linking the classes, and bijectivity of both codes; n <= n_max.
SuiteReport verify_codings(int n_max, int threads);

// Dispatch by CLI suite name: roundtrip, statistic-preservation,
// succession-vs-bruteforce, algebraic-equation, conjecture-13, section-2.1,
// structural, codings.
SuiteReport run_suite(const std::string& name, int n_max, int threads);

std::vector<std::string> suite_names();

}  // namespace perm5
