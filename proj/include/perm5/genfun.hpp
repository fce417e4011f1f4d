#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "perm5/invseq.hpp"
#include "perm5/patterns.hpp"
#include "perm5/poly.hpp"

namespace perm5 {

// Succession-rule label of a (201,210)-avoiding inversion sequence: the
// counts of legal one-entry extensions above / at-or-below the last entry.
struct Label {
    int p = 0;
    int q = 0;
    auto operator<=>(const Label&) const = default;
};

// Exact multiset of labels at one generating-tree level; level n holds one
// count per inversion sequence in I_n(201,210), the root (1,1) at level 1.
struct LevelProfile {
    int level = 0;
    std::map<Label, mpz_class> counts;

    mpz_class total() const;
};

// Direct extension counting. Throws when e contains 201 or 210.
Label parameters(const InversionSequence& e);

// The p+q child labels of (p,q): (p,q+1), (p-1,q+2), ..., (1,q+p), (p+1,q),
// and q-1 copies of (p+2,1). Returned as label -> multiplicity.
std::map<Label, int> successors(const Label& l);

LevelProfile level_profile(int n);

// |I_n(201,210)| by iterating the succession rule with aggregated label
// counts. Only the per-p marginals sum(q) c(p,q) and sum(q) q*c(p,q) are
// carried, which the rule closes over; this keeps n = 1000 in milliseconds.
mpz_class count_by_succession(int n);

// f_n(u,v) from f_1 = uv and the bivariate recursion; the division by
// (1 - v/u) is performed as exact division by (u - v) with the numerator
// premultiplied by u, and a nonzero remainder is a hard failure.
// f_n(1,1) = |I_n(201,210)|.
Poly2 f_poly(int n);  // variables (u, v)

// Coefficients a_1..a_N of A(t) = (3t - 4t^2 - t sqrt(1-8t)) / (4t^2 - 4t + 2),
// computed with exact rational arithmetic; asserts every coefficient is a
// non-negative integer.
std::vector<mpz_class> closed_form_series(int N);

// Checks (2t^2-2t+1)A^2 + (4t^2-3t)A + 2t^2 = 0 identically through t^N.
bool verify_algebraic_equation(int N);

// A(t,q) = sum_n t^n sum_{e in I_n(201,210)} q^satu(e), truncated at t^n_max.
Poly2 satu_series(int n_max);  // variables (t, q)

// Checks the saturated-entry functional equation with all denominators
// cleared, per t-degree up to n_max; A(t) comes from closed_form_series.
bool verify_satu_equation(int n_max);

// Truncated multivariate distribution series over a permutation class:
// sum_n z^n sum_pi prod_i var_i^{stat_i(pi)}. Variables are (x,t,p,q,z) in
// this order; stats lists up to four statistic names (unused slots get
// exponent 0).
Poly5 class_distribution_series(const PatternSet& ps, const std::vector<std::string>& stats,
                                int n_max);

// Same series restricted to pi != id_n with iar(pi) = lrmax(pi) (and n >= 2).
Poly5 class_distribution_series_B(const PatternSet& ps, const std::vector<std::string>& stats,
                                  int n_max);

// Checks the two block-decomposition generating-function identities for
// S_n(3142,3241) and the combined algebraic equation, coefficient-wise in z
// up to n_max, with all denominators cleared.
bool verify_section21(int n_max);

// OEIS b-file lines "n a(n)", 1-indexed, no header. coeffs[i] = a(i+1).
std::string series_to_bfile(const std::vector<mpz_class>& coeffs);

// {"var":"t","coeffs":[...]} with coeffs listed from degree 1.
std::string series_to_json(const std::string& var, const std::vector<mpz_class>& coeffs);

}  // namespace perm5
