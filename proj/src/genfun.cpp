#include "perm5/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "perm5/bijections.hpp"
#include "perm5/series.hpp"

namespace perm5 {

namespace {

constexpr int U = 0, V = 1;           // f_poly variables
constexpr int T2 = 0, Q2 = 1;         // satu_series variables
constexpr int X = 0, T = 1, P = 2, Q = 3, Z = 4;  // distribution-series variables

void require_avoiding(const InversionSequence& e, const char* op) {
    if (seq_contains(e, {2, 0, 1}))
        throw std::invalid_argument(std::string(op) + ": input contains forbidden pattern 201");
    if (seq_contains(e, {2, 1, 0}))
        throw std::invalid_argument(std::string(op) + ": input contains forbidden pattern 210");
}

}  // namespace

mpz_class LevelProfile::total() const {
    mpz_class out = 0;
    for (const auto& [label, c] : counts) out += c;
    return out;
}

Label parameters(const InversionSequence& e) {
    if (e.empty()) throw std::invalid_argument("parameters: empty sequence");
    require_avoiding(e, "parameters");
    const int last = e[e.size() - 1];
    Label l;
    for (int k : valid_extensions_201_210(e.entries())) {
        if (k > last)
            ++l.p;
        else
            ++l.q;
    }
    return l;
}

std::map<Label, int> successors(const Label& l) {
    if (l.p < 1 || l.q < 1) throw std::invalid_argument("invalid label");
    std::map<Label, int> out;
    for (int i = 1; i <= l.p; ++i) ++out[Label{l.p + 1 - i, l.q + i}];
    ++out[Label{l.p + 1, l.q}];
    if (l.q > 1) out[Label{l.p + 2, 1}] += l.q - 1;
    return out;
}

LevelProfile level_profile(int n) {
    if (n < 1) throw std::invalid_argument("level_profile requires n >= 1");
    LevelProfile prof;
    prof.level = 1;
    prof.counts[Label{1, 1}] = 1;
    for (int level = 2; level <= n; ++level) {
        std::map<Label, mpz_class> next;
        for (const auto& [label, c] : prof.counts)
            for (const auto& [child, mult] : successors(label)) next[child] += c * mult;
        prof.counts = std::move(next);
        prof.level = level;
    }
    return prof;
}

mpz_class count_by_succession(int n) {
    if (n < 1) throw std::invalid_argument("count_by_succession requires n >= 1");
    // Marginals over the level profile: g[p] = sum_q c(p,q) and
    // h[p] = sum_q q*c(p,q). The succession rule maps to
    //   g'(p') = G(p') + g(p'-1) + (h(p'-2) - g(p'-2))
    //   h'(p') = H(p') + PG(p') + (1-p')G(p') + h(p'-1) + (h(p'-2) - g(p'-2))
    // with G, H, PG the suffix sums of g, h, p*g; the three summands come
    // from the diagonal children (p+1-i, q+i), the child (p+1, q) and the
    // q-1 copies of (p+2, 1).
    std::vector<mpz_class> g(n + 3), h(n + 3);
    g[1] = 1;
    h[1] = 1;
    for (int level = 1; level < n; ++level) {
        const int pmax = level + 2;  // labels at level+1 satisfy p <= level+2
        std::vector<mpz_class> G(pmax + 2), H(pmax + 2), PG(pmax + 2);
        for (int p = pmax; p >= 1; --p) {
            G[p] = G[p + 1] + g[p];
            H[p] = H[p + 1] + h[p];
            PG[p] = PG[p + 1] + p * g[p];
        }
        std::vector<mpz_class> g2(n + 3), h2(n + 3);
        for (int p = 1; p <= pmax; ++p) {
            mpz_class from_z = p >= 3 ? h[p - 2] - g[p - 2] : mpz_class(0);
            g2[p] = G[p] + from_z;
            h2[p] = H[p] + PG[p] + (1 - p) * G[p] + from_z;
            if (p >= 2) {
                g2[p] += g[p - 1];
                h2[p] += h[p - 1];
            }
        }
        g = std::move(g2);
        h = std::move(h2);
    }
    mpz_class total = 0;
    for (const mpz_class& c : g) total += c;
    return total;
}

Poly2 f_poly(int n) {
    if (n < 1) throw std::invalid_argument("f_poly requires n >= 1");
    Poly2 f = Poly2::monomial({1, 1}, 1);  // f_1 = uv
    for (int m = 2; m <= n; ++m) {
        // u (u f - v f(v,v)) / (u - v)
        Poly2 fvv = f.fold_exponent(U, V, false);
        Poly2 num = f.shift({2, 0}) - fvv.shift({1, 1});
        Poly2 term1 = divide_exact_diff(num, U, V);
        // u^2 v (d/dv f |_{v=1} - f(u,1))
        Poly2 term2 = (f.derivative(V).substitute_one(V) - f.substitute_one(V)).shift({2, 1});
        f = term1 + term2;
    }
    return f;
}

std::vector<mpz_class> closed_form_series(int N) {
    if (N < 1) throw std::invalid_argument("closed_form_series requires N >= 1");
    QSeries root = qs_sqrt_one_minus_8t(N);
    // numerator 3t - 4t^2 - t*sqrt(1-8t)
    QSeries num(N + 1, mpq_class(0));
    if (N >= 1) num[1] = 3;
    if (N >= 2) num[2] = -4;
    for (int d = 0; d + 1 <= N; ++d) num[d + 1] -= root[d];
    QSeries den = {mpq_class(2), mpq_class(-4), mpq_class(4)};
    QSeries a = qs_div(num, den, N);
    if (a[0] != 0) throw std::logic_error("closed_form_series: nonzero constant term");
    std::vector<mpz_class> out;
    out.reserve(N);
    for (int d = 1; d <= N; ++d) {
        if (a[d].get_den() != 1)
            throw std::logic_error("closed_form_series: non-integer coefficient at degree " +
                                   std::to_string(d));
        if (a[d] < 0)
            throw std::logic_error("closed_form_series: negative coefficient at degree " +
                                   std::to_string(d));
        out.push_back(a[d].get_num());
    }
    return out;
}

bool verify_algebraic_equation(int N) {
    if (N < 2) throw std::invalid_argument("verify_algebraic_equation requires N >= 2");
    QSeries a(N + 1, mpq_class(0));
    {
        std::vector<mpz_class> coeffs = closed_form_series(N);
        for (int d = 1; d <= N; ++d) a[d] = mpq_class(coeffs[d - 1]);
    }
    QSeries a2 = qs_mul(a, a, N);
    // (2t^2 - 2t + 1) A^2 + (4t^2 - 3t) A + 2t^2
    QSeries c1 = {mpq_class(1), mpq_class(-2), mpq_class(2)};
    QSeries c2 = {mpq_class(0), mpq_class(-3), mpq_class(4)};
    QSeries lhs = qs_add(qs_mul(c1, a2, N), qs_mul(c2, a, N));
    if (N >= 2) lhs[2] += 2;
    return std::all_of(lhs.begin(), lhs.end(), [](const mpq_class& c) { return c == 0; });
}

Poly2 satu_series(int n_max) {
    if (n_max < 1) throw std::invalid_argument("satu_series requires n_max >= 1");
    Poly2 out;
    for (int n = 1; n <= n_max; ++n)
        enumerate_inv_201_210(n, [&](const InversionSequence& e) {
            out.add_term({n, inv_statistics(e).satu}, 1);
        });
    return out;
}

bool verify_satu_equation(int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_satu_equation requires n_max >= 2");
    const int N = n_max;
    Poly2 Atq = satu_series(N);  // variables (t, q)
    Poly2 At;                    // closed-form A(t)
    {
        std::vector<mpz_class> coeffs = closed_form_series(N);
        for (int d = 1; d <= N; ++d) At.add_term({d, 0}, coeffs[d - 1]);
    }
    const Poly2 t = Poly2::monomial({1, 0}, 1);
    const Poly2 q = Poly2::monomial({0, 1}, 1);
    const Poly2 one = Poly2::constant(1);
    Poly2 D = At - t;  // A(t) - t
    auto mul = [&](const Poly2& x, const Poly2& y) { return x.mul_trunc(y, T2, N); };
    auto trunc_eq = [&](const Poly2& a, const Poly2& b) {
        return a.truncate(T2, N) == b.truncate(T2, N);
    };
    Poly2 one_minus_q = one - q;

    // The rightmost-saturated-entry decomposition, multiplied through by
    // 2t(1-q):
    //   2t(1-q) A(t,q) = 2t(1-q)[tq + tq A(t,q)]
    //                    + (1-q) q (A(t,q) - tq - tq A(t,q)) (A(t)-t)
    //                    + 2t^2 q (A(t) - A(t,q))
    {
        Poly2 lhs = mul(Poly2::monomial({1, 0}, 2) * one_minus_q, Atq);
        Poly2 cases = mul(Poly2::monomial({1, 0}, 2) * one_minus_q,
                          Poly2::monomial({1, 1}, 1) + mul(Poly2::monomial({1, 1}, 1), Atq));
        cases += mul(mul(one_minus_q * q, Atq - Poly2::monomial({1, 1}, 1) -
                                              mul(Poly2::monomial({1, 1}, 1), Atq)),
                     D);
        cases += mul(Poly2::monomial({2, 1}, 2), At - Atq);
        if (!trunc_eq(lhs, cases)) return false;
    }

    // Kernel form with the q^2(A-t)/2 term carried to the right as
    // -q^2(A-t)/2 (collecting A(t,q) in the decomposition above forces the
    // minus sign; the flipped sign does not satisfy the series):
    //   [2t(1-q) + 2t^2 q^2 - q(1-tq)(1-q)(A-t)] A(t,q)
    //     = 2t^2 q(1-q) - t q^2 (1-q)(A-t) + 2t^2 q A
    Poly2 lhs_factor = Poly2::monomial({1, 0}, 2) * one_minus_q        // 2t(1-q)
                       + Poly2::monomial({2, 2}, 2)                    // 2t^2 q^2
                       - mul(mul(q * (one - t * q), one_minus_q), D);  // q(1-tq)(1-q)(A-t)
    Poly2 lhs = mul(lhs_factor, Atq);
    Poly2 rhs = Poly2::monomial({2, 1}, 2) * one_minus_q               // 2t^2 q(1-q)
                - mul(mul(t * q * q, one_minus_q), D)                  // t q^2 (1-q)(A-t)
                + mul(Poly2::monomial({2, 1}, 2), At);                 // 2t^2 q A
    return trunc_eq(lhs, rhs);
}

namespace {

Poly5 distribution_series(const PatternSet& ps, const std::vector<std::string>& stats, int n_max,
                          bool restrict_to_B) {
    if (n_max < 1) throw std::invalid_argument("distribution series requires n_max >= 1");
    if (stats.size() > 4) throw std::invalid_argument("at most four statistics");
    Poly5 out;
    for (int n = restrict_to_B ? 2 : 1; n <= n_max; ++n) {
        enumerate_class(n, ps, [&](const Word& w) {
            StatRecord r = statistics(w);
            if (restrict_to_B) {
                bool is_identity = static_cast<int>(r.iar.size()) == n;
                if (is_identity || r.iar.size() != r.lrmax.size()) return;
            }
            Poly5::Exps e{};
            for (size_t i = 0; i < stats.size(); ++i) e[i] = stat_value(r, stats[i]);
            e[Z] = n;
            out.add_term(e, 1);
        });
    }
    return out;
}

}  // namespace

Poly5 class_distribution_series(const PatternSet& ps, const std::vector<std::string>& stats,
                                int n_max) {
    return distribution_series(ps, stats, n_max, false);
}

Poly5 class_distribution_series_B(const PatternSet& ps, const std::vector<std::string>& stats,
                                  int n_max) {
    return distribution_series(ps, stats, n_max, true);
}

bool verify_section21(int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_section21 requires n_max >= 2");
    const int N = n_max;
    const PatternSet& ps = phi_image_patterns();  // {3142, 3241}
    const std::vector<std::string> stats = {"iar", "ides", "lrmax", "lrmin"};
    Poly5 S = class_distribution_series(ps, stats, N);
    Poly5 B = class_distribution_series_B(ps, stats, N);
    Poly5 I;  // xpqz/(1-xpz) truncated: the identity permutations
    for (int n = 1; n <= N; ++n) {
        Poly5::Exps e{};
        e[X] = n;
        e[P] = n;
        e[Q] = 1;
        e[Z] = n;
        I.add_term(e, 1);
    }
    auto mul = [&](const Poly5& a, const Poly5& b) { return a.mul_trunc(b, Z, N); };
    auto mono = [](int x, int t, int p, int q, int z, int c = 1) {
        return Poly5::monomial({x, t, p, q, z}, c);
    };
    const Poly5 one = Poly5::constant(1);

    Poly5 S_1tp1 = S.substitute_one(X).substitute_one(Q);                       // S(1,t,p,1)
    Poly5 S_1t1q = S.substitute_one(X).substitute_one(P);                       // S(1,t,1,q)
    Poly5 S_px = S.substitute_one(P).fold_exponent(X, P, true);                 // S(px,t,1,q)

    // S = I + B(S(1,t,p,1) + 1)
    if (!(S == I + mul(B, S_1tp1 + one))) return false;

    // the B identity multiplied through by (1-px)(1-pxz):
    //   B(1-px)(1-pxz) = [tpxz(1-pxz) + tpxz(q-1)(1-px)(1-pxz)] S(1,t,1,q)
    //                    - t p^2 x^2 z (1-pxz) S(px,t,1,q)
    //                    + (1-t) pxz B (1-px)(1-pxz) - t q p^2 x^2 z^2 (1-px)
    const Poly5 px = mono(1, 0, 1, 0, 0);
    const Poly5 pxz = mono(1, 0, 1, 0, 1);
    const Poly5 tpxz = mono(1, 1, 1, 0, 1);
    const Poly5 one_m_px = one - px;
    const Poly5 one_m_pxz = one - pxz;
    const Poly5 q_m_1 = mono(0, 0, 0, 1, 0) - one;
    Poly5 bracket = mul(mul(tpxz, one_m_pxz), S_1t1q) +
                    mul(mul(mul(tpxz * q_m_1, one_m_px), one_m_pxz), S_1t1q) -
                    mul(mul(mono(2, 1, 2, 0, 1), one_m_pxz), S_px);
    // t q p^2 x^2 z^2: removes the append-to-the-identity overcount, so it
    // carries the identity parent's weight q^{lrmin} = q
    Poly5 tail = mono(2, 1, 2, 1, 2);
    {
        Poly5 lhs = mul(mul(B, one_m_px), one_m_pxz);
        Poly5 rhs = bracket + mul(mul(mul((one - mono(0, 1, 0, 0, 0)) * pxz, B), one_m_px), one_m_pxz) -
                    mul(tail, one_m_px);
        if (!(lhs.truncate(Z, N) == rhs.truncate(Z, N))) return false;
    }

    // The combined equation multiplied through by (1+S(1,t,p,1))(1-px)(1-pxz):
    //   (S-I)(1-(1-t)pxz)(1-px)(1-pxz) = [bracket - t p^2 x^2 z^2 (1-px)] (1+S(1,t,p,1))
    {
        Poly5 lhs = mul(mul(mul(S - I, one - (one - mono(0, 1, 0, 0, 0)) * pxz), one_m_px), one_m_pxz);
        Poly5 rhs = mul(bracket - mul(tail, one_m_px), one + S_1tp1);
        if (!(lhs.truncate(Z, N) == rhs.truncate(Z, N))) return false;
    }
    return true;
}

std::string series_to_bfile(const std::vector<mpz_class>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        out += std::to_string(i + 1);
        out += ' ';
        out += coeffs[i].get_str();
        out += '\n';
    }
    return out;
}

std::string series_to_json(const std::string& var, const std::vector<mpz_class>& coeffs) {
    std::string out = "{\"var\":\"" + var + "\",\"coeffs\":[";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += coeffs[i].get_str();
    }
    out += "]}";
    return out;
}

}  // namespace perm5
