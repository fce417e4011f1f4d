#pragma once

#include <array>
#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace perm5 {

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients. No zero coefficients are stored; all arithmetic is exact.
template <int N>
class Poly {
public:
    using Exps = std::array<int, N>;
    using Terms = std::map<Exps, mpz_class>;

    Poly() = default;

    static Poly monomial(const Exps& e, mpz_class c) {
        Poly p;
        p.add_term(e, c);
        return p;
    }

    static Poly constant(mpz_class c) { return monomial(Exps{}, std::move(c)); }

    void add_term(const Exps& e, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator*(const Poly& o) const {
        Poly out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exps e{};
                for (int i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    // Product truncated to degree <= maxdeg in variable `var`.
    Poly mul_trunc(const Poly& o, int var, int maxdeg) const {
        Poly out;
        for (const auto& [e1, c1] : terms_) {
            if (e1[var] > maxdeg) continue;
            for (const auto& [e2, c2] : o.terms_) {
                if (e1[var] + e2[var] > maxdeg) continue;
                Exps e{};
                for (int i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
                out.add_term(e, c1 * c2);
            }
        }
        return out;
    }

    Poly scale(const mpz_class& c) const {
        Poly out;
        if (c == 0) return out;
        for (const auto& [e, c0] : terms_) out.terms_.emplace(e, c0 * c);
        return out;
    }

    // Multiply by a single monomial.
    Poly shift(const Exps& d, const mpz_class& c = 1) const {
        Poly out;
        if (c == 0) return out;
        for (const auto& [e, c0] : terms_) {
            Exps e2{};
            for (int i = 0; i < N; ++i) e2[i] = e[i] + d[i];
            out.terms_.emplace(e2, c0 * c);
        }
        return out;
    }

    Poly derivative(int var) const {
        Poly out;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exps e2 = e;
            --e2[var];
            out.add_term(e2, c * e[var]);
        }
        return out;
    }

    // Substitute 1 for the given variable.
    Poly substitute_one(int var) const {
        Poly out;
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            e2[var] = 0;
            out.add_term(e2, c);
        }
        return out;
    }

    // Move the exponent of `src` onto `dst` (i.e. substitute src -> dst);
    // with src's exponent also kept this realizes x -> x*dst.
    Poly fold_exponent(int src, int dst, bool keep_src) const {
        Poly out;
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            e2[dst] += e[src];
            if (!keep_src) e2[src] = 0;
            out.add_term(e2, c);
        }
        return out;
    }

    Poly truncate(int var, int maxdeg) const {
        Poly out;
        for (const auto& [e, c] : terms_)
            if (e[var] <= maxdeg) out.terms_.emplace(e, c);
        return out;
    }

    // Polynomial coefficient of var^deg, with var's exponent zeroed.
    Poly coeff_of(int var, int deg) const {
        Poly out;
        for (const auto& [e, c] : terms_) {
            if (e[var] != deg) continue;
            Exps e2 = e;
            e2[var] = 0;
            out.terms_.emplace(e2, c);
        }
        return out;
    }

    int degree(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    mpz_class eval_ones() const {
        mpz_class out = 0;
        for (const auto& [e, c] : terms_) out += c;
        return out;
    }

    bool operator==(const Poly&) const = default;

    std::string str(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (int i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += names[i];
                if (e[i] > 1) mono += '^' + std::to_string(e[i]);
            }
            std::string cs = c.get_str();
            if (!out.empty()) {
                if (cs[0] == '-') {
                    out += " - ";
                    cs = cs.substr(1);
                } else {
                    out += " + ";
                }
            }
            if (mono.empty())
                out += cs;
            else if (cs == "1")
                out += mono;
            else if (cs == "-1")
                out += "-" + mono;
            else
                out += cs + "*" + mono;
        }
        return out;
    }

private:
    Terms terms_;
};

// Exact division of P by (x_a - x_b): synthetic division in x_a with the
// running remainder multiplied back by x_b. Throws std::logic_error when the
// remainder is nonzero.
template <int N>
Poly<N> divide_exact_diff(const Poly<N>& P, int a, int b) {
    Poly<N> quotient;
    // group terms by exponent of x_a
    std::map<int, Poly<N>> by_deg;
    for (const auto& [e, c] : P.terms()) {
        auto e2 = e;
        e2[a] = 0;
        by_deg[e[a]].add_term(e2, c);
    }
    int D = P.degree(a);
    Poly<N> carry;  // q_d as a polynomial without x_a
    for (int d = D; d >= 1; --d) {
        Poly<N> cd = by_deg.count(d) ? by_deg[d] : Poly<N>();
        Poly<N> qd = cd + carry;
        typename Poly<N>::Exps xa{};
        xa[a] = d - 1;
        quotient += qd.shift(xa);
        typename Poly<N>::Exps xb{};
        xb[b] = 1;
        carry = qd.shift(xb);
    }
    Poly<N> rem = (by_deg.count(0) ? by_deg[0] : Poly<N>()) + carry;
    if (!rem.is_zero()) throw std::logic_error("divide_exact_diff: nonzero remainder");
    return quotient;
}

using Poly2 = Poly<2>;
using Poly5 = Poly<5>;

}  // namespace perm5
