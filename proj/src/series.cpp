#include "perm5/series.hpp"

#include <stdexcept>

namespace perm5 {

QSeries qs_from_int(const std::vector<mpz_class>& coeffs) {
    QSeries out(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) out[i] = mpq_class(coeffs[i]);
    return out;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    QSeries out(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
    QSeries out(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

QSeries qs_mul(const QSeries& a, const QSeries& b, int order) {
    QSeries out(order + 1, mpq_class(0));
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(order); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(order); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

QSeries qs_div(const QSeries& num, const QSeries& den, int order) {
    if (den.empty() || den[0] == 0)
        throw std::invalid_argument("qs_div: denominator has no constant term");
    QSeries out(order + 1, mpq_class(0));
    for (int d = 0; d <= order; ++d) {
        mpq_class acc = d < static_cast<int>(num.size()) ? num[d] : mpq_class(0);
        for (int j = 1; j <= d && j < static_cast<int>(den.size()); ++j)
            acc -= den[j] * out[d - j];
        out[d] = acc / den[0];
    }
    return out;
}

QSeries qs_sqrt_one_minus_8t(int order) {
    // binomial(1/2, k) * (-8)^k via the ratio recurrence
    QSeries out(order + 1, mpq_class(0));
    mpq_class c = 1;
    out[0] = c;
    for (int k = 1; k <= order; ++k) {
        // binom(1/2,k) = binom(1/2,k-1) * (1/2 - (k-1)) / k
        mpq_class ratio(3 - 2 * k, 2 * k);
        ratio.canonicalize();
        c *= ratio;
        c *= -8;
        out[k] = c;
    }
    return out;
}

}  // namespace perm5
