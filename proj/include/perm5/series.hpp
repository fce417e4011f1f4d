#pragma once

#include <gmpxx.h>

#include <vector>

namespace perm5 {

// Dense univariate power series over Q, truncated at a fixed order;
// coeffs[d] is the coefficient of t^d.
using QSeries = std::vector<mpq_class>;

QSeries qs_from_int(const std::vector<mpz_class>& coeffs);

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b, int order);

// Division with den[0] != 0, truncated at `order`.
QSeries qs_div(const QSeries& num, const QSeries& den, int order);

// Binomial expansion of sqrt(1 - 8t) up to t^order.
QSeries qs_sqrt_one_minus_8t(int order);

}  // namespace perm5
