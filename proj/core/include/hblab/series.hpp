#pragma once

#include <vector>

#include "hblab/defs.hpp"
#include "hblab/errors.hpp"

namespace hblab {

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N. Immutable in
// spirit: operations return new values. Binary operations truncate to the
// smaller order, so no uncomputed high-order zeros leak into results.
class TaylorSeries {
public:
    TaylorSeries() : coeffs_{Complex(0.0)} {}
    explicit TaylorSeries(std::vector<Complex> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex at(int k) const;  // 0 beyond the truncation order

    TaylorSeries truncated(int order) const;

private:
    std::vector<Complex> coeffs_;
};

// Default truncation order for series-backed constructions.
inline constexpr int kDefaultSeriesOrder = 64;

// Default circle radius for coefficient extraction in constructions. Chosen
// away from 0.5 so the r^-n amplification of rounding noise stays harmless
// up to order ~128.
inline constexpr double kDefaultExtractionRadius = 0.8;

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(Complex w, const TaylorSeries& a);

// Coefficient k of the result is sum_{j<=k} a_j b_{k-j}, at the smaller order.
TaylorSeries cauchy_product(const TaylorSeries& a, const TaylorSeries& b);

// Term-wise derivative; order drops by one. An order-0 input degenerates to
// the zero series of order 0.
TaylorSeries differentiate(const TaylorSeries& a);

// Antiderivative with prescribed constant term; order rises by one.
TaylorSeries integrate(const TaylorSeries& a, Complex c0);

// exp of a series, same order, via b' = a'.b.
TaylorSeries exp_series(const TaylorSeries& a);

// Principal-branch log of a series, via b' = a'/a. Requires a_0 != 0.
TaylorSeries log_series(const TaylorSeries& a);

// Horner evaluation of the truncated polynomial.
Complex evaluate(const TaylorSeries& a, Complex z);

// Discrete Cauchy-integral coefficients: trapezoidal quadrature of
// f(r e^{i t}) e^{-i n t} over m equispaced angles, spectrally accurate for
// analytic f. Requires 0 < r < 1 and m >= 4 n_max.
TaylorSeries coefficients_via_cauchy(const Evaluator& f, int n_max, double r, int m);

// Convenience: m = max(256, 8 (n_max + 1)).
TaylorSeries coefficients_via_cauchy(const Evaluator& f, int n_max, double r);

}  // namespace hblab
