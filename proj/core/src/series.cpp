#include "hblab/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hblab {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

std::string point_string(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
    for (const Complex& c : coeffs_) {
        if (!finite(c)) throw EvaluationError("non-finite series coefficient", c);
    }
}

Complex TaylorSeries::at(int k) const {
    if (k < 0 || k > order()) return Complex(0.0);
    return coeffs_[static_cast<std::size_t>(k)];
}

TaylorSeries TaylorSeries::truncated(int order) const {
    if (order < 0) order = 0;
    std::vector<Complex> c(coeffs_.begin(),
                           coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
    c.resize(static_cast<std::size_t>(order) + 1, Complex(0.0));
    return TaylorSeries(std::move(c));
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.at(k) + b.at(k);
    return TaylorSeries(std::move(c));
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.at(k) - b.at(k);
    return TaylorSeries(std::move(c));
}

TaylorSeries operator*(Complex w, const TaylorSeries& a) {
    std::vector<Complex> c = a.coeffs();
    for (Complex& x : c) x *= w;
    return TaylorSeries(std::move(c));
}

TaylorSeries cauchy_product(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 0; j <= k; ++j) s += a.at(j) * b.at(k - j);
        c[k] = s;
    }
    return TaylorSeries(std::move(c));
}

TaylorSeries differentiate(const TaylorSeries& a) {
    if (a.order() == 0) return TaylorSeries();
    std::vector<Complex> c(static_cast<std::size_t>(a.order()));
    for (int k = 0; k < a.order(); ++k) c[k] = static_cast<double>(k + 1) * a.at(k + 1);
    return TaylorSeries(std::move(c));
}

TaylorSeries integrate(const TaylorSeries& a, Complex c0) {
    std::vector<Complex> c(static_cast<std::size_t>(a.order()) + 2);
    c[0] = c0;
    for (int k = 0; k <= a.order(); ++k) c[k + 1] = a.at(k) / static_cast<double>(k + 1);
    return TaylorSeries(std::move(c));
}

TaylorSeries exp_series(const TaylorSeries& a) {
    const int n = a.order();
    std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
    b[0] = std::exp(a.at(0));
    for (int k = 1; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a.at(j) * b[k - j];
        b[k] = s / static_cast<double>(k);
    }
    return TaylorSeries(std::move(b));
}

TaylorSeries log_series(const TaylorSeries& a) {
    if (std::abs(a.at(0)) == 0.0)
        throw SingularityError("log_series: branch point, constant term is zero");
    const int n = a.order();
    std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
    b[0] = std::log(a.at(0));
    for (int k = 1; k <= n; ++k) {
        Complex s = static_cast<double>(k) * a.at(k);
        for (int j = 1; j < k; ++j) s -= static_cast<double>(j) * b[j] * a.at(k - j);
        b[k] = s / (static_cast<double>(k) * a.at(0));
    }
    return TaylorSeries(std::move(b));
}

Complex evaluate(const TaylorSeries& a, Complex z) {
    Complex acc(0.0);
    for (int k = a.order(); k >= 0; --k) acc = acc * z + a.at(k);
    return acc;
}

TaylorSeries coefficients_via_cauchy(const Evaluator& f, int n_max, double r, int m) {
    if (n_max < 0) throw DomainError("coefficients_via_cauchy: n_max must be >= 0");
    if (!(r > 0.0 && r < 1.0)) throw DomainError("coefficients_via_cauchy: radius must be in (0,1)");
    if (m < 4 * std::max(n_max, 1))
        throw DomainError("coefficients_via_cauchy: need m >= 4 n_max samples");

    std::vector<Complex> samples(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double t = 2.0 * kPi * k / m;
        const Complex z = std::polar(r, t);
        const Complex v = f(z);
        if (!finite(v))
            throw EvaluationError("coefficients_via_cauchy: non-finite sample at z = " +
                                      point_string(z),
                                  z);
        samples[k] = v;
    }

    std::vector<Complex> c(static_cast<std::size_t>(n_max) + 1);
    double rn = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        Complex s(0.0);
        for (int k = 0; k < m; ++k) {
            const double t = 2.0 * kPi * k * n / m;
            s += samples[k] * std::polar(1.0, -t);
        }
        c[n] = s / (static_cast<double>(m) * rn);
        rn *= r;
    }
    return TaylorSeries(std::move(c));
}

TaylorSeries coefficients_via_cauchy(const Evaluator& f, int n_max, double r) {
    return coefficients_via_cauchy(f, n_max, r, std::max(256, 8 * (n_max + 1)));
}

}  // namespace hblab
