#include "hblab/mapping.hpp"

#include <cmath>
#include <utility>

namespace hblab {

namespace {

void require_in_disk(Complex z) {
    if (std::abs(z) >= 1.0) throw DomainError("point lies outside the open unit disk");
}

}  // namespace

AnalyticPart::AnalyticPart(Evaluator value, Evaluator derivative, Evaluator second_derivative,
                           int order_hint)
    : value_(std::move(value)),
      derivative_(std::move(derivative)),
      second_(std::move(second_derivative)),
      backing_(Backing::ClosedForm),
      order_hint_(order_hint) {}

AnalyticPart::AnalyticPart(TaylorSeries series)
    : backing_(Backing::Series), series_(std::move(series)), order_hint_(series_->order()) {
    const TaylorSeries s0 = *series_;
    const TaylorSeries s1 = differentiate(s0);
    const TaylorSeries s2 = differentiate(s1);
    value_ = [s0](Complex z) { return evaluate(s0, z); };
    derivative_ = [s1](Complex z) { return evaluate(s1, z); };
    second_ = [s2](Complex z) { return evaluate(s2, z); };
}

AnalyticPart zero_part() {
    auto zero = [](Complex) { return Complex(0.0); };
    return AnalyticPart(zero, zero, zero);
}

AnalyticPart identity_part() {
    return AnalyticPart([](Complex z) { return z; }, [](Complex) { return Complex(1.0); },
                        [](Complex) { return Complex(0.0); });
}

HarmonicMapping::HarmonicMapping(AnalyticPart h, AnalyticPart g, bool sense_preserving,
                                 bool univalent, NormalizationClass cls)
    : h_(std::move(h)),
      g_(std::move(g)),
      sense_preserving_(sense_preserving),
      univalent_(univalent),
      class_(cls) {
    if (class_ == NormalizationClass::None) return;
    if (!univalent_ || !sense_preserving_)
        throw ContractError("normalized classes require the univalent and sense-preserving flags");
    const Complex h0 = h_.value(Complex(0.0));
    const Complex h1 = h_.derivative(Complex(0.0));
    if (std::abs(h0) > kNormalizationTol || std::abs(h1 - Complex(1.0)) > kNormalizationTol)
        throw ContractError("normalization violated: need h(0) = 0 and h'(0) = 1");
    if (class_ == NormalizationClass::SH0 &&
        std::abs(g_.derivative(Complex(0.0))) > kNormalizationTol)
        throw ContractError("normalization violated: need g'(0) = 0 for the b1 = 0 class");
}

Dilatation constant_dilatation(Complex c) {
    return Dilatation{[c](Complex) { return c; }, [](Complex) { return Complex(0.0); }, c};
}

Dilatation identity_dilatation() {
    return Dilatation{[](Complex z) { return z; }, [](Complex) { return Complex(1.0); },
                      Complex(0.0)};
}

Dilatation dilatation_of(const HarmonicMapping& f) {
    const AnalyticPart h = f.h();
    const AnalyticPart g = f.g();
    auto eval = [h, g](Complex z) {
        const Complex hp = h.derivative(z);
        if (std::abs(hp) == 0.0)
            throw SingularityError("dilatation undefined: h'(z) = 0");
        return g.derivative(z) / hp;
    };
    auto deriv = [h, g](Complex z) {
        const Complex hp = h.derivative(z);
        if (std::abs(hp) == 0.0)
            throw SingularityError("dilatation derivative undefined: h'(z) = 0");
        return (g.second_derivative(z) * hp - g.derivative(z) * h.second_derivative(z)) /
               (hp * hp);
    };
    return Dilatation{eval, deriv, eval(Complex(0.0))};
}

Complex evaluate(const HarmonicMapping& f, Complex z) {
    require_in_disk(z);
    return f.h().value(z) + std::conj(f.g().value(z));
}

double jacobian(const HarmonicMapping& f, Complex z) {
    require_in_disk(z);
    return std::norm(f.h().derivative(z)) - std::norm(f.g().derivative(z));
}

Complex dilatation_at(const HarmonicMapping& f, Complex z) {
    require_in_disk(z);
    const Complex hp = f.h().derivative(z);
    if (std::abs(hp) == 0.0)
        throw SingularityError("dilatation undefined: critical point of the analytic part");
    return f.g().derivative(z) / hp;
}

Complex pre_schwarzian(const HarmonicMapping& f, Complex z) {
    require_in_disk(z);
    const Complex hp = f.h().derivative(z);
    if (std::abs(hp) == 0.0) throw SingularityError("pre-Schwarzian undefined: h'(z) = 0");
    const Complex om = f.g().derivative(z) / hp;
    const double om2 = std::norm(om);
    if (om2 >= 1.0) throw SingularityError("pre-Schwarzian undefined: |omega(z)| >= 1");
    const Complex omp =
        (f.g().second_derivative(z) * hp - f.g().derivative(z) * f.h().second_derivative(z)) /
        (hp * hp);
    return f.h().second_derivative(z) / hp - std::conj(om) * omp / (1.0 - om2);
}

Complex hyperbolic_derivative(const Dilatation& w, Complex z) {
    require_in_disk(z);
    const double om2 = std::norm(w.eval(z));
    if (om2 >= 1.0) throw SingularityError("hyperbolic derivative undefined: |omega(z)| >= 1");
    return w.deriv(z) * (1.0 - std::norm(z)) / (1.0 - om2);
}

HarmonicMapping from_h_and_dilatation(const AnalyticPart& h, const Dilatation& omega,
                                      int order) {
    // Self-map validation by sampling.
    for (int i = 1; i <= 8; ++i) {
        const double r = 0.12 * i;
        for (int j = 0; j < 64; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / 64.0);
            if (std::abs(omega.eval(z)) >= 1.0)
                throw ContractError("from_h_and_dilatation: omega is not a self-map of the disk");
        }
    }

    const int m = std::max(256, 8 * (order + 1));
    const TaylorSeries omega_series =
        coefficients_via_cauchy(omega.eval, order, kDefaultExtractionRadius, m);
    const TaylorSeries hp_series =
        h.series() ? differentiate(*h.series()).truncated(order)
                   : coefficients_via_cauchy(h.derivative_fn(), order, kDefaultExtractionRadius, m);
    const TaylorSeries g_series = integrate(cauchy_product(omega_series, hp_series), Complex(0.0));
    return HarmonicMapping(h, AnalyticPart(g_series), /*sense_preserving=*/true,
                           /*univalent=*/false, NormalizationClass::None);
}

bool validate_sense_preserving(const HarmonicMapping& f, int nr, int ntheta, double rmax,
                               Complex* where) {
    for (int i = 0; i < nr; ++i) {
        const double r = rmax * (i + 1) / nr;
        for (int j = 0; j < ntheta; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / ntheta);
            if (!(jacobian(f, z) > 0.0)) {
                if (where) *where = z;
                return false;
            }
        }
    }
    return true;
}

}  // namespace hblab
