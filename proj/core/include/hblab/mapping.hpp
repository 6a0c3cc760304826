#pragma once

#include <optional>

#include "hblab/defs.hpp"
#include "hblab/errors.hpp"
#include "hblab/series.hpp"

namespace hblab {

// One analytic piece of a harmonic mapping, carrying its value and first two
// derivatives. Either closed-form (caller supplies all three evaluators) or
// backed by a truncated series, in which case the derivatives are exact
// term-wise derivatives of the same series.
class AnalyticPart {
public:
    enum class Backing { ClosedForm, Series };

    AnalyticPart(Evaluator value, Evaluator derivative, Evaluator second_derivative,
                 int order_hint = kDefaultSeriesOrder);
    explicit AnalyticPart(TaylorSeries series);

    Complex value(Complex z) const { return value_(z); }
    Complex derivative(Complex z) const { return derivative_(z); }
    Complex second_derivative(Complex z) const { return second_(z); }

    Backing backing() const { return backing_; }
    const std::optional<TaylorSeries>& series() const { return series_; }
    int order_hint() const { return order_hint_; }

    const Evaluator& value_fn() const { return value_; }
    const Evaluator& derivative_fn() const { return derivative_; }
    const Evaluator& second_derivative_fn() const { return second_; }

private:
    Evaluator value_, derivative_, second_;
    Backing backing_;
    std::optional<TaylorSeries> series_;
    int order_hint_;
};

AnalyticPart zero_part();
AnalyticPart identity_part();

enum class NormalizationClass { None, SH, SH0 };

// Planar harmonic mapping f = h + conj(g). The sense-preserving and univalent
// flags are declarations; normalization classes are checked numerically at
// construction (|h(0)|, |h'(0)-1|, and for SH0 |g'(0)|, within 1e-9), and a
// declared class requires both flags.
class HarmonicMapping {
public:
    HarmonicMapping(AnalyticPart h, AnalyticPart g, bool sense_preserving = false,
                    bool univalent = false,
                    NormalizationClass cls = NormalizationClass::None);

    const AnalyticPart& h() const { return h_; }
    const AnalyticPart& g() const { return g_; }
    bool sense_preserving() const { return sense_preserving_; }
    bool univalent() const { return univalent_; }
    NormalizationClass normalization() const { return class_; }

private:
    AnalyticPart h_, g_;
    bool sense_preserving_, univalent_;
    NormalizationClass class_;
};

// Analytic self-map of the disk together with its derivative. For a
// sense-preserving mapping this is omega = g'/h'.
struct Dilatation {
    Evaluator eval;
    Evaluator deriv;
    Complex c0;  // omega(0)
};

Dilatation constant_dilatation(Complex c);
Dilatation identity_dilatation();

// omega = g'/h' with omega' = (g'' h' - g' h'')/h'^2, both from the exact
// part evaluators (never by differencing omega).
Dilatation dilatation_of(const HarmonicMapping& f);

// f(z) = h(z) + conj(g(z)); requires |z| < 1.
Complex evaluate(const HarmonicMapping& f, Complex z);

// J_f = |h'|^2 - |g'|^2.
double jacobian(const HarmonicMapping& f, Complex z);

// g'(z)/h'(z); raises SingularityError at critical points of h.
Complex dilatation_at(const HarmonicMapping& f, Complex z);

// P_f = h''/h' - conj(omega) omega' / (1 - |omega|^2).
Complex pre_schwarzian(const HarmonicMapping& f, Complex z);

// omega*(z) = omega'(z)(1-|z|^2)/(1-|omega(z)|^2).
Complex hyperbolic_derivative(const Dilatation& w, Complex z);

// Builds f = h + conj(g) with g(0) = 0 and g' = omega h', through series
// extraction, Cauchy product and integration. omega is validated to be a
// self-map by sampling.
HarmonicMapping from_h_and_dilatation(const AnalyticPart& h, const Dilatation& omega,
                                      int order = kDefaultSeriesOrder);

// Grid validation of declared flags: J > 0 on an nr x ntheta polar grid with
// r <= rmax for sense-preserving mappings. Returns false (and fills `where`)
// on the first violation.
bool validate_sense_preserving(const HarmonicMapping& f, int nr, int ntheta, double rmax,
                               Complex* where = nullptr);

}  // namespace hblab
