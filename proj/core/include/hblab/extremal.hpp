#pragma once

#include <optional>
#include <vector>

#include "hblab/defs.hpp"
#include "hblab/mapping.hpp"

namespace hblab {

// Polar scan grid. Radial levels approach the boundary dyadically; past
// 1 - 2^-20 the cancellation in 1 - |z|^2 dominates, so that is the cap.
struct GridSpec {
    std::vector<double> radial_levels;  // strictly increasing, all < 1
    int angular_count = 512;
    int refine_depth = 5;
    double divergence_ratio = 10.0;  // last-level max vs max over r <= 0.5

    static GridSpec defaults() { return with_max_level_exponent(20); }
    // Levels r_k = 1 - 2^-k for k = 1..max_exponent (capped at 20).
    static GridSpec with_max_level_exponent(int max_exponent);
};

struct LevelRecord {
    double r_max;
    double max_value;  // running max over all samples with |z| <= r_max
};

// Lower bound for a supremum over the disk. `value` is the field at `argmax`.
// `exponent` is the fitted alpha in field ~ (1-r)^-alpha over the last six
// radial levels, present only when the scan flags divergence.
struct SupEstimate {
    double value = 0.0;
    Complex argmax{0.0, 0.0};
    bool diverged = false;
    std::optional<double> exponent;
    std::vector<LevelRecord> levels;
    std::size_t skipped_samples = 0;
};

// Adaptive supremum of a real field over the unit disk: origin plus radial
// level sweep, then local refinement (golden-section polish in angle and in
// the depth coordinate s = -log2(1-r)) around the incumbent. Pointwise
// SingularityError/EvaluationError samples are skipped; the scan aborts if
// more than 1% of sweep samples fail.
SupEstimate sup_disk(const std::function<double(Complex)>& field, const GridSpec& spec);

// beta(f): sup of (1-|z|^2) sqrt(|J_f|).
SupEstimate bloch_type_seminorm(const HarmonicMapping& f, const GridSpec& spec);

// Analytic Bloch seminorm: sup of (1-|z|^2)|phi'|.
SupEstimate analytic_bloch_seminorm(const AnalyticPart& phi, const GridSpec& spec);

// Hyperbolic norm of a self-map: sup of |omega*|, at most 1 by Schwarz-Pick.
SupEstimate hyperbolic_norm(const Dilatation& w, const GridSpec& spec);

// Max of |f| over the circle |z| = r: m equispaced samples plus a
// golden-section polish around the incumbent angle.
double max_modulus(const std::function<Complex(Complex)>& f, double r, int m);
double max_modulus(const HarmonicMapping& f, double r, int m);
double max_modulus(const AnalyticPart& f, double r, int m);

}  // namespace hblab
