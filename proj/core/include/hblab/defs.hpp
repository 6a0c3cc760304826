#pragma once

#include <complex>
#include <functional>

namespace hblab {

using Complex = std::complex<double>;

// Pointwise evaluator of an analytic expression on the unit disk.
using Evaluator = std::function<Complex(Complex)>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Absolute tolerance for normalization checks (h(0), h'(0)-1, g'(0)).
inline constexpr double kNormalizationTol = 1e-9;

}  // namespace hblab
