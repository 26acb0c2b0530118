// Small scalar helpers shared by the state constructors.
#pragma once

#include <numbers>
#include <vector>

namespace binom {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// log C(n, k) via lgamma; stable for n in the hundreds.
double log_binomial(int n, int k);

/// k * log(x) with the convention 0 * log(0) = 0, so 0^0 = 1.
double xlogy(double k, double x);

/// Maps an angle to [0, 2pi).
double wrap_angle(double radians);

/// Distance between two angles on the circle, in [0, pi].
double angular_distance(double a, double b);

/// `steps` equally spaced values from `first` to `last`, both included.
std::vector<double> linspace(double first, double last, int steps);

}  // namespace binom
