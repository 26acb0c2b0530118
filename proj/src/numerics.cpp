#include "binom/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace binom {

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k outside [0, n]");
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double xlogy(double k, double x) {
  if (k == 0.0) return 0.0;
  return k * std::log(x);
}

double wrap_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi itself.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angular_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return d > kPi ? kTwoPi - d : d;
}

std::vector<double> linspace(double first, double last, int steps) {
  if (steps < 1) throw std::invalid_argument("linspace: steps must be >= 1");
  if (steps == 1) return {first};
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double h = (last - first) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = first + h * i;
  out.back() = last;
  return out;
}

}  // namespace binom
