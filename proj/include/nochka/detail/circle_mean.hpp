#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "nochka/errors.hpp"

namespace nochka {

namespace detail {

struct SingularSample {};

template <typename G>
QuadratureResult trapezoid(G& g, double r, const QuadratureOptions& options) {
  auto sample = [&](long j, long points) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points);
    const double v = g(std::polar(r, t));
    if (!std::isfinite(v)) throw SingularSample{};
    return v;
  };
  long points = 1L << options.min_k;
  double sum = 0;
  for (long j = 0; j < points; ++j) sum += sample(j, points);
  double value = sum / static_cast<double>(points);
  for (int k = options.min_k + 1; k <= options.max_k; ++k) {
    points *= 2;
    for (long j = 1; j < points; j += 2) sum += sample(j, points);
    const double next = sum / static_cast<double>(points);
    const double diff = std::abs(next - value);
    value = next;
    if (diff < options.tol) return QuadratureResult{value, diff, k, r, false};
    if (k == options.max_k) {
      throw ResourceError("circle quadrature did not converge at r=" + std::to_string(r) +
                          ": achieved error " + std::to_string(diff));
    }
  }
  throw ResourceError("circle quadrature: invalid point range");
}

}  // namespace detail

template <typename G>
QuadratureResult circle_mean(G&& g, double r, const QuadratureOptions& options) {
  double radius = r;
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      QuadratureResult res = detail::trapezoid(g, radius, options);
      res.perturbed = attempt > 0;
      return res;
    } catch (const detail::SingularSample&) {
      radius *= 1.0 + 1e-6;
    }
  }
  throw ResourceError("circle quadrature keeps hitting zeros near r=" + std::to_string(r));
}

}  // namespace nochka
