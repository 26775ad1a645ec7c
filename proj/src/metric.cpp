#include "a1score/metric.hpp"

#include <cmath>

namespace a1 {

AlgorithmProfile make_profile(std::string name, std::string_view time, std::string_view space) {
  return AlgorithmProfile{std::move(name), parse(time), parse(space)};
}

void validate(const A1Config& config) {
  if (!(config.xi > 0.0) || !std::isfinite(config.xi)) {
    throw DomainError("scaling factor xi must be a finite real greater than 0, got " + std::to_string(config.xi));
  }
  validate(config.eval);
}

A1Components a1_components(const AlgorithmProfile& profile, double n, const A1Config& config) {
  validate(config);
  double t = evaluate(profile.time, n, config.eval);
  double s = evaluate(profile.space, n, config.eval);
  A1Components c{t + s, t * s, 0.0};
  if (!std::isfinite(c.sum) || !std::isfinite(c.product)) {
    throw OverflowError("time*space exceeds double-precision range at n = " + std::to_string(n));
  }
  c.score = config.xi * (c.sum / c.product);
  if (!(c.score > 0.0) || !std::isfinite(c.score)) {
    throw OverflowError("A1-Score out of double-precision range at n = " + std::to_string(n));
  }
  return c;
}

double a1_score(const AlgorithmProfile& profile, double n, const A1Config& config) {
  return a1_components(profile, n, config).score;
}

CanonicalForm canonical_product(const AlgorithmProfile& profile) {
  return canonicalize(profile.time) * canonicalize(profile.space);
}

CanonicalForm canonical_sum(const AlgorithmProfile& profile) {
  return canonicalize(profile.time) + canonicalize(profile.space);
}

}  // namespace a1
