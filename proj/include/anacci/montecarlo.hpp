#pragma once

#include "anacci/geometry.hpp"

#include <cstdint>

namespace anacci {

struct McEstimate {
  double estimate = 0.0;  // first-coordinate centroid of the accepted points
  double stderr_ = 0.0;   // standard error of that mean
  std::uint64_t accepted = 0;
  std::uint64_t samples = 0;
};

/// Counter-based uniform in [0, 1): the same (seed, counter) always yields the same value.
double uniform_at(std::uint64_t seed, std::uint64_t counter) noexcept;

/// Hit-or-miss estimate of the shell centroid: points uniform in the bounding
/// box of the larger of body and image, kept when they lie in exactly one of
/// them. Work is split into fixed blocks of samples reduced in block order, so
/// the result does not depend on `threads` (0 picks the hardware count).
///
/// Throws Error(LambdaOne), Error(InvalidArgument) for samples < 10^4 and
/// Error(DegenerateShell) when fewer than 10^-4 of the samples land in the shell.
McEstimate mc_centroid(const DilationScene& scene, std::uint64_t seed, std::uint64_t samples,
                       unsigned threads = 0);

/// Same sampler applied to a single body.
McEstimate mc_body_centroid(const ConvexBody& body, std::uint64_t seed, std::uint64_t samples,
                            unsigned threads = 0);

}  // namespace anacci
