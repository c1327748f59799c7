#include "anacci/montecarlo.hpp"

#include "anacci/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

namespace anacci {
namespace {

constexpr std::uint64_t kBlockSize = 1 << 15;
constexpr std::uint64_t kMinSamples = 10000;
constexpr double kMinAcceptance = 1e-4;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Box {
  double lo;
  double hi;
  double half_width;
};

struct Partial {
  std::uint64_t accepted = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
};

using Membership = std::function<bool(std::span<const double>)>;

McEstimate sample(int n, const Box& box, const Membership& inside, std::uint64_t seed,
                  std::uint64_t samples, unsigned threads) {
  if (samples < kMinSamples) {
    throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs at least 10^4 samples");
  }
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<Partial> partials(blocks);
  // Points are drawn around the box midpoint so that coordinates far from the
  // origin keep their resolution.
  const double mid = 0.5 * (box.lo + box.hi);
  const double half_len = 0.5 * (box.hi - box.lo);

  auto run_block = [&](std::uint64_t b) {
    std::vector<double> x(static_cast<std::size_t>(n));
    Partial part;
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    for (std::uint64_t s = begin; s < end; ++s) {
      const std::uint64_t base = s * static_cast<std::uint64_t>(n);
      const double offset = half_len * (2.0 * uniform_at(seed, base) - 1.0);
      x[0] = mid + offset;
      for (int i = 1; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = box.half_width * (2.0 * uniform_at(seed, base + static_cast<std::uint64_t>(i)) - 1.0);
      }
      if (inside(x)) {
        ++part.accepted;
        part.sum += offset;
        part.sum_sq += offset * offset;
      }
    }
    partials[b] = part;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  Partial total;
  for (const auto& part : partials) {
    total.accepted += part.accepted;
    total.sum += part.sum;
    total.sum_sq += part.sum_sq;
  }
  const double rate = static_cast<double>(total.accepted) / static_cast<double>(samples);
  if (total.accepted < 2 || rate < kMinAcceptance) {
    throw Error(ErrorCode::DegenerateShell, "acceptance rate " + std::to_string(rate) + " is below 1e-4");
  }
  const double k = static_cast<double>(total.accepted);
  const double mean = total.sum / k;
  const double var = std::max(0.0, (total.sum_sq - k * mean * mean) / (k - 1.0));
  McEstimate out;
  out.estimate = mid + mean;
  out.stderr_ = std::sqrt(var / k);
  out.accepted = total.accepted;
  out.samples = samples;
  return out;
}

Box box_of(const ConvexBody& body) {
  return {body.axis_min(), body.axis_max(), body.transverse_half_width()};
}

}  // namespace

double uniform_at(std::uint64_t seed, std::uint64_t counter) noexcept {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ counter);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

McEstimate mc_centroid(const DilationScene& scene, std::uint64_t seed, std::uint64_t samples,
                       unsigned threads) {
  if (scene.lambda == 1.0) throw Error(ErrorCode::LambdaOne, "the shell is empty at lambda = 1");
  const ConvexBody image = dilate(scene.body, scene.O, scene.lambda);
  const ConvexBody& larger = scene.lambda > 1.0 ? image : scene.body;
  const ConvexBody& smaller = scene.lambda > 1.0 ? scene.body : image;
  const Membership inside = [&](std::span<const double> x) {
    return larger.contains(x) && !smaller.contains(x);
  };
  return sample(scene.body.n, box_of(larger), inside, seed, samples, threads);
}

McEstimate mc_body_centroid(const ConvexBody& body, std::uint64_t seed, std::uint64_t samples,
                            unsigned threads) {
  const Membership inside = [&](std::span<const double> x) { return body.contains(x); };
  return sample(body.n, box_of(body), inside, seed, samples, threads);
}

}  // namespace anacci
