#include "ratsemi/dynamics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace ratsemi {

namespace {

constexpr double kSamePoint = 1e-12;
constexpr double kDedupeRadius = 1e-8;
constexpr double kRepellingSlack = 1e-9;

bool exceptional(const std::vector<NumericMap>& maps, const SpherePoint& z0) {
  for (const NumericMap& f : maps) {
    for (const SpherePoint& p : f.preimages(z0)) {
      if (spherical_dist(p, z0) > kSamePoint) return false;
    }
  }
  return true;
}

std::vector<SpherePoint> walk(const std::vector<NumericMap>& maps, SpherePoint z, std::uint64_t seed,
                              std::size_t burn_in, std::size_t keep) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_map(0, maps.size() - 1);
  std::vector<SpherePoint> out;
  out.reserve(keep);
  for (std::size_t step = 0; step < burn_in + keep; ++step) {
    const NumericMap& f = maps[pick_map(rng)];
    std::vector<SpherePoint> pre = f.preimages(z);
    std::uniform_int_distribution<std::size_t> pick_root(0, pre.size() - 1);
    z = pre[pick_root(rng)];
    if (step >= burn_in) out.push_back(z);
  }
  return out;
}

}  // namespace

void SemigroupSpec::validate() const {
  if (generators.empty()) throw std::invalid_argument("at least one generator is required");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].degree() < 2) {
      throw std::invalid_argument("generator " + std::to_string(k) + " has degree " +
                                  std::to_string(generators[k].degree()) + ", need at least 2");
    }
  }
  if (orbit_length == 0) throw std::invalid_argument("orbit_length must be positive");
  if (burn_in == 0) throw std::invalid_argument("burn_in must be positive");
  if (burn_in >= orbit_length) throw std::invalid_argument("burn_in must be smaller than orbit_length");
  if (word_length_max < 1) throw std::invalid_argument("word_length_max must be positive");
  if (!(window.width > 0) || !(window.height > 0) || !std::isfinite(window.cx) || !std::isfinite(window.cy) ||
      !std::isfinite(window.width) || !std::isfinite(window.height)) {
    throw std::invalid_argument("window must have finite center and positive size");
  }
  if (resolution.w < 1 || resolution.h < 1) throw std::invalid_argument("resolution must be positive");
  if (workers < 1) throw std::invalid_argument("workers must be positive");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

PointCloud random_backward_orbit(const SemigroupSpec& spec, const SpherePoint& z0) {
  spec.validate();
  std::vector<NumericMap> maps;
  for (const RationalMap& g : spec.generators) maps.emplace_back(g);
  if (exceptional(maps, z0)) throw std::invalid_argument("starting point is exceptional for every generator");

  const std::size_t walkers = static_cast<std::size_t>(spec.workers);
  const std::size_t total = spec.orbit_length - spec.burn_in;
  std::vector<std::vector<SpherePoint>> parts(walkers);
  std::vector<std::exception_ptr> errors(walkers);
  auto run = [&](std::size_t w) {
    try {
      const std::size_t share = total / walkers + (w < total % walkers ? 1 : 0);
      parts[w] = walk(maps, z0, mix_seed(spec.seed, w), spec.burn_in, share);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (walkers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < walkers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  PointCloud cloud;
  cloud.label = "backward orbit, seed " + std::to_string(spec.seed) + ", " + std::to_string(walkers) + " walker(s)";
  cloud.points.reserve(total);
  for (auto& p : parts) cloud.points.insert(cloud.points.end(), p.begin(), p.end());
  return cloud;
}

std::vector<FixedPoint> repelling_fixed_points_detailed(const SemigroupSpec& spec) {
  spec.validate();
  std::vector<FixedPoint> found;
  auto add = [&](const SpherePoint& z, cplx mult) {
    if (!(std::abs(mult) > 1.0 + kRepellingSlack)) return;
    for (const FixedPoint& q : found) {
      if (spherical_dist(q.z, z) <= kDedupeRadius) return;
    }
    found.push_back({z, mult});
  };

  std::vector<RationalMap> layer = spec.generators;
  for (int len = 1; len <= spec.word_length_max; ++len) {
    for (const RationalMap& word : layer) {
      const NumericMap numeric(word);
      const Polynomial fixed = word.num() - Polynomial::z() * word.den();
      if (fixed.degree() >= 1) {
        std::vector<cplx> coeffs;
        for (const auto& c : fixed.coeffs()) coeffs.push_back(c.to_complex());
        for (const cplx& z : polynomial_roots(coeffs)) add(SpherePoint::finite(z), numeric.derivative(z));
      }
      const int gap = word.num().degree() - word.den().degree();
      if (gap == 1) {
        add(SpherePoint::infinity(), word.den().leading().to_complex() / word.num().leading().to_complex());
      }
    }
    if (len == spec.word_length_max) break;
    std::vector<RationalMap> next;
    next.reserve(layer.size() * spec.generators.size());
    for (const RationalMap& g : spec.generators) {
      for (const RationalMap& word : layer) next.push_back(compose(g, word));
    }
    layer = std::move(next);
  }
  return found;
}

PointCloud repelling_fixed_points(const SemigroupSpec& spec) {
  PointCloud cloud;
  cloud.label = "repelling fixed points, words up to length " + std::to_string(spec.word_length_max);
  for (const FixedPoint& p : repelling_fixed_points_detailed(spec)) cloud.points.push_back(p.z);
  return cloud;
}

std::vector<SpherePoint> forward_orbit(const RationalMap& f, const SpherePoint& z0, std::size_t n) {
  const NumericMap numeric(f);
  std::vector<SpherePoint> out{z0};
  out.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) out.push_back(numeric.evaluate(out.back()));
  return out;
}

PointCloud pushforward(const PointCloud& cloud, const RationalMap& k) {
  const NumericMap numeric(k);
  PointCloud out;
  out.label = "pushforward of " + cloud.label + " by " + k.to_string();
  out.points.resize(cloud.points.size());
  numeric.evaluate_batch(cloud.points, out.points);
  return out;
}

PointCloud segment_cloud(double a, double b, double step) {
  if (!(b >= a) || !(step > 0)) throw std::invalid_argument("segment_cloud: need a <= b and step > 0");
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / step));
  PointCloud out;
  out.label = "segment [" + std::to_string(a) + ", " + std::to_string(b) + "]";
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = (k == n) ? b : a + (b - a) * static_cast<double>(k) / static_cast<double>(n);
    out.points.push_back(SpherePoint::finite(x));
  }
  return out;
}

}  // namespace ratsemi
