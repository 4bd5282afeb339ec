#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace xisf {

// Named, splittable pseudorandom stream. A master seed plus a stream name
// (and optional repetition index) deterministically derives an independent
// generator, so task sampling, env noise, agent init and exploration can
// each own a stream without coupling their draw counts.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(scramble(seed)) {}

  RandomStream(std::uint64_t master, std::string_view name,
               std::uint64_t index = 0)
      : engine_(scramble(combine(master, name, index))) {}

  RandomStream derive(std::string_view name, std::uint64_t index = 0) {
    return RandomStream(combine(engine_(), name, index));
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  // Uniform integer in [0, n).
  int uniform_int(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(engine_);
  }
  bool bernoulli(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t scramble(std::uint64_t x) {
    // splitmix64 finalizer; spreads low-entropy seeds over the full state.
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t combine(std::uint64_t master, std::string_view name,
                               std::uint64_t index) {
    // FNV-1a over the name, mixed with master and index.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xffULL;
        h *= 1099511628211ULL;
      }
    };
    mix(master);
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    mix(index);
    return h;
  }

  std::mt19937_64 engine_;
};

}  // namespace xisf
