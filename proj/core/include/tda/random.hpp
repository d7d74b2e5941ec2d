#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace tda {

/// Seeded random stream. All sampling in the toolkit goes through this type so
/// that results are bit-identical across platforms and standard libraries
/// (std:: distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for replicate `index` of a run seeded with `seed`.
  /// Streams depend only on (seed, index), never on scheduling order.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer on [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);
  /// Standard normal deviate (Box-Muller, no cached second value).
  double normal();

  /// m indices drawn i.i.d. uniformly from [0, n).
  std::vector<std::size_t> sample_with_replacement(std::size_t n, std::size_t m);
  /// m distinct indices from [0, n), returned in increasing order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t m);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tda
