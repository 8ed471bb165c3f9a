#pragma once

#include <cstdint>
#include <random>

namespace fresnel {

/// Identifies one reproducible random stream. Distinct stream ids under the
/// same seed give independent sequences.
struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Thin wrapper over std::mt19937_64 seeded from both halves of seed and
/// stream id through std::seed_seq.
class Rng {
 public:
  explicit Rng(SeededStream stream);

  /// Uniform on the open interval (0, 1), 53 random bits.
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

  /// Standard exponential, -log U.
  double exponential();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fresnel
