#include "fresnel/rng.hpp"

#include <cmath>

namespace fresnel {

namespace {

std::mt19937_64 seeded_engine(SeededStream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(stream.seed),
                    static_cast<std::uint32_t>(stream.seed >> 32),
                    static_cast<std::uint32_t>(stream.stream_id),
                    static_cast<std::uint32_t>(stream.stream_id >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(SeededStream stream) : engine_(seeded_engine(stream)) {}

double Rng::exponential() { return -std::log(uniform()); }

}  // namespace fresnel
