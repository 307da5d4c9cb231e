#pragma once

#include <cstdint>
#include <random>

namespace sfga {

/// splitmix64 finalizer, used to derive well-spread engine seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Random stream serving individual fair coins plus uniform integers.
///
/// Coins come from a buffered 64-bit engine word, lowest bit first, so one
/// crossover coin consumes exactly one bit of the stream; bits_consumed()
/// counts coins served. Uniform integers bypass the coin buffer and draw
/// whole engine words. Everything is deterministic given the seed.
class BitSource {
 public:
  explicit BitSource(std::uint64_t seed) : engine_(seed) {}

  /// Stream for trial `stream` of a run seeded with `seed`; independent of
  /// scheduling, so parallel trials are reproducible.
  static BitSource substream(std::uint64_t seed, std::uint64_t stream) {
    return BitSource(mix_seed(seed, stream));
  }

  bool next_bit() {
    if (available_ == 0) {
      buffer_ = engine_();
      available_ = 64;
    }
    bool b = buffer_ & 1;
    buffer_ >>= 1;
    --available_;
    ++served_;
    return b;
  }

  /// Uniform integer in [0, bound), bound >= 1; rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

  /// Uniform double in [0,1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t bits_consumed() const noexcept { return served_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int available_ = 0;
  std::uint64_t served_ = 0;
};

}  // namespace sfga
