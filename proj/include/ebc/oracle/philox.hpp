#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A path's
// draws depend only on (seed, path index, draw index), never on which
// worker thread simulates it.

#include <array>
#include <cstdint>

namespace ebc::oracle {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

/// Sequential draws for one path: counter = (path lo, path hi, block lo,
/// block hi), key = seed. The top bit of the block index selects one of two
/// independent substreams. Satisfies UniformRandomBitGenerator.
class PathStream {
 public:
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

  PathStream(std::uint64_t seed, std::uint64_t path, unsigned substream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        path_lo_(static_cast<std::uint32_t>(path)),
        path_hi_(static_cast<std::uint32_t>(path >> 32)),
        block_(std::uint64_t{substream & 1u} << 63) {}

  std::uint64_t next_u64() {
    if (used_ == 4) refill();
    const std::uint64_t hi = buffer_[used_++];
    const std::uint64_t lo = buffer_[used_++];
    return (hi << 32) | lo;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  void refill() {
    buffer_ = philox4x32({path_lo_, path_hi_, static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)},
                         key_);
    ++block_;
    used_ = 0;
  }

  PhiloxKey key_;
  std::uint32_t path_lo_;
  std::uint32_t path_hi_;
  std::uint64_t block_;
  PhiloxCounter buffer_{};
  int used_ = 4;
};

}  // namespace ebc::oracle
