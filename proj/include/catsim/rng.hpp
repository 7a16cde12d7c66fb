// Counter-based random bits: Philox4x32-10.
//
// Every output word is a pure function of (key, counter), so any draw in a
// run is addressable by its coordinates and replayable bit-for-bit. See
// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3" (SC 2011).
#pragma once

#include <array>
#include <cstdint>

namespace catsim::rng {

inline constexpr const char* kGeneratorName = "philox4x32-10";

namespace detail {

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                      std::uint32_t& hi) {
  const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(prod);
  hi = static_cast<std::uint32_t>(prod >> 32);
}

}  // namespace detail

// One 10-round Philox4x32 block.
inline std::array<std::uint32_t, 4> philox4x32(
    std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t lo0, hi0, lo1, hi1;
    detail::mul_hi_lo(detail::kMul0, ctr[0], lo0, hi0);
    detail::mul_hi_lo(detail::kMul1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += detail::kWeyl0;
    key[1] += detail::kWeyl1;
  }
  return ctr;
}

// 64 random bits addressed by (key, index, channel). The channel's high byte
// separates logical sub-streams, the low 56 bits carry a site or sequence id.
inline std::uint64_t word_at(std::uint64_t key, std::uint64_t index,
                             std::uint64_t channel) {
  const auto out = philox4x32(
      {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
       static_cast<std::uint32_t>(channel),
       static_cast<std::uint32_t>(channel >> 32)},
      {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)});
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

// Maps 64 bits to the open interval (0,1). Uses 52 high bits plus a half-ulp
// offset so every value is exactly representable and 0.0/1.0 are unreachable.
inline double open_unit(std::uint64_t word) {
  return (static_cast<double>(word >> 12) + 0.5) * 0x1p-52;
}

}  // namespace catsim::rng
