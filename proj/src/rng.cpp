#include "rshe/rng.hpp"

#include <cmath>
#include <numbers>

namespace rshe::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& x,
                         const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * x[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * x[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

inline double to_open_unit(std::uint32_t v) {
  // (v + 0.5) / 2^32, never exactly 0 or 1
  return (static_cast<double>(v) + 0.5) * 0x1p-32;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint32_t c0,
                                        std::uint32_t c1, std::uint32_t tag) {
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const auto out = philox4x32({c0, c1, tag, 0u}, key);
  const double u1 = to_open_unit(out[0]);
  const double u2 = to_open_unit(out[1]);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

double gaussian_at(std::uint64_t seed, std::int64_t k, std::int32_t idx,
                   std::uint32_t tag) {
  const std::int64_t block = (k >= 0) ? k / 2 : (k - 1) / 2;
  const int parity = static_cast<int>(k - 2 * block);
  const auto pair = gaussian_pair(seed, static_cast<std::uint32_t>(block),
                                  static_cast<std::uint32_t>(idx), tag);
  return parity == 0 ? pair.first : pair.second;
}

double uniform01(std::uint64_t seed, std::uint32_t c0, std::uint32_t c1,
                 std::uint32_t tag) {
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return to_open_unit(philox4x32({c0, c1, tag, 0u}, key)[0]);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t salt) {
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const auto out = philox4x32({static_cast<std::uint32_t>(salt),
                               static_cast<std::uint32_t>(salt >> 32),
                               kTagDerive, 0u},
                              key);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace rshe::rng
