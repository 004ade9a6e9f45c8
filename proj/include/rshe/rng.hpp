#pragma once

#include <array>
#include <cstdint>
#include <utility>

// Counter-based random streams (Philox4x32-10). Every draw is a pure
// function of (seed, counter words), so parallel generation order and
// replica scheduling never affect the sampled values.

namespace rshe::rng {

// One Philox4x32-10 block.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

// Two independent N(0,1) draws from block (c0, c1, tag).
std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint32_t c0,
                                        std::uint32_t c1, std::uint32_t tag);

// One N(0,1) draw indexed by a (possibly negative) step index k: draws are
// taken pairwise from blocks (floor(k/2), idx, tag).
double gaussian_at(std::uint64_t seed, std::int64_t k, std::int32_t idx,
                   std::uint32_t tag);

// Uniform double in (0,1), one block per counter.
double uniform01(std::uint64_t seed, std::uint32_t c0, std::uint32_t c1,
                 std::uint32_t tag);

// Derived 64-bit sub-seed (e.g. per-replica lattice seeds).
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t salt);

// Stream tags (counter word 3) keeping independent uses apart.
inline constexpr std::uint32_t kTagLattice = 1;
inline constexpr std::uint32_t kTagWalk = 2;
inline constexpr std::uint32_t kTagDerive = 3;
inline constexpr std::uint32_t kTagTest = 1000;

}  // namespace rshe::rng
