#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "rudraksh/bytes.hpp"

namespace rudraksh::ascon {

/** 320-bit permutation state: five 64-bit words, big-endian byte order. */
struct State {
  std::array<std::uint64_t, 5> x;
};

inline constexpr std::size_t kStateBits = 320;
inline constexpr std::size_t kRateBytes = 8;

/** The 12-round permutation p^12 (round constants 0xf0 .. 0x4b). */
void permute12(State& s);

/**
 * Ascon-Xof v1.2: 64-bit rate, 12 rounds everywhere, 10* padding,
 * arbitrary-length squeeze.  The state after absorbing the IV block is a
 * fixed constant and is stored precomputed.
 *
 * Usage: absorb any number of times, then squeeze any number of times.
 * The first squeeze call closes the absorb phase; absorbing afterwards is a
 * contract violation.
 */
class Xof {
 public:
  Xof();

  void absorb(std::span<const std::uint8_t> data);
  void squeeze(std::span<std::uint8_t> out);

  /** Permutation invocations so far (the IV block is precomputed, not counted). */
  std::uint64_t permutation_count() const { return perms_; }

 private:
  void finish_absorb();

  State s_;
  std::array<std::uint8_t, kRateBytes> buf_{};
  std::size_t buf_len_ = 0;
  std::size_t squeeze_pos_ = 0;
  bool squeezing_ = false;
  std::uint64_t perms_ = 0;
};

/** One-shot Ascon-Xof v1.2 of arbitrary output length. */
Bytes xof(std::span<const std::uint8_t> input, std::size_t outlen);

/** H: 128-bit hash, the first 16 bytes of xof(input). */
std::array<std::uint8_t, 16> hash_h(std::span<const std::uint8_t> input);

/** G: 256-bit hash split into a key half and a coin half. */
struct GOutput {
  std::array<std::uint8_t, 16> key;
  std::array<std::uint8_t, 16> coins;
};
GOutput hash_g(std::span<const std::uint8_t> input);

/** PRF: xof(seed || nonce, outlen); role separation is by input structure. */
Bytes prf(std::span<const std::uint8_t> seed, std::span<const std::uint8_t> nonce,
          std::size_t outlen);

}  // namespace rudraksh::ascon
