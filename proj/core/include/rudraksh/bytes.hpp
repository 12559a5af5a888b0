#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rudraksh {

using Bytes = std::vector<std::uint8_t>;

/** 128-bit values: seeds, hashes, messages and shared secrets. */
using Seed16 = std::array<std::uint8_t, 16>;
using Message = std::array<std::uint8_t, 16>;
using SharedSecret = std::array<std::uint8_t, 16>;

/** Thrown when serialized input (keys, ciphertexts, KAT files) is malformed. */
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Lowercase hex encoding. */
std::string to_hex(std::span<const std::uint8_t> data);

/** Decodes hex (upper or lower case); throws FormatError on bad input. */
Bytes from_hex(std::string_view hex);

/**
 * Constant-time equality of two equal-length byte ranges.  The full ranges
 * are always examined; the result does not leak a mismatch position.
 */
bool ct_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/**
 * Constant-time selection: copies on_true into out when condition is set,
 * on_false otherwise, without a secret-dependent branch.  All three ranges
 * must have the same length.
 */
void ct_select(std::span<std::uint8_t> out, std::span<const std::uint8_t> on_true,
               std::span<const std::uint8_t> on_false, bool condition);

/** Fills out with bytes from the operating system entropy source. */
void random_bytes(std::span<std::uint8_t> out);

}  // namespace rudraksh
