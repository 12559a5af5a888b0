#include "rudraksh/bytes.hpp"

#include <cassert>
#include <cerrno>
#include <cstring>
#include <unistd.h>

namespace rudraksh {

std::string to_hex(std::span<const std::uint8_t> data) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

bool ct_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  assert(a.size() == b.size());
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc |= a[i] ^ b[i];
  return acc == 0;
}

void ct_select(std::span<std::uint8_t> out, std::span<const std::uint8_t> on_true,
               std::span<const std::uint8_t> on_false, bool condition) {
  assert(out.size() == on_true.size() && out.size() == on_false.size());
  const std::uint8_t mask = static_cast<std::uint8_t>(-static_cast<std::uint8_t>(condition));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((on_true[i] & mask) | (on_false[i] & ~mask));
}

void random_bytes(std::span<std::uint8_t> out) {
  std::size_t off = 0;
  while (off < out.size()) {
    std::size_t chunk = std::min<std::size_t>(out.size() - off, 256);
    if (::getentropy(out.data() + off, chunk) != 0)
      throw std::runtime_error(std::string("getentropy: ") + std::strerror(errno));
    off += chunk;
  }
}

}  // namespace rudraksh
