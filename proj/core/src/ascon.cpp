#include "rudraksh/ascon.hpp"

#include <cassert>

namespace rudraksh::ascon {

namespace {

constexpr std::array<std::uint8_t, 12> kRoundConstants = {
    0xf0, 0xe1, 0xd2, 0xc3, 0xb4, 0xa5, 0x96, 0x87, 0x78, 0x69, 0x5a, 0x4b};

// State after absorbing the Xof IV block 0x00400c0000000000 through p^12.
constexpr std::array<std::uint64_t, 5> kXofInitState = {
    0xb57e273b814cd416ULL, 0x2b51042562ae2420ULL, 0x66a3a7768ddf2218ULL,
    0x5aad0a7a8153650cULL, 0x4f3e0e32539493b6ULL};

inline std::uint64_t ror(std::uint64_t x, unsigned n) {
  return (x >> n) | (x << (64 - n));
}

inline std::uint64_t load_be64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
  return v;
}

}  // namespace

void permute12(State& s) {
  std::uint64_t x0 = s.x[0], x1 = s.x[1], x2 = s.x[2], x3 = s.x[3], x4 = s.x[4];
  for (std::uint8_t rc : kRoundConstants) {
    x2 ^= rc;
    // substitution layer
    x0 ^= x4;
    x4 ^= x3;
    x2 ^= x1;
    std::uint64_t t0 = x0 ^ (~x1 & x2);
    std::uint64_t t1 = x1 ^ (~x2 & x3);
    std::uint64_t t2 = x2 ^ (~x3 & x4);
    std::uint64_t t3 = x3 ^ (~x4 & x0);
    std::uint64_t t4 = x4 ^ (~x0 & x1);
    t1 ^= t0;
    t3 ^= t2;
    t0 ^= t4;
    // linear diffusion layer
    x0 = t0 ^ ror(t0, 19) ^ ror(t0, 28);
    x1 = t1 ^ ror(t1, 61) ^ ror(t1, 39);
    x2 = ~(t2 ^ ror(t2, 1) ^ ror(t2, 6));
    x3 = t3 ^ ror(t3, 10) ^ ror(t3, 17);
    x4 = t4 ^ ror(t4, 7) ^ ror(t4, 41);
  }
  s.x = {x0, x1, x2, x3, x4};
}

Xof::Xof() { s_.x = kXofInitState; }

void Xof::absorb(std::span<const std::uint8_t> data) {
  assert(!squeezing_);
  const std::uint8_t* p = data.data();
  std::size_t len = data.size();
  if (buf_len_ > 0) {
    while (len > 0 && buf_len_ < kRateBytes) {
      buf_[buf_len_++] = *p++;
      --len;
    }
    if (buf_len_ == kRateBytes) {
      s_.x[0] ^= load_be64(buf_.data());
      permute12(s_);
      ++perms_;
      buf_len_ = 0;
    }
  }
  while (len >= kRateBytes) {
    s_.x[0] ^= load_be64(p);
    permute12(s_);
    ++perms_;
    p += kRateBytes;
    len -= kRateBytes;
  }
  while (len > 0) {
    buf_[buf_len_++] = *p++;
    --len;
  }
}

void Xof::finish_absorb() {
  // 10* padding: a single 1 bit after the message, zeros to the rate boundary
  std::uint64_t last = 0;
  for (std::size_t i = 0; i < buf_len_; ++i) last |= std::uint64_t{buf_[i]} << (56 - 8 * i);
  last |= std::uint64_t{0x80} << (56 - 8 * buf_len_);
  s_.x[0] ^= last;
  permute12(s_);
  ++perms_;
  squeezing_ = true;
  squeeze_pos_ = 0;
}

void Xof::squeeze(std::span<std::uint8_t> out) {
  if (!squeezing_) finish_absorb();
  for (std::uint8_t& b : out) {
    if (squeeze_pos_ == kRateBytes) {
      permute12(s_);
      ++perms_;
      squeeze_pos_ = 0;
    }
    b = static_cast<std::uint8_t>(s_.x[0] >> (56 - 8 * squeeze_pos_));
    ++squeeze_pos_;
  }
}

Bytes xof(std::span<const std::uint8_t> input, std::size_t outlen) {
  Xof x;
  x.absorb(input);
  Bytes out(outlen);
  x.squeeze(out);
  return out;
}

std::array<std::uint8_t, 16> hash_h(std::span<const std::uint8_t> input) {
  Xof x;
  x.absorb(input);
  std::array<std::uint8_t, 16> out;
  x.squeeze(out);
  return out;
}

GOutput hash_g(std::span<const std::uint8_t> input) {
  Xof x;
  x.absorb(input);
  GOutput out;
  x.squeeze(out.key);
  x.squeeze(out.coins);
  return out;
}

Bytes prf(std::span<const std::uint8_t> seed, std::span<const std::uint8_t> nonce,
          std::size_t outlen) {
  Xof x;
  x.absorb(seed);
  x.absorb(nonce);
  Bytes out(outlen);
  x.squeeze(out);
  return out;
}

}  // namespace rudraksh::ascon
