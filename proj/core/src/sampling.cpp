#include "rudraksh/sampling.hpp"

#include <cassert>

#include "rudraksh/ascon.hpp"

namespace rudraksh {

namespace {

/** LSB-first bit stream over XOF output; never rereads a bit. */
class BitReader {
 public:
  explicit BitReader(ascon::Xof& xof) : xof_(xof) {}

  std::uint32_t take(unsigned bits) {
    if (nbits_ < bits) {
      std::uint8_t tmp[8];
      const unsigned fill = (64 - nbits_) / 8;
      xof_.squeeze({tmp, fill});
      for (unsigned i = 0; i < fill; ++i) {
        acc_ |= std::uint64_t{tmp[i]} << nbits_;
        nbits_ += 8;
      }
    }
    const std::uint32_t v = static_cast<std::uint32_t>(acc_ & ((1u << bits) - 1));
    acc_ >>= bits;
    nbits_ -= bits;
    return v;
  }

 private:
  ascon::Xof& xof_;
  std::uint64_t acc_ = 0;
  unsigned nbits_ = 0;
};

}  // namespace

Poly sample_uniform_poly(const Seed16& seed, std::uint8_t row, std::uint8_t col,
                         const ParamSet& ps, RejectionStats* stats) {
  ascon::Xof xof;
  xof.absorb(seed);
  const std::uint8_t nonce[2] = {row, col};
  xof.absorb(nonce);
  BitReader bits(xof);

  Poly p(ps.n);
  for (std::size_t i = 0; i < p.size();) {
    const std::uint32_t chunk = bits.take(ps.log_q);
    if (stats) ++stats->chunks;
    if (chunk < ps.q) {
      p[i++] = static_cast<std::uint16_t>(chunk);
      if (stats) ++stats->accepted;
    }
  }
  return p;
}

Poly sample_cbd_poly(const Seed16& seed, std::uint8_t nonce, const ParamSet& ps) {
  assert(ps.eta == 2);
  const Bytes stream = ascon::prf(seed, {&nonce, 1}, ps.n / 2);
  Poly p(ps.n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::uint32_t nib = (stream[i / 2] >> (4 * (i % 2))) & 0xf;
    const std::uint32_t a = (nib & 1) + (nib >> 1 & 1);
    const std::uint32_t b = (nib >> 2 & 1) + (nib >> 3 & 1);
    std::uint32_t v = a - b;
    v += ps.q & (0u - (v >> 31));
    p[i] = static_cast<std::uint16_t>(v);
  }
  return p;
}

}  // namespace rudraksh
