#pragma once

#include <cstdint>
#include <vector>

namespace rudraksh {

/** Polynomial in R_q, coefficient order unless noted otherwise. */
using Poly = std::vector<std::uint16_t>;
using PolyVec = std::vector<Poly>;

inline constexpr std::uint16_t kQ7681 = 7681;

/**
 * Reduces c mod 7681 by the shift-and-add chain, using 7681 = 2^13 - 2^9 + 1.
 * The 26-bit input is split as c4|c3|c2|c1|c0 (1,4,4,4,13 bits); partial sums
 * replace each 2^13 factor with 2^9 - 1.  The final fixup is one conditional
 * add and three conditional subtracts, all branchless.  Requires
 * c <= 7680 * 7680; returns the canonical residue in [0, 7681).
 */
inline std::uint16_t reduce_shift_add(std::uint32_t c) {
  const std::uint32_t c0 = c & 0x1fff;
  const std::uint32_t c1 = (c >> 13) & 0xf;
  const std::uint32_t c2 = (c >> 17) & 0xf;
  const std::uint32_t c3 = (c >> 21) & 0xf;
  const std::uint32_t c4 = (c >> 25) & 0x1;
  const std::uint32_t t0 = c4 + c3;
  const std::uint32_t t1 = t0 + c2;
  const std::uint32_t t2 = t1 + c1;
  const std::uint32_t t3 = (t2 << 1) - t0;
  const std::uint32_t t4 = (t3 << 4) - t1;
  const std::uint32_t t5 = (t4 << 4) - t2;
  const std::uint32_t t6 = t5 + c0;
  std::uint32_t d = t6 - (c4 << 12);
  d += kQ7681 & (0u - (d >> 31));
  for (int i = 0; i < 3; ++i) {
    d -= kQ7681;
    d += kQ7681 & (0u - (d >> 31));
  }
  return static_cast<std::uint16_t>(d);
}

/**
 * Branchless arithmetic mod a 15-bit prime q.  Multiplication routes through
 * the shift-and-add reduction when q is 7681 and through a Barrett reduction
 * otherwise; both accept any product below q^2.
 */
class Zq {
 public:
  explicit Zq(std::uint16_t q)
      : q_(q),
        half_plus_(static_cast<std::uint16_t>((q + 1) >> 1)),
        mu_(static_cast<std::uint32_t>((std::uint64_t{1} << 32) / q)),
        shift_add_(q == kQ7681) {}

  std::uint16_t q() const { return q_; }

  /** Canonical residue of c for any c < q^2. */
  std::uint16_t reduce(std::uint32_t c) const {
    if (shift_add_) return reduce_shift_add(c);
    return reduce_barrett(c);
  }

  /** Barrett reduction with mu = floor(2^32 / q); one conditional subtract. */
  std::uint16_t reduce_barrett(std::uint32_t c) const {
    const std::uint32_t t = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * mu_) >> 32);
    std::uint32_t r = c - t * q_;
    r -= q_;
    r += q_ & (0u - (r >> 31));
    return static_cast<std::uint16_t>(r);
  }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    std::uint32_t r = static_cast<std::uint32_t>(a) + b - q_;
    r += q_ & (0u - (r >> 31));
    return static_cast<std::uint16_t>(r);
  }

  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
    std::uint32_t r = static_cast<std::uint32_t>(a) - b;
    r += q_ & (0u - (r >> 31));
    return static_cast<std::uint16_t>(r);
  }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return reduce(static_cast<std::uint32_t>(a) * b);
  }

  /** Exact halving: x/2 when even, (x + q)/2 when odd, branchless. */
  std::uint16_t div2(std::uint16_t x) const {
    return static_cast<std::uint16_t>((x >> 1) +
                                      (half_plus_ & (0u - static_cast<std::uint32_t>(x & 1))));
  }

  /** Modular exponentiation; used for table setup on public data only. */
  std::uint16_t pow(std::uint16_t base, std::uint32_t e) const {
    std::uint32_t acc = 1, b = base;
    while (e) {
      if (e & 1) acc = reduce(acc * b);
      b = reduce(b * b);
      e >>= 1;
    }
    return static_cast<std::uint16_t>(acc);
  }

  std::uint16_t inv(std::uint16_t a) const { return pow(a, q_ - 2); }

 private:
  std::uint16_t q_;
  std::uint16_t half_plus_;
  std::uint32_t mu_;
  bool shift_add_;
};

}  // namespace rudraksh
