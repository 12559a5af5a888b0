#include "rudraksh/ntt.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace rudraksh {

namespace {

std::uint32_t bitrev(std::uint32_t x, unsigned bits) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < bits; ++i) {
    r = r << 1 | (x & 1);
    x >>= 1;
  }
  return r;
}

}  // namespace

Ntt::Ntt(const ParamSet& ps) : ps_(ps), zq_(ps.q), zetas_(ps.n) {
  const unsigned logn = std::bit_width(static_cast<unsigned>(ps.n)) - 1;
  for (std::uint32_t m = 1; m < ps.n; ++m)
    zetas_[m] = zq_.pow(ps.zeta, bitrev(m, logn));
}

void Ntt::forward(Poly& x, NttStats* stats) const {
  assert(x.size() == ps_.n);
  const std::size_t n = ps_.n;
  std::size_t m = 0;
  for (std::size_t d = n / 2; d >= 1; d >>= 1) {
    for (std::size_t start = 0; start < n; start += 2 * d) {
      const std::uint16_t zeta = zetas_[++m];
      for (std::size_t j = start; j < start + d; ++j) {
        const std::uint16_t t = zq_.mul(zeta, x[j + d]);
        x[j + d] = zq_.sub(x[j], t);
        x[j] = zq_.add(x[j], t);
        if (stats) ++stats->butterflies;
      }
    }
  }
}

void Ntt::inverse(Poly& x, NttStats* stats) const {
  assert(x.size() == ps_.n);
  const std::size_t n = ps_.n;
  std::size_t m = n - 1;
  for (std::size_t d = 1; d < n; d <<= 1) {
    for (std::size_t start = 0; start < n; start += 2 * d) {
      const std::uint16_t zeta = zetas_[m--];
      for (std::size_t j = start; j < start + d; ++j) {
        const std::uint16_t t = x[j];
        x[j] = zq_.div2(zq_.add(x[j + d], t));
        x[j + d] = zq_.div2(zq_.mul(zeta, zq_.sub(x[j + d], t)));
        if (stats) ++stats->butterflies;
      }
    }
  }
}

Poly Ntt::pointwise(const Poly& a, const Poly& b) const {
  assert(a.size() == ps_.n && b.size() == ps_.n);
  Poly r(ps_.n);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = zq_.mul(a[i], b[i]);
  return r;
}

void Ntt::pointwise_acc(Poly& acc, const Poly& a, const Poly& b) const {
  assert(acc.size() == ps_.n && a.size() == ps_.n && b.size() == ps_.n);
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = zq_.add(acc[i], zq_.mul(a[i], b[i]));
}

Poly Ntt::multiply(const Poly& a, const Poly& b) const {
  Poly ah = a, bh = b;
  forward(ah);
  forward(bh);
  Poly r = pointwise(ah, bh);
  inverse(r);
  return r;
}

const Ntt& ntt_for(const ParamSet& ps) {
  static const Ntt poly32{paramset(ParamName::poly32)};
  static const Ntt poly64{paramset(ParamName::poly64)};
  static const Ntt poly128{paramset(ParamName::poly128)};
  switch (ps.name) {
    case ParamName::poly32: return poly32;
    case ParamName::poly64: return poly64;
    case ParamName::poly128: return poly128;
  }
  throw std::logic_error("invalid ParamName");
}

}  // namespace rudraksh
