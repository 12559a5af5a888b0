#include "rudraksh/params.hpp"

#include <cassert>
#include <stdexcept>

#include "rudraksh/bytes.hpp"

namespace rudraksh {

namespace {

constexpr bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

constexpr std::uint32_t pow_mod(std::uint32_t base, std::uint32_t e, std::uint32_t q) {
  std::uint64_t acc = 1, b = base % q;
  while (e) {
    if (e & 1) acc = acc * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

/**
 * Smallest primitive 2n-th root of unity mod q.  With n a power of two,
 * g has order exactly 2n iff g^n = -1 mod q.
 */
constexpr std::uint16_t smallest_zeta(std::uint16_t n, std::uint16_t q) {
  for (std::uint32_t g = 2; g < q; ++g)
    if (pow_mod(g, n, q) == static_cast<std::uint32_t>(q - 1))
      return static_cast<std::uint16_t>(g);
  return 0;
}

ParamSet make(ParamName name, std::uint16_t ell, std::uint16_t n, std::uint16_t q,
              std::uint16_t log_q, std::uint16_t log_p, std::uint16_t log_t,
              std::uint16_t eta, std::uint16_t B, std::uint16_t repeat) {
  ParamSet ps{};
  ps.name = name;
  ps.ell = ell;
  ps.n = n;
  ps.q = q;
  ps.log_q = log_q;
  ps.log_p = log_p;
  ps.log_t = log_t;
  ps.eta = eta;
  ps.B = B;
  ps.repeat = repeat;
  ps.len_K = 128;
  ps.zeta = smallest_zeta(n, q);

  assert(is_prime(q));
  assert((n & (n - 1)) == 0);
  assert((q - 1) % (2 * n) == 0);
  assert((1u << (log_q - 1)) < q && q < (1u << log_q));
  assert(log_p < log_q);
  assert(log_t + B < log_p);
  assert(static_cast<unsigned>(n) * B == static_cast<unsigned>(ps.len_K) * repeat);
  assert(ps.zeta != 0);
  assert(pow_mod(ps.zeta, n, q) == static_cast<std::uint32_t>(q - 1));

  ps.msg_bytes = ps.len_K / 8;
  ps.n_msg_coeffs = static_cast<std::size_t>(ps.len_K) * repeat / B;
  assert(ps.n_msg_coeffs == n);
  ps.pk_bytes = ps.msg_bytes + static_cast<std::size_t>(ell) * n * log_q / 8;
  ps.sk_bytes = static_cast<std::size_t>(ell) * n * log_q / 8 + 2 * ps.msg_bytes + ps.pk_bytes;
  ps.ct_u_bytes = static_cast<std::size_t>(ell) * n * log_p / 8;
  ps.ct_v_bytes = static_cast<std::size_t>(n) * (log_t + B) / 8;
  ps.ct_bytes = ps.ct_u_bytes + ps.ct_v_bytes;
  return ps;
}

}  // namespace

const ParamSet& paramset(ParamName name) {
  static const ParamSet poly32 = make(ParamName::poly32, 21, 32, 31873, 15, 12, 3, 2, 4, 1);
  static const ParamSet poly64 = make(ParamName::poly64, 9, 64, 7681, 13, 10, 3, 2, 2, 1);
  static const ParamSet poly128 = make(ParamName::poly128, 4, 128, 3329, 12, 10, 2, 2, 1, 1);
  switch (name) {
    case ParamName::poly32: return poly32;
    case ParamName::poly64: return poly64;
    case ParamName::poly128: return poly128;
  }
  throw std::logic_error("invalid ParamName");
}

const ParamSet& paramset(std::string_view name) {
  for (ParamName pn : kAllParamNames)
    if (to_string(pn) == name) return paramset(pn);
  throw FormatError("unknown parameter set: " + std::string(name));
}

std::string_view to_string(ParamName name) {
  switch (name) {
    case ParamName::poly32: return "poly32";
    case ParamName::poly64: return "poly64";
    case ParamName::poly128: return "poly128";
  }
  return "";
}

}  // namespace rudraksh
