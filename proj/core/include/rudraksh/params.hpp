#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rudraksh {

/**
 * The three shipped parameter sets, named after their polynomial degree.
 * poly64 is the primary lightweight instance; poly32 and poly128 trade the
 * module rank against the degree at the same 128-bit security target.
 */
enum class ParamName { poly32, poly64, poly128 };

inline constexpr std::array<ParamName, 3> kAllParamNames = {
    ParamName::poly32, ParamName::poly64, ParamName::poly128};

/**
 * One MLWE parameter set over R_q = Z_q[x]/(x^n + 1) with module rank ell.
 * Ciphertext coefficients are compressed to log_p bits (the u component)
 * and log_t + B bits (the v component); each message-carrying coefficient
 * encodes B message bits repeated `repeat` times across the polynomial.
 */
struct ParamSet {
  ParamName name;
  std::uint16_t ell;     // module rank
  std::uint16_t n;       // polynomial degree (power of two)
  std::uint16_t q;       // modulus, prime, q = 1 mod 2n
  std::uint16_t log_q;   // ceil(log2 q)
  std::uint16_t log_p;   // u-compression width
  std::uint16_t log_t;   // v-compression width is log_t + B
  std::uint16_t eta;     // centered binomial parameter
  std::uint16_t B;       // message bits per coefficient
  std::uint16_t repeat;  // copies of each message bit
  std::uint16_t len_K;   // session key length in bits
  std::uint16_t zeta;    // smallest primitive 2n-th root of unity mod q

  std::size_t msg_bytes;      // len_K / 8
  std::size_t n_msg_coeffs;   // len_K * repeat / B (== n)
  std::size_t pk_bytes;       // msg_bytes + ell*n*log_q/8
  std::size_t sk_bytes;       // ell*n*log_q/8 + 2*msg_bytes + pk_bytes
  std::size_t ct_u_bytes;     // ell*n*log_p/8
  std::size_t ct_v_bytes;     // n*(log_t+B)/8
  std::size_t ct_bytes;       // ct_u_bytes + ct_v_bytes
};

/** Returns the named parameter set (validated once at startup). */
const ParamSet& paramset(ParamName name);

/** Looks a parameter set up by its CLI name; throws FormatError if unknown. */
const ParamSet& paramset(std::string_view name);

std::string_view to_string(ParamName name);

}  // namespace rudraksh
