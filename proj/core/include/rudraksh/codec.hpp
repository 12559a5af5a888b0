#pragma once

#include <cstdint>
#include <span>

#include "rudraksh/bytes.hpp"
#include "rudraksh/field.hpp"
#include "rudraksh/kem.hpp"
#include "rudraksh/params.hpp"
#include "rudraksh/pke.hpp"

namespace rudraksh {

/**
 * Rounds x in [0, q) to d bits: floor(((x << d) + floor(q/2)) / q) mod 2^d,
 * computed by exact 64-bit integer division.
 */
std::uint16_t compress_coeff(std::uint16_t x, unsigned d, std::uint16_t q);

/** Expands y in [0, 2^d) back to [0, q): (q*y + 2^(d-1)) >> d. */
std::uint16_t decompress_coeff(std::uint16_t y, unsigned d, std::uint16_t q);

/** Message-bit encoding: a coefficient of round(q / 2^B) * m, m < 2^B. */
std::uint16_t encode_coeff(std::uint16_t m, const ParamSet& ps);

/** Inverse of encode, robust to noise of magnitude below q / 2^(B+1). */
std::uint16_t decode_coeff(std::uint16_t x, const ParamSet& ps);

Poly compress_poly(const Poly& x, unsigned d, const ParamSet& ps);
Poly decompress_poly(const Poly& y, unsigned d, const ParamSet& ps);

/**
 * Spreads the message over the n_msg_coeffs message coefficients, B bits
 * per coefficient, each replicated `repeat` times consecutively.  Bits are
 * consumed LSB-first.
 */
Poly arrange_msg(const Message& msg, const ParamSet& ps);

/**
 * Inverse of arrange_msg: majority vote over each group of `repeat` copies.
 * Even-repeat ties are broken by the low bit of H(tie_seed || le32(index));
 * tie_seed defaults to all-zero and is unused by the shipped sets (repeat=1).
 */
Message original_msg(const Poly& mp, const ParamSet& ps,
                     std::span<const std::uint8_t> tie_seed = {});

/**
 * Packs n coefficients of `bits` bits each, LSB-first: coefficient 0
 * occupies the lowest-order bits of byte 0.  Trailing padding bits are zero.
 */
Bytes pack_poly(const Poly& x, unsigned bits);

/** Inverse of pack_poly; throws FormatError on wrong length or nonzero padding. */
Poly unpack_poly(std::span<const std::uint8_t> in, unsigned bits, std::size_t n);

/** pk wire format: seed_a (16 bytes) || pack(b_hat[i], log_q) for i < ell. */
Bytes serialize_pk(const PkePublicKey& pk, const ParamSet& ps);
PkePublicKey deserialize_pk(std::span<const std::uint8_t> in, const ParamSet& ps);

/** ct wire format: pack(u[i], log_p) for i < ell || pack(v, log_t + B). */
Bytes serialize_ct(const PkeCiphertext& ct, const ParamSet& ps);
PkeCiphertext deserialize_ct(std::span<const std::uint8_t> in, const ParamSet& ps);

/** sk wire format: pack(s_hat[i], log_q) for i < ell || z || pkh || pk. */
Bytes serialize_sk(const KemSecretKey& sk, const ParamSet& ps);
KemSecretKey deserialize_sk(std::span<const std::uint8_t> in, const ParamSet& ps);

}  // namespace rudraksh
