#pragma once

#include <cstdint>

#include "rudraksh/bytes.hpp"
#include "rudraksh/field.hpp"
#include "rudraksh/params.hpp"

namespace rudraksh {

/** Rejection-sampling counters; the acceptance rate is q / 2^log_q. */
struct RejectionStats {
  std::uint64_t chunks = 0;    // log_q-bit chunks drawn
  std::uint64_t accepted = 0;  // chunks below q
};

/**
 * Uniform polynomial in the transform domain: log_q-bit chunks are read
 * LSB-first from xof(seed || row || col) and accepted when below q.  Matrix
 * entry (r, c) of A uses (row, col) = (r, c); a transposed entry swaps the
 * indices at generation instead of materializing the matrix.
 */
Poly sample_uniform_poly(const Seed16& seed, std::uint8_t row, std::uint8_t col,
                         const ParamSet& ps, RejectionStats* stats = nullptr);

/**
 * Centered binomial polynomial with eta = 2: each nibble of
 * prf(seed || nonce, n/2 bytes) yields one coefficient
 * popcount(bits 0..1) - popcount(bits 2..3), mapped into [0, q).
 */
Poly sample_cbd_poly(const Seed16& seed, std::uint8_t nonce, const ParamSet& ps);

}  // namespace rudraksh
