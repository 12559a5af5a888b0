#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rudraksh/params.hpp"

namespace rudraksh::analysis {

/** ~332-bit binary float; enough headroom for tail masses near 2^-200. */
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

/**
 * Probability mass function on a contiguous integer support.  Probabilities
 * below 2^-400 are pruned at the support edges after each convolution; the
 * discarded mass is far below every tolerance used by the callers.
 */
class Pmf {
 public:
  Pmf(long lo, std::vector<Real> p);

  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(p_.size()) - 1; }
  Real at(long v) const;

  Real total() const;
  double mean() const;
  double variance() const;
  /** Fourth central moment, for variance-estimator error bands. */
  double central_moment4() const;
  /** P(|X| > t) for a real threshold t. */
  Real tail_abs_gt(double t) const;

  /** Distribution of X + Y (independent). */
  Pmf convolve(const Pmf& other) const;
  /** Distribution of X * Y (independent). */
  Pmf product(const Pmf& other) const;
  /** k-fold convolution of this distribution with itself. */
  Pmf power_convolve(unsigned k) const;
  /** Distribution of -X. */
  Pmf negate() const;

 private:
  void prune();

  long lo_;
  std::vector<Real> p_;
};

/** Centered binomial PMF on [-eta, eta]. */
Pmf cbd_pmf(unsigned eta);

/**
 * PMF of the compression round-trip error x - decompress(compress(x, d), d)
 * (centered representative) for uniform x in [0, q).
 */
Pmf rounding_pmf(unsigned d, std::uint16_t q);

/**
 * Per-coefficient decryption noise:
 *   ln-fold conv of cbd*cbd           (e with s')
 * + ln-fold conv of cbd*(cbd + du)    (s with e' plus u-rounding, ln = ell*n)
 * + cbd                               (e'')
 * + negated v-rounding                (v decompression error, as the
 *                                      pipeline adds it)
 */
Pmf noise_pmf(const ParamSet& ps);

/**
 * log2 of the decryption failure probability: the per-coefficient tail
 * P(|noise| > q / 2^(B+1)) times the n_msg_coeffs message coefficients.
 */
double failure_log2(const ParamSet& ps);

/**
 * Failure probability of a repetition-coded bit given per-copy failure f:
 * majority vote, even-count ties fail with probability 1/2.
 */
double repeat_failure(double f, unsigned repeat);

/**
 * Working-memory estimate in bits: four degree-n polynomials, one rank-ell
 * vector, and two XOF-state-sized registers.
 */
std::uint64_t memory_footprint_bits(unsigned n, unsigned log_q, unsigned ell,
                                    unsigned xof_state_bits);

/** One row of the design-space comparison. */
struct SchemeRow {
  std::string name;
  unsigned ell, n;
  std::uint32_t q;
  unsigned eta1, eta2, B;
  unsigned xof_state_bits;
  unsigned bit_sec_classical, bit_sec_quantum;   // published core-SVP costs
  double failure_log2;                           // published estimate
  std::uint64_t memory_bits;
  std::size_t pk_bytes, sk_bytes, ct_bytes;      // 0 when not applicable
};

/** The three shipped sets plus the Kyber512 and NewHope512 reference rows. */
std::vector<SchemeRow> comparison_table();

}  // namespace rudraksh::analysis
