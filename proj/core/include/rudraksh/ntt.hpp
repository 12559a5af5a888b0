#pragma once

#include <cstdint>
#include <vector>

#include "rudraksh/field.hpp"
#include "rudraksh/params.hpp"

namespace rudraksh {

/** Operation counters for structural checks. */
struct NttStats {
  std::uint64_t butterflies = 0;
};

/**
 * Complete negacyclic number-theoretic transform over Z_q[x]/(x^n + 1).
 *
 * The forward transform is in-place Cooley-Tukey: natural coefficient order
 * in, bit-reversed evaluation order out, so that
 *     forward(x)[i] = sum_j x_j zeta^((2 bitrev(i) + 1) j) mod q.
 * Twiddles are zeta^bitrev(m) for m = 1 .. n-1.  The inverse transform is
 * Gentleman-Sande, consuming the same twiddle table in reverse block order
 * (zeta^bitrev(m) = -(forward twiddle)^-1 under that pairing) and halving in
 * every butterfly, which folds the 1/n scaling into the transform.
 *
 * Pointwise products use the bit-reversed domain consistently; uniform
 * matrix polynomials are sampled directly in it.
 */
class Ntt {
 public:
  explicit Ntt(const ParamSet& ps);

  void forward(Poly& x, NttStats* stats = nullptr) const;
  void inverse(Poly& x, NttStats* stats = nullptr) const;

  /** Coefficient-wise product in the transform domain. */
  Poly pointwise(const Poly& a, const Poly& b) const;

  /** acc += a * b coefficient-wise in the transform domain. */
  void pointwise_acc(Poly& acc, const Poly& a, const Poly& b) const;

  /** Full negacyclic product of two coefficient-order polynomials. */
  Poly multiply(const Poly& a, const Poly& b) const;

  const ParamSet& params() const { return ps_; }
  const Zq& zq() const { return zq_; }
  const std::vector<std::uint16_t>& zetas() const { return zetas_; }

 private:
  const ParamSet& ps_;
  Zq zq_;
  std::vector<std::uint16_t> zetas_;  // zetas_[m] = zeta^bitrev(m), m in [1, n)
};

/** Cached transform context for a parameter set. */
const Ntt& ntt_for(const ParamSet& ps);

}  // namespace rudraksh
