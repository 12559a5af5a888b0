#include "rudraksh/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "rudraksh/codec.hpp"

namespace rudraksh::analysis {

namespace {

// Edge masses below this are pruned after convolutions; total discarded
// mass stays far below every tolerance in use (support sizes are < 2^16).
const Real kPruneThreshold = boost::multiprecision::pow(Real(2), -400);

}  // namespace

Pmf::Pmf(long lo, std::vector<Real> p) : lo_(lo), p_(std::move(p)) {
  assert(!p_.empty());
}

Real Pmf::at(long v) const {
  if (v < lo_ || v > hi()) return Real(0);
  return p_[static_cast<std::size_t>(v - lo_)];
}

Real Pmf::total() const {
  Real s = 0;
  for (const Real& v : p_) s += v;
  return s;
}

double Pmf::mean() const {
  Real s = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) s += Real(lo_ + static_cast<long>(i)) * p_[i];
  return s.convert_to<double>();
}

double Pmf::variance() const {
  const Real m = Real(mean());
  Real s = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const Real d = Real(lo_ + static_cast<long>(i)) - m;
    s += d * d * p_[i];
  }
  return s.convert_to<double>();
}

double Pmf::central_moment4() const {
  const Real m = Real(mean());
  Real s = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const Real d = Real(lo_ + static_cast<long>(i)) - m;
    const Real d2 = d * d;
    s += d2 * d2 * p_[i];
  }
  return s.convert_to<double>();
}

Real Pmf::tail_abs_gt(double t) const {
  Real s = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const long v = lo_ + static_cast<long>(i);
    if (std::abs(static_cast<double>(v)) > t) s += p_[i];
  }
  return s;
}

void Pmf::prune() {
  std::size_t first = 0, last = p_.size();
  while (first + 1 < last && p_[first] < kPruneThreshold) ++first;
  while (last > first + 1 && p_[last - 1] < kPruneThreshold) --last;
  if (first > 0 || last < p_.size()) {
    p_ = std::vector<Real>(p_.begin() + static_cast<long>(first),
                           p_.begin() + static_cast<long>(last));
    lo_ += static_cast<long>(first);
  }
}

Pmf Pmf::convolve(const Pmf& other) const {
  std::vector<Real> r(p_.size() + other.p_.size() - 1, Real(0));
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.p_.size(); ++j) r[i + j] += p_[i] * other.p_[j];
  }
  Pmf out(lo_ + other.lo_, std::move(r));
  out.prune();
  return out;
}

Pmf Pmf::product(const Pmf& other) const {
  std::map<long, Real> vals;
  for (std::size_t i = 0; i < p_.size(); ++i)
    for (std::size_t j = 0; j < other.p_.size(); ++j) {
      const long v = (lo_ + static_cast<long>(i)) * (other.lo_ + static_cast<long>(j));
      vals[v] += p_[i] * other.p_[j];
    }
  const long lo = vals.begin()->first;
  const long hi = vals.rbegin()->first;
  std::vector<Real> r(static_cast<std::size_t>(hi - lo + 1), Real(0));
  for (const auto& [v, p] : vals) r[static_cast<std::size_t>(v - lo)] = p;
  return Pmf(lo, std::move(r));
}

Pmf Pmf::power_convolve(unsigned k) const {
  assert(k >= 1);
  Pmf sq = *this;
  std::optional<Pmf> res;
  while (k) {
    if (k & 1) res = res ? res->convolve(sq) : sq;
    k >>= 1;
    if (k) sq = sq.convolve(sq);
  }
  return *res;
}

Pmf Pmf::negate() const {
  std::vector<Real> r(p_.rbegin(), p_.rend());
  return Pmf(-hi(), std::move(r));
}

Pmf cbd_pmf(unsigned eta) {
  std::vector<Real> p(2 * eta + 1);
  Real denom = boost::multiprecision::pow(Real(4), static_cast<int>(eta));
  // binomial(2*eta, k) masses
  std::vector<long> c(2 * eta + 1, 0);
  c[0] = 1;
  for (unsigned row = 1; row <= 2 * eta; ++row)
    for (unsigned k = row; k > 0; --k) c[k] += c[k - 1];
  for (unsigned k = 0; k <= 2 * eta; ++k) p[k] = Real(c[k]) / denom;
  return Pmf(-static_cast<long>(eta), std::move(p));
}

Pmf rounding_pmf(unsigned d, std::uint16_t q) {
  std::map<long, unsigned> counts;
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint16_t y = compress_coeff(static_cast<std::uint16_t>(x), d, q);
    const std::uint16_t r = decompress_coeff(y, d, q);
    long e = (static_cast<long>(x) - r) % q;
    if (e > q / 2) e -= q;
    if (e < -(q / 2)) e += q;
    ++counts[e];
  }
  const long lo = counts.begin()->first;
  const long hi = counts.rbegin()->first;
  std::vector<Real> p(static_cast<std::size_t>(hi - lo + 1), Real(0));
  for (const auto& [v, c] : counts) p[static_cast<std::size_t>(v - lo)] = Real(c) / q;
  return Pmf(lo, std::move(p));
}

namespace {

Pmf compute_noise_pmf(const ParamSet& ps) {
  const Pmf cbd = cbd_pmf(ps.eta);
  const Pmf du = rounding_pmf(ps.log_p, ps.q);
  const Pmf dv = rounding_pmf(ps.log_t + ps.B, ps.q);
  const unsigned ln = static_cast<unsigned>(ps.ell) * ps.n;

  const Pmf t_es = cbd.product(cbd).power_convolve(ln);
  const Pmf t_sd = cbd.product(cbd.convolve(du)).power_convolve(ln);
  return t_es.convolve(t_sd).convolve(cbd).convolve(dv.negate());
}

/** The heavy convolutions are memoized per distinct noise-relevant knob set. */
const Pmf& noise_pmf_cached(const ParamSet& ps) {
  using Key = std::tuple<std::uint16_t, std::uint16_t, std::uint16_t, std::uint16_t,
                         std::uint16_t, std::uint16_t, std::uint16_t>;
  static std::mutex mu;
  static std::map<Key, Pmf> cache;
  const Key key{ps.q, ps.ell, ps.n, ps.eta, ps.log_p, ps.log_t, ps.B};
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_noise_pmf(ps)).first;
  return it->second;
}

}  // namespace

Pmf noise_pmf(const ParamSet& ps) { return noise_pmf_cached(ps); }

double failure_log2(const ParamSet& ps) {
  const Pmf& noise = noise_pmf_cached(ps);
  const double threshold = static_cast<double>(ps.q) / (1 << (ps.B + 1));
  const Real per_coeff = noise.tail_abs_gt(threshold);
  const Real total = Real(static_cast<unsigned>(ps.n_msg_coeffs)) * per_coeff;
  return (boost::multiprecision::log(total) / boost::multiprecision::log(Real(2)))
      .convert_to<double>();
}

double repeat_failure(double f, unsigned repeat) {
  assert(repeat >= 1);
  // P(majority of `repeat` copies wrong), even-count ties failing half the time
  double total = 0;
  double c = 1;  // binomial(repeat, k)
  for (unsigned k = 0; k <= repeat; ++k) {
    if (k > 0) c = c * (repeat - k + 1) / k;
    const double term = c * std::pow(f, k) * std::pow(1 - f, repeat - k);
    if (2 * k > repeat) total += term;
    else if (2 * k == repeat) total += term / 2;
  }
  return total;
}

std::uint64_t memory_footprint_bits(unsigned n, unsigned log_q, unsigned ell,
                                    unsigned xof_state_bits) {
  const std::uint64_t poly_bits = static_cast<std::uint64_t>(n) * log_q;
  return 4 * poly_bits + ell * poly_bits + 2 * xof_state_bits;
}

std::vector<SchemeRow> comparison_table() {
  std::vector<SchemeRow> rows;
  const double published[] = {-113, -128, -179};
  const unsigned quantum[] = {105, 104, 101};
  const unsigned classical[] = {116, 114, 111};
  for (std::size_t i = 0; i < 3; ++i) {
    const ParamSet& ps = paramset(kAllParamNames[i]);
    SchemeRow row;
    row.name = std::string(to_string(ps.name));
    row.ell = ps.ell;
    row.n = ps.n;
    row.q = ps.q;
    row.eta1 = row.eta2 = ps.eta;
    row.B = ps.B;
    row.xof_state_bits = 320;
    row.bit_sec_quantum = quantum[i];
    row.bit_sec_classical = classical[i];
    row.failure_log2 = published[i];
    row.memory_bits = memory_footprint_bits(ps.n, ps.log_q, ps.ell, 320);
    row.pk_bytes = ps.pk_bytes;
    row.sk_bytes = ps.sk_bytes;
    row.ct_bytes = ps.ct_bytes;
    rows.push_back(std::move(row));
  }
  rows.push_back({"kyber512", 2, 256, 3329, 3, 2, 1, 1600, 118, 107, -139,
                  memory_footprint_bits(256, 12, 2, 1600), 800, 1632, 768});
  rows.push_back({"newhope512", 1, 512, 12289, 4, 4, 1, 1600, 112, 101, -213,
                  memory_footprint_bits(512, 14, 1, 1600), 928, 1888, 1120});
  return rows;
}

}  // namespace rudraksh::analysis
