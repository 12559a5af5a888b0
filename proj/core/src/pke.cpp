#include "rudraksh/pke.hpp"

#include <cassert>

#include "rudraksh/codec.hpp"
#include "rudraksh/ntt.hpp"
#include "rudraksh/sampling.hpp"

namespace rudraksh {

namespace {

/** s from nonces 0..ell-1 and e from nonces ell..2ell-1, both transformed. */
std::pair<PolyVec, PolyVec> expand_secret_error(const Seed16& seed, const ParamSet& ps,
                                                const Ntt& ntt) {
  PolyVec s(ps.ell), e(ps.ell);
  for (std::size_t i = 0; i < ps.ell; ++i) {
    s[i] = sample_cbd_poly(seed, static_cast<std::uint8_t>(i), ps);
    e[i] = sample_cbd_poly(seed, static_cast<std::uint8_t>(ps.ell + i), ps);
    ntt.forward(s[i]);
    ntt.forward(e[i]);
  }
  return {std::move(s), std::move(e)};
}

}  // namespace

PkeKeyPair pke_keygen(const Seed16& seed_a, const Seed16& seed_se, const ParamSet& ps) {
  const Ntt& ntt = ntt_for(ps);
  auto [s_hat, e_hat] = expand_secret_error(seed_se, ps, ntt);

  PkePublicKey pk;
  pk.seed_a = seed_a;
  pk.b_hat = std::move(e_hat);  // b_hat[i] = sum_j A[i][j] o s_hat[j] + e_hat[i]
  for (std::size_t i = 0; i < ps.ell; ++i)
    for (std::size_t j = 0; j < ps.ell; ++j) {
      const Poly a_ij = sample_uniform_poly(seed_a, static_cast<std::uint8_t>(i),
                                            static_cast<std::uint8_t>(j), ps);
      ntt.pointwise_acc(pk.b_hat[i], a_ij, s_hat[j]);
    }

  return {std::move(pk), PkeSecretKey{std::move(s_hat)}};
}

PkeCiphertext pke_enc(const PkePublicKey& pk, const Poly& msg_poly, const Seed16& coins,
                      const ParamSet& ps) {
  assert(msg_poly.size() == ps.n_msg_coeffs);
  const Ntt& ntt = ntt_for(ps);
  const Zq& zq = ntt.zq();

  PolyVec s_hat(ps.ell);
  PolyVec e_prime(ps.ell);
  for (std::size_t i = 0; i < ps.ell; ++i) {
    s_hat[i] = sample_cbd_poly(coins, static_cast<std::uint8_t>(i), ps);
    ntt.forward(s_hat[i]);
    e_prime[i] = sample_cbd_poly(coins, static_cast<std::uint8_t>(ps.ell + i), ps);
  }
  const Poly e_pp = sample_cbd_poly(coins, static_cast<std::uint8_t>(2 * ps.ell), ps);

  // b' = A^T s' + e', with A^T entries sampled via index swap
  PolyVec b_prime(ps.ell);
  for (std::size_t i = 0; i < ps.ell; ++i) {
    Poly acc(ps.n, 0);
    for (std::size_t j = 0; j < ps.ell; ++j) {
      const Poly a_ji = sample_uniform_poly(pk.seed_a, static_cast<std::uint8_t>(j),
                                            static_cast<std::uint8_t>(i), ps);
      ntt.pointwise_acc(acc, a_ji, s_hat[j]);
    }
    ntt.inverse(acc);
    for (std::size_t k = 0; k < ps.n; ++k) acc[k] = zq.add(acc[k], e_prime[i][k]);
    b_prime[i] = std::move(acc);
  }

  // c_m = b_hat^T s' + e'' + encode(m)
  Poly cm(ps.n, 0);
  for (std::size_t j = 0; j < ps.ell; ++j) ntt.pointwise_acc(cm, pk.b_hat[j], s_hat[j]);
  ntt.inverse(cm);
  for (std::size_t k = 0; k < ps.n; ++k)
    cm[k] = zq.add(zq.add(cm[k], e_pp[k]), encode_coeff(msg_poly[k], ps));

  PkeCiphertext ct;
  ct.u.resize(ps.ell);
  for (std::size_t i = 0; i < ps.ell; ++i) ct.u[i] = compress_poly(b_prime[i], ps.log_p, ps);
  ct.v = compress_poly(cm, ps.log_t + ps.B, ps);
  return ct;
}

Poly pke_dec_raw(const PkeSecretKey& sk, const PkeCiphertext& ct, const ParamSet& ps) {
  const Ntt& ntt = ntt_for(ps);
  const Zq& zq = ntt.zq();

  Poly acc(ps.n, 0);
  for (std::size_t i = 0; i < ps.ell; ++i) {
    Poly u_hat = decompress_poly(ct.u[i], ps.log_p, ps);
    ntt.forward(u_hat);
    ntt.pointwise_acc(acc, u_hat, sk.s_hat[i]);
  }
  ntt.inverse(acc);

  const Poly v_prime = decompress_poly(ct.v, ps.log_t + ps.B, ps);
  Poly m_raw(ps.n);
  for (std::size_t k = 0; k < ps.n; ++k) m_raw[k] = zq.sub(v_prime[k], acc[k]);
  return m_raw;
}

Poly pke_dec(const PkeSecretKey& sk, const PkeCiphertext& ct, const ParamSet& ps) {
  Poly m_raw = pke_dec_raw(sk, ct, ps);
  for (std::uint16_t& c : m_raw) c = decode_coeff(c, ps);
  return m_raw;
}

}  // namespace rudraksh
