#pragma once

#include "rudraksh/bytes.hpp"
#include "rudraksh/field.hpp"
#include "rudraksh/params.hpp"

namespace rudraksh {

/** MLWE public key: matrix seed and b_hat = A o s_hat + e_hat (transform domain). */
struct PkePublicKey {
  Seed16 seed_a{};
  PolyVec b_hat;
};

/** MLWE secret key: s_hat in the transform domain. */
struct PkeSecretKey {
  PolyVec s_hat;
};

struct PkeKeyPair {
  PkePublicKey pk;
  PkeSecretKey sk;
};

/** Ciphertext before compression packing: u (rank ell) and v (one poly). */
struct PkeCiphertext {
  PolyVec u;
  Poly v;
};

/**
 * Key generation from two 16-byte seeds: seed_a expands to the public
 * matrix, seed_se to the secret and error vectors (nonces 0..ell-1 and
 * ell..2ell-1).
 */
PkeKeyPair pke_keygen(const Seed16& seed_a, const Seed16& seed_se, const ParamSet& ps);

/**
 * Encryption of an arranged message polynomial (coefficients < 2^B) under
 * coins r: s', e' use nonces 0..2ell-1, e'' uses nonce 2ell; u and v are
 * compressed to log_p and log_t + B bits.
 */
PkeCiphertext pke_enc(const PkePublicKey& pk, const Poly& msg_poly, const Seed16& coins,
                      const ParamSet& ps);

/** Decryption to the message polynomial (coefficients < 2^B). */
Poly pke_dec(const PkeSecretKey& sk, const PkeCiphertext& ct, const ParamSet& ps);

/**
 * The pre-decode polynomial v' - u'^T s, for noise instrumentation: the
 * difference from the encoded message is exactly the decryption noise.
 */
Poly pke_dec_raw(const PkeSecretKey& sk, const PkeCiphertext& ct, const ParamSet& ps);

}  // namespace rudraksh
