#pragma once

#include "rudraksh/bytes.hpp"
#include "rudraksh/params.hpp"
#include "rudraksh/pke.hpp"

namespace rudraksh {

using KemPublicKey = PkePublicKey;

/** CCA secret key: the PKE secret plus the rejection secret z, the public
 *  key hash, and the public key itself (needed for re-encryption). */
struct KemSecretKey {
  PolyVec s_hat;
  Seed16 z{};
  Seed16 pkh{};
  KemPublicKey pk;
};

struct KemKeyPair {
  KemPublicKey pk;
  KemSecretKey sk;
};

struct EncapsResult {
  PkeCiphertext ct;
  SharedSecret ss{};
};

/** Deterministic key generation; coins = seed_a || seed_se || z (48 bytes). */
KemKeyPair kem_keygen(std::span<const std::uint8_t> coins, const ParamSet& ps);

/** Key generation with fresh OS randomness. */
KemKeyPair kem_keygen_random(const ParamSet& ps);

/** Deterministic encapsulation; coins are the 16-byte message. */
EncapsResult kem_encaps(const KemPublicKey& pk, const Seed16& coins, const ParamSet& ps);

/** Encapsulation with fresh OS randomness. */
EncapsResult kem_encaps_random(const KemPublicKey& pk, const ParamSet& ps);

/**
 * Decapsulation with implicit rejection: re-encrypts the decrypted message
 * and compares the serialized ciphertexts in constant time; on mismatch the
 * result is H(serialize(ct) || z) instead of an error.
 */
SharedSecret kem_decaps(const KemSecretKey& sk, const PkeCiphertext& ct, const ParamSet& ps);

}  // namespace rudraksh
