#include "rudraksh/kem.hpp"

#include <cassert>
#include <cstring>

#include "rudraksh/ascon.hpp"
#include "rudraksh/codec.hpp"

namespace rudraksh {

KemKeyPair kem_keygen(std::span<const std::uint8_t> coins, const ParamSet& ps) {
  assert(coins.size() == 48);
  Seed16 seed_a, seed_se, z;
  std::memcpy(seed_a.data(), coins.data(), 16);
  std::memcpy(seed_se.data(), coins.data() + 16, 16);
  std::memcpy(z.data(), coins.data() + 32, 16);

  PkeKeyPair pke = pke_keygen(seed_a, seed_se, ps);
  KemSecretKey sk;
  sk.s_hat = std::move(pke.sk.s_hat);
  sk.z = z;
  sk.pkh = ascon::hash_h(serialize_pk(pke.pk, ps));
  sk.pk = pke.pk;
  return {std::move(pke.pk), std::move(sk)};
}

KemKeyPair kem_keygen_random(const ParamSet& ps) {
  std::array<std::uint8_t, 48> coins;
  random_bytes(coins);
  return kem_keygen(coins, ps);
}

namespace {

ascon::GOutput derive_key_coins(const Seed16& pkh, const Message& msg) {
  std::array<std::uint8_t, 32> in;
  std::memcpy(in.data(), pkh.data(), 16);
  std::memcpy(in.data() + 16, msg.data(), 16);
  return ascon::hash_g(in);
}

SharedSecret rejection_key(const Bytes& ct_bytes, const Seed16& z) {
  ascon::Xof x;
  x.absorb(ct_bytes);
  x.absorb(z);
  SharedSecret ss;
  x.squeeze(ss);
  return ss;
}

}  // namespace

EncapsResult kem_encaps(const KemPublicKey& pk, const Seed16& coins, const ParamSet& ps) {
  const Seed16 pkh = ascon::hash_h(serialize_pk(pk, ps));
  const ascon::GOutput kr = derive_key_coins(pkh, coins);
  const Poly mp = arrange_msg(coins, ps);

  EncapsResult res;
  res.ct = pke_enc(pk, mp, kr.coins, ps);
  res.ss = kr.key;
  return res;
}

EncapsResult kem_encaps_random(const KemPublicKey& pk, const ParamSet& ps) {
  Seed16 msg;
  random_bytes(msg);
  return kem_encaps(pk, msg, ps);
}

SharedSecret kem_decaps(const KemSecretKey& sk, const PkeCiphertext& ct, const ParamSet& ps) {
  const Poly mp = pke_dec(PkeSecretKey{sk.s_hat}, ct, ps);
  const Message msg = original_msg(mp, ps, sk.pkh);
  const ascon::GOutput kr = derive_key_coins(sk.pkh, msg);

  const Poly mp2 = arrange_msg(msg, ps);
  if (ps.repeat == 1) assert(mp2 == mp);

  const PkeCiphertext ct_star = pke_enc(sk.pk, mp2, kr.coins, ps);
  const Bytes ct_bytes = serialize_ct(ct, ps);
  const Bytes ct_star_bytes = serialize_ct(ct_star, ps);

  const bool match = ct_equal(ct_bytes, ct_star_bytes);
  const SharedSecret reject = rejection_key(ct_bytes, sk.z);

  SharedSecret ss;
  ct_select(ss, kr.key, reject, match);
  return ss;
}

}  // namespace rudraksh
