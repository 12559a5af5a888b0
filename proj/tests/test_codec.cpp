#include <doctest.h>

#include <array>
#include <cstdlib>

#include "rudraksh/ascon.hpp"
#include "rudraksh/codec.hpp"
#include "rudraksh/params.hpp"
#include "test_util.hpp"

using namespace rudraksh;

namespace {

/** Centered representative of (x - decompress(compress(x))) mod q. */
int roundtrip_error(std::uint16_t x, unsigned d, std::uint16_t q) {
  const std::uint16_t r = decompress_coeff(compress_coeff(x, d, q), d, q);
  int e = (static_cast<int>(x) - r) % q;
  if (e > q / 2) e -= q;
  if (e < -(q / 2)) e += q;
  return e;
}

struct BoundCase {
  std::uint16_t q;
  unsigned d;
  int min_err, max_err;
};

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("compress and decompress fixed points") {
  CHECK(decompress_coeff(16, 5, 7681) == 3841);
  CHECK(compress_coeff(0, 10, 7681) == 0);
  CHECK(decompress_coeff(0, 10, 7681) == 0);
  CHECK(compress_coeff(3841, 5, 7681) == 16);
  // wraparound: values just below q round up to 2^d, reduced to 0
  CHECK(compress_coeff(7680, 10, 7681) == 0);
  CHECK(compress_coeff(3328, 1, 3329) == 0);
}

TEST_CASE("compress is a left inverse of decompress") {
  for (ParamName name : kAllParamNames) {
    const ParamSet& ps = paramset(name);
    for (unsigned d : {static_cast<unsigned>(ps.log_p), static_cast<unsigned>(ps.log_t + ps.B),
                       static_cast<unsigned>(ps.B)}) {
      for (std::uint32_t y = 0; y < (1u << d); ++y) {
        if (compress_coeff(decompress_coeff(static_cast<std::uint16_t>(y), d, ps.q), d, ps.q) !=
            y) {
          CAPTURE(to_string(name));
          CAPTURE(d);
          CAPTURE(y);
          REQUIRE(false);
        }
      }
    }
  }
  CHECK(true);
}

TEST_CASE("exhaustive roundtrip error bounds") {
  const BoundCase cases[] = {
      {31873, 12, -4, 4},   {31873, 7, -125, 124}, {31873, 4, -996, 996},
      {7681, 10, -4, 4},    {7681, 5, -120, 120},  {7681, 2, -960, 960},
      {3329, 10, -2, 2},    {3329, 3, -208, 208},  {3329, 1, -832, 832},
  };
  for (const BoundCase& c : cases) {
    CAPTURE(c.q);
    CAPTURE(c.d);
    int lo = 0, hi = 0;
    for (std::uint32_t x = 0; x < c.q; ++x) {
      const int e = roundtrip_error(static_cast<std::uint16_t>(x), c.d, c.q);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    CHECK(lo == c.min_err);
    CHECK(hi == c.max_err);
    const int bound = static_cast<int>((c.q + (1u << (c.d + 1)) - 1) / (1u << (c.d + 1)));
    CHECK(hi <= bound);
    CHECK(-lo <= bound);
  }
}

TEST_CASE("decode tolerates noise strictly below q/2^(B+1)") {
  const int radius[] = {995, 959, 831};
  for (std::size_t si = 0; si < 3; ++si) {
    const ParamSet& ps = paramset(kAllParamNames[si]);
    CAPTURE(to_string(ps.name));
    CHECK(radius[si] == static_cast<int>(ps.q / (1u << (ps.B + 1))) - 1);
    for (std::uint16_t m = 0; m < (1u << ps.B); ++m) {
      const std::uint16_t enc = encode_coeff(m, ps);
      for (int delta = -radius[si]; delta <= radius[si]; ++delta) {
        const std::uint16_t x =
            static_cast<std::uint16_t>((enc + delta + ps.q) % ps.q);
        if (decode_coeff(x, ps) != m) {
          CAPTURE(m);
          CAPTURE(delta);
          REQUIRE(false);
        }
      }
    }
  }
  CHECK(true);
}

TEST_CASE("message arrangement roundtrip") {
  for (ParamName name : kAllParamNames) {
    const ParamSet& ps = paramset(name);
    CAPTURE(to_string(name));
    auto g = test::rng(0xc0dec + static_cast<int>(name));
    for (int trial = 0; trial < 50; ++trial) {
      Message msg;
      for (auto& b : msg) b = static_cast<std::uint8_t>(g());
      const Poly mp = arrange_msg(msg, ps);
      REQUIRE(mp.size() == ps.n_msg_coeffs);
      for (std::uint16_t c : mp) REQUIRE(c < (1u << ps.B));
      REQUIRE(original_msg(mp, ps) == msg);
    }
  }
}

TEST_CASE("message bits are consumed LSB-first") {
  const ParamSet& ps = paramset(ParamName::poly64);  // B = 2
  Message msg{};
  msg[0] = 0b00000110;  // bits 1 and 2
  const Poly mp = arrange_msg(msg, ps);
  CHECK(mp[0] == 0b10);  // bits 0..1
  CHECK(mp[1] == 0b01);  // bits 2..3
  for (std::size_t i = 2; i < mp.size(); ++i) CHECK(mp[i] == 0);

  const ParamSet& ps128 = paramset(ParamName::poly128);  // B = 1
  const Poly mp128 = arrange_msg(msg, ps128);
  CHECK(mp128[0] == 0);
  CHECK(mp128[1] == 1);
  CHECK(mp128[2] == 1);
  CHECK(mp128[3] == 0);
}

TEST_CASE("odd repeat counts recover via majority vote") {
  // synthetic set: only the message-layout fields matter here
  ParamSet rep3 = paramset(ParamName::poly64);
  rep3.repeat = 3;
  rep3.B = 8;
  rep3.n_msg_coeffs = 48;  // 48 coefficients x 8 bits == 128 key bits x 3 copies

  auto g = test::rng(0xc0dee);
  Message msg;
  for (auto& b : msg) b = static_cast<std::uint8_t>(g());
  Poly mp = arrange_msg(msg, rep3);
  REQUIRE(original_msg(mp, rep3) == msg);
  // flip one bit in a single copy; the other two copies out-vote it
  mp[30] ^= 1u << 3;
  CHECK(original_msg(mp, rep3) == msg);
  mp[31] ^= 1u << 3;  // second copy of the same chunk flips: vote changes
  CHECK(original_msg(mp, rep3) != msg);
}

TEST_CASE("even repeat ties resolve through the seeded pseudocoin") {
  ParamSet rep4 = paramset(ParamName::poly64);
  rep4.repeat = 4;
  rep4.B = 8;
  rep4.n_msg_coeffs = 64;

  Poly mp(64, 0);
  // chunk 5, bit 2: copies 1,1,0,0 is an exact tie
  mp[5 * 4 + 0] = 1u << 2;
  mp[5 * 4 + 1] = 1u << 2;

  const Seed16 tie_seed{0x11, 0x22, 0x33};
  const Message m1 = original_msg(mp, rep4, tie_seed);
  CHECK(original_msg(mp, rep4, tie_seed) == m1);  // deterministic

  // the coin is the low bit of H(tie_seed || le32(bit index))
  const std::size_t index = 5 * 8 + 2;
  std::array<std::uint8_t, 20> in{};
  std::copy(tie_seed.begin(), tie_seed.end(), in.begin());
  for (int i = 0; i < 4; ++i) in[16 + i] = static_cast<std::uint8_t>(index >> (8 * i));
  const std::uint8_t coin = ascon::hash_h(in)[0] & 1;
  CHECK(((m1[index / 8] >> (index % 8)) & 1) == coin);

  // a clear 3-1 majority ignores the coin
  mp[5 * 4 + 2] = 1u << 2;
  const Message m2 = original_msg(mp, rep4, tie_seed);
  CHECK(((m2[index / 8] >> (index % 8)) & 1) == 1);
}

TEST_CASE("bit packing frozen vectors") {
  CHECK(to_hex(pack_poly({1, 2, 3, 4}, 13)) == "0140000c000200");
  CHECK(to_hex(pack_poly({0x1fff, 0, 0x1234}, 13)) == "ff1f00d048");
  CHECK(to_hex(pack_poly({5, 1, 2, 3}, 3)) == "8d06");
}

TEST_CASE("bit packing roundtrip at every width in use") {
  for (ParamName name : kAllParamNames) {
    const ParamSet& ps = paramset(name);
    auto g = test::rng(0xc0def + static_cast<int>(name));
    for (unsigned bits : {static_cast<unsigned>(ps.log_q), static_cast<unsigned>(ps.log_p),
                          static_cast<unsigned>(ps.log_t + ps.B)}) {
      Poly x(ps.n);
      for (auto& c : x) c = static_cast<std::uint16_t>(g() & ((1u << bits) - 1));
      const Bytes packed = pack_poly(x, bits);
      REQUIRE(packed.size() == (ps.n * bits + 7) / 8);
      REQUIRE(unpack_poly(packed, bits, ps.n) == x);
    }
  }
}

TEST_CASE("unpack rejects malformed input") {
  const Poly x = {5, 1, 2, 3};
  Bytes packed = pack_poly(x, 3);
  CHECK_THROWS_AS(unpack_poly(Bytes(packed.begin(), packed.end() - 1), 3, 4), FormatError);
  Bytes longer = packed;
  longer.push_back(0);
  CHECK_THROWS_AS(unpack_poly(longer, 3, 4), FormatError);
  Bytes bad_pad = packed;  // 12 data bits in 2 bytes: 4 padding bits
  bad_pad.back() |= 0x10;
  CHECK_THROWS_AS(unpack_poly(bad_pad, 3, 4), FormatError);
}

TEST_CASE("key and ciphertext serialization roundtrips") {
  for (ParamName name : kAllParamNames) {
    const ParamSet& ps = paramset(name);
    CAPTURE(to_string(name));
    auto g = test::rng(0xc0d10 + static_cast<int>(name));

    PkePublicKey pk;
    pk.seed_a = test::random_seed(g);
    pk.b_hat.resize(ps.ell);
    for (auto& p : pk.b_hat) p = test::random_poly(g, ps);
    const Bytes pk_bytes = serialize_pk(pk, ps);
    REQUIRE(pk_bytes.size() == ps.pk_bytes);
    const PkePublicKey pk2 = deserialize_pk(pk_bytes, ps);
    CHECK(pk2.seed_a == pk.seed_a);
    CHECK(pk2.b_hat == pk.b_hat);

    KemSecretKey sk;
    sk.s_hat.resize(ps.ell);
    for (auto& p : sk.s_hat) p = test::random_poly(g, ps);
    sk.z = test::random_seed(g);
    sk.pkh = test::random_seed(g);
    sk.pk = pk;
    const Bytes sk_bytes = serialize_sk(sk, ps);
    REQUIRE(sk_bytes.size() == ps.sk_bytes);
    const KemSecretKey sk2 = deserialize_sk(sk_bytes, ps);
    CHECK(sk2.s_hat == sk.s_hat);
    CHECK(sk2.z == sk.z);
    CHECK(sk2.pkh == sk.pkh);
    CHECK(sk2.pk.seed_a == pk.seed_a);
    CHECK(sk2.pk.b_hat == pk.b_hat);

    PkeCiphertext ct;
    ct.u.resize(ps.ell);
    for (auto& p : ct.u)
      for (std::size_t i = 0; i < ps.n; ++i)
        p.push_back(static_cast<std::uint16_t>(g() & ((1u << ps.log_p) - 1)));
    for (std::size_t i = 0; i < ps.n; ++i)
      ct.v.push_back(static_cast<std::uint16_t>(g() & ((1u << (ps.log_t + ps.B)) - 1)));
    const Bytes ct_bytes = serialize_ct(ct, ps);
    REQUIRE(ct_bytes.size() == ps.ct_bytes);
    const PkeCiphertext ct2 = deserialize_ct(ct_bytes, ps);
    CHECK(ct2.u == ct.u);
    CHECK(ct2.v == ct.v);
  }
}

TEST_CASE("deserialization validates length and range") {
  const ParamSet& ps = paramset(ParamName::poly64);
  auto g = test::rng(0xc0d11);

  PkePublicKey pk;
  pk.seed_a = test::random_seed(g);
  pk.b_hat.assign(ps.ell, Poly(ps.n, 0));
  Bytes pk_bytes = serialize_pk(pk, ps);
  CHECK_THROWS_AS(deserialize_pk(Bytes(pk_bytes.begin(), pk_bytes.end() - 1), ps), FormatError);

  // a coefficient of exactly q must be rejected (log_q bits can encode it)
  pk.b_hat[0][0] = ps.q;
  Bytes bad = serialize_pk(pk, ps);
  CHECK_THROWS_AS(deserialize_pk(bad, ps), FormatError);
  pk.b_hat[0][0] = ps.q - 1;
  CHECK_NOTHROW(deserialize_pk(serialize_pk(pk, ps), ps));

  CHECK_THROWS_AS(deserialize_ct(Bytes(ps.ct_bytes - 1, 0), ps), FormatError);
  CHECK_THROWS_AS(deserialize_ct(Bytes(ps.ct_bytes + 1, 0), ps), FormatError);
  CHECK_THROWS_AS(deserialize_sk(Bytes(ps.sk_bytes - 1, 0), ps), FormatError);
}

}  // TEST_SUITE
