#include "rudraksh/codec.hpp"

#include <cassert>
#include <cstring>

#include "rudraksh/ascon.hpp"

namespace rudraksh {

std::uint16_t compress_coeff(std::uint16_t x, unsigned d, std::uint16_t q) {
  assert(x < q);
  const std::uint64_t num = (static_cast<std::uint64_t>(x) << d) + (q >> 1);
  return static_cast<std::uint16_t>((num / q) & ((std::uint64_t{1} << d) - 1));
}

std::uint16_t decompress_coeff(std::uint16_t y, unsigned d, std::uint16_t q) {
  assert(y < (1u << d));
  const std::uint64_t num = static_cast<std::uint64_t>(q) * y + (std::uint64_t{1} << (d - 1));
  return static_cast<std::uint16_t>(num >> d);
}

std::uint16_t encode_coeff(std::uint16_t m, const ParamSet& ps) {
  return decompress_coeff(m, ps.B, ps.q);
}

std::uint16_t decode_coeff(std::uint16_t x, const ParamSet& ps) {
  return compress_coeff(x, ps.B, ps.q);
}

Poly compress_poly(const Poly& x, unsigned d, const ParamSet& ps) {
  Poly r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = compress_coeff(x[i], d, ps.q);
  return r;
}

Poly decompress_poly(const Poly& y, unsigned d, const ParamSet& ps) {
  Poly r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) r[i] = decompress_coeff(y[i], d, ps.q);
  return r;
}

Poly arrange_msg(const Message& msg, const ParamSet& ps) {
  Poly mp(ps.n_msg_coeffs);
  for (std::size_t i = 0; i < mp.size(); ++i) {
    const std::size_t chunk = i / ps.repeat;  // B-bit chunk index
    std::uint16_t v = 0;
    for (unsigned b = 0; b < ps.B; ++b) {
      const std::size_t bit = chunk * ps.B + b;
      v |= static_cast<std::uint16_t>((msg[bit / 8] >> (bit % 8)) & 1) << b;
    }
    mp[i] = v;
  }
  return mp;
}

Message original_msg(const Poly& mp, const ParamSet& ps, std::span<const std::uint8_t> tie_seed) {
  assert(mp.size() == ps.n_msg_coeffs);
  Message msg{};
  const std::size_t n_chunks = ps.n_msg_coeffs / ps.repeat;
  for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) {
    for (unsigned b = 0; b < ps.B; ++b) {
      unsigned ones = 0;
      for (unsigned r = 0; r < ps.repeat; ++r)
        ones += (mp[chunk * ps.repeat + r] >> b) & 1;
      std::uint16_t bit;
      if (2 * ones != ps.repeat) {
        bit = 2 * ones > ps.repeat;
      } else {
        // even-repeat tie: deterministic pseudocoin per bit index
        const std::size_t index = chunk * ps.B + b;
        std::array<std::uint8_t, 20> in{};
        if (!tie_seed.empty()) {
          assert(tie_seed.size() == 16);
          std::memcpy(in.data(), tie_seed.data(), 16);
        }
        for (int i = 0; i < 4; ++i) in[16 + i] = static_cast<std::uint8_t>(index >> (8 * i));
        bit = ascon::hash_h(in)[0] & 1;
      }
      const std::size_t pos = chunk * ps.B + b;
      msg[pos / 8] |= static_cast<std::uint8_t>(bit << (pos % 8));
    }
  }
  return msg;
}

Bytes pack_poly(const Poly& x, unsigned bits) {
  Bytes out((x.size() * bits + 7) / 8);
  std::size_t bitpos = 0;
  for (std::uint16_t v : x) {
    assert((v >> bits) == 0);
    std::uint32_t acc = v;
    unsigned left = bits;
    while (left > 0) {
      out[bitpos / 8] |= static_cast<std::uint8_t>(acc << (bitpos % 8));
      const unsigned taken = std::min<unsigned>(left, 8 - bitpos % 8);
      acc >>= taken;
      bitpos += taken;
      left -= taken;
    }
  }
  return out;
}

Poly unpack_poly(std::span<const std::uint8_t> in, unsigned bits, std::size_t n) {
  if (in.size() != (n * bits + 7) / 8) throw FormatError("packed polynomial has wrong length");
  Poly x(n);
  std::size_t bitpos = 0;
  for (std::uint16_t& v : x) {
    std::uint32_t acc = 0;
    unsigned got = 0;
    while (got < bits) {
      const unsigned take = std::min<unsigned>(bits - got, 8 - bitpos % 8);
      const std::uint32_t byte = in[bitpos / 8] >> (bitpos % 8);
      acc |= (byte & ((1u << take) - 1)) << got;
      got += take;
      bitpos += take;
    }
    v = static_cast<std::uint16_t>(acc);
  }
  const std::size_t total = n * bits;
  if (total % 8 != 0 && (in.back() >> (total % 8)) != 0)
    throw FormatError("nonzero padding bits in packed polynomial");
  return x;
}

Bytes serialize_pk(const PkePublicKey& pk, const ParamSet& ps) {
  Bytes out(pk.seed_a.begin(), pk.seed_a.end());
  for (const Poly& p : pk.b_hat) {
    Bytes packed = pack_poly(p, ps.log_q);
    out.insert(out.end(), packed.begin(), packed.end());
  }
  assert(out.size() == ps.pk_bytes);
  return out;
}

namespace {

PolyVec unpack_polyvec_checked(std::span<const std::uint8_t> in, unsigned bits, const ParamSet& ps,
                               bool check_below_q) {
  const std::size_t per = (ps.n * bits + 7) / 8;
  PolyVec v(ps.ell);
  for (std::size_t i = 0; i < ps.ell; ++i) {
    v[i] = unpack_poly(in.subspan(i * per, per), bits, ps.n);
    if (check_below_q)
      for (std::uint16_t c : v[i])
        if (c >= ps.q) throw FormatError("coefficient out of range");
  }
  return v;
}

}  // namespace

PkePublicKey deserialize_pk(std::span<const std::uint8_t> in, const ParamSet& ps) {
  if (in.size() != ps.pk_bytes) throw FormatError("public key has wrong length");
  PkePublicKey pk;
  std::memcpy(pk.seed_a.data(), in.data(), pk.seed_a.size());
  pk.b_hat = unpack_polyvec_checked(in.subspan(16), ps.log_q, ps, true);
  return pk;
}

Bytes serialize_ct(const PkeCiphertext& ct, const ParamSet& ps) {
  Bytes out;
  out.reserve(ps.ct_bytes);
  for (const Poly& p : ct.u) {
    Bytes packed = pack_poly(p, ps.log_p);
    out.insert(out.end(), packed.begin(), packed.end());
  }
  Bytes packed_v = pack_poly(ct.v, ps.log_t + ps.B);
  out.insert(out.end(), packed_v.begin(), packed_v.end());
  assert(out.size() == ps.ct_bytes);
  return out;
}

PkeCiphertext deserialize_ct(std::span<const std::uint8_t> in, const ParamSet& ps) {
  if (in.size() != ps.ct_bytes) throw FormatError("ciphertext has wrong length");
  PkeCiphertext ct;
  ct.u = unpack_polyvec_checked(in.first(ps.ct_u_bytes), ps.log_p, ps, false);
  ct.v = unpack_poly(in.subspan(ps.ct_u_bytes), ps.log_t + ps.B, ps.n);
  return ct;
}

Bytes serialize_sk(const KemSecretKey& sk, const ParamSet& ps) {
  Bytes out;
  out.reserve(ps.sk_bytes);
  for (const Poly& p : sk.s_hat) {
    Bytes packed = pack_poly(p, ps.log_q);
    out.insert(out.end(), packed.begin(), packed.end());
  }
  out.insert(out.end(), sk.z.begin(), sk.z.end());
  out.insert(out.end(), sk.pkh.begin(), sk.pkh.end());
  Bytes pk = serialize_pk(sk.pk, ps);
  out.insert(out.end(), pk.begin(), pk.end());
  assert(out.size() == ps.sk_bytes);
  return out;
}

KemSecretKey deserialize_sk(std::span<const std::uint8_t> in, const ParamSet& ps) {
  if (in.size() != ps.sk_bytes) throw FormatError("secret key has wrong length");
  KemSecretKey sk;
  const std::size_t s_bytes = static_cast<std::size_t>(ps.ell) * ps.n * ps.log_q / 8;
  sk.s_hat = unpack_polyvec_checked(in.first(s_bytes), ps.log_q, ps, true);
  std::memcpy(sk.z.data(), in.data() + s_bytes, 16);
  std::memcpy(sk.pkh.data(), in.data() + s_bytes + 16, 16);
  sk.pk = deserialize_pk(in.subspan(s_bytes + 32), ps);
  return sk;
}

}  // namespace rudraksh
