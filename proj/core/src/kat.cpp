#include "rudraksh/kat.hpp"

#include <istream>
#include <numeric>
#include <sstream>

#include "rudraksh/ascon.hpp"
#include "rudraksh/codec.hpp"
#include "rudraksh/kem.hpp"

namespace rudraksh {

Bytes kat_drbg(std::span<const std::uint8_t> entropy, std::uint32_t counter, std::size_t outlen) {
  ascon::Xof x;
  x.absorb(entropy);
  const std::uint8_t ctr[4] = {
      static_cast<std::uint8_t>(counter), static_cast<std::uint8_t>(counter >> 8),
      static_cast<std::uint8_t>(counter >> 16), static_cast<std::uint8_t>(counter >> 24)};
  x.absorb(ctr);
  Bytes out(outlen);
  x.squeeze(out);
  return out;
}

Bytes kat_entropy() {
  Bytes e(48);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

KatRecord kat_record(const ParamSet& ps, unsigned count) {
  KatRecord rec;
  rec.count = count;
  rec.seed = kat_drbg(kat_entropy(), count, 48);

  const KemKeyPair kp = kem_keygen(rec.seed, ps);
  const Bytes msg_bytes = ascon::xof(rec.seed, 16);
  Seed16 msg;
  std::copy(msg_bytes.begin(), msg_bytes.end(), msg.begin());
  const EncapsResult enc = kem_encaps(kp.pk, msg, ps);

  rec.pk = serialize_pk(kp.pk, ps);
  rec.sk = serialize_sk(kp.sk, ps);
  rec.ct = serialize_ct(enc.ct, ps);
  rec.ss.assign(enc.ss.begin(), enc.ss.end());
  return rec;
}

std::string kat_generate(const ParamSet& ps, unsigned n_records) {
  std::ostringstream out;
  out << "# Rudraksh KEM known-answer tests\n";
  out << "# seed[count] = Ascon-Xof(entropy || le32(count), 48) with entropy = bytes 00..2f;\n";
  out << "# keygen coins = seed; encapsulated message = Ascon-Xof(seed, 16)\n";
  out << "\n[" << to_string(ps.name) << "]\n\n";
  for (unsigned i = 0; i < n_records; ++i) {
    const KatRecord rec = kat_record(ps, i);
    out << "count = " << rec.count << "\n";
    out << "seed = " << to_hex(rec.seed) << "\n";
    out << "pk = " << to_hex(rec.pk) << "\n";
    out << "sk = " << to_hex(rec.sk) << "\n";
    out << "ct = " << to_hex(rec.ct) << "\n";
    out << "ss = " << to_hex(rec.ss) << "\n\n";
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

KatFile kat_parse(std::istream& in) {
  KatFile file;
  KatRecord rec;
  bool have_count = false;
  std::string line;

  auto flush = [&] {
    if (!have_count) return;
    if (rec.seed.empty() || rec.pk.empty() || rec.sk.empty() || rec.ct.empty() || rec.ss.empty())
      throw FormatError("incomplete KAT record");
    file.records.push_back(std::move(rec));
    rec = KatRecord{};
    have_count = false;
  };

  while (std::getline(in, line)) {
    const std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[' && s.back() == ']') {
      file.params = s.substr(1, s.size() - 2);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw FormatError("malformed KAT line: " + s);
    const std::string key = strip(s.substr(0, eq));
    const std::string val = strip(s.substr(eq + 1));
    if (key == "count") {
      flush();
      rec.count = static_cast<unsigned>(std::stoul(val));
      have_count = true;
    } else if (key == "seed") {
      rec.seed = from_hex(val);
    } else if (key == "pk") {
      rec.pk = from_hex(val);
    } else if (key == "sk") {
      rec.sk = from_hex(val);
    } else if (key == "ct") {
      rec.ct = from_hex(val);
    } else if (key == "ss") {
      rec.ss = from_hex(val);
    } else {
      throw FormatError("unknown KAT key: " + key);
    }
  }
  flush();
  if (file.params.empty()) throw FormatError("KAT file has no parameter section");
  return file;
}

std::vector<unsigned> kat_verify(const KatFile& file) {
  const ParamSet& ps = paramset(file.params);
  std::vector<unsigned> failures;
  for (const KatRecord& rec : file.records) {
    if (rec.seed.size() != 48) {
      failures.push_back(rec.count);
      continue;
    }
    const KemKeyPair kp = kem_keygen(rec.seed, ps);
    const Bytes msg_bytes = ascon::xof(rec.seed, 16);
    Seed16 msg;
    std::copy(msg_bytes.begin(), msg_bytes.end(), msg.begin());
    const EncapsResult enc = kem_encaps(kp.pk, msg, ps);

    const bool ok = rec.pk == serialize_pk(kp.pk, ps) && rec.sk == serialize_sk(kp.sk, ps) &&
                    rec.ct == serialize_ct(enc.ct, ps) &&
                    rec.ss == Bytes(enc.ss.begin(), enc.ss.end());
    if (!ok) failures.push_back(rec.count);
  }
  return failures;
}

}  // namespace rudraksh
