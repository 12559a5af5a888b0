#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rudraksh/bytes.hpp"
#include "rudraksh/params.hpp"

namespace rudraksh {

/**
 * One known-answer record.  Everything is regenerable from the seed:
 * keygen coins are the seed itself and the encapsulated message is
 * xof(seed, 16).
 */
struct KatRecord {
  unsigned count = 0;
  Bytes seed;  // 48 bytes
  Bytes pk, sk, ct, ss;
};

/** Deterministic byte source: xof(entropy || le32(counter), outlen). */
Bytes kat_drbg(std::span<const std::uint8_t> entropy, std::uint32_t counter, std::size_t outlen);

/** The fixed entropy input used for shipped KAT files (48 bytes 00..2f). */
Bytes kat_entropy();

/** Record number `count`, fully determined by the parameter set and count. */
KatRecord kat_record(const ParamSet& ps, unsigned count);

/** Renders n_records records as an .rsp file with a [paramname] section. */
std::string kat_generate(const ParamSet& ps, unsigned n_records);

struct KatFile {
  std::string params;  // section name
  std::vector<KatRecord> records;
};

/** Parses an .rsp file; throws FormatError on malformed input. */
KatFile kat_parse(std::istream& in);

/**
 * Regenerates every record from its seed and compares all fields.
 * Returns the failing counts (empty means the file verifies).
 */
std::vector<unsigned> kat_verify(const KatFile& file);

}  // namespace rudraksh
