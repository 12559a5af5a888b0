#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "rudraksh/bytes.hpp"
#include "rudraksh/field.hpp"
#include "rudraksh/params.hpp"

namespace rudraksh::test {

inline std::string data_path(const std::string& name) {
  return std::string(RUDRAKSH_TEST_DATA_DIR) + "/" + name;
}

/** Deterministic RNG so every test run sees the same inputs. */
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Poly random_poly(std::mt19937_64& g, const ParamSet& ps) {
  std::uniform_int_distribution<std::uint32_t> d(0, ps.q - 1u);
  Poly p(ps.n);
  for (auto& c : p) c = static_cast<std::uint16_t>(d(g));
  return p;
}

inline Seed16 random_seed(std::mt19937_64& g) {
  Seed16 s;
  for (auto& b : s) b = static_cast<std::uint8_t>(g());
  return s;
}

inline Bytes random_bytes_det(std::mt19937_64& g, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(g());
  return b;
}

/** O(n^2) negacyclic schoolbook product, the multiplication oracle. */
inline Poly schoolbook_negacyclic(const Poly& a, const Poly& b, const ParamSet& ps) {
  const Zq zq(ps.q);
  Poly r(ps.n, 0);
  for (std::size_t i = 0; i < ps.n; ++i)
    for (std::size_t j = 0; j < ps.n; ++j) {
      const std::uint16_t prod = zq.mul(a[i], b[j]);
      const std::size_t k = i + j;
      if (k < ps.n) {
        r[k] = zq.add(r[k], prod);
      } else {
        r[k - ps.n] = zq.sub(r[k - ps.n], prod);
      }
    }
  return r;
}

}  // namespace rudraksh::test
