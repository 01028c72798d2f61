#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mag/alphabet_map.hpp"
#include "mag/core.hpp"

namespace mag {

// Maximum super-alphabet size sigma'^q (mask table entries).
inline constexpr std::uint32_t kMaxGramSpace = 1u << 24;
inline constexpr unsigned kMaxQ = 8;

// q-gram encoding parameters: gram length, byte map and the derived
// super-alphabet size sigma'^q.
struct GramConfig {
  GramConfig(unsigned q, AlphabetMap map);

  unsigned q;
  AlphabetMap map;
  std::uint32_t sigma_prime;  // map.sigma_prime()
  std::uint32_t gram_space;   // sigma'^q, <= kMaxGramSpace
};

// Little-endian Horner code of q mapped bytes starting at p:
// map(p[0]) + map(p[1])*sigma' + ... + map(p[q-1])*sigma'^(q-1).
inline std::uint32_t encode_gram_at(const GramConfig& cfg, const char* p) {
  const auto& t = cfg.map.table();
  std::uint32_t code = t[static_cast<unsigned char>(p[cfg.q - 1])];
  for (unsigned i = cfg.q - 1; i-- > 0;)
    code = code * cfg.sigma_prime + t[static_cast<unsigned char>(p[i])];
  return code;
}

// `gram` must hold exactly q bytes.
std::uint32_t encode_gram(const GramConfig& cfg, std::string_view gram);

// Whole text cut into floor(n/q) non-overlapping grams at boundaries 0, q,
// 2q, ...; the trailing n mod q bytes carry no gram.
struct EncodedText {
  std::vector<std::uint32_t> supers;
  std::size_t text_len = 0;
};

EncodedText encode_text(const GramConfig& cfg, std::string_view text);

// On-the-fly code of the gram at super-position u (bytes [u*q, u*q+q)).
// Agrees bit-for-bit with encode_text(cfg, text).supers[u].
std::uint32_t gram_at(const GramConfig& cfg, std::string_view text, std::size_t u);

// Non-overlapping factorization of p shifted by s: gram j covers bytes
// [s + j*q, s + (j+1)*q). Requires s + grams*q <= |p|.
std::vector<std::uint32_t> factor_pattern(const GramConfig& cfg, std::string_view p,
                                          unsigned shift, std::size_t grams);

// Overlapping factorization: |p| - q + 1 grams, gram j covers [j, j+q).
std::vector<std::uint32_t> factor_pattern_overlapping(const GramConfig& cfg,
                                                      std::string_view p);

}  // namespace mag
