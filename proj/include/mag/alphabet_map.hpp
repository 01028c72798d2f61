#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mag/core.hpp"

namespace mag {

enum class MapStrategy { identity, frequency, balanced, lowbits };

const char* to_string(MapStrategy s);

// Per-byte occurrence counts, normally taken over the pattern set. A text
// sample can be mixed in to bias the bins toward the data being scanned.
struct Histogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  static Histogram of_patterns(const PatternSet& ps);
  void add(std::string_view bytes);
  std::uint32_t distinct() const;
};

// Surjective byte -> code table with sigma' codes. Used by the filter only;
// verification always runs on raw bytes.
class AlphabetMap {
 public:
  static AlphabetMap identity();
  // Rank by descending count (ties by ascending byte); ranks 0..sigma'-2 get
  // their rank as code, everything else (tail and unseen bytes) gets sigma'-1.
  static AlphabetMap frequency(const Histogram& h, std::uint32_t sigma_prime);
  // Greedy LPT bin packing: heaviest byte first into the currently lightest
  // bin (ties to the lowest bin index). Bin index is the code.
  static AlphabetMap balanced(const Histogram& h, std::uint32_t sigma_prime);
  // table[c] = c & (2^ell - 1), sigma' = 2^ell.
  static AlphabetMap lowbits(unsigned ell);

  std::uint32_t sigma_prime() const { return sigma_prime_; }
  MapStrategy strategy() const { return strategy_; }
  std::uint8_t code(unsigned char c) const { return table_[c]; }
  const std::array<std::uint8_t, 256>& table() const { return table_; }

 private:
  AlphabetMap() = default;
  std::array<std::uint8_t, 256> table_{};
  std::uint32_t sigma_prime_ = 256;
  MapStrategy strategy_ = MapStrategy::identity;
};

// Same greedy bin packing applied to a q-gram frequency table. The mapping is
// stored in a hash table; grams never seen in the patterns fall into the last
// bin on lookup. Lets very large q fit a fixed table budget.
class QGramMap {
 public:
  QGramMap(const std::unordered_map<std::uint64_t, std::uint64_t>& gram_counts,
           std::uint32_t sigma_prime);

  std::uint32_t sigma_prime() const { return sigma_prime_; }
  std::uint32_t code(std::uint64_t gram) const {
    auto it = table_.find(gram);
    return it == table_.end() ? sigma_prime_ - 1 : it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> table_;
  std::uint32_t sigma_prime_;
};

}  // namespace mag
