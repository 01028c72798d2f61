#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mag {

// Pattern-set validation failure. `index` is the offending pattern,
// or -1 when the set itself is unusable (e.g. empty).
class validation_error : public std::invalid_argument {
 public:
  validation_error(const std::string& what, long index = -1)
      : std::invalid_argument(what), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

// Unusable engine parameters (q, k, sigma', mapping, ...).
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A single match: pattern `pattern_index` starts at byte `offset` of the text.
// Canonical order is (offset, pattern_index) ascending.
struct Occurrence {
  std::uint32_t pattern_index = 0;
  std::size_t offset = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend std::strong_ordering operator<=>(const Occurrence& a, const Occurrence& b) {
    if (auto c = a.offset <=> b.offset; c != std::strong_ordering::equal) return c;
    return a.pattern_index <=> b.pattern_index;
  }
};

// Validated collection of byte-string patterns. Patterns keep their input
// order and duplicates are retained (each keeps its own index). `min_length`
// is the effective filter length m.
class PatternSet {
 public:
  static PatternSet validate(std::vector<std::string> raw);

  const std::vector<std::string>& patterns() const { return patterns_; }
  const std::string& operator[](std::size_t i) const { return patterns_[i]; }
  std::size_t r() const { return patterns_.size(); }
  std::size_t min_length() const { return min_len_; }
  std::size_t max_length() const { return max_len_; }

 private:
  PatternSet() = default;
  std::vector<std::string> patterns_;
  std::size_t min_len_ = 0;
  std::size_t max_len_ = 0;
};

}  // namespace mag
