#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "mag/core.hpp"

namespace mag {

// Reference scan: tries every pattern at every offset by direct byte
// comparison. Output is sorted by (offset, pattern_index) and duplicate-free
// by construction. Quadratic; meant as an oracle, not a search path.
std::vector<Occurrence> naive_search(const PatternSet& ps, std::string_view text);

// Classic goto/fail/output automaton over raw bytes. Linear-time reference
// used to cross-check the filter engine on large inputs.
class AhoCorasick {
 public:
  explicit AhoCorasick(const PatternSet& ps);

  std::vector<Occurrence> search(std::string_view text) const;

 private:
  struct Node {
    std::vector<std::pair<unsigned char, std::int32_t>> next;  // sorted by byte
    std::int32_t fail = 0;
    std::int32_t out = -1;  // nearest proper-suffix node with output
    std::vector<std::uint32_t> ids;
  };

  std::int32_t child(std::int32_t v, unsigned char c) const;

  std::vector<Node> nodes_;
  std::vector<std::size_t> lengths_;
};

// One-shot Aho-Corasick search; same output contract as naive_search.
std::vector<Occurrence> ac_search(const PatternSet& ps, std::string_view text);

}  // namespace mag
