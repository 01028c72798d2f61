#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mag/core.hpp"
#include "mag/filter.hpp"
#include "mag/qgram.hpp"

namespace mag {

// Inclusive range of byte offsets a candidate may start at; empty when
// lo > hi (clipped away at text edges).
struct VerifyWindow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
};

// Strided filter window: any of the q shifts may have triggered the hit, so
// 2q-1 starts centered on q*super_start are checked.
VerifyWindow candidate_window(const Candidate& c, unsigned q, std::size_t n, std::size_t m);

// Overlapping-gram (plain Shift-Or) window: the hit pins the start exactly.
VerifyWindow og_candidate_window(const Candidate& c, std::size_t n, std::size_t m);

// Compare every pattern at every start in the window against the raw text;
// appends matches to out. At most (hi-lo+1) * r comparisons.
void verify_window(const PatternSet& ps, std::string_view text, const VerifyWindow& w,
                   std::vector<Occurrence>& out);

// One candidate -> exact occurrences (strided window rule).
std::vector<Occurrence> verify(const PatternSet& ps, std::string_view text,
                               const Candidate& c, const GramConfig& cfg);

// Sort by (offset, pattern_index) and drop duplicates in place.
void sort_dedup(std::vector<Occurrence>& occurrences);

// Merge per-chunk result streams into one canonical, duplicate-free list.
std::vector<Occurrence> dedup_merge(std::vector<std::vector<Occurrence>> streams);

}  // namespace mag
