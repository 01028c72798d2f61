#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mag/core.hpp"
#include "mag/qgram.hpp"

namespace mag {

// Position-wise union of gram classes over the pattern set.
//
// Strided mode unions the non-overlapping factorizations of all q shifts of
// every pattern's first-m-byte prefix, truncated to the common length
// L_q = floor((m - q + 1) / q). Overlapping mode unions the overlapping
// factorizations (used by the plain Shift-Or comparison path, stride 1).
//
// Classes are never stored densely; consumers stream the (position, code)
// admissions straight into filter masks. materialize_classes() exists for
// introspection and tests.
class SuperPattern {
 public:
  enum class Mode { strided, overlapping };

  SuperPattern(const PatternSet& ps, const GramConfig& cfg, Mode mode = Mode::strided);

  std::size_t length() const { return length_; }  // positions
  Mode mode() const { return mode_; }
  const GramConfig& config() const { return cfg_; }
  const PatternSet& patterns() const { return *ps_; }

  template <class Fn>
  void for_each_admission(Fn&& fn) const {
    const unsigned q = cfg_.q;
    for (const std::string& p : ps_->patterns()) {
      if (mode_ == Mode::strided) {
        // All accesses stay inside the first m bytes: s + L_q*q - 1 <= m - 1.
        for (unsigned s = 0; s < q; ++s)
          for (std::size_t j = 0; j < length_; ++j)
            fn(j, encode_gram_at(cfg_, p.data() + s + j * q));
      } else {
        for (std::size_t j = 0; j < length_; ++j)
          fn(j, encode_gram_at(cfg_, p.data() + j));
      }
    }
  }

  // Sorted, duplicate-free class contents per position. O(r*q*L) transient.
  std::vector<std::vector<std::uint32_t>> materialize_classes() const;

 private:
  const PatternSet* ps_;
  GramConfig cfg_;
  Mode mode_;
  std::size_t length_;
};

SuperPattern build_superpattern(const PatternSet& ps, const GramConfig& cfg);

// Number of distinct length-L code strings the class pattern admits
// (product of class sizes), saturating on overflow.
struct ClassMatchCount {
  std::uint64_t value = 0;
  bool saturated = false;
};

ClassMatchCount class_match_count(const SuperPattern& sp);

}  // namespace mag
