#include "mag/superimpose.hpp"

#include <algorithm>

namespace mag {

SuperPattern::SuperPattern(const PatternSet& ps, const GramConfig& cfg, Mode mode)
    : ps_(&ps), cfg_(cfg), mode_(mode) {
  const std::size_t m = ps.min_length();
  const unsigned q = cfg.q;
  if (mode == Mode::strided) {
    if (m < 2 * static_cast<std::size_t>(q) - 1)
      throw config_error("m = " + std::to_string(m) + " is below 2q-1 = " +
                         std::to_string(2 * q - 1) +
                         "; lower q so every shift yields at least one gram");
    length_ = (m - q + 1) / q;  // L_q >= 1 by the check above
  } else {
    if (m < q)
      throw config_error("m = " + std::to_string(m) +
                         " is shorter than q; lower q");
    length_ = m - q + 1;
  }
}

std::vector<std::vector<std::uint32_t>> SuperPattern::materialize_classes() const {
  std::vector<std::vector<std::uint32_t>> classes(length_);
  for_each_admission([&](std::size_t pos, std::uint32_t code) {
    classes[pos].push_back(code);
  });
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  }
  return classes;
}

SuperPattern build_superpattern(const PatternSet& ps, const GramConfig& cfg) {
  return SuperPattern(ps, cfg, SuperPattern::Mode::strided);
}

ClassMatchCount class_match_count(const SuperPattern& sp) {
  ClassMatchCount result{1, false};
  for (const auto& cls : sp.materialize_classes()) {
    if (__builtin_mul_overflow(result.value, static_cast<std::uint64_t>(cls.size()),
                               &result.value)) {
      result.value = UINT64_MAX;
      result.saturated = true;
      break;
    }
  }
  return result;
}

}  // namespace mag
