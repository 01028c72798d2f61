#include "mag/core.hpp"

#include <algorithm>

namespace mag {

PatternSet PatternSet::validate(std::vector<std::string> raw) {
  if (raw.empty()) throw validation_error("pattern set is empty", -1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].empty())
      throw validation_error("pattern " + std::to_string(i) + " is empty",
                             static_cast<long>(i));
  }
  PatternSet ps;
  ps.patterns_ = std::move(raw);
  ps.min_len_ = ps.patterns_[0].size();
  ps.max_len_ = ps.patterns_[0].size();
  for (const auto& p : ps.patterns_) {
    ps.min_len_ = std::min(ps.min_len_, p.size());
    ps.max_len_ = std::max(ps.max_len_, p.size());
  }
  return ps;
}

}  // namespace mag
