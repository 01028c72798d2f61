#include "mag/oracles.hpp"

#include <algorithm>
#include <cstring>
#include <deque>

namespace mag {

std::vector<Occurrence> naive_search(const PatternSet& ps, std::string_view text) {
  std::vector<Occurrence> out;
  const std::size_t n = text.size();
  if (n < ps.min_length()) return out;
  for (std::size_t a = 0; a + ps.min_length() <= n; ++a) {
    for (std::uint32_t i = 0; i < ps.r(); ++i) {
      const std::string& p = ps[i];
      if (a + p.size() <= n && std::memcmp(text.data() + a, p.data(), p.size()) == 0)
        out.push_back({i, a});
    }
  }
  return out;  // construction order is already (offset, pattern_index)
}

AhoCorasick::AhoCorasick(const PatternSet& ps) {
  nodes_.emplace_back();
  lengths_.reserve(ps.r());
  for (std::uint32_t id = 0; id < ps.r(); ++id) {
    const std::string& p = ps[id];
    lengths_.push_back(p.size());
    std::int32_t v = 0;
    for (char ch : p) {
      const auto c = static_cast<unsigned char>(ch);
      std::int32_t u = child(v, c);
      if (u < 0) {
        u = static_cast<std::int32_t>(nodes_.size());
        nodes_.emplace_back();
        auto& next = nodes_[v].next;
        next.insert(std::lower_bound(next.begin(), next.end(), c,
                                     [](const auto& e, unsigned char b) { return e.first < b; }),
                    {c, u});
      }
      v = u;
    }
    nodes_[v].ids.push_back(id);
  }

  // BFS failure links; out links chain terminal suffix nodes.
  std::deque<std::int32_t> queue;
  for (const auto& [c, u] : nodes_[0].next) {
    (void)c;
    nodes_[u].fail = 0;
    queue.push_back(u);
  }
  while (!queue.empty()) {
    const std::int32_t v = queue.front();
    queue.pop_front();
    const std::int32_t fv = nodes_[v].fail;
    nodes_[v].out = nodes_[fv].ids.empty() ? nodes_[fv].out : fv;
    for (const auto& [c, u] : nodes_[v].next) {
      std::int32_t f = fv;
      std::int32_t w = child(f, c);
      while (w < 0 && f != 0) {
        f = nodes_[f].fail;
        w = child(f, c);
      }
      nodes_[u].fail = w >= 0 && w != u ? w : 0;
      queue.push_back(u);
    }
  }
}

std::int32_t AhoCorasick::child(std::int32_t v, unsigned char c) const {
  const auto& next = nodes_[v].next;
  auto it = std::lower_bound(next.begin(), next.end(), c,
                             [](const auto& e, unsigned char b) { return e.first < b; });
  return it != next.end() && it->first == c ? it->second : -1;
}

std::vector<Occurrence> AhoCorasick::search(std::string_view text) const {
  std::vector<Occurrence> out;
  std::int32_t v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::int32_t u = child(v, c);
    while (u < 0 && v != 0) {
      v = nodes_[v].fail;
      u = child(v, c);
    }
    v = u >= 0 ? u : 0;
    for (std::int32_t w = v; w >= 0; w = nodes_[w].out)
      for (std::uint32_t id : nodes_[w].ids)
        out.push_back({id, i + 1 - lengths_[id]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Occurrence> ac_search(const PatternSet& ps, std::string_view text) {
  return AhoCorasick(ps).search(text);
}

}  // namespace mag
