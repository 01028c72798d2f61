#include "mag/alphabet_map.hpp"

#include <algorithm>
#include <numeric>

namespace mag {

const char* to_string(MapStrategy s) {
  switch (s) {
    case MapStrategy::identity: return "identity";
    case MapStrategy::frequency: return "freq";
    case MapStrategy::balanced: return "balance";
    case MapStrategy::lowbits: return "lowbits";
  }
  return "?";
}

Histogram Histogram::of_patterns(const PatternSet& ps) {
  Histogram h;
  for (const auto& p : ps.patterns()) h.add(p);
  return h;
}

void Histogram::add(std::string_view bytes) {
  for (char c : bytes) ++counts[static_cast<unsigned char>(c)];
  total += bytes.size();
}

std::uint32_t Histogram::distinct() const {
  std::uint32_t d = 0;
  for (auto c : counts) d += c > 0;
  return d;
}

namespace {

void require_sigma_prime(std::uint32_t sigma_prime) {
  if (sigma_prime < 2 || sigma_prime > 256)
    throw config_error("sigma' must be in [2, 256], got " + std::to_string(sigma_prime));
}

// Bytes ordered by descending count, ties by ascending byte value.
std::array<int, 256> by_count_desc(const Histogram& h) {
  std::array<int, 256> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return h.counts[a] > h.counts[b];
  });
  return order;
}

// Greedy LPT: items (already heaviest-first) go into the lightest bin,
// ties to the lowest bin index. Returns the bin index per item.
template <class Weight>
std::vector<std::uint32_t> pack_bins(const std::vector<Weight>& weights,
                                     std::uint32_t bins) {
  std::vector<std::uint64_t> load(bins, 0);
  std::vector<std::uint32_t> assignment(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto lightest = static_cast<std::uint32_t>(
        std::min_element(load.begin(), load.end()) - load.begin());
    assignment[i] = lightest;
    load[lightest] += weights[i];
  }
  return assignment;
}

}  // namespace

AlphabetMap AlphabetMap::identity() {
  AlphabetMap m;
  for (int c = 0; c < 256; ++c) m.table_[c] = static_cast<std::uint8_t>(c);
  m.sigma_prime_ = 256;
  m.strategy_ = MapStrategy::identity;
  return m;
}

AlphabetMap AlphabetMap::frequency(const Histogram& h, std::uint32_t sigma_prime) {
  require_sigma_prime(sigma_prime);
  AlphabetMap m;
  const auto order = by_count_desc(h);
  for (std::uint32_t rank = 0; rank < 256; ++rank)
    m.table_[order[rank]] = static_cast<std::uint8_t>(
        rank < sigma_prime - 1 ? rank : sigma_prime - 1);
  m.sigma_prime_ = sigma_prime;
  m.strategy_ = MapStrategy::frequency;
  return m;
}

AlphabetMap AlphabetMap::balanced(const Histogram& h, std::uint32_t sigma_prime) {
  require_sigma_prime(sigma_prime);
  AlphabetMap m;
  const auto order = by_count_desc(h);
  std::vector<std::uint64_t> weights(256);
  for (int i = 0; i < 256; ++i) weights[i] = h.counts[order[i]];
  const auto bins = pack_bins(weights, sigma_prime);
  for (int i = 0; i < 256; ++i)
    m.table_[order[i]] = static_cast<std::uint8_t>(bins[i]);
  m.sigma_prime_ = sigma_prime;
  m.strategy_ = MapStrategy::balanced;
  return m;
}

AlphabetMap AlphabetMap::lowbits(unsigned ell) {
  if (ell < 1 || ell > 8)
    throw config_error("lowbits bit count must be in [1, 8], got " + std::to_string(ell));
  AlphabetMap m;
  const unsigned mask = (1u << ell) - 1;
  for (unsigned c = 0; c < 256; ++c)
    m.table_[c] = static_cast<std::uint8_t>(c & mask);
  m.sigma_prime_ = 1u << ell;
  m.strategy_ = MapStrategy::lowbits;
  return m;
}

QGramMap::QGramMap(const std::unordered_map<std::uint64_t, std::uint64_t>& gram_counts,
                   std::uint32_t sigma_prime)
    : sigma_prime_(sigma_prime) {
  require_sigma_prime(sigma_prime);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> grams(gram_counts.begin(),
                                                             gram_counts.end());
  std::sort(grams.begin(), grams.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::uint64_t> weights(grams.size());
  for (std::size_t i = 0; i < grams.size(); ++i) weights[i] = grams[i].second;
  const auto bins = pack_bins(weights, sigma_prime);
  table_.reserve(grams.size());
  for (std::size_t i = 0; i < grams.size(); ++i) table_[grams[i].first] = bins[i];
}

}  // namespace mag
