#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "mag/alphabet_map.hpp"
#include "mag/core.hpp"
#include "mag/filter.hpp"
#include "mag/oracles.hpp"
#include "mag/qgram.hpp"
#include "mag/verify.hpp"

namespace mag {

enum class Variant { mag, smag, shiftor_og, naive, ac };

const char* to_string(Variant v);

struct EngineOptions {
  Variant variant = Variant::mag;
  std::optional<MapStrategy> mapping;      // default: balanced for small
                                           // alphabets, identity otherwise
  std::optional<std::uint32_t> sigma_prime;
  std::optional<unsigned> q;
  std::optional<unsigned> k;
  unsigned lowbits = 0;                    // required with MapStrategy::lowbits
  unsigned threads = 1;
  std::string_view histogram_sample{};     // optional text sample for the
                                           // histogram (first 1 MiB is used)
};

struct Metrics {
  std::uint64_t filter_reads = 0;
  std::uint64_t candidates = 0;
};

struct SearchResult {
  std::vector<Occurrence> occurrences;
  Metrics metrics;
};

struct EngineInfo {
  Variant variant = Variant::mag;
  std::uint32_t r = 0;
  std::size_t m = 0;
  unsigned q = 0;  // 0 for oracle variants
  unsigned k = 0;
  std::uint32_t sigma_prime = 0;
  MapStrategy mapping = MapStrategy::identity;
};

// Compiled search engine for one pattern set. Immutable after construction;
// concurrent searches are safe. The strided variants (mag/smag) share one
// filter machine and differ only in how text grams are produced: smag
// pre-encodes the whole text in prepare(), mag computes codes on the fly.
class Engine {
 public:
  Engine(PatternSet ps, const EngineOptions& opts = {});

  const EngineInfo& info() const { return info_; }
  const PatternSet& patterns() const { return ps_; }
  const AlphabetMap& alphabet() const { return map_; }

  // Variant-specific text preprocessing. The view must stay valid for every
  // search that uses the prepared object.
  struct Prepared {
    std::string_view text;
    EncodedText encoded;  // smag only
  };

  Prepared prepare(std::string_view text) const;
  SearchResult search(const Prepared& prep) const;
  SearchResult search(std::string_view text) const;

 private:
  SearchResult strided_search(const Prepared& prep) const;
  SearchResult overlapping_search(const Prepared& prep) const;

  template <class Source>
  void scan_all(const Source& source, std::size_t n_q, bool overlapping,
                std::string_view text, std::vector<Occurrence>& out,
                Metrics& metrics) const;

  PatternSet ps_;
  EngineInfo info_;
  unsigned threads_ = 1;
  AlphabetMap map_;
  std::optional<GramConfig> cfg_;
  std::optional<FilterMachine> fm_;
  std::unique_ptr<AhoCorasick> ac_;
};

}  // namespace mag
