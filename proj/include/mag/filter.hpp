#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mag/superimpose.hpp"

namespace mag {

// A filter hit. `sample_pos` is the super-position u whose read produced the
// hit, `alignment` the strided sub-pattern j that fired, and `super_start`
// the inferred super-position where the class pattern may begin:
// super_start = u - j - (m' - 1) * k.
struct Candidate {
  std::size_t super_start = 0;
  std::size_t sample_pos = 0;
  unsigned alignment = 0;
};

struct ScanStats {
  std::uint64_t reads = 0;
  std::uint64_t candidates = 0;
};

// k Shift-Or automata packed into one machine word. Alignment j holds class
// pattern positions j, j+k, j+2k, ... truncated to m' = floor(L/k) positions
// (further truncated to floor(w/k) when a single word cannot hold k*m' bits;
// prefix filtering only ever adds candidates). Bit j*m'+i of a class mask is
// 0 iff the code is admitted at alignment j, position i.
class FilterMachine {
 public:
  FilterMachine(const SuperPattern& sp, unsigned k, unsigned word_bits = 64);

  unsigned stride() const { return k_; }
  unsigned alignment_length() const { return m_prime_; }
  unsigned word_bits() const { return w_; }
  std::size_t pattern_length() const { return length_; }  // L of the source
  const std::vector<std::uint64_t>& mask_table() const { return masks_; }
  std::uint64_t match_mask() const { return match_mask_; }
  std::uint64_t boundary_mask() const { return ~boundary_keep_; }

  // Number of reads a full scan over n_q grams performs: floor(n_q / k).
  std::uint64_t read_budget(std::size_t n_q) const { return n_q / k_; }

  // Scan sample indices [first, last) of the gram stream; sample t reads
  // super-position u = (t+1)*k - 1. Starts (m'-1) samples early with a cold
  // state so matches straddling `first` are still seen, but emits candidates
  // only inside the range. code_at(u) must be valid for all read positions.
  template <class Source, class Sink>
  void scan_range(Source&& code_at, std::size_t first, std::size_t last, Sink&& sink,
                  ScanStats& stats) const {
    if (first >= last) return;
    const std::size_t warm = m_prime_ - 1;
    std::size_t t = first > warm ? first - warm : 0;
    const std::uint64_t* masks = masks_.data();
    std::uint64_t d = ~0ull;
    for (; t < last; ++t) {
      const std::size_t u = (t + 1) * static_cast<std::size_t>(k_) - 1;
      ++stats.reads;
      d = ((d << 1) & boundary_keep_) | masks[code_at(u)];
      if (t >= first && (d & match_mask_) != match_mask_) {
        std::uint64_t hits = ~d & match_mask_;
        do {
          const unsigned bit = static_cast<unsigned>(std::countr_zero(hits));
          hits &= hits - 1;
          const unsigned j = bit / m_prime_;
          ++stats.candidates;
          sink(Candidate{u - j - static_cast<std::size_t>(m_prime_ - 1) * k_, u, j});
        } while (hits);
      }
    }
  }

  // Full scan over a stream of n_q grams: exactly floor(n_q/k) reads.
  template <class Source, class Sink>
  void scan(Source&& code_at, std::size_t n_q, Sink&& sink, ScanStats& stats) const {
    scan_range(static_cast<Source&&>(code_at), 0, n_q / k_,
               static_cast<Sink&&>(sink), stats);
  }

 private:
  unsigned k_;
  unsigned m_prime_;
  unsigned w_;
  std::size_t length_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t match_mask_;
  std::uint64_t boundary_keep_;
};

FilterMachine build_machine(const SuperPattern& sp, unsigned k, unsigned word_bits = 64);

}  // namespace mag
