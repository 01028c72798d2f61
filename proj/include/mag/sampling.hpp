#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mag {

// Draw r substrings of length m from the corpus at seeded pseudo-random
// offsets, uniform over [0, n-m]. Every sampled pattern occurs in the corpus
// by construction. Deterministic for a fixed seed.
std::vector<std::string> sample_patterns(std::string_view corpus, std::size_t r,
                                         std::size_t m, std::uint64_t seed);

}  // namespace mag
