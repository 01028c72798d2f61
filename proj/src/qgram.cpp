#include "mag/qgram.hpp"

#include <stdexcept>

namespace mag {

GramConfig::GramConfig(unsigned q_, AlphabetMap map_)
    : q(q_), map(std::move(map_)), sigma_prime(map.sigma_prime()) {
  if (q < 1 || q > kMaxQ)
    throw config_error("q must be in [1, " + std::to_string(kMaxQ) + "], got " +
                       std::to_string(q));
  std::uint64_t space = 1;
  for (unsigned i = 0; i < q; ++i) {
    space *= sigma_prime;
    if (space > kMaxGramSpace)
      throw config_error("sigma'^q exceeds the table budget (" +
                         std::to_string(sigma_prime) + "^" + std::to_string(q) +
                         " > 2^24); lower q or reduce the alphabet");
  }
  gram_space = static_cast<std::uint32_t>(space);
}

std::uint32_t encode_gram(const GramConfig& cfg, std::string_view gram) {
  if (gram.size() != cfg.q)
    throw std::length_error("encode_gram needs exactly q bytes");
  return encode_gram_at(cfg, gram.data());
}

EncodedText encode_text(const GramConfig& cfg, std::string_view text) {
  EncodedText enc;
  enc.text_len = text.size();
  const std::size_t n_q = text.size() / cfg.q;
  enc.supers.resize(n_q);
  for (std::size_t u = 0; u < n_q; ++u)
    enc.supers[u] = encode_gram_at(cfg, text.data() + u * cfg.q);
  return enc;
}

std::uint32_t gram_at(const GramConfig& cfg, std::string_view text, std::size_t u) {
  if (u * cfg.q + cfg.q > text.size())
    throw std::out_of_range("gram position " + std::to_string(u) + " out of text");
  return encode_gram_at(cfg, text.data() + u * cfg.q);
}

std::vector<std::uint32_t> factor_pattern(const GramConfig& cfg, std::string_view p,
                                          unsigned shift, std::size_t grams) {
  if (shift >= cfg.q) throw std::length_error("shift must be < q");
  if (shift + grams * cfg.q > p.size())
    throw std::length_error("pattern too short for requested shift/length");
  std::vector<std::uint32_t> out(grams);
  for (std::size_t j = 0; j < grams; ++j)
    out[j] = encode_gram_at(cfg, p.data() + shift + j * cfg.q);
  return out;
}

std::vector<std::uint32_t> factor_pattern_overlapping(const GramConfig& cfg,
                                                      std::string_view p) {
  if (p.size() < cfg.q)
    throw std::length_error("pattern shorter than q");
  std::vector<std::uint32_t> out(p.size() - cfg.q + 1);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = encode_gram_at(cfg, p.data() + j);
  return out;
}

}  // namespace mag
