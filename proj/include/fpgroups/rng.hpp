#ifndef FPGROUPS_RNG_HPP
#define FPGROUPS_RNG_HPP

#include <cstdint>
#include <random>

#include "fpgroups/word.hpp"

namespace fpg {

// Deterministic 64-bit PRNG: std::mt19937_64, whose output sequence is
// fixed by the standard.  Randomized reports always print their seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Value in [0, n); modulo mapping, which is deterministic everywhere
  // (sampling quality is irrelevant here, reproducibility is not).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::mt19937_64 eng_;
};

// Freely reduced word of exactly `length` letters: each letter is drawn
// uniformly among the signed generators that do not cancel the previous
// letter.
inline Word random_reduced_word(Rng& rng, alphabet_ptr const& alphabet,
                                std::size_t length) {
  std::size_t g = alphabet->size();
  std::vector<Letter> letters;
  if (g == 0) return Word(alphabet);
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t s;
    if (letters.empty()) {
      s = rng.below(2 * g);
    } else {
      Letter const& prev = letters.back();
      std::uint64_t cancel = 2 * prev.gen + (prev.sign > 0 ? 1 : 0);
      s = rng.below(2 * g - 1);
      if (s >= cancel) ++s;
    }
    letters.push_back({static_cast<gen_id>(s / 2), s % 2 == 0 ? +1 : -1});
  }
  return Word::reduce(alphabet, letters);
}

}  // namespace fpg

#endif
