#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsurg {

// A word in a finitely generated group, stored as nonzero signed letters:
// letter k > 0 is generator k-1, letter -k its inverse. Words are kept as
// written; no automatic free reduction.
using Word = std::vector<std::int32_t>;

Word inverse_word(const Word& w);

// w repeated |exponent| times, inverted first if exponent < 0. Throws
// std::length_error if the result would exceed an internal sanity bound.
Word word_power(const Word& w, std::int64_t exponent);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  bool operator==(const GroupPresentation& other) const = default;
};

bool well_formed_word(const Word& w, std::size_t generator_count) noexcept;

// True iff every letter of every relator names a listed generator.
bool well_formed(const GroupPresentation& p) noexcept;

}  // namespace tsurg
