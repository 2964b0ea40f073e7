#include "tsurg/presentation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tsurg {

namespace {
// Guard against runaway relator expansion (e.g. m^p for absurd p).
constexpr std::size_t kMaxWordLength = 1 << 20;
}  // namespace

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_power(const Word& w, std::int64_t exponent) {
  if (exponent == 0 || w.empty()) return {};
  const Word base = exponent < 0 ? inverse_word(w) : w;
  const std::uint64_t reps =
      exponent < 0 ? -static_cast<std::uint64_t>(exponent) : static_cast<std::uint64_t>(exponent);
  if (reps > kMaxWordLength / base.size())
    throw std::length_error("word power exceeds the maximum word length");
  Word out;
  out.reserve(base.size() * reps);
  for (std::uint64_t i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

bool well_formed_word(const Word& w, std::size_t generator_count) noexcept {
  for (std::int32_t letter : w) {
    if (letter == 0) return false;
    const std::size_t index = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    if (index > generator_count) return false;
  }
  return true;
}

bool well_formed(const GroupPresentation& p) noexcept {
  for (const Word& r : p.relators)
    if (!well_formed_word(r, p.generators.size())) return false;
  return true;
}

}  // namespace tsurg
