#include "reglang/alphabet.hpp"

#include <algorithm>

namespace reglang {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  std::sort(symbols_.begin(), symbols_.end(),
            [](char a, char b) { return to_byte(a) < to_byte(b); });
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
  index_.fill(kAbsent);
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    index_[to_byte(symbols_[i])] = static_cast<short>(i);
}

bool Alphabet::includes(const Alphabet& other) const noexcept {
  return std::all_of(other.symbols_.begin(), other.symbols_.end(),
                     [this](char c) { return contains(c); });
}

Alphabet Alphabet::united(const Alphabet& other) const {
  return Alphabet(symbols_ + other.symbols_);
}

}  // namespace reglang
