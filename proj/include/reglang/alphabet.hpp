#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace reglang {

/// Ordered set of single-character symbols.
class Alphabet {
 public:
  Alphabet() { index_.fill(kAbsent); }
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const noexcept { return symbols_; }

  bool contains(char c) const noexcept { return index_[to_byte(c)] != kAbsent; }
  std::optional<std::size_t> index_of(char c) const noexcept {
    auto i = index_[to_byte(c)];
    if (i == kAbsent) return std::nullopt;
    return static_cast<std::size_t>(i);
  }

  bool includes(const Alphabet& other) const noexcept;
  Alphabet united(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  static constexpr short kAbsent = -1;
  static std::size_t to_byte(char c) noexcept { return static_cast<unsigned char>(c); }

  std::string symbols_;
  std::array<short, 256> index_{};
};

}  // namespace reglang
