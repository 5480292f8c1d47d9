#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace strrecon {

// An ordered set of single-character symbols. Every "for each letter" loop in
// the reconstructors walks the letters in this order, which is what makes
// query counts reproducible.
class Alphabet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Throws AlphabetError on an empty letter list or duplicate symbols.
  explicit Alphabet(std::string_view letters);

  // The first `sigma` symbols of "abc...zABC...Z0..9".
  static Alphabet first(std::size_t sigma);

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }

  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }

  // Position of `c` in the letter order, or npos.
  std::size_t index_of(char c) const noexcept {
    const auto i = index_[static_cast<unsigned char>(c)];
    return i < 0 ? npos : static_cast<std::size_t>(i);
  }

  bool covers(std::string_view s) const noexcept;

  // Throws AlphabetError naming the first foreign symbol.
  void require(std::string_view s) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> index_{};
};

}  // namespace strrecon
