#include "strrecon/alphabet.hpp"

#include "strrecon/errors.hpp"

namespace strrecon {

namespace {
constexpr std::string_view kSymbolPool =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  index_.fill(-1);
  if (letters_.empty()) throw AlphabetError("alphabet must contain at least one letter");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(letters_[i])];
    if (slot >= 0) throw AlphabetError(std::string("duplicate alphabet symbol '") + letters_[i] + "'");
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::first(std::size_t sigma) {
  if (sigma == 0 || sigma > kSymbolPool.size())
    throw AlphabetError("alphabet size must be in 1.." + std::to_string(kSymbolPool.size()));
  return Alphabet(kSymbolPool.substr(0, sigma));
}

bool Alphabet::covers(std::string_view s) const noexcept {
  for (char c : s)
    if (!contains(c)) return false;
  return true;
}

void Alphabet::require(std::string_view s) const {
  for (char c : s)
    if (!contains(c))
      throw AlphabetError(std::string("symbol '") + c + "' is not in alphabet \"" + letters_ + "\"");
}

}  // namespace strrecon
