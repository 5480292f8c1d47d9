#include <vector>

#include "strrecon/errors.hpp"
#include "strrecon/substring.hpp"

namespace strrecon::substring {

bool Prober::ask(std::string_view x) {
  std::string key(x);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool answer = oracle_.is_substr(x);
  memo_.emplace(std::move(key), answer);
  return answer;
}

void Prober::assume(std::string_view x, bool answer) { memo_.insert_or_assign(std::string(x), answer); }

std::optional<bool> Prober::known(std::string_view x) const {
  if (x.empty()) return true;
  if (auto it = memo_.find(std::string(x)); it != memo_.end()) return it->second;
  return std::nullopt;
}

namespace {

// Shared body of append and prepend; `make` builds the candidate for a letter.
template <class Make>
std::optional<std::string> extend(Prober& prober, bool guaranteed, std::optional<char> skip,
                                  std::optional<char> prefer, Make&& make) {
  std::string letters = prober.alphabet().letters();
  if (prefer && prober.alphabet().contains(*prefer)) {
    letters.erase(letters.find(*prefer), 1);
    letters.insert(letters.begin(), *prefer);
  }
  std::vector<std::string> open;
  for (char a : letters) {
    if (skip && a == *skip) continue;
    std::string candidate = make(a);
    const auto k = prober.known(candidate);
    if (k && *k) return candidate;
    if (!k) open.push_back(std::move(candidate));
  }
  for (std::size_t i = 0; i < open.size(); ++i) {
    if (guaranteed && i + 1 == open.size()) {
      prober.assume(open[i], true);
      return std::move(open[i]);
    }
    if (prober.ask(open[i])) return std::move(open[i]);
  }
  if (guaranteed) throw ContractError("letter extension was guaranteed but every candidate is known to fail");
  return std::nullopt;
}

}  // namespace

std::optional<std::string> Prober::append_letter(std::string_view q, bool guaranteed, std::optional<char> skip,
                                                std::optional<char> prefer) {
  return extend(*this, guaranteed, skip, prefer, [&](char a) {
    std::string s(q);
    s.push_back(a);
    return s;
  });
}

std::optional<std::string> Prober::prepend_letter(std::string_view q, bool guaranteed, std::optional<char> skip,
                                                 std::optional<char> prefer) {
  return extend(*this, guaranteed, skip, prefer, [&](char a) {
    std::string s(1, a);
    s += q;
    return s;
  });
}

std::optional<std::string> append_letter(Oracle& oracle, std::string_view q, bool guaranteed) {
  Prober prober(oracle);
  return prober.append_letter(q, guaranteed);
}

std::optional<std::string> prepend_letter(Oracle& oracle, std::string_view q, bool guaranteed) {
  Prober prober(oracle);
  return prober.prepend_letter(q, guaranteed);
}

}  // namespace strrecon::substring
