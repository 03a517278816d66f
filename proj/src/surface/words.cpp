#include "stringtop/surface/words.hpp"

#include <algorithm>

#include "stringtop/error.hpp"

namespace stringtop::surface {

Letter parse_letter(char c) {
  if (c >= 'a' && c <= 'z') return generator_letter(static_cast<unsigned>(c - 'a'));
  if (c >= 'A' && c <= 'Z') return inverse(generator_letter(static_cast<unsigned>(c - 'A')));
  throw Error(std::string("unknown letter '") + c + "'");
}

char letter_char(Letter x) {
  const char base = (x & 1U) ? 'A' : 'a';
  return static_cast<char>(base + (x >> 1U));
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(parse_letter(c));
  return out;
}

std::string letters_to_string(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter x : letters) out.push_back(letter_char(x));
  return out;
}

std::optional<CyclicWord> CyclicWord::reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter x : letters) {
    if (!stack.empty() && stack.back() == inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == inverse(stack[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo == hi) return std::nullopt;
  std::vector<Letter> core(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                           stack.begin() + static_cast<std::ptrdiff_t>(hi));
  // Least rotation by direct comparison; words here are short.
  const std::size_t n = core.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter a = core[(r + k) % n];
      const Letter b = core[(best + k) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::rotate(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(best), core.end());
  return CyclicWord(std::move(core));
}

std::vector<Letter> CyclicWord::rotation(std::size_t p) const {
  std::vector<Letter> out(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) out[k] = letters_[(p + k) % letters_.size()];
  return out;
}

std::size_t CyclicWord::period() const {
  const std::size_t n = letters_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = d; k < n && periodic; ++k) periodic = letters_[k] == letters_[k - d];
    if (periodic) return d;
  }
  return n;
}

}  // namespace stringtop::surface
