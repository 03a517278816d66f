#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stringtop::surface {

/// Generator g_i is encoded as 2i and its inverse as 2i+1, so the natural
/// integer order is g1 < ḡ1 < g2 < ḡ2 < ... In text, g_i is the i-th
/// lowercase letter and its inverse the matching uppercase letter.
using Letter = std::uint8_t;

constexpr Letter inverse(Letter x) { return static_cast<Letter>(x ^ 1U); }
constexpr Letter generator_letter(unsigned index) { return static_cast<Letter>(2 * index); }

/// Throws stringtop::Error for characters outside a-z / A-Z.
Letter parse_letter(char c);
char letter_char(Letter x);
std::vector<Letter> parse_letters(std::string_view text);
std::string letters_to_string(std::span<const Letter> letters);

/// A nonempty cyclically reduced word stored in its least rotation: a free
/// homotopy class of closed curves other than the trivial one.
class CyclicWord {
 public:
  /// Cancels adjacent and wrap-around inverse pairs and rotates to canonical
  /// form; nullopt when everything cancels (the trivial class).
  static std::optional<CyclicWord> reduce(std::span<const Letter> letters);
  static std::optional<CyclicWord> parse(std::string_view text) { return reduce(parse_letters(text)); }

  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Linear word w_p w_{p+1} ... w_{p-1}.
  std::vector<Letter> rotation(std::size_t p) const;
  /// Smallest period d (d divides size()).
  std::size_t period() const;

  std::string to_string() const { return letters_to_string(letters_); }

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

inline std::optional<CyclicWord> reduce_cyclic(std::span<const Letter> letters) {
  return CyclicWord::reduce(letters);
}

/// A word with a marked starting point (an element of the based picture).
struct LinearWord {
  std::vector<Letter> letters;

  std::string to_string() const { return letters_to_string(letters); }
  friend auto operator<=>(const LinearWord&, const LinearWord&) = default;
  friend bool operator==(const LinearWord&, const LinearWord&) = default;
};

}  // namespace stringtop::surface
