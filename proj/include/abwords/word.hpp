#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abw {

// Letters are integers 0..k-1 stored as raw bytes inside a std::string.
// The display form maps each letter to one character: 0-9, then a-z, then A-Z.
using Letter = unsigned char;
using Word = std::string;

inline constexpr unsigned kMaxAlphabet = 255;
inline constexpr std::size_t kDefaultCapacity = 100'000'000;

// Thrown when an operation would materialize or store more letters than the
// configured cap allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Alphabet {
  unsigned size;
  explicit Alphabet(unsigned k) : size(k) {
    if (k < 1 || k > kMaxAlphabet)
      throw std::invalid_argument("alphabet size must be in 1..255");
  }
};

char letter_to_char(Letter a);
Letter char_to_letter(char c);

std::string to_text(std::string_view letters);
Word from_text(std::string_view text);

// Smallest k such that every letter of w is < k. Empty word gives 1.
unsigned min_alphabet(std::string_view letters);

}  // namespace abw
