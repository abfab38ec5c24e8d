#include "abwords/word.hpp"

namespace abw {

char letter_to_char(Letter a) {
  if (a < 10) return char('0' + a);
  if (a < 36) return char('a' + (a - 10));
  if (a < 62) return char('A' + (a - 36));
  throw std::invalid_argument("letter too large for single-character display");
}

Letter char_to_letter(char c) {
  if (c >= '0' && c <= '9') return Letter(c - '0');
  if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 10);
  if (c >= 'A' && c <= 'Z') return Letter(c - 'A' + 36);
  throw std::invalid_argument(std::string("invalid letter character '") + c + "'");
}

std::string to_text(std::string_view letters) {
  std::string out;
  out.reserve(letters.size());
  for (char b : letters) out.push_back(letter_to_char(Letter(b)));
  return out;
}

Word from_text(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (char c : text) out.push_back(char(char_to_letter(c)));
  return out;
}

unsigned min_alphabet(std::string_view letters) {
  unsigned k = 1;
  for (char b : letters)
    if (unsigned(Letter(b)) + 1 > k) k = unsigned(Letter(b)) + 1;
  return k;
}

}  // namespace abw
