#include "abwords/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace abw {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(domain.size), codomain_(codomain.size), images_(std::move(images)) {
  if (images_.size() != domain_)
    throw std::invalid_argument("morphism needs exactly one image per domain letter");
  for (const Word& img : images_) {
    if (img.empty()) throw std::invalid_argument("morphism images must be nonempty");
    for (char b : img)
      if (Letter(b) >= codomain_)
        throw std::invalid_argument("morphism image letter outside codomain");
  }
}

const std::map<std::string, std::string, std::less<>>& Morphism::named() {
  static const std::map<std::string, std::string, std::less<>> reg = {
      {"mu", "0->01;1->10"},
      {"tau", "0->01;1->02;2->0"},
      {"delta", "0->00;1->11"},
      {"dekking", "0->011;1->0001"},
      {"rauzy", "0->012;1->021"},
      {"pdbl", "0->00;1->01"},
  };
  return reg;
}

Morphism Morphism::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace((unsigned char)s.front())) s.remove_prefix(1);
    while (!s.empty() && std::isspace((unsigned char)s.back())) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.find("->") == std::string_view::npos) {
    auto it = named().find(text);
    if (it == named().end())
      throw std::invalid_argument("unknown morphism name '" + std::string(text) + "'");
    return parse(it->second);
  }
  std::map<Letter, Word> rules;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rule = trim(text.substr(pos, end - pos));
    if (!rule.empty()) {
      std::size_t arrow = rule.find("->");
      if (arrow == std::string_view::npos || trim(rule.substr(0, arrow)).size() != 1)
        throw std::invalid_argument("malformed morphism rule '" + std::string(rule) + "'");
      Letter src = char_to_letter(trim(rule.substr(0, arrow))[0]);
      if (rules.count(src))
        throw std::invalid_argument("duplicate morphism rule for a letter");
      rules[src] = from_text(trim(rule.substr(arrow + 2)));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (rules.empty()) throw std::invalid_argument("empty morphism");
  unsigned k_in = unsigned(rules.rbegin()->first) + 1;
  if (rules.size() != k_in)
    throw std::invalid_argument("morphism rules must cover letters 0..k-1 with no gaps");
  unsigned k_out = 1;
  std::vector<Word> images(k_in);
  for (auto& [src, img] : rules) {
    k_out = std::max(k_out, min_alphabet(img));
    images[src] = std::move(img);
  }
  return Morphism(Alphabet(k_in), Alphabet(k_out), std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (a >= domain_) throw std::invalid_argument("letter outside morphism domain");
  return images_[a];
}

bool Morphism::prolongable_on(Letter a) const {
  const Word& img = image(a);
  return img.size() >= 2 && Letter(img[0]) == a;
}

Word Morphism::apply(std::string_view w) const {
  std::size_t total = 0;
  for (char b : w) total += image(Letter(b)).size();
  Word out;
  out.reserve(total);
  for (char b : w) out += images_[Letter(b)];
  return out;
}

Word Morphism::apply_prefix(std::string_view w, std::size_t limit) const {
  Word out;
  for (char b : w) {
    if (out.size() >= limit) break;
    const Word& img = image(Letter(b));
    if (out.size() + img.size() <= limit)
      out += img;
    else
      out.append(img, 0, limit - out.size());
  }
  return out;
}

std::string Morphism::to_string() const {
  std::string out;
  for (unsigned a = 0; a < domain_; ++a) {
    if (a) out.push_back(';');
    out.push_back(letter_to_char(Letter(a)));
    out += "->";
    out += to_text(images_[a]);
  }
  return out;
}

Word apply_morphism(const Morphism& m, std::string_view w) { return m.apply(w); }

}  // namespace abw
