#pragma once

#include <map>
#include <vector>

#include "abwords/word.hpp"

namespace abw {

// Letter-to-word substitution over fixed alphabets. Images must be nonempty
// (erasing morphisms are rejected); a coding is just a morphism whose images
// all have length 1.
//
// Text format: "0->01;1->10". Parsing also accepts a handful of registered
// names (mu, tau, delta, dekking, rauzy, pdbl).
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  static Morphism parse(std::string_view text);
  static const std::map<std::string, std::string, std::less<>>& named();

  unsigned domain_size() const { return domain_; }
  unsigned codomain_size() const { return codomain_; }
  const Word& image(Letter a) const;

  // True when image(a) starts with a and has length >= 2, so iterating from a
  // converges to an infinite fixed point.
  bool prolongable_on(Letter a) const;

  Word apply(std::string_view w) const;
  // Image truncated to at most `limit` letters; stops early once reached.
  Word apply_prefix(std::string_view w, std::size_t limit) const;

  std::string to_string() const;
  bool operator==(const Morphism&) const = default;

 private:
  unsigned domain_;
  unsigned codomain_;
  std::vector<Word> images_;
};

Word apply_morphism(const Morphism& m, std::string_view w);

}  // namespace abw
