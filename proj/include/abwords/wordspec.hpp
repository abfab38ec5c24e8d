#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "abwords/morphism.hpp"
#include "abwords/word.hpp"

namespace abw {

class WordSpec;

// Finite prefix of an infinite word, frozen after construction.
class PrefixBuffer {
 public:
  PrefixBuffer(Word letters, std::string spec_text, unsigned alphabet_size);

  std::size_t length() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return Letter(letters_[i]); }
  std::string_view letters() const { return letters_; }
  unsigned alphabet_size() const { return k_; }
  const std::string& spec_text() const { return spec_; }

 private:
  Word letters_;
  std::string spec_;
  unsigned k_;
};

// Description of an infinite word. Text forms:
//   fix(<morphism>,<seed>)      fixed point of a prolongable morphism
//   sturmian(1,1,1)             standard word, purely periodic directive
//   sturmian(2,1;3,4)           preperiod 2,1 then period 3,4 repeating
//   champernowne                binary numerals of 0,1,2,... concatenated
//   up(<u>,<v>)                 u then v forever (u may be empty)
//   lit(<w>)                    w repeated forever
//   img(<morphism>,<spec>)      morphic image of another spec
//   pre(<word>,<spec>)          finite word prepended to another spec
class WordSpec {
 public:
  static WordSpec fixed_point(Morphism m, Letter seed);
  static WordSpec sturmian(std::vector<std::uint32_t> preperiod,
                           std::vector<std::uint32_t> period);
  static WordSpec champernowne();
  static WordSpec ultimately_periodic(Word u, Word v);
  static WordSpec literal(Word w);
  static WordSpec image(Morphism m, WordSpec inner);
  static WordSpec prepend(Word prefix, WordSpec inner);

  static WordSpec parse(std::string_view text);

  unsigned alphabet_size() const;
  std::string to_string() const;
  bool operator==(const WordSpec& other) const;

  friend PrefixBuffer materialize(const WordSpec&, std::size_t, std::size_t);

 private:
  struct Fix {
    Morphism m;
    Letter seed;
    bool operator==(const Fix&) const = default;
  };
  struct Sturm {
    std::vector<std::uint32_t> pre, per;
    bool operator==(const Sturm&) const = default;
  };
  struct Champ {
    bool operator==(const Champ&) const = default;
  };
  struct Up {
    Word u, v;
    bool operator==(const Up&) const = default;
  };
  struct Lit {
    Word w;
    bool operator==(const Lit&) const = default;
  };
  struct Img {
    Morphism m;
    std::shared_ptr<const WordSpec> inner;
    bool operator==(const Img& o) const { return m == o.m && *inner == *o.inner; }
  };
  struct Pre {
    Word prefix;
    std::shared_ptr<const WordSpec> inner;
    bool operator==(const Pre& o) const {
      return prefix == o.prefix && *inner == *o.inner;
    }
  };
  using Node = std::variant<Fix, Sturm, Champ, Up, Lit, Img, Pre>;

  explicit WordSpec(Node node) : node_(std::move(node)) {}
  Word build(std::size_t length, std::size_t cap) const;

  Node node_;
};

// Length-`length` prefix of the word denoted by `spec`. Throws CapacityError
// when the request exceeds `cap` letters.
PrefixBuffer materialize(const WordSpec& spec, std::size_t length,
                         std::size_t cap = kDefaultCapacity);

}  // namespace abw
