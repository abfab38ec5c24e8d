#include "abwords/wordspec.hpp"

#include <algorithm>
#include <charconv>

namespace abw {

PrefixBuffer::PrefixBuffer(Word letters, std::string spec_text, unsigned alphabet_size)
    : letters_(std::move(letters)), spec_(std::move(spec_text)), k_(alphabet_size) {
  if (k_ < 1 || k_ > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in 1..255");
  for (char b : letters_)
    if (Letter(b) >= k_)
      throw std::invalid_argument("buffer letter outside its alphabet");
}

WordSpec WordSpec::fixed_point(Morphism m, Letter seed) {
  if (m.domain_size() != m.codomain_size())
    throw std::invalid_argument("fixed point needs a morphism with equal domain and codomain");
  if (!m.prolongable_on(seed))
    throw std::invalid_argument("fixed point needs a seed the morphism is prolongable on");
  return WordSpec(Fix{std::move(m), seed});
}

WordSpec WordSpec::sturmian(std::vector<std::uint32_t> preperiod,
                            std::vector<std::uint32_t> period) {
  if (period.empty())
    throw std::invalid_argument("sturmian directive needs a nonempty period");
  for (std::uint32_t d : preperiod)
    if (d < 1) throw std::invalid_argument("sturmian directive entries must be >= 1");
  for (std::uint32_t d : period)
    if (d < 1) throw std::invalid_argument("sturmian directive entries must be >= 1");
  return WordSpec(Sturm{std::move(preperiod), std::move(period)});
}

WordSpec WordSpec::champernowne() { return WordSpec(Champ{}); }

WordSpec WordSpec::ultimately_periodic(Word u, Word v) {
  if (v.empty())
    throw std::invalid_argument("ultimately periodic word needs a nonempty period block");
  return WordSpec(Up{std::move(u), std::move(v)});
}

WordSpec WordSpec::literal(Word w) {
  if (w.empty()) throw std::invalid_argument("literal word must be nonempty");
  return WordSpec(Lit{std::move(w)});
}

WordSpec WordSpec::image(Morphism m, WordSpec inner) {
  if (inner.alphabet_size() > m.domain_size())
    throw std::invalid_argument("image morphism domain too small for inner word");
  return WordSpec(Img{std::move(m), std::make_shared<const WordSpec>(std::move(inner))});
}

WordSpec WordSpec::prepend(Word prefix, WordSpec inner) {
  return WordSpec(Pre{std::move(prefix), std::make_shared<const WordSpec>(std::move(inner))});
}

unsigned WordSpec::alphabet_size() const {
  struct V {
    unsigned operator()(const Fix& f) const { return f.m.codomain_size(); }
    unsigned operator()(const Sturm&) const { return 2; }
    unsigned operator()(const Champ&) const { return 2; }
    unsigned operator()(const Up& n) const {
      return std::max(min_alphabet(n.u), min_alphabet(n.v));
    }
    unsigned operator()(const Lit& n) const { return min_alphabet(n.w); }
    unsigned operator()(const Img& n) const { return n.m.codomain_size(); }
    unsigned operator()(const Pre& n) const {
      return std::max(min_alphabet(n.prefix), n.inner->alphabet_size());
    }
  };
  return std::visit(V{}, node_);
}

bool WordSpec::operator==(const WordSpec& other) const { return node_ == other.node_; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Position of the first (or last) comma not nested inside parentheses.
std::size_t top_level_comma(std::string_view s, bool last) {
  int depth = 0;
  std::size_t found = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      if (!last) return i;
      found = i;
    }
  }
  return found;
}

std::vector<std::uint32_t> parse_int_list(std::string_view s) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view item = trim(s.substr(pos, end - pos));
    if (item == "...") {
      if (end != s.size())
        throw std::invalid_argument("'...' may only end a directive list");
    } else if (!item.empty()) {
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || p != item.data() + item.size())
        throw std::invalid_argument("invalid directive entry '" + std::string(item) + "'");
      out.push_back(v);
    } else {
      throw std::invalid_argument("empty directive entry");
    }
    if (end == s.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

WordSpec WordSpec::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "champernowne" || s == "champernowne()") return champernowne();
  std::size_t open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')')
    throw std::invalid_argument("malformed word spec '" + std::string(text) + "'");
  std::string_view head = trim(s.substr(0, open));
  std::string_view args = s.substr(open + 1, s.size() - open - 2);

  if (head == "fix") {
    std::size_t comma = top_level_comma(args, /*last=*/true);
    if (comma == std::string_view::npos)
      throw std::invalid_argument("fix(...) needs a morphism and a seed letter");
    std::string_view seed = trim(args.substr(comma + 1));
    if (seed.size() != 1)
      throw std::invalid_argument("fix(...) seed must be a single letter");
    return fixed_point(Morphism::parse(trim(args.substr(0, comma))),
                       char_to_letter(seed[0]));
  }
  if (head == "sturmian") {
    std::size_t semi = args.find(';');
    if (semi == std::string_view::npos)
      return sturmian({}, parse_int_list(args));
    return sturmian(parse_int_list(args.substr(0, semi)),
                    parse_int_list(args.substr(semi + 1)));
  }
  if (head == "up") {
    std::size_t comma = top_level_comma(args, /*last=*/false);
    if (comma == std::string_view::npos)
      throw std::invalid_argument("up(...) needs a preperiod and a period block");
    return ultimately_periodic(from_text(trim(args.substr(0, comma))),
                               from_text(trim(args.substr(comma + 1))));
  }
  if (head == "lit") return literal(from_text(trim(args)));
  if (head == "img") {
    std::size_t comma = top_level_comma(args, /*last=*/false);
    if (comma == std::string_view::npos)
      throw std::invalid_argument("img(...) needs a morphism and an inner spec");
    return image(Morphism::parse(trim(args.substr(0, comma))),
                 parse(args.substr(comma + 1)));
  }
  if (head == "pre") {
    std::size_t comma = top_level_comma(args, /*last=*/false);
    if (comma == std::string_view::npos)
      throw std::invalid_argument("pre(...) needs a word and an inner spec");
    return prepend(from_text(trim(args.substr(0, comma))),
                   parse(args.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown word spec '" + std::string(head) + "'");
}

std::string WordSpec::to_string() const {
  struct V {
    std::string operator()(const Fix& n) const {
      return "fix(" + n.m.to_string() + "," + letter_to_char(n.seed) + ")";
    }
    std::string operator()(const Sturm& n) const {
      std::string out = "sturmian(";
      for (std::size_t i = 0; i < n.pre.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(n.pre[i]);
      }
      if (!n.pre.empty()) out.push_back(';');
      for (std::size_t i = 0; i < n.per.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(n.per[i]);
      }
      return out + ")";
    }
    std::string operator()(const Champ&) const { return "champernowne"; }
    std::string operator()(const Up& n) const {
      return "up(" + to_text(n.u) + "," + to_text(n.v) + ")";
    }
    std::string operator()(const Lit& n) const { return "lit(" + to_text(n.w) + ")"; }
    std::string operator()(const Img& n) const {
      return "img(" + n.m.to_string() + "," + n.inner->to_string() + ")";
    }
    std::string operator()(const Pre& n) const {
      return "pre(" + to_text(n.prefix) + "," + n.inner->to_string() + ")";
    }
  };
  return std::visit(V{}, node_);
}

Word WordSpec::build(std::size_t length, std::size_t cap) const {
  struct V {
    std::size_t length;
    std::size_t cap;

    Word operator()(const Fix& n) const {
      Word w(1, char(n.seed));
      // Each pass maps w to its image truncated at `length`; the seed prefix
      // grows strictly, so this terminates.
      while (w.size() < length) w = n.m.apply_prefix(w, length);
      w.resize(length);
      return w;
    }
    Word operator()(const Sturm& n) const {
      Word prev(1, char(1));  // stage -1
      Word cur(1, char(0));   // stage 0
      std::size_t di = 0;
      while (cur.size() < length) {
        std::uint32_t d = di < n.pre.size() ? n.pre[di]
                                            : n.per[(di - n.pre.size()) % n.per.size()];
        ++di;
        Word next;
        next.reserve(std::min(length, cur.size() * std::size_t(d) + prev.size()));
        for (std::uint32_t r = 0; r < d && next.size() < length; ++r)
          next.append(cur, 0, std::min(cur.size(), length - next.size()));
        if (next.size() < length)
          next.append(prev, 0, std::min(prev.size(), length - next.size()));
        prev = std::move(cur);
        cur = std::move(next);
      }
      cur.resize(length);
      return cur;
    }
    Word operator()(const Champ&) const {
      Word w;
      w.reserve(length);
      for (std::uint64_t v = 0; w.size() < length; ++v) {
        char digits[64];
        int nd = 0;
        std::uint64_t x = v;
        do {
          digits[nd++] = char(x & 1);
          x >>= 1;
        } while (x);
        for (int i = nd - 1; i >= 0 && w.size() < length; --i) w.push_back(digits[i]);
      }
      return w;
    }
    Word operator()(const Up& n) const {
      Word w = n.u;
      if (w.size() > length) w.resize(length);
      while (w.size() < length)
        w.append(n.v, 0, std::min(n.v.size(), length - w.size()));
      return w;
    }
    Word operator()(const Lit& n) const {
      Word w;
      w.reserve(length);
      while (w.size() < length)
        w.append(n.w, 0, std::min(n.w.size(), length - w.size()));
      return w;
    }
    Word operator()(const Img& n) const {
      // Images have length >= 1, so `length` inner letters always suffice.
      Word inner = n.inner->build(length, cap);
      return n.m.apply_prefix(inner, length);
    }
    Word operator()(const Pre& n) const {
      if (length <= n.prefix.size()) return Word(n.prefix, 0, length);
      Word w = n.prefix;
      w += n.inner->build(length - n.prefix.size(), cap);
      return w;
    }
  };
  return std::visit(V{length, cap}, node_);
}

PrefixBuffer materialize(const WordSpec& spec, std::size_t length, std::size_t cap) {
  if (length > cap)
    throw CapacityError("requested prefix of " + std::to_string(length) +
                        " letters exceeds the capacity cap of " + std::to_string(cap));
  return PrefixBuffer(spec.build(length, cap), spec.to_string(), spec.alphabet_size());
}

}  // namespace abw
