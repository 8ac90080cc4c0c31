#ifndef FPGROUPS_WORD_HPP
#define FPGROUPS_WORD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fpg {

using gen_id = std::uint32_t;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct alphabet_mismatch : error {
  alphabet_mismatch() : error("words belong to different alphabets") {}
};

struct unknown_generator : error {
  explicit unknown_generator(std::string const& name)
      : error("unknown generator: " + name) {}
};

struct parse_error : error {
  std::size_t position;
  parse_error(std::size_t pos, std::string const& msg)
      : error("parse error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

// Characters that can never occur in a generator name (they belong to the
// word grammar), plus whitespace.
bool valid_generator_name(std::string_view name);

// An immutable, ordered set of named generators.  Words carry a shared
// pointer to their alphabet; two alphabets are interchangeable iff their
// name lists are equal.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  std::string const& name(gen_id g) const { return names_.at(g); }
  std::vector<std::string> const& names() const { return names_; }

  std::optional<gen_id> find(std::string_view name) const;
  gen_id id_of(std::string_view name) const;  // throws unknown_generator
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, gen_id> index_;
};

using alphabet_ptr = std::shared_ptr<const Alphabet>;

alphabet_ptr make_alphabet(std::vector<std::string> names);

inline bool same_alphabet(alphabet_ptr const& a, alphabet_ptr const& b) {
  return a == b || (a && b && *a == *b);
}

struct Letter {
  gen_id gen;
  int sign;  // +1 or -1
  friend bool operator==(Letter const& a, Letter const& b) = default;
};

// A freely reduced word.  Every constructor reduces, so "no adjacent
// cancelling pair" is an invariant, never a runtime question.
class Word {
 public:
  Word() = default;
  explicit Word(alphabet_ptr alphabet) : alphabet_(std::move(alphabet)) {}

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(alphabet_ptr alphabet, std::span<const Letter> raw);
  static Word generator(alphabet_ptr alphabet, gen_id g, int sign = +1);

  alphabet_ptr const& alphabet() const { return alphabet_; }
  std::vector<Letter> const& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(Word const& a, Word const& b) {
    return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

 private:
  alphabet_ptr alphabet_;
  std::vector<Letter> letters_;

  friend Word concat(Word const& a, Word const& b);
  friend Word invert(Word const& w);
};

Word concat(Word const& a, Word const& b);
Word invert(Word const& w);
Word pow(Word const& w, long long k);

// [a, b] = a b a^-1 b^-1
Word commutator(Word const& a, Word const& b);

long long exponent_sum(Word const& w, gen_id g);
long long exponent_sum(Word const& w, std::string_view gen_name);

// Word grammar:
//   word := term*
//   term := atom ('^' int)?
//   atom := generator | '(' word ')' | '[' word ',' word ']'
// Whitespace separates terms; generator names are matched greedily
// (longest name in the alphabet wins).  Empty input is the identity.
Word parse_word(alphabet_ptr const& alphabet, std::string_view text);
std::string print_word(Word const& w);

// Maps every letter through `images` (indexed by generator id over the
// source alphabet); images live over the target alphabet.
Word apply_images(Word const& w, std::vector<Word> const& images);

}  // namespace fpg

#endif
