#include "fpgroups/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fpg {

namespace {
// word grammar characters plus the file-format delimiters = and #
constexpr std::string_view kReserved = "^()[],*;=#";

bool reserved_char(char c) {
  return kReserved.find(c) != std::string_view::npos ||
         std::isspace(static_cast<unsigned char>(c));
}
}  // namespace

bool valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), reserved_char);
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (gen_id i = 0; i < names_.size(); ++i) {
    if (!valid_generator_name(names_[i]))
      throw error("invalid generator name: '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw error("duplicate generator name: '" + names_[i] + "'");
  }
}

std::optional<gen_id> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

gen_id Alphabet::id_of(std::string_view name) const {
  auto g = find(name);
  if (!g) throw unknown_generator(std::string(name));
  return *g;
}

alphabet_ptr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

Word Word::reduce(alphabet_ptr alphabet, std::span<const Letter> raw) {
  Word out(std::move(alphabet));
  out.letters_.reserve(raw.size());
  for (Letter const& l : raw) {
    if (!out.letters_.empty() && out.letters_.back().gen == l.gen &&
        out.letters_.back().sign == -l.sign) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Word Word::generator(alphabet_ptr alphabet, gen_id g, int sign) {
  Word out(std::move(alphabet));
  if (g >= out.alphabet_->size()) throw error("generator id out of range");
  out.letters_.push_back({g, sign});
  return out;
}

Word concat(Word const& a, Word const& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) throw alphabet_mismatch();
  Word out(a.alphabet());
  out.letters_ = a.letters_;
  for (Letter const& l : b.letters_) {
    if (!out.letters_.empty() && out.letters_.back().gen == l.gen &&
        out.letters_.back().sign == -l.sign) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Word invert(Word const& w) {
  Word out(w.alphabet());
  out.letters_.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.letters_.push_back({it->gen, -it->sign});
  return out;
}

Word pow(Word const& w, long long k) {
  Word base = k < 0 ? invert(w) : w;
  long long n = k < 0 ? -k : k;
  Word out(w.alphabet());
  for (long long i = 0; i < n; ++i) out = concat(out, base);
  return out;
}

Word commutator(Word const& a, Word const& b) {
  return concat(concat(a, b), concat(invert(a), invert(b)));
}

long long exponent_sum(Word const& w, gen_id g) {
  long long s = 0;
  for (Letter const& l : w.letters())
    if (l.gen == g) s += l.sign;
  return s;
}

long long exponent_sum(Word const& w, std::string_view gen_name) {
  return exponent_sum(w, w.alphabet()->id_of(gen_name));
}

Word apply_images(Word const& w, std::vector<Word> const& images) {
  if (images.empty()) {
    if (!w.empty()) throw error("no images supplied");
    return Word();
  }
  Word out(images.front().alphabet());
  for (Letter const& l : w.letters()) {
    if (l.gen >= images.size()) throw error("letter without image");
    out = concat(out, l.sign > 0 ? images[l.gen] : invert(images[l.gen]));
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(alphabet_ptr const& alphabet, std::string_view text)
      : alphabet_(alphabet), text_(text) {}

  Word parse_all() {
    Word w = parse_word_body();
    skip_space();
    if (pos_ != text_.size())
      throw parse_error(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  alphabet_ptr const& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_stopper() {
    if (pos_ >= text_.size()) return true;
    char c = text_[pos_];
    return c == ')' || c == ']' || c == ',';
  }

  Word parse_word_body() {
    Word w(alphabet_);
    while (true) {
      skip_space();
      if (at_stopper()) return w;
      w = concat(w, parse_term());
    }
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return pow(atom, parse_int());
    }
    return atom;
  }

  long long parse_int() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) throw parse_error(start, "expected integer exponent");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Word parse_atom() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_word_body();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word lhs = parse_word_body();
      expect(',');
      Word rhs = parse_word_body();
      expect(']');
      return commutator(lhs, rhs);
    }
    return parse_generator();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  // Greedy longest match against the alphabet.
  Word parse_generator() {
    std::size_t run_end = pos_;
    while (run_end < text_.size() && !reserved_char(text_[run_end])) ++run_end;
    if (run_end == pos_)
      throw parse_error(pos_,
                        std::string("unexpected '") + text_[pos_] + "'");
    for (std::size_t len = run_end - pos_; len > 0; --len) {
      auto g = alphabet_->find(text_.substr(pos_, len));
      if (g) {
        pos_ += len;
        return Word::generator(alphabet_, *g);
      }
    }
    throw parse_error(
        pos_, "unknown generator: '" +
                  std::string(text_.substr(pos_, run_end - pos_)) + "'");
  }
};

}  // namespace

Word parse_word(alphabet_ptr const& alphabet, std::string_view text) {
  return WordParser(alphabet, text).parse_all();
}

std::string print_word(Word const& w) {
  std::ostringstream out;
  auto const& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign)
      ++j;
    long long exp = static_cast<long long>(j - i) * ls[i].sign;
    if (!first) out << ' ';
    out << w.alphabet()->name(ls[i].gen);
    if (exp != 1) out << '^' << exp;
    first = false;
    i = j;
  }
  return out.str();
}

}  // namespace fpg
