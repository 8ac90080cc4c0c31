#ifndef FPGROUPS_AMALGAM_HPP
#define FPGROUPS_AMALGAM_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "fpgroups/exact_models.hpp"
#include "fpgroups/rng.hpp"
#include "fpgroups/word.hpp"

namespace fpg {

// Coordinates in the amalgamated subgroup (free abelian of rank 1 or 2 in
// every instance here).
struct SubgroupCoords {
  std::array<long long, 2> v{0, 0};
  int rank = 0;

  static SubgroupCoords zero(int rank) { return {{0, 0}, rank}; }
  bool is_zero() const { return v[0] == 0 && v[1] == 0; }
  SubgroupCoords& operator+=(SubgroupCoords const& o) {
    v[0] += o.v[0];
    v[1] += o.v[1];
    return *this;
  }
  SubgroupCoords operator-() const { return {{-v[0], -v[1]}, rank}; }
  friend bool operator==(SubgroupCoords const&, SubgroupCoords const&) = default;
};

// ---------------------------------------------------------------------
// Factor adapters: an exact model plus a choice of transversal for the
// amalgamated subgroup.  decompose(g) = (c, r) with g = embed(c) * r and
// r the canonical coset representative (identity iff g lies in the
// subgroup); decompose is constant on left cosets.
// ---------------------------------------------------------------------

// L with subgroup <h, v>; representatives are (t, 0, w) with zero
// v-exponent in w.
struct LFactorHV {
  using Element = LElement;
  static constexpr int kRank = 2;
  LModel model;

  Element identity() const { return model.identity(); }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const {
    Element e = model.identity();
    e.a = c.v[0];
    e.w = pow(Word::generator(f2_alphabet(), 1), c.v[1]);
    return e;
  }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    long long m = exponent_sum(g.w, 1);  // v-exponent
    SubgroupCoords c{{g.a, m}, 2};
    Element r;
    r.a = 0;
    r.w = concat(pow(Word::generator(f2_alphabet(), 1), -m), g.w);
    Vec2 t = mat2_apply(f2_matrix(pow(Word::generator(f2_alphabet(), 1), -m)),
                        g.t);
    r.t = {t.a.times_pow2(-g.a), t.b.times_pow2(-g.a)};
    return {c, r};
  }
};

// Heis(h, z, v) with subgroup <h, v> = <alpha, zeta>; representatives z^q.
struct HeisFactorHV {
  using Element = HeisElement;
  static constexpr int kRank = 2;
  HeisModel model{"h", "z", "v"};

  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const { return {c.v[0], 0, c.v[1]}; }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    return {SubgroupCoords{{g.p, g.r}, 2}, Element{0, g.q, 0}};
  }
};

// BS(1,2) with subgroup <x> (integer translations); representatives keep
// the fractional part of the translation.
struct BS12FactorOverX {
  using Element = BSElement;
  static constexpr int kRank = 1;
  BS12Model model;

  explicit BS12FactorOverX(std::string x, std::string h)
      : model(std::move(x), std::move(h)) {}

  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const {
    return {0, Dyadic(bigint(c.v[0]), 0)};
  }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    bigint fl = g.b.floor();
    if (fl > std::numeric_limits<long long>::max() ||
        fl < std::numeric_limits<long long>::min())
      throw error("BS12 transversal: translation exceeds coordinate range");
    long long k = fl.convert_to<long long>();
    return {SubgroupCoords{{k, 0}, 1}, Element{g.a, g.b.frac()}};
  }
};

// BS(1,2) with subgroup <h> (pure scalings); representatives are pure
// translations.
struct BS12FactorOverH {
  using Element = BSElement;
  static constexpr int kRank = 1;
  BS12Model model;

  explicit BS12FactorOverH(std::string x, std::string h)
      : model(std::move(x), std::move(h)) {}

  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const { return {c.v[0], Dyadic()}; }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    return {SubgroupCoords{{g.a, 0}, 1}, Element{0, g.b.times_pow2(-g.a)}};
  }
};

// Heis(v, x, y) with subgroup <v> = <alpha>; representatives x^q y^r.
struct HeisFactorAlpha {
  using Element = HeisElement;
  static constexpr int kRank = 1;
  HeisModel model{"v", "x", "y"};

  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const { return {c.v[0], 0, 0}; }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    return {SubgroupCoords{{g.p, 0}, 1}, Element{0, g.q, g.r}};
  }
};

// Z^2 on (v, z) with subgroup <v>; representatives z^q.
struct Z2FactorFirst {
  using Element = Z2Element;
  static constexpr int kRank = 1;
  Z2Model model{"v", "z"};

  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const { return {c.v[0], 0}; }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    return {SubgroupCoords{{g.a, 0}, 1}, Element{0, g.b}};
  }
};

// Z x F2 on (h, u, v) with subgroup <h, v>; representatives are (0, w)
// with zero v-exponent.
struct ZxF2FactorHV {
  using Element = ZxF2Element;
  static constexpr int kRank = 2;
  ZxF2Model model{"h", "u", "v"};

  Element identity() const { return model.identity(); }
  Element mul(Element const& a, Element const& b) const { return model.mul(a, b); }
  Element inv(Element const& a) const { return model.inv(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }

  Element embed(SubgroupCoords const& c) const {
    return {c.v[0], pow(Word::generator(f2_alphabet(), 1), c.v[1])};
  }
  std::pair<SubgroupCoords, Element> decompose(Element const& g) const {
    long long m = exponent_sum(g.w, 1);
    Element r{0, concat(pow(Word::generator(f2_alphabet(), 1), -m), g.w)};
    return {SubgroupCoords{{g.a, m}, 2}, r};
  }
};

// ---------------------------------------------------------------------
// The one-level amalgam engine.  Normal form: embed(head) r_1 ... r_k
// with strictly alternating sides and non-identity canonical
// representatives; multiplication rewrites from the right, pushing
// subgroup parts leftward through decompose.
// ---------------------------------------------------------------------

template <class FactorA, class FactorB>
class Amalgam {
  static_assert(FactorA::kRank == FactorB::kRank);

 public:
  static constexpr int kRank = FactorA::kRank;
  using ElemA = typename FactorA::Element;
  using ElemB = typename FactorB::Element;

  struct NormalForm {
    SubgroupCoords head = SubgroupCoords::zero(kRank);
    std::vector<std::variant<ElemA, ElemB>> syllables;  // index = side

    bool is_identity() const { return head.is_zero() && syllables.empty(); }
    friend bool operator==(NormalForm const&, NormalForm const&) = default;
  };

  struct LetterImage {
    bool in_a = false;
    bool in_b = false;
    ElemA a{};
    ElemB b{};
  };

  Amalgam(FactorA fa, FactorB fb, alphabet_ptr alphabet,
          std::vector<LetterImage> letters, std::string name)
      : a_(std::move(fa)),
        b_(std::move(fb)),
        alphabet_(std::move(alphabet)),
        letters_(std::move(letters)),
        name_(std::move(name)) {}

  std::string const& name() const { return name_; }
  alphabet_ptr const& alphabet() const { return alphabet_; }
  FactorA const& factor_a() const { return a_; }
  FactorB const& factor_b() const { return b_; }

  NormalForm identity() const { return NormalForm{}; }

  NormalForm eval(Word const& w) const {
    if (!same_alphabet(w.alphabet(), alphabet_)) throw alphabet_mismatch();
    NormalForm nf;
    for (Letter const& l : w.letters()) {
      LetterImage const& img = letters_[l.gen];
      if (img.in_a)
        append_factor<0>(nf, l.sign > 0 ? img.a : a_.inv(img.a));
      else
        append_factor<1>(nf, l.sign > 0 ? img.b : b_.inv(img.b));
    }
    return nf;
  }

  NormalForm mul(NormalForm const& lhs, NormalForm const& rhs) const {
    NormalForm out = lhs;
    push_coords(out, rhs.head);
    for (auto const& s : rhs.syllables) {
      if (s.index() == 0)
        append_factor<0>(out, std::get<0>(s));
      else
        append_factor<1>(out, std::get<1>(s));
    }
    return out;
  }

  NormalForm inverse(NormalForm const& nf) const {
    NormalForm out;
    for (auto it = nf.syllables.rbegin(); it != nf.syllables.rend(); ++it) {
      if (it->index() == 0)
        append_factor<0>(out, a_.inv(std::get<0>(*it)));
      else
        append_factor<1>(out, b_.inv(std::get<1>(*it)));
    }
    push_coords(out, -nf.head);
    return out;
  }

  bool equal(NormalForm const& x, NormalForm const& y) const { return x == y; }

  // Structural invariant: sides strictly alternate and every syllable is
  // a non-identity canonical representative.
  bool well_formed(NormalForm const& nf) const {
    int prev = -1;
    for (auto const& s : nf.syllables) {
      int side = static_cast<int>(s.index());
      if (side == prev) return false;
      prev = side;
      if (side == 0) {
        ElemA const& r = std::get<0>(s);
        if (a_.equal(r, a_.identity())) return false;
        auto [c, rep] = a_.decompose(r);
        if (!c.is_zero() || !a_.equal(rep, r)) return false;
      } else {
        ElemB const& r = std::get<1>(s);
        if (b_.equal(r, b_.identity())) return false;
        auto [c, rep] = b_.decompose(r);
        if (!c.is_zero() || !b_.equal(rep, r)) return false;
      }
    }
    return true;
  }

  // Evaluates a word inside one factor (letters must have an image on
  // that side); the word-problem oracle behind the embedding checks.
  bool factor_word_is_identity(int side, Word const& w) const {
    if (!same_alphabet(w.alphabet(), alphabet_)) throw alphabet_mismatch();
    if (side == 0) {
      ElemA acc = a_.identity();
      for (Letter const& l : w.letters()) {
        LetterImage const& img = letters_[l.gen];
        if (!img.in_a) throw error("letter not in factor A");
        acc = a_.mul(acc, l.sign > 0 ? img.a : a_.inv(img.a));
      }
      return a_.equal(acc, a_.identity());
    }
    ElemB acc = b_.identity();
    for (Letter const& l : w.letters()) {
      LetterImage const& img = letters_[l.gen];
      if (!img.in_b) throw error("letter not in factor B");
      acc = b_.mul(acc, l.sign > 0 ? img.b : b_.inv(img.b));
    }
    return b_.equal(acc, b_.identity());
  }

  std::vector<gen_id> side_generators(int side) const {
    std::vector<gen_id> out;
    for (gen_id g = 0; g < letters_.size(); ++g)
      if ((side == 0 && letters_[g].in_a) || (side == 1 && letters_[g].in_b))
        out.push_back(g);
    return out;
  }

 private:
  FactorA a_;
  FactorB b_;
  alphabet_ptr alphabet_;
  std::vector<LetterImage> letters_;
  std::string name_;

  // nf := nf * embed(c): push the subgroup element leftward through every
  // syllable into the head.  Representatives stay non-identity because
  // decompose is constant on cosets.
  void push_coords(NormalForm& nf, SubgroupCoords c) const {
    for (auto it = nf.syllables.rbegin(); it != nf.syllables.rend(); ++it) {
      if (c.is_zero()) break;
      if (it->index() == 0) {
        auto [c2, rep] = a_.decompose(a_.mul(std::get<0>(*it), a_.embed(c)));
        it->template emplace<0>(std::move(rep));
        c = c2;
      } else {
        auto [c2, rep] = b_.decompose(b_.mul(std::get<1>(*it), b_.embed(c)));
        it->template emplace<1>(std::move(rep));
        c = c2;
      }
    }
    nf.head += c;
  }

  template <int Side>
  void append_factor(NormalForm& nf,
                     std::conditional_t<Side == 0, ElemA, ElemB> g) const {
    auto const& f = factor<Side>();
    if (!nf.syllables.empty() && nf.syllables.back().index() == Side) {
      g = f.mul(std::get<Side>(nf.syllables.back()), g);
      nf.syllables.pop_back();
    }
    auto [c, rep] = f.decompose(g);
    push_coords(nf, c);
    if (!f.equal(rep, f.identity()))
      nf.syllables.emplace_back(std::in_place_index<Side>, std::move(rep));
  }

  template <int Side>
  auto const& factor() const {
    if constexpr (Side == 0)
      return a_;
    else
      return b_;
  }
};

template <class Inst>
typename Inst::NormalForm amalgam_eval(Inst const& inst, Word const& w) {
  return inst.eval(w);
}

template <class NF>
std::size_t syllable_length(NF const& nf) {
  return nf.syllables.size();
}

// ---------------------------------------------------------------------
// The four wired instances.
// ---------------------------------------------------------------------

using InstanceJ = Amalgam<LFactorHV, HeisFactorHV>;          // L *_{<h,v>} Heis(h,z,v)
using InstanceHhalf = Amalgam<BS12FactorOverX, BS12FactorOverH>;  // <L0, L1 : x0 = h1>
using InstanceQ = Amalgam<HeisFactorAlpha, Z2FactorFirst>;   // Heis(v,x,y) *_<v> Z^2
using InstanceT = Amalgam<HeisFactorHV, ZxF2FactorHV>;       // Heis(h,z,v) *_{<h,v>} Z x F2

InstanceJ instance_J();
InstanceHhalf instance_Hhalf();
InstanceQ instance_Q();
InstanceT instance_T();

// ---------------------------------------------------------------------
// Britton reduction for BS(1,2) = HNN of Z = <x> with stable letter h and
// associated map x -> x^2.
// ---------------------------------------------------------------------

// x^{k0} h^{e1} x^{k1} ... h^{em} x^{km}, pinch-free: no h x^k h^-1 at
// all (the associated subgroup is all of <x>) and no h^-1 x^{2l} h.
struct BrittonForm {
  bigint lead_power = 0;
  struct Pair {
    int stable;    // +1 or -1
    bigint base;   // power of x following the stable letter
    friend bool operator==(Pair const&, Pair const&) = default;
  };
  std::vector<Pair> tail;

  bool is_identity() const { return tail.empty() && lead_power == 0; }
  std::size_t syllable_count() const;
  friend bool operator==(BrittonForm const&, BrittonForm const&) = default;
};

alphabet_ptr bs12_alphabet();  // {"x", "h"}

BrittonForm hnn_eval(Word const& w);

// ---------------------------------------------------------------------
// Verification suites.
// ---------------------------------------------------------------------

// True iff every nonempty freely reduced word of length <= max_len over
// `letters` (as abstract symbols) evaluates to a non-identity element.
template <class Inst>
bool check_free(Inst const& inst, std::vector<Word> const& letters,
                std::size_t max_len) {
  if (letters.empty()) throw error("check_free: need at least one letter");
  std::vector<typename Inst::NormalForm> images, inverses;
  for (Word const& w : letters) {
    images.push_back(inst.eval(w));
    inverses.push_back(inst.eval(invert(w)));
  }
  // DFS over reduced abstract words; state = (last symbol, its sign, nf)
  struct Frame {
    std::size_t sym;
    int sign;
    typename Inst::NormalForm nf;
    std::size_t depth;
  };
  std::vector<Frame> stack;
  auto push_all = [&](typename Inst::NormalForm const& base, std::size_t depth,
                      std::size_t avoid_sym, int avoid_sign) {
    for (std::size_t s = 0; s < letters.size(); ++s)
      for (int sign : {+1, -1}) {
        if (s == avoid_sym && sign == -avoid_sign) continue;
        stack.push_back(
            {s, sign, inst.mul(base, sign > 0 ? images[s] : inverses[s]),
             depth});
      }
  };
  push_all(inst.identity(), 1, letters.size(), 0);
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.nf.is_identity()) return false;
    if (f.depth < max_len) push_all(f.nf, f.depth + 1, f.sym, f.sign);
  }
  return true;
}

struct QTIsoReport {
  std::uint64_t samples = 0;
  std::size_t max_len = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> violating_words;  // bounded
  bool ok() const { return violations == 0; }
};

// Samples random words w over {v,x,y,z} and asserts
//   eval_Q(w) = e  <=>  eval_T(phi(w)) = e
// for the letterwise map phi: (v,x,y,z) -> (h,z,v,u).
QTIsoReport check_qt_iso(std::uint64_t samples, std::size_t max_len,
                         std::uint64_t seed);

struct SuiteReport {
  std::string instance;
  std::uint64_t samples = 0;
  std::size_t max_len = 0;
  std::uint64_t seed = 0;
  std::uint64_t failures = 0;
  bool ok() const { return failures == 0; }
};

// Homomorphism, inverse, factor-embedding and alternation invariants on
// seeded random words.
template <class Inst>
SuiteReport run_property_suite(Inst const& inst, std::uint64_t samples,
                               std::size_t max_len, std::uint64_t seed) {
  SuiteReport rep{inst.name(), samples, max_len, seed, 0};
  Rng rng(seed);
  auto sub_alphabet_word = [&](std::vector<gen_id> const& gens,
                               std::size_t len) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
      gen_id g = gens[static_cast<std::size_t>(rng.below(gens.size()))];
      ls.push_back({g, rng.below(2) == 0 ? +1 : -1});
    }
    return Word::reduce(inst.alphabet(), ls);
  };
  for (std::uint64_t it = 0; it < samples; ++it) {
    std::size_t l1 = static_cast<std::size_t>(rng.below(max_len + 1));
    std::size_t l2 = static_cast<std::size_t>(rng.below(max_len + 1));
    Word w1 = random_reduced_word(rng, inst.alphabet(), l1);
    Word w2 = random_reduced_word(rng, inst.alphabet(), l2);

    auto n1 = inst.eval(w1);
    auto n2 = inst.eval(w2);
    auto prod = inst.mul(n1, n2);
    bool ok = prod == inst.eval(concat(w1, w2));
    ok = ok && inst.well_formed(prod) && inst.well_formed(n1);
    ok = ok && inst.eval(invert(w1)) == inst.inverse(n1);
    ok = ok && inst.mul(n1, inst.inverse(n1)).is_identity();

    // factor embedding: a word living inside one factor is trivial in
    // the amalgam iff the exact model says so
    int side = static_cast<int>(rng.below(2));
    auto gens = inst.side_generators(side);
    Word fw = sub_alphabet_word(gens, rng.below(max_len + 1));
    bool model_trivial = inst.factor_word_is_identity(side, fw);
    bool nf_trivial = inst.eval(fw).is_identity();
    ok = ok && (model_trivial == nf_trivial);

    if (!ok) ++rep.failures;
  }
  return rep;
}

// Cross-oracle consistency: Britton-form emptiness coincides with
// triviality in the affine model.
struct HnnCrossReport {
  std::uint64_t samples = 0;
  std::size_t max_len = 0;
  std::uint64_t seed = 0;
  std::uint64_t failures = 0;
  bool ok() const { return failures == 0; }
};

HnnCrossReport check_hnn_cross(std::uint64_t samples, std::size_t max_len,
                               std::uint64_t seed);

}  // namespace fpg

#endif
