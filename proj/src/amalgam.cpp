#include "fpgroups/amalgam.hpp"

namespace fpg {

InstanceJ instance_J() {
  LFactorHV a;
  HeisFactorHV b;
  alphabet_ptr alpha = make_alphabet({"x", "y", "h", "u", "v", "z"});
  std::vector<InstanceJ::LetterImage> letters(6);
  letters[0] = {true, false, a.model.generator(0), {}};   // x
  letters[1] = {true, false, a.model.generator(1), {}};   // y
  letters[2] = {true, true, a.model.generator(2),
                b.model.generator(0)};                     // h
  letters[3] = {true, false, a.model.generator(3), {}};   // u
  letters[4] = {true, true, a.model.generator(4),
                b.model.generator(2)};                     // v (= zeta)
  letters[5] = {false, true, {}, b.model.generator(1)};   // z
  return InstanceJ(std::move(a), std::move(b), std::move(alpha),
                   std::move(letters), "J");
}

InstanceHhalf instance_Hhalf() {
  BS12FactorOverX a("x0", "h0");
  BS12FactorOverH b("x1", "h1");
  alphabet_ptr alpha = make_alphabet({"x0", "h0", "x1", "h1"});
  std::vector<InstanceHhalf::LetterImage> letters(4);
  // x0 = h1 is the amalgamated generator; it has images in both factors.
  letters[0] = {true, true, a.model.generator(0), b.model.generator(1)};  // x0
  letters[1] = {true, false, a.model.generator(1), {}};                   // h0
  letters[2] = {false, true, {}, b.model.generator(0)};                   // x1
  letters[3] = {true, true, a.model.generator(0), b.model.generator(1)};  // h1
  return InstanceHhalf(std::move(a), std::move(b), std::move(alpha),
                       std::move(letters), "Hhalf");
}

InstanceQ instance_Q() {
  HeisFactorAlpha a;
  Z2FactorFirst b;
  alphabet_ptr alpha = make_alphabet({"v", "x", "y", "z"});
  std::vector<InstanceQ::LetterImage> letters(4);
  letters[0] = {true, true, a.model.generator(0), b.model.generator(0)};  // v
  letters[1] = {true, false, a.model.generator(1), {}};                   // x
  letters[2] = {true, false, a.model.generator(2), {}};                   // y
  letters[3] = {false, true, {}, b.model.generator(1)};                   // z
  return InstanceQ(std::move(a), std::move(b), std::move(alpha),
                   std::move(letters), "Q");
}

InstanceT instance_T() {
  HeisFactorHV a;
  ZxF2FactorHV b;
  alphabet_ptr alpha = make_alphabet({"h", "z", "v", "u"});
  std::vector<InstanceT::LetterImage> letters(4);
  letters[0] = {true, true, a.model.generator(0), b.model.generator(0)};  // h
  letters[1] = {true, false, a.model.generator(1), {}};                   // z
  letters[2] = {true, true, a.model.generator(2), b.model.generator(2)};  // v
  letters[3] = {false, true, {}, b.model.generator(1)};                   // u
  return InstanceT(std::move(a), std::move(b), std::move(alpha),
                   std::move(letters), "T");
}

std::size_t BrittonForm::syllable_count() const {
  std::size_t n = lead_power != 0 ? 1 : 0;
  for (Pair const& p : tail) {
    ++n;
    if (p.base != 0) ++n;
  }
  return n;
}

alphabet_ptr bs12_alphabet() {
  static alphabet_ptr a = make_alphabet({"x", "h"});
  return a;
}

BrittonForm hnn_eval(Word const& w) {
  if (!same_alphabet(w.alphabet(), bs12_alphabet())) throw alphabet_mismatch();
  BrittonForm bf;
  auto push_base = [&](bigint const& k) {
    if (bf.tail.empty())
      bf.lead_power += k;
    else
      bf.tail.back().base += k;
  };
  for (Letter const& l : w.letters()) {
    if (l.gen == 0) {  // x
      push_base(l.sign);
      continue;
    }
    int e = l.sign;  // h^e
    if (!bf.tail.empty()) {
      auto const& last = bf.tail.back();
      if (last.stable == +1 && e == -1) {  // h x^k h^-1 = x^{2k}
        bigint k = last.base * 2;
        bf.tail.pop_back();
        push_base(k);
        continue;
      }
      if (last.stable == -1 && e == +1 && last.base % 2 == 0) {
        bigint k = last.base / 2;  // h^-1 x^{2m} h = x^m
        bf.tail.pop_back();
        push_base(k);
        continue;
      }
    }
    bf.tail.push_back({e, 0});
  }
  return bf;
}

QTIsoReport check_qt_iso(std::uint64_t samples, std::size_t max_len,
                         std::uint64_t seed) {
  QTIsoReport rep;
  rep.samples = samples;
  rep.max_len = max_len;
  rep.seed = seed;

  InstanceQ q = instance_Q();
  InstanceT t = instance_T();
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
    Word wq = random_reduced_word(rng, q.alphabet(), len);
    // phi maps (v,x,y,z) to (h,z,v,u) letterwise: identical ids, other
    // alphabet
    Word wt = Word::reduce(t.alphabet(), wq.letters());
    bool qi = q.eval(wq).is_identity();
    bool ti = t.eval(wt).is_identity();
    if (qi != ti) {
      ++rep.violations;
      if (rep.violating_words.size() < 5)
        rep.violating_words.push_back(print_word(wq));
    }
  }
  return rep;
}

HnnCrossReport check_hnn_cross(std::uint64_t samples, std::size_t max_len,
                               std::uint64_t seed) {
  HnnCrossReport rep;
  rep.samples = samples;
  rep.max_len = max_len;
  rep.seed = seed;

  BS12Model model("x", "h");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
    Word w = random_reduced_word(rng, bs12_alphabet(), len);
    bool britton_trivial = hnn_eval(w).is_identity();
    bool affine_trivial = eval(model, w) == model.identity();
    if (britton_trivial != affine_trivial) ++rep.failures;
  }
  return rep;
}

}  // namespace fpg
