#ifndef FPGROUPS_EXACT_MODELS_HPP
#define FPGROUPS_EXACT_MODELS_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "fpgroups/presentation.hpp"
#include "fpgroups/word.hpp"

namespace fpg {

using bigint = boost::multiprecision::cpp_int;

// Exact dyadic rational numerator / 2^exponent; numerator odd or zero,
// zero stored with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) { normalize(); }  // NOLINT: implicit by design
  Dyadic(bigint n, long long e) : num_(std::move(n)), exp_(e) { normalize(); }

  bigint const& numerator() const { return num_; }
  long long exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ <= 0; }

  Dyadic operator-() const;
  Dyadic operator+(Dyadic const& o) const;
  Dyadic operator-(Dyadic const& o) const { return *this + (-o); }
  Dyadic operator*(Dyadic const& o) const;
  Dyadic times_pow2(long long k) const;  // value * 2^k

  bigint floor() const;
  Dyadic frac() const;  // value - floor, in [0, 1)

  friend bool operator==(Dyadic const& a, Dyadic const& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }

  std::string str() const;

 private:
  bigint num_ = 0;
  long long exp_ = 0;
  void normalize();
};

struct Vec2 {
  Dyadic a, b;
  friend bool operator==(Vec2 const&, Vec2 const&) = default;
};

// Integer 2x2 matrix, the SL2(Z) image of the free factor.
struct Mat2 {
  bigint m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  friend bool operator==(Mat2 const&, Mat2 const&) = default;
  bigint det() const { return m00 * m11 - m01 * m10; }
};

Mat2 mat2_mul(Mat2 const& a, Mat2 const& b);
Vec2 mat2_apply(Mat2 const& m, Vec2 const& v);

// 3x3 dyadic matrix for the affine representation.
struct Mat3 {
  std::array<Dyadic, 9> e{1, 0, 0, 0, 1, 0, 0, 0, 1};
  Dyadic& at(int r, int c) { return e[3 * r + c]; }
  Dyadic const& at(int r, int c) const { return e[3 * r + c]; }
  friend bool operator==(Mat3 const&, Mat3 const&) = default;
};

Mat3 mat3_mul(Mat3 const& a, Mat3 const& b);

// ---------------------------------------------------------------------
// Concrete models.  Each provides: Element, identity(), mul(), inv(),
// equal(), generator(gen_id), and its alphabet; eval() folds a word.
// ---------------------------------------------------------------------

// Normal form alpha^p beta^q zeta^r with [alpha,beta] = zeta central.
struct HeisElement {
  long long p = 0, q = 0, r = 0;
  friend bool operator==(HeisElement const&, HeisElement const&) = default;
};

class HeisModel {
 public:
  using Element = HeisElement;
  HeisModel(std::string alpha, std::string beta, std::string zeta);

  alphabet_ptr const& alphabet() const { return alphabet_; }
  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const;
  Element inv(Element const& a) const;
  bool equal(Element const& a, Element const& b) const { return a == b; }
  Element generator(gen_id g, int sign = +1) const;

 private:
  alphabet_ptr alphabet_;
};

// Affine map t -> 2^a t + b; the group BS(1,2) = <x, h : h x h^-1 = x^2>
// with x: t -> t+1 and h: t -> 2t.
struct BSElement {
  long long a = 0;
  Dyadic b;
  friend bool operator==(BSElement const&, BSElement const&) = default;
};

class BS12Model {
 public:
  using Element = BSElement;
  BS12Model(std::string x, std::string h);

  alphabet_ptr const& alphabet() const { return alphabet_; }
  Element identity() const { return {}; }
  Element mul(Element const& f, Element const& g) const;  // f after g
  Element inv(Element const& f) const;
  bool equal(Element const& a, Element const& b) const { return a == b; }
  Element generator(gen_id g, int sign = +1) const;

 private:
  alphabet_ptr alphabet_;
  gen_id x_, h_;
};

// The alphabet {u, v} of the free factor of L, shared by LModel and
// ZxF2Model so their words compare directly.
alphabet_ptr f2_alphabet();

// Image of a {u,v}-word under u -> (1 1 / 0 1), v -> (1 0 / 1 1).
Mat2 f2_matrix(Word const& w);

// Element (t, a, w) of L = (Z[1/2])^2 x| (Z x F2): translation t, power a
// of h, and reduced word w in the free factor.  Multiplication:
// (t1,a1,w1)(t2,a2,w2) = (t1 + 2^{a1} M(w1) t2, a1+a2, w1 w2).
struct LElement {
  Vec2 t;
  long long a = 0;
  Word w;
  friend bool operator==(LElement const&, LElement const&) = default;
};

class LModel {
 public:
  using Element = LElement;
  LModel();

  alphabet_ptr const& alphabet() const { return alphabet_; }
  Element identity() const;
  Element mul(Element const& a, Element const& b) const;
  Element inv(Element const& a) const;
  bool equal(Element const& a, Element const& b) const { return a == b; }
  Element generator(gen_id g, int sign = +1) const;

 private:
  alphabet_ptr alphabet_;
};

// Z^2 on two named generators.
struct Z2Element {
  long long a = 0, b = 0;
  friend bool operator==(Z2Element const&, Z2Element const&) = default;
};

class Z2Model {
 public:
  using Element = Z2Element;
  Z2Model(std::string g1, std::string g2);

  alphabet_ptr const& alphabet() const { return alphabet_; }
  Element identity() const { return {}; }
  Element mul(Element const& a, Element const& b) const {
    return {a.a + b.a, a.b + b.b};
  }
  Element inv(Element const& a) const { return {-a.a, -a.b}; }
  bool equal(Element const& a, Element const& b) const { return a == b; }
  Element generator(gen_id g, int sign = +1) const;

 private:
  alphabet_ptr alphabet_;
};

// Z x F2 on (h, u, v) with h central.
struct ZxF2Element {
  long long a = 0;
  Word w;
  friend bool operator==(ZxF2Element const&, ZxF2Element const&) = default;
};

class ZxF2Model {
 public:
  using Element = ZxF2Element;
  ZxF2Model(std::string h, std::string u, std::string v);

  alphabet_ptr const& alphabet() const { return alphabet_; }
  Element identity() const;
  Element mul(Element const& a, Element const& b) const;
  Element inv(Element const& a) const;
  bool equal(Element const& a, Element const& b) const { return a == b; }
  Element generator(gen_id g, int sign = +1) const;

 private:
  alphabet_ptr alphabet_;
};

// Folds a word through the model; a homomorphism from the free group on
// the model's alphabet.
template <class Model>
typename Model::Element eval(Model const& m, Word const& w) {
  if (!same_alphabet(w.alphabet(), m.alphabet())) throw alphabet_mismatch();
  typename Model::Element acc = m.identity();
  for (Letter const& l : w.letters())
    acc = m.mul(acc, m.generator(l.gen, l.sign));
  return acc;
}

// True iff every relator of p, rewritten through `assignment`, evaluates
// to the model identity.
template <class Model>
bool check_relators(Model const& m, Presentation const& p,
                    std::map<std::string, Word> const& assignment) {
  std::vector<Word> images;
  images.reserve(p.alphabet->size());
  for (gen_id i = 0; i < p.alphabet->size(); ++i) {
    auto it = assignment.find(p.alphabet->name(i));
    if (it == assignment.end())
      throw error("check_relators: no assignment for '" +
                  p.alphabet->name(i) + "'");
    if (!same_alphabet(it->second.alphabet(), m.alphabet()))
      throw alphabet_mismatch();
    images.push_back(it->second);
  }
  for (Word const& r : p.relators) {
    Word image = apply_images(r, images);
    if (!m.equal(eval(m, image), m.identity())) return false;
  }
  return true;
}

// Identity assignment for a presentation whose generator names all occur
// in the model alphabet.
template <class Model>
std::map<std::string, Word> identity_assignment(Model const& m,
                                                Presentation const& p) {
  std::map<std::string, Word> out;
  for (gen_id i = 0; i < p.alphabet->size(); ++i) {
    std::string const& n = p.alphabet->name(i);
    out[n] = Word::generator(m.alphabet(), m.alphabet()->id_of(n));
  }
  return out;
}

// The (non-faithful) affine representation of L on {x,y,h,u,v}:
// w -> [[2^a M(w_F2), t], [0, 1]].
Mat3 affine_matrix_model(Word const& w);

// Alphabet {x,y,h,u,v} the affine model expects (same as LModel's).
alphabet_ptr l_alphabet();

}  // namespace fpg

#endif
