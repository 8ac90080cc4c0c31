#include "fpgroups/exact_models.hpp"

namespace fpg {

namespace {
bigint pow2(long long k) { return bigint(1) << static_cast<unsigned>(k); }
}  // namespace

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic d;
  d.num_ = -num_;
  d.exp_ = exp_;
  return d;
}

Dyadic Dyadic::operator+(Dyadic const& o) const {
  long long e = std::max(exp_, o.exp_);
  bigint a = num_ * pow2(e - exp_);
  bigint b = o.num_ * pow2(e - o.exp_);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator*(Dyadic const& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::times_pow2(long long k) const {
  if (num_ == 0) return Dyadic();
  Dyadic d;
  d.num_ = num_;
  d.exp_ = exp_ - k;
  return d;
}

bigint Dyadic::floor() const {
  if (exp_ <= 0) return num_ * pow2(-exp_);
  bigint d = pow2(exp_);
  bigint q = num_ / d;  // truncates toward zero
  if (num_ < 0 && q * d != num_) --q;
  return q;
}

Dyadic Dyadic::frac() const { return *this - Dyadic(floor(), 0); }

std::string Dyadic::str() const {
  if (is_integer()) return bigint(num_ * pow2(-exp_)).str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

Mat2 mat2_mul(Mat2 const& a, Mat2 const& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Vec2 mat2_apply(Mat2 const& m, Vec2 const& v) {
  return {Dyadic(m.m00, 0) * v.a + Dyadic(m.m01, 0) * v.b,
          Dyadic(m.m10, 0) * v.a + Dyadic(m.m11, 0) * v.b};
}

Mat3 mat3_mul(Mat3 const& a, Mat3 const& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Dyadic s;
      for (int k = 0; k < 3; ++k) s = s + a.at(r, k) * b.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

// --------------------------------------------------------------------
// Heisenberg

HeisModel::HeisModel(std::string alpha, std::string beta, std::string zeta)
    : alphabet_(make_alphabet({std::move(alpha), std::move(beta),
                               std::move(zeta)})) {}

HeisElement HeisModel::mul(HeisElement const& a, HeisElement const& b) const {
  // beta^q alpha^{p'} = alpha^{p'} beta^q zeta^{-p'q}
  return {a.p + b.p, a.q + b.q, a.r + b.r - b.p * a.q};
}

HeisElement HeisModel::inv(HeisElement const& a) const {
  return {-a.p, -a.q, -a.r - a.p * a.q};
}

HeisElement HeisModel::generator(gen_id g, int sign) const {
  HeisElement e;
  switch (g) {
    case 0: e.p = 1; break;
    case 1: e.q = 1; break;
    case 2: e.r = 1; break;
    default: throw error("HeisModel: generator id out of range");
  }
  return sign > 0 ? e : inv(e);
}

// --------------------------------------------------------------------
// BS(1,2)

BS12Model::BS12Model(std::string x, std::string h)
    : alphabet_(make_alphabet({std::move(x), std::move(h)})), x_(0), h_(1) {}

BSElement BS12Model::mul(BSElement const& f, BSElement const& g) const {
  // (f g)(t) = f(g(t)) = 2^{f.a} (2^{g.a} t + g.b) + f.b
  return {f.a + g.a, g.b.times_pow2(f.a) + f.b};
}

BSElement BS12Model::inv(BSElement const& f) const {
  return {-f.a, (-f.b).times_pow2(-f.a)};
}

BSElement BS12Model::generator(gen_id g, int sign) const {
  if (g == x_) return sign > 0 ? BSElement{0, Dyadic(1)} : BSElement{0, Dyadic(-1)};
  if (g == h_) return {sign, Dyadic()};
  throw error("BS12Model: generator id out of range");
}

// --------------------------------------------------------------------
// L and its free factor

alphabet_ptr f2_alphabet() {
  static alphabet_ptr a = make_alphabet({"u", "v"});
  return a;
}

alphabet_ptr l_alphabet() {
  static alphabet_ptr a = make_alphabet({"x", "y", "h", "u", "v"});
  return a;
}

Mat2 f2_matrix(Word const& w) {
  static const Mat2 U{1, 1, 0, 1};
  static const Mat2 Uinv{1, -1, 0, 1};
  static const Mat2 V{1, 0, 1, 1};
  static const Mat2 Vinv{1, 0, -1, 1};
  Mat2 m;
  for (Letter const& l : w.letters()) {
    Mat2 const& g = l.gen == 0 ? (l.sign > 0 ? U : Uinv)
                               : (l.sign > 0 ? V : Vinv);
    m = mat2_mul(m, g);
  }
  return m;
}

LModel::LModel() : alphabet_(l_alphabet()) {}

LElement LModel::identity() const { return {Vec2{}, 0, Word(f2_alphabet())}; }

LElement LModel::mul(LElement const& a, LElement const& b) const {
  Vec2 moved = mat2_apply(f2_matrix(a.w), b.t);
  moved.a = moved.a.times_pow2(a.a);
  moved.b = moved.b.times_pow2(a.a);
  return {Vec2{a.t.a + moved.a, a.t.b + moved.b}, a.a + b.a, concat(a.w, b.w)};
}

LElement LModel::inv(LElement const& a) const {
  Word wi = invert(a.w);
  Vec2 t = mat2_apply(f2_matrix(wi), Vec2{-a.t.a, -a.t.b});
  t.a = t.a.times_pow2(-a.a);
  t.b = t.b.times_pow2(-a.a);
  return {t, -a.a, wi};
}

LElement LModel::generator(gen_id g, int sign) const {
  LElement e = identity();
  switch (g) {
    case 0: e.t.a = Dyadic(sign); return e;                    // x
    case 1: e.t.b = Dyadic(sign); return e;                    // y
    case 2: e.a = sign; return e;                              // h
    case 3: e.w = Word::generator(f2_alphabet(), 0, sign); return e;  // u
    case 4: e.w = Word::generator(f2_alphabet(), 1, sign); return e;  // v
    default: throw error("LModel: generator id out of range");
  }
}

// --------------------------------------------------------------------
// Z^2 and Z x F2

Z2Model::Z2Model(std::string g1, std::string g2)
    : alphabet_(make_alphabet({std::move(g1), std::move(g2)})) {}

Z2Element Z2Model::generator(gen_id g, int sign) const {
  if (g == 0) return {sign, 0};
  if (g == 1) return {0, sign};
  throw error("Z2Model: generator id out of range");
}

ZxF2Model::ZxF2Model(std::string h, std::string u, std::string v)
    : alphabet_(make_alphabet({std::move(h), std::move(u), std::move(v)})) {}

ZxF2Element ZxF2Model::identity() const { return {0, Word(f2_alphabet())}; }

ZxF2Element ZxF2Model::mul(ZxF2Element const& a, ZxF2Element const& b) const {
  return {a.a + b.a, concat(a.w, b.w)};
}

ZxF2Element ZxF2Model::inv(ZxF2Element const& a) const {
  return {-a.a, invert(a.w)};
}

ZxF2Element ZxF2Model::generator(gen_id g, int sign) const {
  switch (g) {
    case 0: return {sign, Word(f2_alphabet())};
    case 1: return {0, Word::generator(f2_alphabet(), 0, sign)};
    case 2: return {0, Word::generator(f2_alphabet(), 1, sign)};
    default: throw error("ZxF2Model: generator id out of range");
  }
}

// --------------------------------------------------------------------
// Affine 3x3 representation of L

Mat3 affine_matrix_model(Word const& w) {
  if (!same_alphabet(w.alphabet(), l_alphabet())) throw alphabet_mismatch();
  auto translation = [](Dyadic dx, Dyadic dy) {
    Mat3 m;
    m.at(0, 2) = std::move(dx);
    m.at(1, 2) = std::move(dy);
    return m;
  };
  auto linear = [](Dyadic a, Dyadic b, Dyadic c, Dyadic d) {
    Mat3 m;
    m.at(0, 0) = std::move(a);
    m.at(0, 1) = std::move(b);
    m.at(1, 0) = std::move(c);
    m.at(1, 1) = std::move(d);
    return m;
  };
  Mat3 acc;
  for (Letter const& l : w.letters()) {
    Mat3 g;
    int s = l.sign;
    switch (l.gen) {
      case 0: g = translation(Dyadic(s), Dyadic(0)); break;  // x
      case 1: g = translation(Dyadic(0), Dyadic(s)); break;  // y
      case 2:  // h: scaling by 2^s
        g = linear(Dyadic(1, -s), Dyadic(0), Dyadic(0), Dyadic(1, -s));
        break;
      case 3: g = linear(Dyadic(1), Dyadic(s), Dyadic(0), Dyadic(1)); break;
      case 4: g = linear(Dyadic(1), Dyadic(0), Dyadic(s), Dyadic(1)); break;
      default: throw error("affine_matrix_model: bad generator");
    }
    acc = mat3_mul(acc, g);
  }
  return acc;
}

}  // namespace fpg
