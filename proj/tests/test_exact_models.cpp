#include "doctest.h"

#include <array>

#include "fpgroups/exact_models.hpp"
#include "fpgroups/rng.hpp"

using namespace fpg;

TEST_CASE("dyadic arithmetic") {
  Dyadic half(1, 1);   // 1/2
  Dyadic three(3);
  CHECK((half + half) == Dyadic(1));
  CHECK((three * half) == Dyadic(3, 1));
  CHECK((half - half).is_zero());
  CHECK((half - half) == Dyadic());
  CHECK(Dyadic(4).numerator() == 1);  // canonical: 4 = 1/2^-2
  CHECK(Dyadic(4).exponent() == -2);
  CHECK(Dyadic(0, 0).exponent() == 0);

  CHECK(Dyadic(5, 1).floor() == 2);    // 5/2
  CHECK(Dyadic(-5, 1).floor() == -3);  // -5/2
  CHECK(Dyadic(-4).floor() == -4);
  CHECK(Dyadic(5, 1).frac() == Dyadic(1, 1));
  CHECK(Dyadic(-5, 1).frac() == Dyadic(1, 1));
  CHECK(Dyadic(7, 2).times_pow2(2) == Dyadic(7));

  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Dyadic a(static_cast<long long>(rng.below(41)) - 20,
             static_cast<long long>(rng.below(6)) - 3);
    Dyadic b(static_cast<long long>(rng.below(41)) - 20,
             static_cast<long long>(rng.below(6)) - 3);
    // canonical form is closed under + - *
    for (Dyadic const& r : {a + b, a - b, a * b}) {
      if (!r.is_zero())
        CHECK(r.numerator() % 2 != 0);
      else
        CHECK(r.exponent() == 0);
    }
    CHECK((a + (-a)).is_zero());
    Dyadic fr = a.frac();
    CHECK(!(fr.numerator() < 0));
    CHECK(Dyadic(a.floor(), 0) + fr == a);
  }
}

TEST_CASE("BS(1,2) affine model") {
  BS12Model m("x", "h");
  CHECK(eval(m, parse_word(m.alphabet(), "h x h^-1 x^-2")) == m.identity());
  CHECK(eval(m, parse_word(m.alphabet(), "[h,x] x^-1")) == m.identity());
  // h^-1 x h is translation by 1/2
  BSElement e = eval(m, parse_word(m.alphabet(), "h^-1 x h"));
  CHECK(e.a == 0);
  CHECK(e.b == Dyadic(1, 1));
  // h and x do not commute
  CHECK(eval(m, parse_word(m.alphabet(), "x h x^-1 h^-1")) != m.identity());
}

TEST_CASE("Heisenberg model against the unitriangular matrix oracle") {
  HeisModel m("a", "b", "z");
  CHECK(eval(m, parse_word(m.alphabet(), "a b a^-1 b^-1 z^-1")) ==
        m.identity());
  CHECK(eval(m, parse_word(m.alphabet(), "[a,b] z^-1")) == m.identity());
  CHECK(eval(m, parse_word(m.alphabet(), "[z,a]")) == m.identity());
  CHECK(eval(m, parse_word(m.alphabet(), "[z,b]")) == m.identity());

  // oracle: alpha -> E12, beta -> E23, zeta -> E13 in UT(3, Z)
  using M3 = std::array<long long, 9>;
  auto mul3 = [](M3 const& a, M3 const& b) {
    M3 c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
    return c;
  };
  auto embed = [&](HeisElement const& e) {
    // alpha^p beta^q zeta^r = [[1, p, r + pq], [0, 1, q], [0, 0, 1]]
    M3 acc{1, 0, 0, 0, 1, 0, 0, 0, 1};
    M3 alpha{1, 1, 0, 0, 1, 0, 0, 0, 1};
    M3 alpha_i{1, -1, 0, 0, 1, 0, 0, 0, 1};
    M3 beta{1, 0, 0, 0, 1, 1, 0, 0, 1};
    M3 beta_i{1, 0, 0, 0, 1, -1, 0, 0, 1};
    M3 zeta{1, 0, 1, 0, 1, 0, 0, 0, 1};
    M3 zeta_i{1, 0, -1, 0, 1, 0, 0, 0, 1};
    for (long long i = 0; i < (e.p < 0 ? -e.p : e.p); ++i)
      acc = mul3(acc, e.p > 0 ? alpha : alpha_i);
    for (long long i = 0; i < (e.q < 0 ? -e.q : e.q); ++i)
      acc = mul3(acc, e.q > 0 ? beta : beta_i);
    for (long long i = 0; i < (e.r < 0 ? -e.r : e.r); ++i)
      acc = mul3(acc, e.r > 0 ? zeta : zeta_i);
    return acc;
  };

  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    HeisElement a{static_cast<long long>(rng.below(9)) - 4,
                  static_cast<long long>(rng.below(9)) - 4,
                  static_cast<long long>(rng.below(9)) - 4};
    HeisElement b{static_cast<long long>(rng.below(9)) - 4,
                  static_cast<long long>(rng.below(9)) - 4,
                  static_cast<long long>(rng.below(9)) - 4};
    CHECK(embed(m.mul(a, b)) == mul3(embed(a), embed(b)));
    M3 id3{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(mul3(embed(a), embed(m.inv(a))) == id3);
    CHECK(m.mul(a, m.inv(a)) == m.identity());
  }
}

TEST_CASE("L model satisfies the nine relators") {
  LModel L;
  Presentation lp = l_presentation();
  CHECK(check_relators(L, lp, identity_assignment(L, lp)));

  auto al = L.alphabet();
  CHECK(eval(L, parse_word(al, "[v,x] y^-1")) == L.identity());
  CHECK(eval(L, parse_word(al, "[u,y] x^-1")) == L.identity());
  CHECK(eval(L, parse_word(al, "h x h^-1 x^-2")) == L.identity());

  // (u v^-1 u)^4 is nontrivial in L: whole weight sits in the free factor
  LElement k = eval(L, parse_word(al, "(u v^-1 u)^4"));
  CHECK(k != L.identity());
  CHECK(k.t == Vec2{});
  CHECK(k.a == 0);
  CHECK(k.w.length() == 12);
}

TEST_CASE("Heis(v,x,y) sits inside L") {
  LModel L;
  HeisModel heis("v", "x", "y");
  Presentation hp = make_presentation(
      "HeisRels", {"v", "x", "y"},
      std::vector<std::string>{"[v,x] y^-1", "[y,v]", "[y,x]"});
  CHECK(check_relators(heis, hp, identity_assignment(heis, hp)));
  // the same relators hold for the corresponding elements of L
  CHECK(check_relators(L, hp, identity_assignment(L, hp)));
}

TEST_CASE("check_relators rejects a false relator") {
  BS12Model bs("x", "h");
  Presentation good = make_presentation(
      "BS12", {"x", "h"}, std::vector<std::string>{"[h,x] x^-1"});
  CHECK(check_relators(bs, good, identity_assignment(bs, good)));
  Presentation bad = make_presentation(
      "BS12bad", {"x", "h"},
      std::vector<std::string>{"[h,x] x^-1", "x h x^-1 h^-1"});
  CHECK(!check_relators(bs, bad, identity_assignment(bs, bad)));
}

TEST_CASE("models are homomorphisms on random words") {
  Rng rng(2024);
  LModel L;
  HeisModel heis("h", "z", "v");
  BS12Model bs("x", "h");
  ZxF2Model zf("h", "u", "v");

  auto check_model = [&](auto const& m) {
    for (int i = 0; i < 10000; ++i) {
      Word w1 = random_reduced_word(rng, m.alphabet(), rng.below(25));
      Word w2 = random_reduced_word(rng, m.alphabet(), rng.below(25));
      CHECK(m.equal(eval(m, concat(w1, w2)), m.mul(eval(m, w1), eval(m, w2))));
      CHECK(m.equal(eval(m, invert(w1)), m.inv(eval(m, w1))));
      CHECK(m.equal(m.mul(eval(m, w1), m.inv(eval(m, w1))), m.identity()));
    }
  };
  check_model(L);
  check_model(heis);
  check_model(bs);
  check_model(zf);
}

TEST_CASE("L faithfulness, one-sided") {
  // multiplying by conjugated relators never changes the model value
  LModel L;
  Presentation lp = l_presentation();
  Rng rng(77);
  for (int i = 0; i < 10000; ++i) {
    Word w = random_reduced_word(rng, L.alphabet(), rng.below(15));
    Word r = lp.relators[rng.below(lp.relators.size())];
    Word c = random_reduced_word(rng, L.alphabet(), rng.below(8));
    Word w2 = concat(w, concat(concat(c, r), invert(c)));
    CHECK(L.equal(eval(L, w), eval(L, w2)));
  }
  // distinct normal forms stay distinct under such multiplications
  for (int i = 0; i < 10000; ++i) {
    Word w1 = random_reduced_word(rng, L.alphabet(), 1 + rng.below(12));
    Word w2 = random_reduced_word(rng, L.alphabet(), 1 + rng.below(12));
    LElement e1 = eval(L, w1);
    LElement e2 = eval(L, w2);
    if (e1 == e2) continue;
    Word r = lp.relators[rng.below(lp.relators.size())];
    Word c = random_reduced_word(rng, L.alphabet(), rng.below(6));
    Word w2r = concat(w2, concat(concat(c, r), invert(c)));
    CHECK(!L.equal(eval(L, w1), eval(L, w2r)));
  }
}

TEST_CASE("f2 matrices land in SL2(Z)") {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    Word w = random_reduced_word(rng, f2_alphabet(), rng.below(30));
    CHECK(f2_matrix(w).det() == 1);
  }
}

TEST_CASE("affine 3x3 model") {
  auto al = l_alphabet();
  Mat3 id;

  // x acts as translation by (1, 0)
  Mat3 mx = affine_matrix_model(parse_word(al, "x"));
  CHECK(mx.at(0, 2) == Dyadic(1));
  CHECK(mx.at(1, 2) == Dyadic(0));
  CHECK(mx.at(0, 0) == Dyadic(1));

  // h x h^-1 is translation by (2, 0)
  Mat3 m2 = affine_matrix_model(parse_word(al, "h x h^-1"));
  CHECK(m2.at(0, 2) == Dyadic(2));
  CHECK(m2.at(0, 0) == Dyadic(1));
  CHECK(m2.at(1, 1) == Dyadic(1));
  CHECK(m2.at(1, 2) == Dyadic(0));

  // the affine model is a homomorphism
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    Word w1 = random_reduced_word(rng, al, rng.below(12));
    Word w2 = random_reduced_word(rng, al, rng.below(12));
    CHECK(affine_matrix_model(concat(w1, w2)) ==
          mat3_mul(affine_matrix_model(w1), affine_matrix_model(w2)));
  }

  // the kernel witness: (u v^-1 u)^4 maps to the identity matrix while
  // the faithful model keeps it nontrivial
  Word k = parse_word(al, "(u v^-1 u)^4");
  CHECK(affine_matrix_model(k) == id);
  LModel L;
  CHECK(eval(L, k) != L.identity());

  // (u v^-1 u) itself is a rotation of order four in SL2(Z)
  Mat2 r = f2_matrix(parse_word(f2_alphabet(), "u v^-1 u"));
  CHECK(r == Mat2{0, 1, -1, 0});
}
