// Acceptance suite: one pass/fail line per criterion, every budget and
// threshold pinned in code.  Exit status is nonzero if any criterion
// fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fpgroups/abelianize.hpp"
#include "fpgroups/amalgam.hpp"
#include "fpgroups/arithmetic.hpp"
#include "fpgroups/coset_enum.hpp"
#include "fpgroups/exact_models.hpp"
#include "fpgroups/presentation.hpp"
#include "fpgroups/quotient_search.hpp"

using namespace fpg;

namespace {

int failures = 0;

void report(int number, std::string const& what, bool pass,
            std::string const& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

constexpr std::uint64_t kSeed = 20160401;

void criterion_1() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n : {1u, 2u, 3u}) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = enumerate(higman(n), {}, 1000000, Strategy::HLT);
    double secs = seconds_since(t0);
    bool this_ok = res.index && *res.index == 1 && secs < 1.0;
    d << "Hig" << n << (this_ok ? " ok " : " FAIL ");
    ok = ok && this_ok;
  }
  report(1, "triviality of Hig_n for n in {1,2,3} within 1e6 cosets, <1s",
         ok, d.str());
}

void criterion_2() {
  bool ok = true;
  std::ostringstream d;
  for (int k = 2; k <= 20; ++k) {
    Presentation h = higman(4);
    Presentation q = add_relators(
        h, {pow(Word::generator(h.alphabet, 0), k)});
    auto t0 = std::chrono::steady_clock::now();
    auto res = enumerate(q, {}, 10000000, Strategy::HLT);
    if (!res.index) res = enumerate(q, {}, 10000000, Strategy::Felsch);
    double secs = seconds_since(t0);
    bool this_ok = res.index && *res.index == 1 && secs < 30.0;
    if (!this_ok) d << "k=" << k << " failed; ";
    ok = ok && this_ok;
  }
  report(2, "Hig_4 with a0^k trivial for k in {2..20} within 1e7 cosets, <30s",
         ok, ok ? "" : d.str() + "the forced order chain passes through "
                       "2^127-1 for k with an odd factor, which no "
                       "enumeration realizes at this budget; only powers "
                       "of two collapse");
}

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  Presentation h4 = higman(4);
  bool ok = true;
  std::ostringstream d;
  for (unsigned k : {2u, 3u, 4u, 5u}) {
    HomSearchReport rep = search_homs(h4, k);
    bool this_ok = rep.complete && rep.total_homs == 1 &&
                   !rep.nontrivial_found;
    if (k <= 3) this_ok = this_ok && count_homs_naive(h4, k) == rep.total_homs;
    d << "deg" << k << (this_ok ? " ok " : " FAIL ");
    ok = ok && this_ok;
  }
  double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  d << "(" << static_cast<int>(secs) << "s)";
  report(3, "no nontrivial homs Hig_4 -> S_k, k in {2..5}, naive agrees k<=3",
         ok, d.str());
}

void criterion_4() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t m : {1u, 2u, 3u, 4u, 6u}) {
    Presentation g = gn(m);
    auto res = enumerate(g, {}, 10000000, Strategy::HLT);
    if (!res.index) res = enumerate(g, {}, 10000000, Strategy::Felsch);
    bool direct = res.index && *res.index == 1;
    bool this_ok = direct;
    if (!direct && (m == 4 || m == 6)) {
      // the indirect route: y0 normally generates, and Hig_{m/2}
      // maps onto the y-even generators
      Presentation q = add_relators(g, {parse_word(g.alphabet, "y0")});
      auto fb = enumerate(q, {}, 10000000, Strategy::HLT);
      GeneratorMap gm = hig_to_gn_map(m / 2, m);
      bool cert = check_hom_certificate(gm, one_step_certificates(gm));
      this_ok = fb.index && *fb.index == 1 && cert;
      d << "G" << m << (this_ok ? " ok(fallback) " : " FAIL ");
    } else {
      d << "G" << m << (this_ok ? " ok " : " FAIL ");
    }
    ok = ok && this_ok;
  }
  report(4, "G_m trivial for m in {1,2,3,4,6} within 1e7 cosets", ok, d.str());
}

void criterion_5() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 8; n <= 12; ++n) {
    Presentation g = gn(n);
    Presentation q = add_relators(g, {parse_word(g.alphabet, "y0")});
    auto res = enumerate(q, {}, 10000000, Strategy::HLT);
    bool this_ok = res.index && *res.index == 1;
    d << "n=" << n << (this_ok ? " ok " : " FAIL ");
    ok = ok && this_ok;
  }
  report(5, "autothysis: G_n/<<y0>> trivial for n in {8..12} within 1e7",
         ok, d.str());
}

void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::size_t n = 1; n <= 12; ++n) {
    ok = ok && abelian_invariants(higman(n)).trivial();
    ok = ok && abelian_invariants(gn(n)).trivial();
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    ok = ok && abelian_invariants(steinberg(3, n, false)).trivial();
    ok = ok && abelian_invariants(steinberg(3, n, true)).trivial();
  }
  AbelianInvariants l = abelian_invariants(l_presentation());
  ok = ok && l.rank == 3 && l.torsion.empty();
  double secs = seconds_since(t0);
  ok = ok && secs < 10.0;
  std::ostringstream d;
  d << "L: rank " << l.rank << ", torsion " << l.torsion.size() << " ("
    << static_cast<int>(secs * 1000) << "ms)";
  report(6, "abelianization suite (Hig, G_n trivial; Steinberg trivial; "
            "L free of rank 3), <10s", ok, d.str());
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  DivisibilityGraph graph(100000);
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 1; n <= 12; ++n) {
    auto tuples = order_tuple_search(n, graph);
    bool this_ok = tuples.size() == 1;
    if (this_ok)
      for (auto v : tuples[0]) this_ok = this_ok && v == 1;
    if (!this_ok) d << "n=" << n << " FAIL ";
    ok = ok && this_ok;
  }
  double secs = seconds_since(t0);
  ok = ok && secs < 120.0;
  d << "(" << static_cast<int>(secs) << "s)";
  report(7, "circular-lemma arithmetic: only the all-ones cycle up to 1e5, "
            "n in {1..12}, <2min", ok, d.str());
}

void criterion_8() {
  bool ok = true;
  std::ostringstream d;
  auto run = [&](auto inst) {
    SuiteReport rep = run_property_suite(inst, 10000, 40, kSeed);
    d << rep.instance << ":" << rep.failures << " ";
    ok = ok && rep.failures == 0;
  };
  run(instance_J());
  run(instance_Hhalf());
  run(instance_Q());
  run(instance_T());
  d << "seed " << kSeed;
  report(8, "amalgam normal forms: 1e4 seeded words per instance, "
            "hom/inverse/embedding invariants", ok, d.str());
}

void criterion_9() {
  InstanceHhalf h = instance_Hhalf();
  auto al = h.alphabet();
  bool free2 = check_free(h, {parse_word(al, "h0"), parse_word(al, "x1")}, 8);
  Word t = parse_word(al, "x0^-1 x1 h0 x1^-1 x0");
  bool free3 =
      check_free(h, {t, parse_word(al, "h0"), parse_word(al, "x1")}, 6);
  std::ostringstream d;
  d << "{h0,x1} to 8: " << (free2 ? "free" : "FAIL") << "; {t,h0,x1} to 6: "
    << (free3 ? "free" : "FAIL");
  report(9, "freeness of <h0,x1> and the blocking-pair basis {t,h0,x1}",
         free2 && free3, d.str());
}

void criterion_10() {
  QTIsoReport rep = check_qt_iso(10000, 30, kSeed);
  std::ostringstream d;
  d << "violations " << rep.violations << ", seed " << rep.seed;
  report(10, "Q = T via (v,x,y,z) -> (h,z,v,u) on 1e4 seeded words",
         rep.ok(), d.str());
}

void criterion_11() {
  LModel L;
  Presentation lp = l_presentation();
  bool l_ok = check_relators(L, lp, identity_assignment(L, lp));

  HeisModel heis_vxy("v", "x", "y");
  Presentation hp = make_presentation(
      "Heis", {"v", "x", "y"},
      std::vector<std::string>{"[v,x] y^-1", "[y,v]", "[y,x]"});
  bool heis1 = check_relators(heis_vxy, hp, identity_assignment(heis_vxy, hp));

  HeisModel heis_hzv("h", "z", "v");
  Presentation hp2 = make_presentation(
      "Heis2", {"h", "z", "v"},
      std::vector<std::string>{"[h,z] v^-1", "[v,h]", "[v,z]"});
  bool heis2 = check_relators(heis_hzv, hp2,
                              identity_assignment(heis_hzv, hp2));

  BS12Model bs("x", "h");
  Presentation bp = make_presentation(
      "BS12", {"x", "h"}, std::vector<std::string>{"[h,x] x^-1"});
  bool bs_ok = check_relators(bs, bp, identity_assignment(bs, bp));

  Word k = parse_word(l_alphabet(), "(u v^-1 u)^4");
  bool kernel_witness =
      affine_matrix_model(k) == Mat3{} && !(eval(L, k) == L.identity());

  bool ok = l_ok && heis1 && heis2 && bs_ok && kernel_witness;
  std::ostringstream d;
  d << "L:" << l_ok << " Heis:" << (heis1 && heis2) << " BS12:" << bs_ok
    << " kernel-witness:" << kernel_witness;
  report(11, "exact models satisfy their relators; affine rep kills "
             "(u v^-1 u)^4 while the faithful model does not", ok, d.str());
}

void criterion_12() {
  HnnCrossReport rep = check_hnn_cross(10000, 40, kSeed);
  std::ostringstream d;
  d << "failures " << rep.failures << ", seed " << rep.seed;
  report(12, "Britton emptiness equals affine triviality on 1e4 seeded "
             "{x,h}-words", rep.ok(), d.str());
}

void criterion_13() {
  FolnerCheck c;
  bool ok = c.holds() && c.quotient_constant_matches() &&
            folner_bound_check() && c.lhs == 49 && c.rhs == 48;
  std::ostringstream d;
  d << c.lhs << " > " << c.rhs;
  report(13, "Folner constant: sqrt(2-sqrt(3))/3 > 1/6 by exact integers",
         ok, d.str());
}

void criterion_14() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n : {2u, 4u, 6u, 8u, 10u, 12u}) {
    GeneratorMap m = hig_to_gn_map(n);
    bool this_ok = check_hom_certificate(m, one_step_certificates(m));
    if (!this_ok) d << "gn n=" << n << " FAIL ";
    ok = ok && this_ok;
  }
  Presentation z = make_presentation("Z", {"x"}, std::vector<Word>{});
  Presentation k2 = make_presentation("K", {"x", "t"},
                                      std::vector<std::string>{"t^3"});
  for (std::size_t n : {4u, 8u}) {
    GeneratorMap m1 = hig_to_knx_map(z, "x", n);
    GeneratorMap m2 = hig_to_knx_map(k2, "x", n);
    bool this_ok = check_hom_certificate(m1, one_step_certificates(m1)) &&
                   check_hom_certificate(m2, one_step_certificates(m2));
    if (!this_ok) d << "knx n=" << n << " FAIL ";
    ok = ok && this_ok;
  }
  report(14, "certified homs Hig_n -> G_n (even n <= 12) and "
             "Hig_n -> K^(n,x)", ok, d.str().empty() ? "all verified"
                                                     : d.str());
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  std::cout << failures << " criteria failed, total "
            << static_cast<int>(seconds_since(t0)) << "s" << std::endl;
  return failures == 0 ? 0 : 1;
}
