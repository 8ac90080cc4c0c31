#include "fpgroups/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "fpgroups/abelianize.hpp"
#include "fpgroups/amalgam.hpp"
#include "fpgroups/arithmetic.hpp"
#include "fpgroups/coset_enum.hpp"
#include "fpgroups/exact_models.hpp"
#include "fpgroups/io.hpp"
#include "fpgroups/presentation.hpp"
#include "fpgroups/quotient_search.hpp"

namespace fpg {

namespace {

struct usage_error : error {
  using error::error;
};

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::vector<std::string>> flags;
  std::set<std::string> switches;

  bool has(std::string const& f) const {
    return flags.count(f) || switches.count(f);
  }
  std::optional<std::string> value(std::string const& f) const {
    auto it = flags.find(f);
    if (it == flags.end()) return std::nullopt;
    return it->second.back();
  }
  std::vector<std::string> values(std::string const& f) const {
    auto it = flags.find(f);
    return it == flags.end() ? std::vector<std::string>{} : it->second;
  }
  std::uint64_t number(std::string const& f, std::uint64_t fallback) const {
    auto v = value(f);
    if (!v) return fallback;
    try {
      return std::stoull(*v);
    } catch (...) {
      throw usage_error("flag " + f + " expects a number, got '" + *v + "'");
    }
  }
  std::uint64_t required_number(std::string const& f) const {
    if (!value(f)) throw usage_error("missing required flag " + f);
    return number(f, 0);
  }
};

const std::set<std::string> kSwitches = {
    "--magnus-nielsen", "--dump-table", "--naive", "--hom", "--help"};

Args parse_args(std::vector<std::string> const& argv, std::size_t from) {
  Args a;
  for (std::size_t i = from; i < argv.size(); ++i) {
    std::string const& t = argv[i];
    if (t.size() >= 2 && t[0] == '-' &&
        !(t.size() > 1 && (std::isdigit(t[1]) != 0))) {
      std::string flag = t;
      std::string value;
      bool has_value = false;
      auto eq = flag.find('=');
      if (eq != std::string::npos) {
        value = flag.substr(eq + 1);
        flag = flag.substr(0, eq);
        has_value = true;
      }
      if (kSwitches.count(flag)) {
        a.switches.insert(flag);
        continue;
      }
      if (!has_value) {
        if (i + 1 >= argv.size())
          throw usage_error("flag " + flag + " expects a value");
        value = argv[++i];
      }
      a.flags[flag].push_back(value);
    } else {
      a.positional.push_back(t);
    }
  }
  return a;
}

Presentation build_from_spec(Args const& a, std::istream& in) {
  if (!a.positional.empty()) {
    std::string const& kind = a.positional[0];
    if (kind == "higman") return higman(a.required_number("-n"));
    if (kind == "gn") return gn(a.required_number("-n"));
    if (kind == "l") return l_presentation();
    if (kind == "steinberg")
      return steinberg(a.required_number("-d"), a.required_number("-n"),
                       a.switches.count("--magnus-nielsen") > 0);
    if (kind == "knx") {
      auto base_file = a.value("--base-file");
      Presentation base;
      if (base_file) {
        std::ifstream f(*base_file);
        if (!f) throw usage_error("cannot open " + *base_file);
        base = read_presentation(f);
      } else {
        base = make_presentation("Z", {"x"}, std::vector<Word>{});
      }
      auto x = a.value("--x");
      return variant_knx(base, x.value_or("x"), a.required_number("-n"));
    }
    if (kind == "file") {
      if (a.positional.size() < 2)
        throw usage_error("build file: missing path");
      std::ifstream f(a.positional[1]);
      if (!f) throw usage_error("cannot open " + a.positional[1]);
      return read_presentation(f);
    }
    throw usage_error("unknown builder '" + kind + "'");
  }
  if (auto input = a.value("--input")) {
    std::ifstream f(*input);
    if (!f) throw usage_error("cannot open " + *input);
    return read_presentation(f);
  }
  return read_presentation(in);
}

std::vector<Word> parse_word_flags(Args const& a, std::string const& flag,
                                   Presentation const& p) {
  std::vector<Word> out;
  for (std::string const& text : a.values(flag))
    out.push_back(parse_word(p.alphabet, text));
  return out;
}

int cmd_build(Args const& a, std::istream& in, std::ostream& out) {
  Presentation p = build_from_spec(a, in);
  write_presentation(out, p);
  return 0;
}

int cmd_enumerate(Args const& a, std::istream& in, std::ostream& out) {
  Presentation p = build_from_spec(a, in);
  auto extra = parse_word_flags(a, "--add-relator", p);
  if (!extra.empty()) p = add_relators(p, extra);
  auto subgroup = parse_word_flags(a, "--subgroup", p);
  std::uint64_t max_cosets = a.number("--max-cosets", kDefaultMaxCosets);
  Strategy strategy = Strategy::HLT;
  if (auto s = a.value("--strategy")) {
    if (*s == "hlt")
      strategy = Strategy::HLT;
    else if (*s == "felsch")
      strategy = Strategy::Felsch;
    else
      throw usage_error("--strategy expects hlt or felsch");
  }
  EnumerationResult res = enumerate(p, subgroup, max_cosets, strategy);
  out << "group " << p.name << '\n';
  out << "strategy " << (strategy == Strategy::HLT ? "hlt" : "felsch") << '\n';
  out << "max-cosets " << max_cosets << '\n';
  if (res.index)
    out << "index " << *res.index << '\n';
  else
    out << "outcome limit-exceeded" << '\n';
  out << "cosets-defined " << res.cosets_defined << '\n';
  out << "max-live " << res.max_live << '\n';
  if (a.switches.count("--dump-table")) res.table.dump(out);
  return res.index ? 0 : 3;
}

int cmd_abelianize(Args const& a, std::istream& in, std::ostream& out) {
  Presentation p = build_from_spec(a, in);
  AbelianInvariants inv = abelian_invariants(p);
  out << "group " << p.name << '\n';
  out << "rank " << inv.rank << '\n';
  out << "torsion";
  if (inv.torsion.empty())
    out << " none";
  else
    for (auto const& d : inv.torsion) out << ' ' << d;
  out << '\n';
  out << (inv.trivial() ? "trivial yes" : "trivial no") << '\n';
  return 0;
}

int cmd_quotients(Args const& a, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  Presentation p = build_from_spec(a, in);
  unsigned degree = static_cast<unsigned>(a.required_number("--degree"));
  std::uint64_t budget = a.number("--budget", kDefaultHomBudget);
  unsigned threads = static_cast<unsigned>(a.number("--threads", 1));
  auto t0 = std::chrono::steady_clock::now();
  HomSearchReport rep = search_homs(p, degree, budget, threads);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  out << "group " << p.name << '\n';
  out << "degree " << rep.degree << '\n';
  out << "explored " << rep.explored << '\n';
  out << "complete " << (rep.complete ? "yes" : "no") << '\n';
  out << "total homs " << rep.total_homs << '\n';
  out << "nontrivial homs: " << (rep.nontrivial_found ? "found" : "0") << '\n';
  for (auto const& w : rep.witnesses) {
    out << "witness";
    for (auto const& [g, perm] : w) out << ' ' << g << "->" << perm.cycle_string();
    out << '\n';
  }
  if (a.switches.count("--naive")) {
    std::uint64_t naive = count_homs_naive(p, degree);
    out << "naive total " << naive << '\n';
    if (rep.complete && naive != rep.total_homs) {
      out << "oracle mismatch" << '\n';
      return 2;
    }
  }
  err << "elapsed-ms " << ms << '\n';
  return rep.complete ? 0 : 3;
}

int cmd_certify(Args const& a, std::istream& in, std::ostream& out) {
  if (!a.positional.empty() && a.positional[0] == "hig-to-gn") {
    std::size_t n = a.required_number("-n");
    std::size_t hig_n = a.number("--hig-n", n);
    GeneratorMap m = hig_to_gn_map(hig_n, n);
    bool ok = check_hom_certificate(m, one_step_certificates(m));
    out << "hom Hig" << hig_n << " -> G" << n << " (a_i -> y_2i)\n";
    out << "hom-certificate: " << (ok ? "valid" : "INVALID") << '\n';
    return ok ? 0 : 2;
  }
  if (!a.positional.empty() && a.positional[0] == "hig-to-knx") {
    std::size_t n = a.required_number("-n");
    Presentation base;
    if (auto f = a.value("--base-file")) {
      std::ifstream bf(*f);
      if (!bf) throw usage_error("cannot open " + *f);
      base = read_presentation(bf);
    } else {
      base = make_presentation("Z", {"x"}, std::vector<Word>{});
    }
    GeneratorMap m = hig_to_knx_map(base, a.value("--x").value_or("x"), n);
    bool ok = check_hom_certificate(m, one_step_certificates(m));
    out << "hom Hig" << n << " -> " << m.target.name << " (a_i -> x_i)\n";
    out << "hom-certificate: " << (ok ? "valid" : "INVALID") << '\n';
    return ok ? 0 : 2;
  }
  if (a.switches.count("--hom")) {
    auto src_file = a.value("--source");
    auto tgt_file = a.value("--target");
    auto map_file = a.value("--map");
    auto certs_file = a.value("--certs");
    if (!src_file || !tgt_file || !map_file || !certs_file)
      throw usage_error("certify --hom needs --source --target --map --certs");
    std::ifstream sf(*src_file), tf(*tgt_file), mf(*map_file), cf(*certs_file);
    if (!sf || !tf || !mf || !cf) throw usage_error("cannot open input file");
    GeneratorMap m;
    m.source = read_presentation(sf);
    m.target = read_presentation(tf);
    m.images = read_generator_map(mf, m.target);
    auto certs = read_hom_certificates(cf, m.target, m.source.relators.size());
    bool ok = check_hom_certificate(m, certs);
    out << "hom-certificate: " << (ok ? "valid" : "INVALID") << '\n';
    return ok ? 0 : 2;
  }
  Presentation p = build_from_spec(a, in);
  auto cert_file = a.value("--certificate");
  if (!cert_file) throw usage_error("certify needs --certificate FILE");
  std::ifstream cf(*cert_file);
  if (!cf) throw usage_error("cannot open " + *cert_file);
  WordCertificate wc = read_certificate(cf, p);
  bool ok = check_certificate(p, wc.word, wc.cert);
  out << "word " << print_word(wc.word) << '\n';
  out << "certificate: " << (ok ? "valid" : "INVALID") << '\n';
  return ok ? 0 : 2;
}

int cmd_amalgam_suite(Args const& a, std::ostream& out) {
  std::uint64_t samples = a.number("--samples", 10000);
  std::size_t max_len = a.number("--max-len", 40);
  std::uint64_t seed = a.number("--seed", 1);
  std::string which = a.value("--instance").value_or("all");
  std::string suite = a.value("--suite").value_or("all");
  bool all_ok = true;

  auto props_line = [&](SuiteReport const& r) {
    out << "suite props instance " << r.instance << " samples " << r.samples
        << " max-len " << r.max_len << " seed " << r.seed << " failures "
        << r.failures << '\n';
    all_ok = all_ok && r.ok();
  };

  if (suite == "props" || suite == "all") {
    if (which == "j" || which == "all")
      props_line(run_property_suite(instance_J(), samples, max_len, seed));
    if (which == "hhalf" || which == "all")
      props_line(run_property_suite(instance_Hhalf(), samples, max_len, seed));
    if (which == "q" || which == "all")
      props_line(run_property_suite(instance_Q(), samples, max_len, seed));
    if (which == "t" || which == "all")
      props_line(run_property_suite(instance_T(), samples, max_len, seed));
  }
  if (suite == "free" || suite == "all") {
    InstanceHhalf h = instance_Hhalf();
    auto gen = [&](char const* s) { return parse_word(h.alphabet(), s); };
    bool free2 = check_free(h, {gen("h0"), gen("x1")}, 8);
    out << "suite free instance Hhalf letters h0,x1 max-len 8 result "
        << (free2 ? "free" : "NOT-free") << '\n';
    Word t = parse_word(h.alphabet(), "x0^-1 x1 h0 x1^-1 x0");
    bool free3 = check_free(h, {t, gen("h0"), gen("x1")}, 6);
    out << "suite free instance Hhalf letters t,h0,x1 max-len 6 result "
        << (free3 ? "free" : "NOT-free") << '\n';
    all_ok = all_ok && free2 && free3;
  }
  if (suite == "qt" || suite == "all") {
    std::size_t qt_len = a.value("--max-len") ? max_len : 30;
    QTIsoReport r = check_qt_iso(samples, qt_len, seed);
    out << "suite qt samples " << r.samples << " max-len " << r.max_len
        << " seed " << r.seed << " violations " << r.violations << '\n';
    for (auto const& w : r.violating_words) out << "violation " << w << '\n';
    all_ok = all_ok && r.ok();
  }
  if (suite == "models" || suite == "all") {
    LModel L;
    Presentation lp = l_presentation();
    bool l_ok = check_relators(L, lp, identity_assignment(L, lp));
    HeisModel heis_vxy("v", "x", "y");
    Presentation hp = make_presentation(
        "Heis", {"v", "x", "y"},
        std::vector<std::string>{"[v,x] y^-1", "[y,v]", "[y,x]"});
    bool heis_ok = check_relators(heis_vxy, hp,
                                  identity_assignment(heis_vxy, hp));
    BS12Model bs("x", "h");
    Presentation bp = make_presentation(
        "BS12", {"x", "h"}, std::vector<std::string>{"[h,x] x^-1"});
    bool bs_ok = check_relators(bs, bp, identity_assignment(bs, bp));
    Word kw = parse_word(l_alphabet(), "(u v^-1 u)^4");
    bool witness =
        affine_matrix_model(kw) == Mat3{} && !(eval(L, kw) == L.identity());
    out << "suite models L " << (l_ok ? "ok" : "FAIL") << " Heis "
        << (heis_ok ? "ok" : "FAIL") << " BS12 " << (bs_ok ? "ok" : "FAIL")
        << " affine-kernel-witness " << (witness ? "ok" : "FAIL") << '\n';
    all_ok = all_ok && l_ok && heis_ok && bs_ok && witness;
  }
  if (suite == "hnn" || suite == "all") {
    HnnCrossReport r = check_hnn_cross(samples, max_len, seed);
    out << "suite hnn samples " << r.samples << " max-len " << r.max_len
        << " seed " << r.seed << " failures " << r.failures << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 2;
}

int cmd_lemma_arith(Args const& a, std::ostream& out) {
  std::size_t n = a.required_number("--n");
  std::uint64_t bound = a.number("--bound", 100000);
  auto tuples = order_tuple_search(n, bound);
  out << "bound " << bound << '\n';
  out << "n " << n << '\n';
  bool only_ones = tuples.size() == 1;
  if (only_ones)
    for (auto v : tuples[0]) only_ones = only_ones && v == 1;
  if (only_ones) {
    out << "cycles found: 1 (all-ones)" << '\n';
    return 0;
  }
  out << "cycles found: " << tuples.size() << '\n';
  for (std::size_t i = 0; i < tuples.size() && i < 10; ++i) {
    out << "cycle";
    for (auto v : tuples[i]) out << ' ' << v;
    out << '\n';
  }
  return 2;
}

int cmd_folner(std::ostream& out) {
  FolnerCheck c;
  out << "epsilon0 = sqrt(2 - sqrt(3))\n";
  out << "claim epsilon0/3 > 1/6  <=>  2 - sqrt(3) > 1/4  <=>  7/4 > sqrt(3)"
         "  <=>  49/16 > 3  <=>  " << c.lhs << " > " << c.rhs << '\n';
  out << c.lhs << " > " << c.rhs << ": " << (c.holds() ? "ok" : "FAILED")
      << '\n';
  out << "quotient constant (1/6)^2 = 1/36: "
      << (c.quotient_constant_matches() ? "ok" : "FAILED") << '\n';
  return folner_bound_check() ? 0 : 2;
}

int cmd_emit(Args const& a, std::istream& in, std::ostream& out) {
  Presentation p = build_from_spec(a, in);
  std::string format = a.value("--format").value_or("gap");
  if (format == "gap") {
    emit_gap(out, p);
    return 0;
  }
  if (format == "native") {
    write_presentation(out, p);
    return 0;
  }
  throw usage_error("--format expects gap or native");
}

constexpr char kUsage[] =
    "usage: fpgroups <command> [args]\n"
    "\n"
    "commands:\n"
    "  build <builder>          print a presentation file\n"
    "  enumerate [<builder>]    Todd-Coxeter coset enumeration\n"
    "  abelianize [<builder>]   abelian invariants via Smith normal form\n"
    "  quotients [<builder>]    count homomorphisms into a symmetric group\n"
    "  certify [...]            check derivation / homomorphism certificates\n"
    "  amalgam-suite [...]      amalgam normal form verification suites\n"
    "  lemma-arith --n N        order-divisibility cycle search\n"
    "  folner                   exact Folner constant inequality\n"
    "  emit [<builder>]         emit GAP or native format\n"
    "\n"
    "builders: higman -n N | gn -n N | steinberg -d D -n N"
    " [--magnus-nielsen] | l | knx [--base-file F] [--x G] -n N |"
    " file <path>\n"
    "  (with no builder, presentations are read from --input F or stdin)\n"
    "\n"
    "common flags: --max-cosets N --strategy hlt|felsch --subgroup W\n"
    "  --add-relator W --dump-table --degree K --budget N --threads T\n"
    "  --naive --samples N --max-len L --seed S --instance j|hhalf|q|t|all\n"
    "  --suite props|free|qt|hnn|models|all --n N --bound M\n"
    "  --format gap|native\n";

}  // namespace

int run_cli(std::vector<std::string> const& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "help") {
    out << kUsage;
    return args.empty() ? 1 : 0;
  }
  std::string const& cmd = args[0];
  try {
    Args a = parse_args(args, 1);
    if (cmd == "build") return cmd_build(a, in, out);
    if (cmd == "enumerate") return cmd_enumerate(a, in, out);
    if (cmd == "abelianize") return cmd_abelianize(a, in, out);
    if (cmd == "quotients") return cmd_quotients(a, in, out, err);
    if (cmd == "certify") return cmd_certify(a, in, out);
    if (cmd == "amalgam-suite") return cmd_amalgam_suite(a, out);
    if (cmd == "lemma-arith") return cmd_lemma_arith(a, out);
    if (cmd == "folner") return cmd_folner(out);
    if (cmd == "emit") return cmd_emit(a, in, out);
    err << "unknown command '" << cmd << "'\n" << kUsage;
    return 1;
  } catch (usage_error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (parse_error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (error const& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fpg
