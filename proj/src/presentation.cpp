#include "fpgroups/presentation.hpp"

#include <algorithm>

namespace fpg {

namespace {

void append_relator(std::vector<Word>& out, Word w) {
  if (!w.empty()) out.push_back(std::move(w));
}

Word rebuild_over(alphabet_ptr const& alphabet, Word const& w,
                  std::vector<gen_id> const& id_map) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (Letter const& l : w.letters()) letters.push_back({id_map[l.gen], l.sign});
  return Word::reduce(alphabet, letters);
}

Word cyclically_reduce(Word const& w) {
  auto ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen &&
         ls[lo].sign == -ls[hi - 1].sign) {
    ++lo;
    --hi;
  }
  std::vector<Letter> mid(ls.begin() + lo, ls.begin() + hi);
  return Word::reduce(w.alphabet(), mid);
}

bool cyclic_equal(Word const& a, Word const& b) {
  if (a.length() != b.length()) return false;
  std::size_t n = a.length();
  if (n == 0) return true;
  auto const& la = a.letters();
  auto const& lb = b.letters();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = la[(s + i) % n] == lb[i];
    if (ok) return true;
  }
  return false;
}

// The relator set R(x,y,h,u,v) shared by l_presentation() and gn().
std::vector<Word> relators_R(Word const& x, Word const& y, Word const& h,
                             Word const& u, Word const& v) {
  std::vector<Word> rels;
  append_relator(rels, commutator(x, y));
  append_relator(rels, commutator(x, u));
  append_relator(rels, commutator(y, v));
  append_relator(rels, commutator(h, u));
  append_relator(rels, commutator(h, v));
  append_relator(rels, concat(commutator(h, x), invert(x)));
  append_relator(rels, concat(commutator(u, y), invert(x)));
  append_relator(rels, concat(commutator(h, y), invert(y)));
  append_relator(rels, concat(commutator(v, x), invert(y)));
  return rels;
}

}  // namespace

Presentation make_presentation(std::string name,
                               std::vector<std::string> generator_names,
                               std::vector<Word> relators) {
  Presentation p;
  p.name = std::move(name);
  p.alphabet = make_alphabet(std::move(generator_names));
  for (Word& w : relators) {
    if (!same_alphabet(w.alphabet(), p.alphabet)) throw alphabet_mismatch();
    append_relator(p.relators, std::move(w));
  }
  return p;
}

Presentation make_presentation(std::string name,
                               std::vector<std::string> generator_names,
                               std::vector<std::string> relator_texts) {
  Presentation p;
  p.name = std::move(name);
  p.alphabet = make_alphabet(std::move(generator_names));
  for (auto const& text : relator_texts)
    append_relator(p.relators, parse_word(p.alphabet, text));
  return p;
}

std::string copy_name(std::string_view base, std::size_t index) {
  return std::string(base) + "@" + std::to_string(index);
}

Presentation higman(std::size_t n) {
  if (n == 0) throw error("higman: n must be >= 1");
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  Presentation p;
  p.name = "Hig" + std::to_string(n);
  p.alphabet = make_alphabet(std::move(names));
  for (std::size_t i = 0; i < n; ++i) {
    Word prev = Word::generator(p.alphabet, static_cast<gen_id>((i + n - 1) % n));
    Word cur = Word::generator(p.alphabet, static_cast<gen_id>(i));
    append_relator(p.relators, concat(commutator(prev, cur), invert(cur)));
  }
  return p;
}

Presentation variant_knx(Presentation const& base, std::string_view x,
                         std::size_t n) {
  if (n == 0) throw error("variant_knx: n must be >= 1");
  gen_id xid = base.alphabet->id_of(x);
  std::size_t g = base.alphabet->size();

  std::vector<std::string> names;
  names.reserve(n * g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < g; ++k)
      names.push_back(copy_name(base.alphabet->name(static_cast<gen_id>(k)), i));

  Presentation p;
  p.name = base.name + "_knx" + std::to_string(n) + "_" + std::string(x);
  p.alphabet = make_alphabet(std::move(names));

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<gen_id> id_map(g);
    for (std::size_t k = 0; k < g; ++k)
      id_map[k] = static_cast<gen_id>(i * g + k);
    for (Word const& r : base.relators)
      append_relator(p.relators, rebuild_over(p.alphabet, r, id_map));
  }
  for (std::size_t i = 0; i < n; ++i) {
    gen_id prev = static_cast<gen_id>(((i + n - 1) % n) * g + xid);
    gen_id cur = static_cast<gen_id>(i * g + xid);
    Word wp = Word::generator(p.alphabet, prev);
    Word wc = Word::generator(p.alphabet, cur);
    append_relator(p.relators, concat(commutator(wp, wc), invert(wc)));
  }
  return p;
}

Presentation steinberg(std::size_t d, std::size_t n, bool magnus_nielsen) {
  if (d < 3) throw error("steinberg: d must be >= 3");
  if (n == 0) throw error("steinberg: n must be >= 1");

  auto gname = [](std::size_t i, std::size_t p, std::size_t q) {
    return "E" + std::to_string(i) + "_" + std::to_string(p) + "_" +
           std::to_string(q);
  };

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 1; p <= d; ++p)
      for (std::size_t q = 1; q <= d; ++q)
        if (p != q) names.push_back(gname(i, p, q));

  Presentation pr;
  pr.name = "S" + std::to_string(d) + "_" + std::to_string(n) +
            (magnus_nielsen ? "_MN" : "");
  pr.alphabet = make_alphabet(std::move(names));

  auto gen = [&](std::size_t i, std::size_t p, std::size_t q) {
    return Word::generator(pr.alphabet, pr.alphabet->id_of(gname(i, p, q)));
  };

  for (std::size_t i = 0; i < n; ++i) {
    // [E^{pq}, E^{qr}] = E^{pr} for p, q, r pairwise distinct
    for (std::size_t p = 1; p <= d; ++p)
      for (std::size_t q = 1; q <= d; ++q)
        for (std::size_t r = 1; r <= d; ++r) {
          if (p == q || q == r || p == r) continue;
          append_relator(pr.relators,
                         concat(commutator(gen(i, p, q), gen(i, q, r)),
                                invert(gen(i, p, r))));
        }
    // [E^{pq}, E^{rs}] = e for q != r, p != s (each unordered pair once)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 1; p <= d; ++p)
      for (std::size_t q = 1; q <= d; ++q)
        if (p != q) pairs.emplace_back(p, q);
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        auto [p, q] = pairs[a];
        auto [r, s] = pairs[b];
        if (q == r || p == s) continue;
        append_relator(pr.relators,
                       commutator(gen(i, p, q), gen(i, r, s)));
      }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Word prev = gen((i + n - 1) % n, 1, 2);
    Word cur = gen(i, 1, 2);
    append_relator(pr.relators, concat(commutator(prev, cur), invert(cur)));
  }
  if (magnus_nielsen) {
    for (std::size_t i = 0; i < n; ++i) {
      Word w = concat(concat(gen(i, 1, 2), invert(gen(i, 2, 1))), gen(i, 1, 2));
      append_relator(pr.relators, pow(w, 4));
    }
  }
  return pr;
}

Presentation l_presentation() {
  Presentation p;
  p.name = "L";
  p.alphabet = make_alphabet({"x", "y", "h", "u", "v"});
  auto g = [&](char const* name) {
    return Word::generator(p.alphabet, p.alphabet->id_of(name));
  };
  p.relators = relators_R(g("x"), g("y"), g("h"), g("u"), g("v"));
  return p;
}

Presentation gn(std::size_t n) {
  if (n == 0) throw error("gn: n must be >= 1");
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  Presentation p;
  p.name = "G" + std::to_string(n);
  p.alphabet = make_alphabet(std::move(names));

  auto x = [&](std::size_t i) {
    return Word::generator(p.alphabet, static_cast<gen_id>(2 * (i % n)));
  };
  auto y = [&](std::size_t i) {
    return Word::generator(p.alphabet, static_cast<gen_id>(2 * (i % n) + 1));
  };
  for (std::size_t i = 0; i < n; ++i) {
    // R(x_i, y_i, y_{i-2}, x_{i-2}, y_{i-1})
    auto rels = relators_R(x(i), y(i), y(i + 2 * n - 2), x(i + 2 * n - 2),
                           y(i + n - 1));
    for (Word& r : rels) append_relator(p.relators, std::move(r));
  }
  return p;
}

Presentation graph_group(Presentation const& base,
                         std::vector<std::string> const& active,
                         std::vector<std::string> const& passive,
                         std::size_t vertices,
                         std::vector<GraphEdge> const& edges) {
  if (vertices == 0) throw error("graph_group: need at least one vertex");
  for (auto const& a : active) base.alphabet->id_of(a);
  for (auto const& pg : passive) base.alphabet->id_of(pg);

  std::size_t g = base.alphabet->size();
  std::vector<std::string> names;
  names.reserve(vertices * g);
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t k = 0; k < g; ++k)
      names.push_back(copy_name(base.alphabet->name(static_cast<gen_id>(k)), i));

  Presentation p;
  p.name = base.name + "_graph" + std::to_string(vertices);
  p.alphabet = make_alphabet(std::move(names));

  for (std::size_t i = 0; i < vertices; ++i) {
    std::vector<gen_id> id_map(g);
    for (std::size_t k = 0; k < g; ++k)
      id_map[k] = static_cast<gen_id>(i * g + k);
    for (Word const& r : base.relators)
      append_relator(p.relators, rebuild_over(p.alphabet, r, id_map));
  }

  auto in_list = [](std::vector<std::string> const& xs, std::string const& s) {
    return std::find(xs.begin(), xs.end(), s) != xs.end();
  };
  for (GraphEdge const& e : edges) {
    if (e.from >= vertices || e.to >= vertices)
      throw error("graph_group: vertex out of range");
    if (!in_list(passive, e.passive))
      throw error("graph_group: '" + e.passive + "' not a passive generator");
    if (!in_list(active, e.active))
      throw error("graph_group: '" + e.active + "' not an active generator");
    gen_id pg = p.alphabet->id_of(copy_name(e.passive, e.from));
    gen_id ag = p.alphabet->id_of(copy_name(e.active, e.to));
    append_relator(p.relators, concat(Word::generator(p.alphabet, pg),
                                      Word::generator(p.alphabet, ag, -1)));
  }
  return p;
}

Presentation tietze_eliminate(Presentation const& p, std::string_view g,
                              Word const& defining) {
  gen_id gid = p.alphabet->id_of(g);
  if (!same_alphabet(defining.alphabet(), p.alphabet)) throw alphabet_mismatch();
  for (Letter const& l : defining.letters())
    if (l.gen == gid)
      throw error("tietze_eliminate: defining word uses the generator itself");

  Word target = cyclically_reduce(
      concat(Word::generator(p.alphabet, gid), invert(defining)));
  Word target_inv = invert(target);

  std::size_t found = p.relators.size();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word r = cyclically_reduce(p.relators[i]);
    if (cyclic_equal(r, target) || cyclic_equal(r, target_inv)) {
      found = i;
      break;
    }
  }
  if (found == p.relators.size())
    throw error("tietze_eliminate: no defining relator for '" +
                std::string(g) + "' found");

  std::vector<std::string> names;
  std::vector<gen_id> id_map(p.alphabet->size());
  for (gen_id i = 0; i < p.alphabet->size(); ++i) {
    if (i == gid) continue;
    id_map[i] = static_cast<gen_id>(names.size());
    names.push_back(p.alphabet->name(i));
  }

  Presentation out;
  out.name = p.name;
  out.alphabet = make_alphabet(std::move(names));

  Word defining_new = rebuild_over(out.alphabet, defining, id_map);
  std::vector<Word> images(p.alphabet->size(), Word(out.alphabet));
  for (gen_id i = 0; i < p.alphabet->size(); ++i)
    images[i] = i == gid ? defining_new
                         : Word::generator(out.alphabet, id_map[i]);

  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == found) continue;
    append_relator(out.relators, apply_images(p.relators[i], images));
  }
  return out;
}

Presentation add_relators(Presentation const& p,
                          std::vector<Word> const& extra) {
  Presentation out = p;
  for (Word const& w : extra) {
    if (!same_alphabet(w.alphabet(), p.alphabet)) throw alphabet_mismatch();
    append_relator(out.relators, w);
  }
  return out;
}

bool check_certificate(Presentation const& p, Word const& w,
                       DerivationCertificate const& cert) {
  if (!same_alphabet(w.alphabet(), p.alphabet)) throw alphabet_mismatch();
  Word product(p.alphabet);
  for (CertificateStep const& s : cert.steps) {
    if (s.relator_index >= p.relators.size())
      throw error("check_certificate: relator index out of range");
    if (s.exponent != 1 && s.exponent != -1)
      throw error("check_certificate: exponent must be +1 or -1");
    if (!same_alphabet(s.conjugator.alphabet(), p.alphabet))
      throw alphabet_mismatch();
    Word r = p.relators[s.relator_index];
    if (s.exponent < 0) r = invert(r);
    product = concat(product, concat(concat(s.conjugator, r),
                                     invert(s.conjugator)));
  }
  return product == w;
}

Word map_word(GeneratorMap const& m, Word const& w) {
  std::vector<Word> images;
  images.reserve(m.source.alphabet->size());
  for (gen_id i = 0; i < m.source.alphabet->size(); ++i) {
    auto it = m.images.find(m.source.alphabet->name(i));
    if (it == m.images.end())
      throw error("generator map: missing image for '" +
                  m.source.alphabet->name(i) + "'");
    if (!same_alphabet(it->second.alphabet(), m.target.alphabet))
      throw alphabet_mismatch();
    images.push_back(it->second);
  }
  if (!same_alphabet(w.alphabet(), m.source.alphabet))
    throw alphabet_mismatch();
  if (w.empty()) return Word(m.target.alphabet);
  return apply_images(w, images);
}

bool check_hom_certificate(GeneratorMap const& m,
                           std::vector<DerivationCertificate> const& certs) {
  if (certs.size() < m.source.relators.size())
    throw error("check_hom_certificate: missing certificate");
  for (std::size_t i = 0; i < m.source.relators.size(); ++i) {
    Word image = map_word(m, m.source.relators[i]);
    if (!check_certificate(m.target, image, certs[i])) return false;
  }
  return true;
}

GeneratorMap hig_to_gn_map(std::size_t n) { return hig_to_gn_map(n, n); }

GeneratorMap hig_to_gn_map(std::size_t hig_n, std::size_t gn_n) {
  GeneratorMap m;
  m.source = higman(hig_n);
  m.target = gn(gn_n);
  for (std::size_t i = 0; i < hig_n; ++i) {
    std::size_t j = (2 * i) % gn_n;
    m.images["a" + std::to_string(i)] =
        Word::generator(m.target.alphabet,
                        m.target.alphabet->id_of("y" + std::to_string(j)));
  }
  return m;
}

GeneratorMap hig_to_knx_map(Presentation const& base, std::string_view x,
                            std::size_t n) {
  GeneratorMap m;
  m.source = higman(n);
  m.target = variant_knx(base, x, n);
  for (std::size_t i = 0; i < n; ++i)
    m.images["a" + std::to_string(i)] = Word::generator(
        m.target.alphabet, m.target.alphabet->id_of(copy_name(x, i)));
  return m;
}

std::vector<DerivationCertificate> one_step_certificates(GeneratorMap const& m) {
  std::vector<DerivationCertificate> certs;
  certs.reserve(m.source.relators.size());
  for (Word const& r : m.source.relators) {
    Word image = map_word(m, r);
    DerivationCertificate c;
    if (!image.empty()) {
      bool matched = false;
      for (std::size_t j = 0; j < m.target.relators.size() && !matched; ++j) {
        if (m.target.relators[j] == image) {
          c.steps.push_back({j, +1, Word(m.target.alphabet)});
          matched = true;
        } else if (invert(m.target.relators[j]) == image) {
          c.steps.push_back({j, -1, Word(m.target.alphabet)});
          matched = true;
        }
      }
      if (!matched)
        throw error("one_step_certificates: relator image is not literally a "
                    "target relator");
    }
    certs.push_back(std::move(c));
  }
  return certs;
}

}  // namespace fpg
