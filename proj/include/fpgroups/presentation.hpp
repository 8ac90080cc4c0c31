#ifndef FPGROUPS_PRESENTATION_HPP
#define FPGROUPS_PRESENTATION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fpgroups/word.hpp"

namespace fpg {

// Generators plus relators, each relator meaning "= identity".  Relators
// are freely reduced; empty ones are dropped at construction.
struct Presentation {
  alphabet_ptr alphabet;
  std::vector<Word> relators;
  std::string name;

  std::size_t generator_count() const { return alphabet->size(); }
  std::size_t relator_count() const { return relators.size(); }
};

Presentation make_presentation(std::string name,
                               std::vector<std::string> generator_names,
                               std::vector<Word> relators);

// Convenience: relators given in the word grammar.
Presentation make_presentation(std::string name,
                               std::vector<std::string> generator_names,
                               std::vector<std::string> relator_texts);

// Renaming scheme for disjoint copies: generator g in copy i becomes "g@i".
std::string copy_name(std::string_view base, std::size_t index);

// The cyclically presented group on a_0..a_{n-1} with relators
// [a_{i-1}, a_i] a_i^-1, indices mod n.
Presentation higman(std::size_t n);

// n renamed copies of `base` linked by [x_{i-1}, x_i] x_i^-1 on the copies
// of the chosen generator.
Presentation variant_knx(Presentation const& base, std::string_view x,
                         std::size_t n);

// n cyclically linked copies of the Steinberg presentation of rank d,
// optionally with the fourth-power relators of the Magnus-Nielsen
// presentation of SL_d(Z).
Presentation steinberg(std::size_t d, std::size_t n, bool magnus_nielsen);

// The five-generator group (Z[1/2])^2 x| (Z x F_2) on {x,y,h,u,v}.
Presentation l_presentation();

// n copies of l_presentation() fused in a circle: relator set
// R(x_i, y_i, y_{i-2}, x_{i-2}, y_{i-1}) for each i mod n, written
// directly over the 2n generators x_i, y_i.
Presentation gn(std::size_t n);

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  std::string passive;  // generator in copy `from`
  std::string active;   // generator in copy `to`
};

// One renamed copy of `base` per vertex, plus a relator
// passive@from * (active@to)^-1 per edge.
Presentation graph_group(Presentation const& base,
                         std::vector<std::string> const& active,
                         std::vector<std::string> const& passive,
                         std::size_t vertices,
                         std::vector<GraphEdge> const& edges);

// Removes generator g, given a defining relator equivalent to
// g * defining^-1 (up to cyclic permutation and inversion); occurrences of
// g in the remaining relators are replaced by `defining`.
Presentation tietze_eliminate(Presentation const& p, std::string_view g,
                              Word const& defining);

// Quotient by the normal closure of `extra`.
Presentation add_relators(Presentation const& p, std::vector<Word> const& extra);

// A checkable witness that a word is trivial in the presented group: the
// word must equal the product of the conjugated relator powers in the
// free group.
struct CertificateStep {
  std::size_t relator_index;
  int exponent;  // +1 or -1
  Word conjugator;
};

struct DerivationCertificate {
  std::vector<CertificateStep> steps;
};

bool check_certificate(Presentation const& p, Word const& w,
                       DerivationCertificate const& cert);

struct GeneratorMap {
  Presentation source;
  Presentation target;
  std::map<std::string, Word> images;  // source generator name -> target word
};

// Image of a word over the source alphabet under the generator map.
Word map_word(GeneratorMap const& m, Word const& w);

// One certificate per source relator, indexed like source.relators.
bool check_hom_certificate(GeneratorMap const& m,
                           std::vector<DerivationCertificate> const& certs);

// The canonical cyclic-shift homomorphisms; each comes with
// one-step certificates usable by check_hom_certificate.
GeneratorMap hig_to_gn_map(std::size_t n);  // a_i -> y_{2i}, source Hig_n or
GeneratorMap hig_to_gn_map(std::size_t hig_n, std::size_t gn_n);
GeneratorMap hig_to_knx_map(Presentation const& base, std::string_view x,
                            std::size_t n);
std::vector<DerivationCertificate> one_step_certificates(GeneratorMap const& m);

}  // namespace fpg

#endif
