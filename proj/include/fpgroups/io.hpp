#ifndef FPGROUPS_IO_HPP
#define FPGROUPS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fpgroups/presentation.hpp"

namespace fpg {

// Presentation file format:
//   group <name>
//   gens <g1> <g2> ...
//   rel <word>
//   rel <word> = <word>
// '#' starts a comment; blank lines are ignored.
Presentation read_presentation(std::istream& in);
void write_presentation(std::ostream& out, Presentation const& p);

// Certificate file format:
//   word <word>
//   step <relator-index> <+1|-1> [conjugator]
struct WordCertificate {
  Word word;
  DerivationCertificate cert;
};

WordCertificate read_certificate(std::istream& in, Presentation const& p);
void write_certificate(std::ostream& out, WordCertificate const& wc);

// Homomorphism data:
//   map <source-generator> <target-word>     (one per source generator)
// and certificates grouped per source relator:
//   cert <source-relator-index>
//   step ...
std::map<std::string, Word> read_generator_map(std::istream& in,
                                               Presentation const& target);
std::vector<DerivationCertificate> read_hom_certificates(
    std::istream& in, Presentation const& target, std::size_t relator_count);
void write_hom_certificates(std::ostream& out,
                            std::vector<DerivationCertificate> const& certs);

// GAP emission: free group constructor plus relator list; '@' in
// generator names becomes '_'.
void emit_gap(std::ostream& out, Presentation const& p);

}  // namespace fpg

#endif
