#include "fpgroups/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace fpg {

namespace {

std::string strip_comment(std::string line) {
  auto pos = line.find('#');
  if (pos != std::string::npos) line.erase(pos);
  return line;
}

std::string trim(std::string const& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(std::string const& s) {
  std::istringstream iss(s);
  std::vector<std::string> out;
  std::string t;
  while (iss >> t) out.push_back(t);
  return out;
}

// Returns the next meaningful line, comment-stripped and trimmed.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    line = trim(strip_comment(line));
    if (!line.empty()) return true;
  }
  return false;
}

Word parse_relator_line(alphabet_ptr const& alphabet, std::string const& body) {
  auto eq = body.find('=');
  if (eq == std::string::npos) return parse_word(alphabet, body);
  Word lhs = parse_word(alphabet, body.substr(0, eq));
  Word rhs = parse_word(alphabet, body.substr(eq + 1));
  return concat(lhs, invert(rhs));
}

}  // namespace

namespace {
// "keyword rest-of-line", keyword delimited by whitespace
bool keyword_line(std::string const& line, char const* kw, std::string& rest) {
  std::string k(kw);
  if (line.rfind(k, 0) != 0) return false;
  if (line.size() > k.size() && !std::isspace(
          static_cast<unsigned char>(line[k.size()])))
    return false;
  rest = line.size() > k.size() ? line.substr(k.size() + 1) : "";
  return true;
}
}  // namespace

Presentation read_presentation(std::istream& in) {
  std::string line, rest;
  if (!next_line(in, line) || !keyword_line(line, "group", rest))
    throw error("presentation file: expected 'group <name>' first");
  std::string name = trim(rest);

  if (!next_line(in, line) || !keyword_line(line, "gens", rest))
    throw error("presentation file: expected 'gens <g1> <g2> ...'");
  std::vector<std::string> names = tokens(rest);
  if (names.empty()) throw error("presentation file: no generators");

  Presentation p;
  p.name = name;
  p.alphabet = make_alphabet(names);
  while (next_line(in, line)) {
    if (!keyword_line(line, "rel", rest))
      throw error("presentation file: expected 'rel <word>', got '" + line +
                  "'");
    Word r = parse_relator_line(p.alphabet, rest);
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

void write_presentation(std::ostream& out, Presentation const& p) {
  out << "group " << p.name << '\n';
  out << "gens";
  for (gen_id g = 0; g < p.alphabet->size(); ++g)
    out << ' ' << p.alphabet->name(g);
  out << '\n';
  for (Word const& r : p.relators) out << "rel " << print_word(r) << '\n';
}

WordCertificate read_certificate(std::istream& in, Presentation const& p) {
  WordCertificate wc;
  wc.word = Word(p.alphabet);
  std::string line;
  bool have_word = false;
  while (next_line(in, line)) {
    if (line.rfind("word", 0) == 0) {
      wc.word = parse_word(p.alphabet, line.substr(4));
      have_word = true;
    } else if (line.rfind("step", 0) == 0) {
      std::istringstream iss(line.substr(4));
      long long index, exponent;
      if (!(iss >> index >> exponent))
        throw error("certificate file: bad step line: '" + line + "'");
      std::string rest;
      std::getline(iss, rest);
      CertificateStep s;
      s.relator_index = static_cast<std::size_t>(index);
      s.exponent = static_cast<int>(exponent);
      s.conjugator = parse_word(p.alphabet, rest);
      wc.cert.steps.push_back(std::move(s));
    } else {
      throw error("certificate file: unexpected line: '" + line + "'");
    }
  }
  if (!have_word) throw error("certificate file: missing 'word' header");
  return wc;
}

void write_certificate(std::ostream& out, WordCertificate const& wc) {
  out << "word " << print_word(wc.word) << '\n';
  for (CertificateStep const& s : wc.cert.steps) {
    out << "step " << s.relator_index << ' '
        << (s.exponent > 0 ? "+1" : "-1");
    if (!s.conjugator.empty()) out << ' ' << print_word(s.conjugator);
    out << '\n';
  }
}

std::map<std::string, Word> read_generator_map(std::istream& in,
                                               Presentation const& target) {
  std::map<std::string, Word> images;
  std::string line;
  while (next_line(in, line)) {
    if (line.rfind("map", 0) != 0)
      throw error("map file: expected 'map <gen> <word>', got '" + line + "'");
    std::istringstream iss(line.substr(3));
    std::string gen;
    if (!(iss >> gen)) throw error("map file: missing generator name");
    std::string rest;
    std::getline(iss, rest);
    images[gen] = parse_word(target.alphabet, rest);
  }
  return images;
}

std::vector<DerivationCertificate> read_hom_certificates(
    std::istream& in, Presentation const& target, std::size_t relator_count) {
  std::vector<DerivationCertificate> certs(relator_count);
  std::vector<char> seen(relator_count, 0);
  std::string line;
  std::size_t current = relator_count;
  while (next_line(in, line)) {
    if (line.rfind("cert", 0) == 0) {
      current = static_cast<std::size_t>(std::stoll(trim(line.substr(4))));
      if (current >= relator_count)
        throw error("hom certificate file: relator index out of range");
      seen[current] = 1;
    } else if (line.rfind("step", 0) == 0) {
      if (current >= relator_count)
        throw error("hom certificate file: step before any 'cert' line");
      std::istringstream iss(line.substr(4));
      long long index, exponent;
      if (!(iss >> index >> exponent))
        throw error("hom certificate file: bad step line");
      std::string rest;
      std::getline(iss, rest);
      certs[current].steps.push_back(
          {static_cast<std::size_t>(index), static_cast<int>(exponent),
           parse_word(target.alphabet, rest)});
    } else {
      throw error("hom certificate file: unexpected line: '" + line + "'");
    }
  }
  for (std::size_t i = 0; i < relator_count; ++i)
    if (!seen[i])
      throw error("hom certificate file: missing certificate for relator " +
                  std::to_string(i));
  return certs;
}

void write_hom_certificates(std::ostream& out,
                            std::vector<DerivationCertificate> const& certs) {
  for (std::size_t i = 0; i < certs.size(); ++i) {
    out << "cert " << i << '\n';
    for (CertificateStep const& s : certs[i].steps) {
      out << "step " << s.relator_index << ' '
          << (s.exponent > 0 ? "+1" : "-1");
      if (!s.conjugator.empty()) out << ' ' << print_word(s.conjugator);
      out << '\n';
    }
  }
}

namespace {

std::string gap_name(std::string name) {
  for (char& c : name)
    if (c == '@') c = '_';
  return name;
}

std::string gap_word(Word const& w) {
  if (w.empty()) throw error("emit_gap: empty relator");
  std::ostringstream out;
  auto const& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].sign == ls[i].sign)
      ++j;
    long long exp = static_cast<long long>(j - i) * ls[i].sign;
    if (!first) out << '*';
    out << gap_name(w.alphabet()->name(ls[i].gen));
    if (exp != 1) out << '^' << exp;
    first = false;
    i = j;
  }
  return out.str();
}

}  // namespace

void emit_gap(std::ostream& out, Presentation const& p) {
  out << "f := FreeGroup(";
  for (gen_id g = 0; g < p.alphabet->size(); ++g) {
    if (g) out << ',';
    out << " \"" << gap_name(p.alphabet->name(g)) << '"';
  }
  out << " );\n";
  out << "AssignGeneratorVariables( f );\n";
  out << "rels := [\n";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out << "  " << gap_word(p.relators[i]);
    if (i + 1 < p.relators.size()) out << ',';
    out << '\n';
  }
  out << "];\n";
  out << "g := f / rels;\n";
}

}  // namespace fpg
