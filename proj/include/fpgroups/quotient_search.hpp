#ifndef FPGROUPS_QUOTIENT_SEARCH_HPP
#define FPGROUPS_QUOTIENT_SEARCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpgroups/presentation.hpp"

namespace fpg {

// Bijection of {0..degree-1}.  Products compose left to right:
// (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  static Permutation from_images(std::vector<std::uint8_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::uint8_t i) const { return images_[i]; }
  std::vector<std::uint8_t> const& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;

  std::string cycle_string() const;  // e.g. "(0 1)(2 3 4)" or "()"

 private:
  std::vector<std::uint8_t> images_;
};

Permutation perm_mul(Permutation const& a, Permutation const& b);
Permutation perm_inverse(Permutation const& p);
std::uint64_t perm_order(Permutation const& p);

// True iff every relator evaluates to the identity permutation.
bool verify_hom(Presentation const& p,
                std::map<std::string, Permutation> const& images);

struct HomSearchReport {
  unsigned degree = 0;
  std::uint64_t total_homs = 0;
  bool nontrivial_found = false;
  bool complete = true;       // false when the budget ran out
  std::uint64_t explored = 0; // partial assignments visited
  unsigned threads = 1;
  std::vector<std::map<std::string, Permutation>> witnesses;  // bounded
};

inline constexpr std::uint64_t kDefaultHomBudget = 100000000;

// Exhaustive backtracking count of homomorphisms into the symmetric group
// of the given degree.  Relators of the shape [a, b] b^-1 prune the
// candidate images of b to the solutions of P Q P^-1 = Q^2 once a's image
// P is fixed.  Deterministic; candidates in lexicographic order.
HomSearchReport search_homs(Presentation const& p, unsigned degree,
                            std::uint64_t budget = kDefaultHomBudget,
                            unsigned threads = 1);

// Brute-force oracle: tries all degree!^generators assignments.
std::uint64_t count_homs_naive(Presentation const& p, unsigned degree);

}  // namespace fpg

#endif
