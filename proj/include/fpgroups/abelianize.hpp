#ifndef FPGROUPS_ABELIANIZE_HPP
#define FPGROUPS_ABELIANIZE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "fpgroups/presentation.hpp"

namespace fpg {

using bigint = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<bigint> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  bigint& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  bigint const& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

// One row per relator, one column per generator, entry = exponent sum.
IntMatrix relation_matrix(Presentation const& p);

struct SmithResult {
  // Full diagonal of length min(rows, cols): nonnegative, d1 | d2 | ...,
  // zeros (if any) at the end.
  std::vector<bigint> diagonal;
  std::size_t rank_defect = 0;  // number of zero diagonal entries

  std::size_t rank() const { return diagonal.size() - rank_defect; }
};

SmithResult smith_normal_form(IntMatrix m);

struct AbelianInvariants {
  std::size_t rank = 0;          // free rank
  std::vector<bigint> torsion;   // each >= 2, dividing the next

  bool trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(AbelianInvariants const&,
                         AbelianInvariants const&) = default;
};

// Invariants of Z^generators / row space of the relation matrix.
AbelianInvariants abelian_invariants(Presentation const& p);

}  // namespace fpg

#endif
