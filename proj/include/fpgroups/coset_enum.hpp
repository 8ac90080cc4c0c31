#ifndef FPGROUPS_COSET_ENUM_HPP
#define FPGROUPS_COSET_ENUM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fpgroups/presentation.hpp"

namespace fpg {

enum class Strategy { HLT, Felsch };

// Completed (or partial, on limit) coset action table.  Columns come in
// pairs: column 2g acts by generator g, column 2g+1 by its inverse.
class CosetTable {
 public:
  static constexpr std::uint32_t UNDEF = UINT32_MAX;

  CosetTable() = default;
  CosetTable(alphabet_ptr alphabet, std::size_t ngens);

  std::size_t size() const { return nrows_; }  // live cosets after compaction
  std::size_t columns() const { return cols_; }
  std::uint32_t entry(std::uint32_t coset, std::size_t col) const {
    return data_[static_cast<std::size_t>(coset) * cols_ + col];
  }

  // Word sending coset 0 to `coset` (breadth-first over the table); empty
  // result only for coset 0, nullopt if unreachable in a partial table.
  std::optional<Word> representative(std::uint32_t coset) const;

  // One line per coset: "id: g1 g1' g2 g2' ..." with '-' for undefined.
  void dump(std::ostream& os) const;

  alphabet_ptr const& alphabet() const { return alphabet_; }

 private:
  alphabet_ptr alphabet_;
  std::size_t cols_ = 0;
  std::size_t nrows_ = 0;
  std::vector<std::uint32_t> data_;

  friend class Enumerator;
};

struct EnumerationResult {
  // Engaged iff the enumeration closed; the value is the subgroup index.
  std::optional<std::uint64_t> index;
  std::uint64_t cosets_defined = 0;
  std::uint64_t max_live = 0;
  CosetTable table;

  bool limit_exceeded() const { return !index.has_value(); }
};

inline constexpr std::uint64_t kDefaultMaxCosets = 1000000;

// Todd-Coxeter enumeration of the cosets of <subgroup> in the presented
// group.  A returned index is certified by a full validation pass: every
// relator closes at every live coset and every subgroup word closes at
// coset 0.  LimitExceeded (disengaged index) is a result, not an error.
EnumerationResult enumerate(Presentation const& p,
                            std::vector<Word> const& subgroup,
                            std::uint64_t max_cosets = kDefaultMaxCosets,
                            Strategy strategy = Strategy::HLT);

}  // namespace fpg

#endif
