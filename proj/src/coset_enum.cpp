#include "fpgroups/coset_enum.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace fpg {

CosetTable::CosetTable(alphabet_ptr alphabet, std::size_t ngens)
    : alphabet_(std::move(alphabet)), cols_(2 * ngens) {}

std::optional<Word> CosetTable::representative(std::uint32_t coset) const {
  if (coset >= nrows_) return std::nullopt;
  std::vector<std::uint32_t> from(nrows_, UNDEF);
  std::vector<std::size_t> via(nrows_, 0);
  std::vector<char> seen(nrows_, 0);
  std::deque<std::uint32_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    std::uint32_t c = queue.front();
    queue.pop_front();
    if (c == coset) break;
    for (std::size_t col = 0; col < cols_; ++col) {
      std::uint32_t d = entry(c, col);
      if (d == UNDEF || seen[d]) continue;
      seen[d] = 1;
      from[d] = c;
      via[d] = col;
      queue.push_back(d);
    }
  }
  if (!seen[coset]) return std::nullopt;
  std::vector<Letter> letters;
  for (std::uint32_t c = coset; c != 0; c = from[c])
    letters.push_back({static_cast<gen_id>(via[c] / 2),
                       via[c] % 2 == 0 ? +1 : -1});
  std::reverse(letters.begin(), letters.end());
  return Word::reduce(alphabet_, letters);
}

void CosetTable::dump(std::ostream& os) const {
  for (std::size_t c = 0; c < nrows_; ++c) {
    os << c << ':';
    for (std::size_t col = 0; col < cols_; ++col) {
      std::uint32_t e = entry(static_cast<std::uint32_t>(c), col);
      os << ' ';
      if (e == UNDEF)
        os << '-';
      else
        os << e;
    }
    os << '\n';
  }
}

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
constexpr u32 UNDEF = CosetTable::UNDEF;

struct limit_reached {};

// Relator/subgroup words as column sequences; column = 2*gen + (sign<0).
std::vector<u32> to_cols(Word const& w) {
  std::vector<u32> out;
  out.reserve(w.length());
  for (Letter const& l : w.letters())
    out.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
  return out;
}

std::vector<u32> cyclically_reduce_cols(std::vector<u32> w) {
  while (w.size() >= 2 && w.front() == (w.back() ^ 1u)) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

}  // namespace

class Enumerator {
 public:
  Enumerator(Presentation const& p, std::vector<Word> const& subgroup,
             u64 max_cosets, Strategy strategy)
      : strategy_(strategy), max_cosets_(max_cosets), alphabet_(p.alphabet) {
    cols_ = 2 * p.alphabet->size();
    for (Word const& r : p.relators) {
      auto w = cyclically_reduce_cols(to_cols(r));
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    for (Word const& s : subgroup) {
      if (!same_alphabet(s.alphabet(), p.alphabet)) throw alphabet_mismatch();
      auto w = to_cols(s);
      if (!w.empty()) subgroup_words_.push_back(std::move(w));
    }
    // Every cyclic rotation of every relator, bucketed by first column:
    // the scans a new edge has to satisfy.
    rotations_by_col_.resize(cols_);
    for (auto const& r : relators_) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        std::vector<u32> rot(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
          rot[i] = r[(k + i) % r.size()];
        rotations_by_col_[rot[0]].push_back(std::move(rot));
      }
    }
  }

  EnumerationResult run() {
    EnumerationResult res;
    bool limited = false;
    try {
      define_first();
      for (auto const& w : subgroup_words_) {
        scan_and_fill(0, w);
        drain_deductions();
      }
      if (strategy_ == Strategy::HLT)
        run_hlt();
      else
        run_felsch();
    } catch (limit_reached const&) {
      limited = true;
      settle();  // finish pending coincidences/deductions, no new cosets
    }
    compact();
    if (!limited) {
      validate();
      res.index = live_;
    }
    res.cosets_defined = total_defined_;
    res.max_live = max_live_;
    res.table.alphabet_ = alphabet_;
    res.table.cols_ = cols_;
    res.table.nrows_ = nrows_;
    res.table.data_ = std::move(tab_);
    return res;
  }

 private:
  Strategy strategy_;
  u64 max_cosets_;
  alphabet_ptr alphabet_;
  std::size_t cols_;
  std::vector<std::vector<u32>> relators_;
  std::vector<std::vector<u32>> subgroup_words_;
  std::vector<std::vector<std::vector<u32>>> rotations_by_col_;

  std::vector<u32> tab_;  // nrows_ * cols_
  std::vector<u32> uf_;
  std::size_t nrows_ = 0;
  u64 live_ = 0;
  u64 max_live_ = 0;
  u64 total_defined_ = 0;
  std::deque<u32> dead_queue_;               // coincidence processing
  std::vector<std::pair<u32, u32>> deductions_;  // (coset, column)

  u32* row(u32 c) { return tab_.data() + static_cast<std::size_t>(c) * cols_; }

  u32 rep(u32 c) {
    while (uf_[c] != c) {
      uf_[c] = uf_[uf_[c]];
      c = uf_[c];
    }
    return c;
  }

  bool is_live(u32 c) const { return uf_[c] == c; }

  void define_first() {
    total_defined_ = 1;
    live_ = 1;
    max_live_ = 1;
    nrows_ = 1;
    tab_.assign(cols_, UNDEF);
    uf_.assign(1, 0);
  }

  u32 define_coset(u32 c, u32 col) {
    if (total_defined_ >= max_cosets_) throw limit_reached{};
    u32 nu = static_cast<u32>(nrows_);
    ++nrows_;
    tab_.resize(nrows_ * cols_, UNDEF);
    uf_.push_back(nu);
    ++total_defined_;
    ++live_;
    max_live_ = std::max(max_live_, live_);
    set_edge(c, col, nu);
    return nu;
  }

  void set_edge(u32 a, u32 col, u32 b) {
    row(a)[col] = b;
    row(b)[col ^ 1] = a;
    deductions_.emplace_back(a, col);
  }

  void merge(u32 a, u32 b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf_[b] = a;
    --live_;
    dead_queue_.push_back(b);
  }

  // Holt-style coincidence processing: drain dead rows, transplanting
  // their edges onto the survivors.
  void process_coincidences() {
    while (!dead_queue_.empty()) {
      u32 dead = dead_queue_.front();
      dead_queue_.pop_front();
      for (u32 col = 0; col < cols_; ++col) {
        u32 d = row(dead)[col];
        if (d == UNDEF) continue;
        row(dead)[col] = UNDEF;
        // the mirror entry is exactly `dead` (entries always set pairwise)
        row(d)[col ^ 1] = UNDEF;
        u32 mu = rep(dead);
        u32 nu = rep(d);
        u32 existing = row(mu)[col];
        if (existing != UNDEF) {
          merge(nu, existing);
        } else {
          u32 back = row(nu)[col ^ 1];
          if (back != UNDEF) {
            merge(mu, back);
          } else {
            set_edge(mu, col, nu);
          }
        }
      }
    }
  }

  void coincide(u32 a, u32 b) {
    merge(a, b);
    process_coincidences();
  }

  enum class ScanOutcome { Closed, Gap };

  struct GapInfo {
    u32 front;
    std::size_t i;
  };

  // Scan word w as a loop at coset c.  Completes deductions of length one
  // and coincidences itself; reports longer gaps.
  ScanOutcome scan(u32 c, std::vector<u32> const& w, GapInfo* gap) {
    u32 f = c;
    std::size_t i = 0;
    std::size_t L = w.size();
    while (i < L) {
      u32 e = row(f)[w[i]];
      if (e == UNDEF) break;
      f = e;
      ++i;
    }
    if (i == L) {
      if (f != c) coincide(f, c);
      return ScanOutcome::Closed;
    }
    u32 b = c;
    std::size_t j = L;
    while (j > i) {
      u32 e = row(b)[w[j - 1] ^ 1];
      if (e == UNDEF) break;
      b = e;
      --j;
    }
    if (j == i) {  // scans met in one slot
      if (f != b) coincide(f, b);
      return ScanOutcome::Closed;
    }
    if (j == i + 1) {  // single missing edge: deduction
      set_edge(f, w[i], b);
      return ScanOutcome::Closed;
    }
    if (gap) *gap = {f, i};
    return ScanOutcome::Gap;
  }

  void scan_and_fill(u32 c, std::vector<u32> const& w) {
    for (;;) {
      c = rep(c);
      GapInfo gap;
      if (scan(c, w, &gap) == ScanOutcome::Closed) return;
      define_coset(gap.front, w[gap.i]);
    }
  }

  // Run every relator instance through each newly created edge.
  void drain_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!is_live(c)) continue;
      u32 d = row(c)[col];
      if (d == UNDEF) continue;  // edge relocated by a coincidence
      for (auto const& rot : rotations_by_col_[col]) {
        scan(c, rot, nullptr);
        if (!is_live(c) || row(c)[col] != d) break;
      }
      if (!is_live(d)) continue;
      for (auto const& rot : rotations_by_col_[col ^ 1]) {
        scan(d, rot, nullptr);
        if (!is_live(d)) break;
      }
    }
  }

  // Coincidence and deduction processing never defines cosets, so this
  // cannot trip the limit again.
  void settle() {
    process_coincidences();
    drain_deductions();
  }

  bool should_compact() const {
    return nrows_ >= 1024 && 2 * live_ < nrows_;
  }

  // Renumber live cosets, preserving id order; returns old->new.
  std::vector<u32> compact() {
    std::vector<u32> remap(nrows_, UNDEF);
    u32 next = 0;
    for (u32 c = 0; c < nrows_; ++c)
      if (is_live(c)) remap[c] = next++;
    for (u32 c = 0; c < nrows_; ++c) {
      if (!is_live(c)) continue;
      u32* src = row(c);
      u32* dst = tab_.data() + static_cast<std::size_t>(remap[c]) * cols_;
      for (std::size_t col = 0; col < cols_; ++col)
        dst[col] = src[col] == UNDEF ? UNDEF : remap[rep(src[col])];
    }
    nrows_ = next;
    tab_.resize(nrows_ * cols_);
    tab_.shrink_to_fit();
    uf_.resize(nrows_);
    for (u32 c = 0; c < nrows_; ++c) uf_[c] = c;
    for (auto& d : deductions_) d.first = remap[d.first] == UNDEF
                                              ? UNDEF
                                              : remap[d.first];
    std::erase_if(deductions_, [](auto const& d) { return d.first == UNDEF; });
    return remap;
  }

  void run_hlt() {
    u32 current = 0;
    for (;;) {
      if (should_compact()) {
        while (current < nrows_ && !is_live(current)) ++current;
        auto remap = compact();
        current = current >= remap.size() ? static_cast<u32>(nrows_)
                                          : remap[current];
      }
      while (current < nrows_ && !is_live(current)) ++current;
      if (current >= nrows_) break;
      u32 c = current;
      for (auto const& r : relators_) {
        if (!is_live(c)) break;
        scan_and_fill(c, r);
        drain_deductions();
      }
      if (is_live(c)) {
        for (u32 col = 0; col < cols_; ++col) {
          if (!is_live(c)) break;
          if (row(c)[col] == UNDEF) {
            define_coset(c, col);
            drain_deductions();
          }
        }
      }
      ++current;
    }
  }

  void run_felsch() {
    u32 c = 0;
    u32 col = 0;
    for (;;) {
      if (should_compact()) {
        while (c < nrows_ && !is_live(c)) {
          ++c;
          col = 0;
        }
        auto remap = compact();
        c = c >= remap.size() ? static_cast<u32>(nrows_) : remap[c];
      }
      // first undefined entry in row-major order
      while (c < nrows_) {
        if (!is_live(c)) {
          ++c;
          col = 0;
          continue;
        }
        while (col < cols_ && row(c)[col] != UNDEF) ++col;
        if (col < cols_) break;
        ++c;
        col = 0;
      }
      if (c >= nrows_) return;
      define_coset(c, col);
      drain_deductions();
    }
  }

  // Post-hoc certification: the table must be closed under all relators
  // and subgroup generators.
  void validate() {
    for (u32 c = 0; c < nrows_; ++c) {
      for (auto const& r : relators_)
        if (!traces_home(c, r))
          throw std::logic_error("coset table not closed under relators");
      for (u32 col = 0; col < cols_; ++col)
        if (row(c)[col] == UNDEF)
          throw std::logic_error("coset table incomplete");
    }
    for (auto const& w : subgroup_words_)
      if (!traces_home(0, w))
        throw std::logic_error("subgroup word does not stabilize coset 0");
  }

  bool traces_home(u32 c, std::vector<u32> const& w) {
    u32 f = c;
    for (u32 col : w) {
      f = row(f)[col];
      if (f == UNDEF) return false;
    }
    return f == c;
  }
};

EnumerationResult enumerate(Presentation const& p,
                            std::vector<Word> const& subgroup,
                            std::uint64_t max_cosets, Strategy strategy) {
  if (max_cosets == 0) throw error("enumerate: max_cosets must be >= 1");
  return Enumerator(p, subgroup, max_cosets, strategy).run();
}

}  // namespace fpg
