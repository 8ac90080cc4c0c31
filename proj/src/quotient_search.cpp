#include "fpgroups/quotient_search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace fpg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  std::vector<char> seen(images.size(), 0);
  for (std::uint8_t i : images) {
    if (i >= images.size() || seen[i])
      throw error("Permutation: images are not a bijection");
    seen[i] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(' << i;
    seen[i] = 1;
    for (std::uint8_t j = images_[i]; j != i; j = images_[j]) {
      out << ' ' << static_cast<unsigned>(j);
      seen[j] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation perm_mul(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) throw error("perm_mul: degree mismatch");
  std::vector<std::uint8_t> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[i] = b(a(static_cast<std::uint8_t>(i)));
  return Permutation::from_images(std::move(im));
}

Permutation perm_inverse(Permutation const& p) {
  std::vector<std::uint8_t> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[p(static_cast<std::uint8_t>(i))] = static_cast<std::uint8_t>(i);
  return Permutation::from_images(std::move(im));
}

std::uint64_t perm_order(Permutation const& p) {
  std::uint64_t order = 1;
  std::vector<char> seen(p.degree(), 0);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint8_t j = static_cast<std::uint8_t>(i); !seen[j]; j = p(j)) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool verify_hom(Presentation const& p,
                std::map<std::string, Permutation> const& images) {
  std::size_t degree = 0;
  std::vector<Permutation> by_id(p.alphabet->size());
  for (gen_id g = 0; g < p.alphabet->size(); ++g) {
    auto it = images.find(p.alphabet->name(g));
    if (it == images.end())
      throw error("verify_hom: missing image for '" + p.alphabet->name(g) +
                  "'");
    if (g == 0)
      degree = it->second.degree();
    else if (it->second.degree() != degree)
      throw error("verify_hom: images have mismatched degrees");
    by_id[g] = it->second;
  }
  for (Word const& r : p.relators) {
    Permutation acc(degree);
    for (Letter const& l : r.letters())
      acc = perm_mul(acc, l.sign > 0 ? by_id[l.gen] : perm_inverse(by_id[l.gen]));
    if (!acc.is_identity()) return false;
  }
  return true;
}

namespace {

std::vector<Permutation> all_perms(unsigned degree) {
  std::vector<std::uint8_t> base(degree);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(base));
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

struct PermSpace {
  std::vector<Permutation> perms;  // lexicographic
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> table;  // mult table when small enough
  unsigned degree;

  explicit PermSpace(unsigned deg) : perms(all_perms(deg)), degree(deg) {
    std::map<std::vector<std::uint8_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < perms.size(); ++i)
      index[perms[i].images()] = i;
    inverse.resize(perms.size());
    for (std::uint32_t i = 0; i < perms.size(); ++i)
      inverse[i] = index.at(perm_inverse(perms[i]).images());
    if (degree <= 6) {
      table.resize(perms.size() * perms.size());
      for (std::uint32_t a = 0; a < perms.size(); ++a)
        for (std::uint32_t b = 0; b < perms.size(); ++b)
          table[a * perms.size() + b] =
              index.at(perm_mul(perms[a], perms[b]).images());
    }
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table.empty()) return table[a * perms.size() + b];
    Permutation const& pa = perms[a];
    Permutation const& pb = perms[b];
    std::uint32_t lo = 0;
    // composing directly and re-indexing via binary search over the
    // lexicographic order
    std::vector<std::uint8_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i)
      im[i] = pb(pa(static_cast<std::uint8_t>(i)));
    std::uint32_t hi = static_cast<std::uint32_t>(perms.size());
    while (lo + 1 < hi) {
      std::uint32_t mid = (lo + hi) / 2;
      if (perms[mid].images() <= im)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }
};

struct RelatorData {
  std::vector<std::pair<gen_id, int>> letters;
  gen_id max_gen = 0;
};

struct ConstraintEdge {
  gen_id source;  // image already chosen
  gen_id target;  // image must satisfy P Q P^-1 = Q^2
};

class HomSearch {
 public:
  HomSearch(Presentation const& p, PermSpace const& space, std::uint64_t budget)
      : space_(space), budget_(budget), ngens_(p.alphabet->size()) {
    relators_by_max_.resize(ngens_);
    for (Word const& r : p.relators) {
      RelatorData rd;
      for (Letter const& l : r.letters()) {
        rd.letters.emplace_back(l.gen, l.sign);
        rd.max_gen = std::max(rd.max_gen, l.gen);
      }
      relators_by_max_[rd.max_gen].push_back(rd);
      detect_constraint(rd);
    }
    constraint_for_.resize(ngens_);
    for (auto const& c : constraints_)
      if (c.source < c.target) constraint_for_[c.target].push_back(c.source);
  }

  // Runs the backtracking search with the first generator restricted to
  // the candidate index range [first_lo, first_hi).
  void run(std::uint32_t first_lo, std::uint32_t first_hi,
           HomSearchReport& rep) {
    rep.degree = space_.degree;
    assignment_.assign(ngens_, 0);
    if (ngens_ == 0) {
      rep.total_homs = 1;
      return;
    }
    descend(0, first_lo, first_hi, rep);
  }

 private:
  PermSpace const& space_;
  std::uint64_t budget_;
  std::size_t ngens_;
  std::vector<std::vector<RelatorData>> relators_by_max_;
  std::vector<ConstraintEdge> constraints_;
  std::vector<std::vector<gen_id>> constraint_for_;
  std::vector<std::uint32_t> assignment_;
  std::map<std::uint32_t, std::vector<std::uint32_t>> candidate_cache_;

  void detect_constraint(RelatorData const& rd) {
    // shape a b a^-1 b^-2, i.e. [a, b] b^-1
    auto const& ls = rd.letters;
    if (ls.size() != 5) return;
    gen_id a = ls[0].first, b = ls[1].first;
    if (a == b) return;
    bool shape = ls[0] == std::make_pair(a, +1) &&
                 ls[1] == std::make_pair(b, +1) &&
                 ls[2] == std::make_pair(a, -1) &&
                 ls[3] == std::make_pair(b, -1) &&
                 ls[4] == std::make_pair(b, -1);
    if (shape) constraints_.push_back({a, b});
  }

  // Q with P Q P^-1 = Q^2, scanning the whole group once per P.
  std::vector<std::uint32_t> const& candidates_for(std::uint32_t p_idx) {
    auto it = candidate_cache_.find(p_idx);
    if (it != candidate_cache_.end()) return it->second;
    std::vector<std::uint32_t> out;
    std::uint32_t pinv = space_.inverse[p_idx];
    for (std::uint32_t q = 0; q < space_.perms.size(); ++q) {
      std::uint32_t lhs = space_.mul(space_.mul(p_idx, q), pinv);
      std::uint32_t rhs = space_.mul(q, q);
      if (lhs == rhs) out.push_back(q);
    }
    return candidate_cache_.emplace(p_idx, std::move(out)).first->second;
  }

  bool relators_hold_at(gen_id level) {
    for (RelatorData const& rd : relators_by_max_[level]) {
      std::uint32_t acc = 0;  // identity is lexicographically first
      for (auto const& [g, sign] : rd.letters) {
        std::uint32_t img = assignment_[g];
        acc = space_.mul(acc, sign > 0 ? img : space_.inverse[img]);
      }
      if (acc != 0) return false;
    }
    return true;
  }

  void record_hom(HomSearchReport& rep) {
    ++rep.total_homs;
    bool nontrivial =
        std::any_of(assignment_.begin(), assignment_.end(),
                    [](std::uint32_t i) { return i != 0; });
    if (nontrivial) {
      rep.nontrivial_found = true;
      if (rep.witnesses.size() < 4) {
        std::map<std::string, Permutation> w;
        // names filled by the caller, which knows the alphabet; store by
        // positional key here
        for (std::size_t g = 0; g < ngens_; ++g)
          w["#" + std::to_string(g)] = space_.perms[assignment_[g]];
        rep.witnesses.push_back(std::move(w));
      }
    }
  }

  void descend(gen_id level, std::uint32_t lo, std::uint32_t hi,
               HomSearchReport& rep) {
    bool constrained = false;
    std::vector<std::uint32_t> const* cands = nullptr;
    for (gen_id src : constraint_for_[level]) {
      cands = &candidates_for(assignment_[src]);
      constrained = true;
      break;
    }
    std::uint32_t n = constrained ? static_cast<std::uint32_t>(cands->size())
                                  : static_cast<std::uint32_t>(space_.perms.size());
    std::uint32_t begin = level == 0 ? lo : 0;
    std::uint32_t end = level == 0 ? std::min(hi, n) : n;
    for (std::uint32_t k = begin; k < end; ++k) {
      if (rep.explored >= budget_) {
        rep.complete = false;
        return;
      }
      ++rep.explored;
      assignment_[level] = constrained ? (*cands)[k] : k;
      if (!relators_hold_at(level)) continue;
      if (level + 1 == ngens_)
        record_hom(rep);
      else
        descend(level + 1, 0, 0, rep);
      if (!rep.complete) return;
    }
  }
};

void relabel_witnesses(Presentation const& p, HomSearchReport& rep) {
  for (auto& w : rep.witnesses) {
    std::map<std::string, Permutation> named;
    for (gen_id g = 0; g < p.alphabet->size(); ++g) {
      auto it = w.find("#" + std::to_string(g));
      if (it != w.end()) named[p.alphabet->name(g)] = it->second;
    }
    w = std::move(named);
  }
}

}  // namespace

HomSearchReport search_homs(Presentation const& p, unsigned degree,
                            std::uint64_t budget, unsigned threads) {
  if (degree == 0) throw error("search_homs: degree must be >= 1");
  if (degree > 8) throw error("search_homs: degree capped at 8");
  PermSpace space(degree);
  std::size_t nperm = space.perms.size();

  // With constraints, level-0 candidates are the full space only when the
  // first generator is unconstrained, which holds for every presentation
  // built here (constraints point forward).
  if (threads <= 1 || p.alphabet->size() == 0) {
    HomSearchReport rep;
    rep.threads = 1;
    HomSearch search(p, space, budget);
    search.run(0, static_cast<std::uint32_t>(nperm), rep);
    relabel_witnesses(p, rep);
    return rep;
  }

  unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(nperm));
  std::vector<HomSearchReport> parts(t);
  std::vector<std::thread> workers;
  std::uint64_t share = budget / t;
  for (unsigned i = 0; i < t; ++i) {
    std::uint32_t lo = static_cast<std::uint32_t>(nperm * i / t);
    std::uint32_t hi = static_cast<std::uint32_t>(nperm * (i + 1) / t);
    workers.emplace_back([&, i, lo, hi] {
      HomSearch search(p, space, share);
      search.run(lo, hi, parts[i]);
    });
  }
  for (auto& w : workers) w.join();

  HomSearchReport rep;
  rep.degree = degree;
  rep.threads = t;
  for (auto const& part : parts) {
    rep.total_homs += part.total_homs;
    rep.nontrivial_found = rep.nontrivial_found || part.nontrivial_found;
    rep.complete = rep.complete && part.complete;
    rep.explored += part.explored;
    for (auto const& w : part.witnesses)
      if (rep.witnesses.size() < 4) rep.witnesses.push_back(w);
  }
  relabel_witnesses(p, rep);
  return rep;
}

std::uint64_t count_homs_naive(Presentation const& p, unsigned degree) {
  PermSpace space(degree);
  std::size_t nperm = space.perms.size();
  std::size_t g = p.alphabet->size();
  std::vector<std::uint32_t> idx(g, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (Word const& r : p.relators) {
      std::uint32_t acc = 0;
      for (Letter const& l : r.letters()) {
        std::uint32_t img = idx[l.gen];
        acc = space.mul(acc, l.sign > 0 ? img : space.inverse[img]);
      }
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    // odometer
    std::size_t pos = 0;
    while (pos < g && ++idx[pos] == nperm) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == g) break;
  }
  return count;
}

}  // namespace fpg
