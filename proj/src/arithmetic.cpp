#include "fpgroups/arithmetic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fpgroups/word.hpp"  // for fpg::error

namespace fpg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p : prime_factors(n)) r -= r / p;
  return r;
}

}  // namespace

std::optional<std::uint64_t> ord2_mod(std::uint64_t m) {
  if (m == 0) throw error("ord2_mod: modulus must be >= 1");
  if (m == 1) return 1;
  if (m % 2 == 0) return std::nullopt;
  // ord divides phi(m); strip prime factors while the power stays 1
  std::uint64_t t = euler_phi(m);
  for (std::uint64_t p : prime_factors(t))
    while (t % p == 0 && powmod(2, t / p, m) == 1) t /= p;
  return t;
}

DivisibilityGraph::DivisibilityGraph(std::uint64_t bound) : bound_(bound) {
  if (bound == 0) throw error("DivisibilityGraph: bound must be >= 1");
  std::size_t odd_count = (bound + 1) / 2;
  ord_.resize(odd_count);

  // smallest-prime-factor sieve gives phi and factorizations in bulk
  std::vector<std::uint32_t> spf(bound + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= bound; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  auto phi_of = [&](std::uint64_t n) {
    std::uint64_t r = n;
    while (n > 1) {
      std::uint64_t p = spf[n];
      r -= r / p;
      while (n % p == 0) n /= p;
    }
    return r;
  };

  for (std::size_t k = 0; k < odd_count; ++k) {
    std::uint64_t d = 2 * k + 1;
    if (d == 1) {
      ord_[k] = 1;
      continue;
    }
    std::uint64_t t = phi_of(d);
    std::uint64_t n = t;
    while (n > 1) {
      std::uint64_t p = spf[n];
      while (t % p == 0 && powmod(2, t / p, d) == 1) t /= p;
      while (n % p == 0) n /= p;
    }
    ord_[k] = static_cast<std::uint32_t>(t);
  }
}

std::uint64_t DivisibilityGraph::ord2(std::uint64_t odd_d) const {
  return ord_[(odd_d - 1) / 2];
}

bool DivisibilityGraph::edge(std::uint64_t r, std::uint64_t d) const {
  if (d % 2 == 0 || d > bound_) return false;
  return r % ord2(d) == 0;
}

std::vector<std::uint32_t> DivisibilityGraph::successors(
    std::uint64_t r) const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 1; d <= bound_; d += 2)
    if (r % ord2(d) == 0) out.push_back(static_cast<std::uint32_t>(d));
  return out;
}

std::vector<std::uint32_t> DivisibilityGraph::recurrent_core() const {
  std::size_t odd_count = (bound_ + 1) / 2;
  std::vector<char> alive(odd_count, 1);

  // bucket nodes by their order
  std::map<std::uint64_t, std::vector<std::uint32_t>> by_ord;
  for (std::size_t k = 0; k < odd_count; ++k)
    by_ord[ord_[k]].push_back(static_cast<std::uint32_t>(2 * k + 1));

  auto has_successor = [&](std::uint64_t d) {
    // some alive d' with ord(d') | d; ord 1 means d' = 1, always alive
    for (std::uint64_t s = 1; s * s <= d; ++s) {
      if (d % s) continue;
      for (std::uint64_t div : {s, d / s}) {
        auto it = by_ord.find(div);
        if (it == by_ord.end()) continue;
        for (std::uint32_t cand : it->second)
          if (alive[(cand - 1) / 2]) return true;
      }
    }
    return false;
  };
  auto has_predecessor = [&](std::uint64_t d) {
    std::uint64_t o = ord2(d);
    if (o % 2 == 0) return false;  // predecessors are odd multiples of o
    for (std::uint64_t r = o; r <= bound_; r += 2 * o)
      if (alive[(r - 1) / 2]) return true;
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < odd_count; ++k) {
      if (!alive[k]) continue;
      std::uint64_t d = 2 * k + 1;
      if (!has_predecessor(d) || !has_successor(d)) {
        alive[k] = 0;
        changed = true;
        // keep the ord buckets usable: lazy, alive[] is rechecked anyway
      }
    }
  }

  std::vector<std::uint32_t> core;
  for (std::size_t k = 0; k < odd_count; ++k)
    if (alive[k]) core.push_back(static_cast<std::uint32_t>(2 * k + 1));
  return core;
}

std::vector<std::vector<std::uint32_t>> order_tuple_search(
    std::size_t n, DivisibilityGraph const& graph) {
  if (n == 0) throw error("order_tuple_search: n must be >= 1");
  std::vector<std::uint32_t> core = graph.recurrent_core();
  std::vector<std::vector<std::uint32_t>> found;

  // walk successors restricted to the core
  std::map<std::uint32_t, std::vector<std::uint32_t>> succ;
  for (std::uint32_t d : core) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t cand : core)
      if (d % graph.ord2(cand) == 0) s.push_back(cand);
    succ[d] = std::move(s);
  }

  std::vector<std::uint32_t> tuple(n);
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      // close the cycle
      if (tuple[n - 1] % graph.ord2(tuple[0]) == 0) found.push_back(tuple);
      return;
    }
    for (std::uint32_t next : succ[tuple[depth - 1]]) {
      tuple[depth] = next;
      self(self, depth + 1);
    }
  };
  for (std::uint32_t start : core) {
    tuple[0] = start;
    if (n == 1) {
      if (start % graph.ord2(start) == 0) found.push_back(tuple);
    } else {
      dfs(dfs, 1);
    }
  }
  return found;
}

std::vector<std::vector<std::uint32_t>> order_tuple_search(
    std::size_t n, std::uint64_t bound) {
  return order_tuple_search(n, DivisibilityGraph(bound));
}

bool folner_bound_check() {
  FolnerCheck c;
  return c.holds() && c.quotient_constant_matches();
}

}  // namespace fpg
