#include "fpgroups/abelianize.hpp"

#include <algorithm>

namespace fpg {

IntMatrix relation_matrix(Presentation const& p) {
  IntMatrix m(p.relators.size(), p.alphabet->size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter const& l : p.relators[r].letters())
      m.at(r, l.gen) += l.sign;
  return m;
}

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// Smallest nonzero |entry| in the trailing submatrix, if any.
bool find_pivot(IntMatrix const& m, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  bigint best;
  for (std::size_t i = t; i < m.rows; ++i)
    for (std::size_t j = t; j < m.cols; ++j) {
      bigint const& e = m.at(i, j);
      if (e == 0) continue;
      bigint a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  std::size_t n = std::min(m.rows, m.cols);
  std::vector<bigint> diag(n, 0);

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(m, t, pi, pj)) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        bigint q = m.at(i, t) / m.at(t, t);
        for (std::size_t j = t; j < m.cols; ++j)
          m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          // remainder is a strictly smaller pivot
          swap_rows(m, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        bigint q = m.at(t, j) / m.at(t, t);
        for (std::size_t i = t; i < m.rows; ++i)
          m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    diag[t] = abs(m.at(t, t));
  }

  // Enforce the divisibility chain; diag(a, b) and diag(gcd, lcm) present
  // the same quotient.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      bigint &a = diag[i], &b = diag[i + 1];
      if (a == 0 && b != 0) {
        std::swap(a, b);
        changed = true;
      } else if (a != 0 && b % a != 0) {
        bigint g = gcd(a, b);
        bigint l = a / g * b;
        a = g;
        b = l;
        changed = true;
      }
    }
  }

  SmithResult out;
  out.diagonal = std::move(diag);
  out.rank_defect = static_cast<std::size_t>(
      std::count(out.diagonal.begin(), out.diagonal.end(), bigint(0)));
  return out;
}

AbelianInvariants abelian_invariants(Presentation const& p) {
  IntMatrix m = relation_matrix(p);
  SmithResult s = smith_normal_form(m);
  AbelianInvariants inv;
  inv.rank = p.alphabet->size() - s.rank();
  for (bigint const& d : s.diagonal)
    if (d >= 2) inv.torsion.push_back(d);
  return inv;
}

}  // namespace fpg
