#pragma once

// Brute-force reference computations used by the tests. Nothing here calls the
// library code it is meant to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrstab/labelled_partition.hpp"
#include "arrstab/weyl_action.hpp"

namespace oracle {

using Vec = std::vector<long>;

// "{1,1-}_e {2} {2-}" -> LabelledPartition
inline arrstab::LabelledPartition lp(int n, const std::string& text) {
  std::vector<arrstab::LabelledPartition::Block> blocks;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const auto close = text.find('}', pos);
    arrstab::LabelledPartition::Block b;
    std::stringstream items(text.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(items, item, ',')) b.elements.push_back(arrstab::parse_element(item));
    pos = close + 1;
    if (pos < text.size() && text[pos] == '_') {
      auto end = text.find(' ', pos);
      if (end == std::string::npos) end = text.size();
      b.label = arrstab::parse_torsion(text.substr(pos + 1, end - pos - 1));
      pos = end;
    }
    blocks.push_back(std::move(b));
  }
  return arrstab::LabelledPartition(n, std::move(blocks));
}

inline mpz_class bell(int n) {
  std::vector<mpz_class> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

// Rank over Q of a list of integer vectors, by fraction-free elimination.
inline int rational_rank(std::vector<Vec> rows) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const mpz_class f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * p[c] - f * p[k];
    }
    ++rank;
  }
  return rank;
}

// Positive roots as integer vectors (type A on n coordinates).
inline std::vector<Vec> roots(arrstab::Family f, int n) {
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
      v[static_cast<std::size_t>(i)] = 1, v[static_cast<std::size_t>(j)] = -1;
      out.push_back(v);
      if (f != arrstab::Family::A) {
        w[static_cast<std::size_t>(i)] = 1, w[static_cast<std::size_t>(j)] = 1;
        out.push_back(w);
      }
    }
  if (f == arrstab::Family::B || f == arrstab::Family::C)
    for (int i = 0; i < n; ++i) {
      Vec v(static_cast<std::size_t>(n));
      v[static_cast<std::size_t>(i)] = f == arrstab::Family::B ? 1 : 2;
      out.push_back(v);
    }
  return out;
}

// Whitney's formula: mu(0, top) of the lattice of flats spanned by the given
// hyperplane normals is the signed count of subsets spanning everything.
inline mpz_class whitney_mobius(const std::vector<Vec>& normals) {
  const int full = rational_rank(normals);
  mpz_class mu = 0;
  const std::size_t m = normals.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<Vec> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) sub.push_back(normals[i]);
    if (rational_rank(sub) == full) mu += (sub.size() % 2 ? -1 : 1);
  }
  return mu;
}

// Poincare polynomial of a central linear arrangement:
// pi(t) = sum_S (-1)^|S| (-t)^rank(S).
inline std::vector<mpz_class> linear_poincare(const std::vector<Vec>& normals, int n) {
  std::vector<mpz_class> pi(static_cast<std::size_t>(n + 1));
  const std::size_t m = normals.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<Vec> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) sub.push_back(normals[i]);
    const int r = rational_rank(sub);
    pi[static_cast<std::size_t>(r)] += ((sub.size() + static_cast<std::size_t>(r)) % 2 ? -1 : 1);
  }
  return pi;
}

// Components of {x in (R/Z)^{g n} : <row, x> = 0 for all rows}: count the
// half-integer solutions, divide by the half-integer points of the identity
// component. Valid when every invariant factor divides 2.
inline mpz_class two_torsion_components(const std::vector<Vec>& rows, int n, int g) {
  long solutions = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (const auto& r : rows) {
      long s = 0;
      for (int i = 0; i < n; ++i)
        if (x >> i & 1) s += r[static_cast<std::size_t>(i)];
      if (s % 2) ok = false;
    }
    solutions += ok;
  }
  const int free_dim = n - rational_rank(rows);
  mpz_class total = 1, identity = 1;
  for (int k = 0; k < g; ++k) {
    total *= solutions;
    identity *= mpz_class(1) << free_dim;
  }
  return total / identity;
}

// Signed permutation matrices: column j has eps_j at row sigma(j).
using IntMat = std::vector<std::vector<int>>;

inline IntMat matrix_of(const arrstab::SignedPermutation& w) {
  const int n = w.n();
  IntMat m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(w.image(j))][static_cast<std::size_t>(j)] = w.sign(j);
  return m;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline int trace(const IntMat& a) {
  int t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// All signed permutation matrices of size n (or permutation matrices).
inline std::vector<IntMat> group_matrices(int n, bool with_signs) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<IntMat> out;
  do {
    const int sign_count = with_signs ? 1 << n : 1;
    for (int s = 0; s < sign_count; ++s) {
      IntMat m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
      for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)] = (s >> j & 1) ? -1 : 1;
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline IntMat transpose(const IntMat& a) {
  IntMat t(a.size(), std::vector<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Conjugacy classes by brute force; returns the class index of each element.
inline std::vector<int> conjugacy_classes(const std::vector<IntMat>& group) {
  std::map<IntMat, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  std::vector<int> cls(group.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (cls[i] >= 0) continue;
    for (const auto& g : group) cls[index.at(mat_mul(mat_mul(g, group[i]), transpose(g)))] = next;
    ++next;
  }
  return cls;
}

// Generator closure of one labelled partition.
inline std::set<arrstab::LabelledPartition> closure(const arrstab::LabelledPartition& p,
                                                    const std::vector<arrstab::SignedPermutation>& gens) {
  std::set<arrstab::LabelledPartition> seen{p};
  std::vector<arrstab::LabelledPartition> frontier{p};
  while (!frontier.empty()) {
    const auto cur = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const auto next = arrstab::act(g, cur);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

}  // namespace oracle
