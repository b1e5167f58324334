// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the Smith reduction being checked.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncsing/int_matrix.hpp"

namespace oracle {

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

/// Cofactor expansion along the first row. Fine for the sizes used here.
inline std::int64_t cofactorDet(const SmallMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    SmallMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      auto& row = minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
    }
    const std::int64_t term = m[0][c] * cofactorDet(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors (the k-th determinantal divisor); 0 if all vanish.
inline std::int64_t minorGcd(const SmallMatrix& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(rows, k, 0, cur, rs);
  subsets(cols, k, 0, cur, cs);
  std::int64_t g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      SmallMatrix sub;
      for (std::size_t i : r) {
        auto& row = sub.emplace_back();
        for (std::size_t j : c) row.push_back(m[i][j]);
      }
      g = std::gcd(g, cofactorDet(sub));
      if (g == 1) return 1;
    }
  return g;
}

/// Rank over Q by Gaussian elimination in exact rationals.
inline std::size_t rationalRank(const SmallMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Brute-force structure of the finite group Z^r / (columns + N Z^r), where N
/// annihilates the cokernel. Returns c_k = #{x : kx = 0} for k = 1..N, which
/// determines a finite abelian group up to isomorphism.
inline std::vector<std::int64_t> killCounts(const SmallMatrix& m, std::int64_t n) {
  const std::size_t r = m.size(), cols = r ? m[0].size() : 0;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= n;
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t code = 0;
    for (auto x : v) code = code * n + ((x % n) + n) % n;
    return code;
  };
  auto decode = [&](std::int64_t code) {
    std::vector<std::int64_t> v(r);
    for (std::size_t i = r; i-- > 0;) {
      v[i] = code % n;
      code /= n;
    }
    return v;
  };
  std::vector<char> inSub(static_cast<std::size_t>(total), 0);
  std::vector<std::int64_t> frontier{0};
  inSub[0] = 1;
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::int64_t> g(r);
    for (std::size_t i = 0; i < r; ++i) g[i] = m[i][c];
    gens.push_back(g);
  }
  while (!frontier.empty()) {
    const auto code = frontier.back();
    frontier.pop_back();
    const auto v = decode(code);
    for (const auto& g : gens) {
      auto w = v;
      for (std::size_t i = 0; i < r; ++i) w[i] += g[i];
      const auto next = encode(w);
      if (!inSub[static_cast<std::size_t>(next)]) {
        inSub[static_cast<std::size_t>(next)] = 1;
        frontier.push_back(next);
      }
    }
  }
  std::int64_t subSize = 0;
  for (char c : inSub) subSize += c;
  std::vector<std::int64_t> counts;
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t hits = 0;
    for (std::int64_t code = 0; code < total; ++code) {
      auto v = decode(code);
      for (auto& x : v) x *= k;
      hits += inSub[static_cast<std::size_t>(encode(v))];
    }
    counts.push_back(hits / subSize);
  }
  return counts;
}

/// c_k = prod gcd(t, k) computed from a claimed torsion list.
inline std::vector<std::int64_t> killCountsOf(const std::vector<std::int64_t>& torsion, std::int64_t n) {
  std::vector<std::int64_t> counts;
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t c = 1;
    for (auto t : torsion) c *= std::gcd(t, k);
    counts.push_back(c);
  }
  return counts;
}

inline ncsing::IntMatrix toIntMatrix(const SmallMatrix& m) {
  std::vector<std::vector<ncsing::Integer>> rows;
  for (const auto& row : m) rows.emplace_back(row.begin(), row.end());
  return ncsing::IntMatrix::fromRows(rows, m.empty() ? 0 : m[0].size());
}

inline SmallMatrix randomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  SmallMatrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

}  // namespace oracle
