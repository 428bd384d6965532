#pragma once

// Test-only helpers: random inputs and independent oracles. Everything here
// stays deliberately naive -- enumeration and cofactor expansion -- so it
// shares no code path with the implementations it checks.

#include <algorithm>
#include <random>
#include <vector>

#include "qcmut/f2forms.hpp"
#include "qcmut/matrices.hpp"

namespace qcmut::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntMatrix random_sym_even(int n, int bound, Rng& rng) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 2 * uniform(rng, -(bound / 2), bound / 2);
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = uniform(rng, -bound, bound);
      m.at(j, i) = m.at(i, j);
    }
  }
  return m;
}

inline IntMatrix random_skew(int n, int bound, Rng& rng) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = uniform(rng, -bound, bound);
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

// Product of at most `moves` elementary column operations.
inline IntMatrix random_unimodular(int n, int moves, Rng& rng) {
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < moves; ++step) {
    const int kind = n >= 2 ? uniform(rng, 0, 2) : 2;
    if (kind == 0) {
      int i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
      if (i == j) continue;
      int c = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
      m.col_add(i, j, c);
    } else if (kind == 1) {
      m.col_swap(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    } else {
      m.col_negate(uniform(rng, 0, n - 1));
    }
  }
  return m;
}

// Recursive cofactor expansion along the first row.
inline Int det_cofactor(const IntMatrix& m) {
  const int n = m.n();
  if (n == 1) return m.at(0, 0);
  Int acc = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1);
    for (int i = 1; i < n; ++i) {
      int jc = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jc++) = m.at(i, j);
      }
    }
    const Int term = m.at(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

// Radical dimensions straight from the definitions by enumerating all of
// F2^n. A lift of v only matters mod 2, so candidates v+2w with w in {0,1}^n
// cover every class. Keep n small.
inline RadicalDims radical_dims_exhaustive(const SymEvenMatrix& a) {
  const int n = a.n();
  const unsigned total = 1u << n;
  auto apply = [&](unsigned mask) {
    std::vector<Int> out(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) out[i] += a.at(i, j);
    return out;
  };
  unsigned count0 = 0, count00 = 0, count000 = 0;
  for (unsigned v = 0; v < total; ++v) {
    const std::vector<Int> av = apply(v);
    bool in_v0 = true;
    for (const Int& x : av) in_v0 = in_v0 && mod_ui(x, 2) == 0;
    if (!in_v0) continue;
    ++count0;

    Int vv = 0;
    for (int i = 0; i < n; ++i)
      if (v & (1u << i)) vv += av[i];
    if (mod_ui(vv, 4) == 0) ++count00;

    bool lift_found = false;
    for (unsigned w = 0; w < total && !lift_found; ++w) {
      const std::vector<Int> aw = apply(w);
      bool all_zero = true;
      for (int i = 0; i < n; ++i)
        all_zero = all_zero && mod_ui(av[i] + 2 * aw[i], 4) == 0;
      lift_found = all_zero;
    }
    if (lift_found) ++count000;
  }
  auto log2_exact = [](unsigned c) {
    int d = 0;
    while ((1u << d) < c) ++d;
    return d;
  };
  return {log2_exact(count0), log2_exact(count00), log2_exact(count000)};
}

inline IntMatrix f2_to_int(const F2Matrix& m) {
  IntMatrix out(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out.at(i, j) = m.get(i, j) ? 1 : 0;
  return out;
}

// Rank of an F2 matrix by enumerating the row span.
inline int f2_rank_exhaustive(const F2Matrix& m) {
  const int n = m.n();
  std::vector<std::vector<bool>> span;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> combo(n, false);
    for (int r = 0; r < n; ++r)
      if (mask & (1u << r))
        for (int c = 0; c < n; ++c) combo[c] = combo[c] ^ m.get(r, c);
    if (std::find(span.begin(), span.end(), combo) == span.end()) span.push_back(combo);
  }
  int rank = 0;
  while ((1u << rank) < span.size()) ++rank;
  return rank;
}

}  // namespace qcmut::test
